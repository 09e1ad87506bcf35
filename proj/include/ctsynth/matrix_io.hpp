#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ctsynth/matrix.hpp"

namespace ctsynth
{

    /**
     * Matrix file:
     *
     *   dim 2
     *   1,0,0,0/1   1,0,0,0/1
     *   1,0,0,0/1  -1,0,0,0/1
     *
     * Entry "a,b,c,d/m" is (a + b*sqrt2 + i*(c + d*sqrt2)) / sqrt2^m; "/m" may be
     * omitted and a lone integer n means n,0,0,0. '#' starts a comment.
     */
    ExactMatrix parse_matrix(std::string_view text);
    /// One entry; line/column only position errors.
    DOmega parse_entry(std::string_view token, int line = 1, int column = 1);

    std::string format_entry(const DOmega &x);
    std::string write_matrix(const ExactMatrix &m);

    /// Elementary word, one op per line ("w[1]^3", "H[1,2]", "X[3,4]"), under a "# dim n" header.
    std::string write_word(const std::vector<ElementaryOp> &word, int dim);
    std::vector<ElementaryOp> parse_word(std::string_view text, int &dim);

    std::string read_file(const std::string &path);
    void write_file(const std::string &path, std::string_view contents);

} // namespace ctsynth
