#include "ctsynth/matrix_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ctsynth/error.hpp"

namespace ctsynth
{

    namespace
    {
        struct Token
        {
            std::string_view text;
            int column;
        };

        std::vector<Token> split(std::string_view line)
        {
            std::vector<Token> out;
            for (std::size_t i = 0; i < line.size();)
            {
                if (std::isspace(static_cast<unsigned char>(line[i])))
                {
                    ++i;
                    continue;
                }
                std::size_t j = i;
                while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
                    ++j;
                out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
                i = j;
            }
            return out;
        }

        // Lines with comments stripped, paired with 1-based line numbers.
        std::vector<std::pair<std::string_view, int>> content_lines(std::string_view text)
        {
            std::vector<std::pair<std::string_view, int>> out;
            int n = 0;
            std::size_t pos = 0;
            while (pos <= text.size())
            {
                const std::size_t eol = std::min(text.find('\n', pos), text.size());
                std::string_view line = text.substr(pos, eol - pos);
                pos = eol + 1;
                ++n;
                line = line.substr(0, std::min(line.find('#'), line.size()));
                if (!split(line).empty())
                    out.emplace_back(line, n);
            }
            return out;
        }

        Integer parse_integer(std::string_view s, int line, int column)
        {
            std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
            if (i == s.size())
                throw ParseError(line, column, "expected an integer, got '" + std::string(s) + "'");
            for (std::size_t j = i; j < s.size(); ++j)
                if (!std::isdigit(static_cast<unsigned char>(s[j])))
                    throw ParseError(line, column + static_cast<int>(j),
                                     "expected an integer, got '" + std::string(s) + "'");
            return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
        }

        int parse_small(std::string_view s, int line, int column)
        {
            const Integer v = parse_integer(s, line, column);
            if (!v.fits_sint_p() || v < 0 || v > 100000)
                throw ParseError(line, column, "number out of range: '" + std::string(s) + "'");
            return static_cast<int>(v.get_si());
        }
    } // namespace

    DOmega parse_entry(std::string_view token, int line, int column)
    {
        Sqrt2Form f;
        std::string_view body = token;
        const std::size_t slash = token.find('/');
        if (slash != std::string_view::npos)
        {
            body = token.substr(0, slash);
            f.m = parse_small(token.substr(slash + 1), line, column + static_cast<int>(slash) + 1);
        }

        std::vector<std::pair<std::string_view, int>> parts;
        std::size_t start = 0;
        while (true)
        {
            const std::size_t comma = body.find(',', start);
            parts.emplace_back(body.substr(start, comma - start), column + static_cast<int>(start));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        if (parts.size() != 1 && parts.size() != 4)
            throw ParseError(line, column, "entry '" + std::string(token) + "' needs 1 or 4 components");

        Integer *fields[] = {&f.a, &f.b, &f.c, &f.d};
        for (std::size_t i = 0; i < parts.size(); ++i)
            *fields[i] = parse_integer(parts[i].first, line, parts[i].second);
        return from_sqrt2_form(f);
    }

    ExactMatrix parse_matrix(std::string_view text)
    {
        const auto lines = content_lines(text);
        if (lines.empty())
            throw ParseError(1, 1, "empty matrix file");

        const auto header = split(lines[0].first);
        if (header.size() != 2 || header[0].text != "dim")
            throw ParseError(lines[0].second, header[0].column, "expected header 'dim n'");
        const int n = parse_small(header[1].text, lines[0].second, header[1].column);
        if (n < 1 || n > 4)
            throw ParseError(lines[0].second, header[1].column, "dimension must be 1..4");

        if (static_cast<int>(lines.size()) - 1 != n)
        {
            const int at = lines.size() > 1 ? lines.back().second : lines[0].second;
            throw ParseError(at, 1, "expected " + std::to_string(n) + " rows, found " +
                                        std::to_string(lines.size() - 1));
        }

        ExactMatrix m(n);
        for (int r = 0; r < n; ++r)
        {
            const auto [line, line_no] = lines[r + 1];
            const auto tokens = split(line);
            if (static_cast<int>(tokens.size()) != n)
                throw ParseError(line_no, tokens.empty() ? 1 : tokens.front().column,
                                 "expected " + std::to_string(n) + " entries, found " +
                                     std::to_string(tokens.size()));
            for (int c = 0; c < n; ++c)
                m(r, c) = parse_entry(tokens[c].text, line_no, tokens[c].column);
        }
        return m;
    }

    std::string format_entry(const DOmega &x)
    {
        const Sqrt2Form f = to_sqrt2_form(x);
        if (f.m == 0 && f.b == 0 && f.c == 0 && f.d == 0)
            return f.a.get_str();
        std::string s = f.a.get_str() + "," + f.b.get_str() + "," + f.c.get_str() + "," + f.d.get_str();
        if (f.m)
            s += "/" + std::to_string(f.m);
        return s;
    }

    std::string write_matrix(const ExactMatrix &m)
    {
        std::string out = "dim " + std::to_string(m.dim()) + "\n";
        for (int r = 0; r < m.dim(); ++r)
        {
            for (int c = 0; c < m.dim(); ++c)
            {
                if (c)
                    out += ' ';
                out += format_entry(m(r, c));
            }
            out += '\n';
        }
        return out;
    }

    std::string write_word(const std::vector<ElementaryOp> &word, int dim)
    {
        std::string out = "# dim " + std::to_string(dim) + "\n";
        for (const auto &op : word)
            out += op.to_string() + "\n";
        return out;
    }

    std::vector<ElementaryOp> parse_word(std::string_view text, int &dim)
    {
        dim = 0;
        std::vector<ElementaryOp> word;
        int n = 0;
        std::size_t pos = 0;
        while (pos <= text.size())
        {
            const std::size_t eol = std::min(text.find('\n', pos), text.size());
            std::string_view line = text.substr(pos, eol - pos);
            pos = eol + 1;
            ++n;

            const std::size_t hash = line.find('#');
            if (hash != std::string_view::npos)
            {
                std::istringstream comment{std::string(line.substr(hash + 1))};
                std::string key;
                int d = 0;
                if (comment >> key && key == "dim" && comment >> d)
                    dim = d;
                line = line.substr(0, hash);
            }
            for (const auto &tok : split(line))
            {
                const std::string s(tok.text);
                auto bad = [&]() { return ParseError(n, tok.column, "bad elementary op '" + s + "'"); };
                int j = 0, m = 0, p = 0;
                char tail = 0;
                if (std::sscanf(s.c_str(), "w[%d]^%d%c", &j, &p, &tail) == 2)
                    word.push_back(ElementaryOp::omega_phase(j - 1, p));
                else if (std::sscanf(s.c_str(), "H[%d,%d]%c", &j, &m, &tail) == 2 && j != m)
                    word.push_back(ElementaryOp::hadamard(j - 1, m - 1));
                else if (std::sscanf(s.c_str(), "X[%d,%d]%c", &j, &m, &tail) == 2 && j != m)
                    word.push_back(ElementaryOp::swap(j - 1, m - 1));
                else
                    throw bad();
                const auto &op = word.back();
                if (op.j < 0 || (op.is_two_level() && op.m < 0))
                    throw bad();
            }
        }
        if (dim < 1 || dim > 4)
            throw ParseError(1, 1, "missing or invalid '# dim n' header");
        for (const auto &op : word)
            if (op.j >= dim || (op.is_two_level() && op.m >= dim))
                throw ParseError(1, 1, op.to_string() + " does not fit dimension " + std::to_string(dim));
        return word;
    }

    std::string read_file(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    void write_file(const std::string &path, std::string_view contents)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
        out << contents;
    }

} // namespace ctsynth
