#include <algorithm>
#include <numeric>

#include "ctsynth/error.hpp"
#include "ctsynth/synthesis.hpp"

namespace ctsynth
{

    const char *case_tag_name(CaseTag tag) noexcept
    {
        switch (tag)
        {
        case CaseTag::Case2x2AllOnes: return "2x2";
        case CaseTag::Case3x3Block: return "3x3";
        case CaseTag::CaseI: return "i";
        case CaseTag::CaseII: return "ii";
        case CaseTag::CaseIII: return "iii";
        case CaseTag::CaseIV: return "iv";
        case CaseTag::CaseV: return "v";
        }
        return "?";
    }

    int case_rank(CaseTag tag) noexcept
    {
        switch (tag)
        {
        case CaseTag::CaseV: return 4;
        case CaseTag::CaseIV: return 3;
        case CaseTag::CaseIII: return 2;
        default: return 1;
        }
    }

    namespace
    {
        BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows)
        {
            BitMatrix b;
            b.dim = static_cast<int>(rows.size());
            int r = 0;
            for (const auto &row : rows)
            {
                int c = 0;
                for (int v : row)
                    b.bits[r][c++] = static_cast<std::uint8_t>(v);
                ++r;
            }
            return b;
        }

        BitMatrix transpose(const BitMatrix &p)
        {
            BitMatrix t;
            t.dim = p.dim;
            for (int i = 0; i < p.dim; ++i)
                for (int j = 0; j < p.dim; ++j)
                    t.bits[j][i] = p.bits[i][j];
            return t;
        }

        // Parity conditions: even weights, even pairwise overlaps.
        bool rows_admissible(const BitMatrix &p)
        {
            for (int i = 0; i < p.dim; ++i)
            {
                int w = 0;
                for (int c = 0; c < p.dim; ++c)
                    w += p(i, c);
                if (w % 2)
                    return false;
                for (int j = i + 1; j < p.dim; ++j)
                {
                    int overlap = 0;
                    for (int c = 0; c < p.dim; ++c)
                        overlap += p(i, c) & p(j, c);
                    if (overlap % 2)
                        return false;
                }
            }
            return true;
        }

        std::vector<int> row_weights(const BitMatrix &p)
        {
            std::vector<int> w(p.dim, 0);
            for (int i = 0; i < p.dim; ++i)
                for (int c = 0; c < p.dim; ++c)
                    w[i] += p(i, c);
            std::sort(w.begin(), w.end());
            return w;
        }

        bool matches(const BitMatrix &p, const BitMatrix &t, const std::array<int, 4> &rp,
                     const std::array<int, 4> &cp)
        {
            for (int r = 0; r < t.dim; ++r)
                for (int c = 0; c < t.dim; ++c)
                    if (p(rp[r], cp[c]) != t(r, c))
                        return false;
            return true;
        }
    } // namespace

    BitMatrix case_template(CaseTag tag)
    {
        switch (tag)
        {
        case CaseTag::Case2x2AllOnes:
            return from_rows({{1, 1}, {1, 1}});
        case CaseTag::Case3x3Block:
            return from_rows({{1, 1, 0}, {1, 1, 0}, {0, 0, 0}});
        case CaseTag::CaseI:
            return from_rows({{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
        case CaseTag::CaseII:
            return from_rows({{1, 1, 1, 1}, {1, 1, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}});
        case CaseTag::CaseIII:
            return from_rows({{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}});
        case CaseTag::CaseIV:
            return from_rows({{1, 1, 0, 0}, {1, 1, 0, 0}, {1, 1, 1, 1}, {1, 1, 1, 1}});
        case CaseTag::CaseV:
            return from_rows({{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}});
        }
        return {};
    }

    CasePattern classify_pattern(const BitMatrix &pattern)
    {
        const int n = pattern.dim;
        if (n < 2 || n > 4)
            throw Error(ErrorKind::UnsupportedDim, "no reduction patterns for dim " + std::to_string(n));

        const BitMatrix transposed = transpose(pattern);
        bool any = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                any = any || pattern(i, j);
        if (!any || !rows_admissible(pattern) || !rows_admissible(transposed))
            throw Error(ErrorKind::UnreachablePattern, "pattern violates the unitary parity conditions");

        std::vector<CaseTag> candidates;
        if (n == 2)
            candidates = {CaseTag::Case2x2AllOnes};
        else if (n == 3)
            candidates = {CaseTag::Case3x3Block};
        else
            candidates = {CaseTag::CaseI, CaseTag::CaseII, CaseTag::CaseIII, CaseTag::CaseIV, CaseTag::CaseV};

        for (CaseTag tag : candidates)
        {
            const BitMatrix t = case_template(tag);
            for (bool flip : {false, true})
            {
                const BitMatrix &p = flip ? transposed : pattern;
                if (row_weights(p) != row_weights(t) || row_weights(transpose(p)) != row_weights(transpose(t)))
                    continue;
                std::array<int, 4> rp{0, 1, 2, 3};
                do
                {
                    std::array<int, 4> cp{0, 1, 2, 3};
                    do
                    {
                        if (matches(p, t, rp, cp))
                            return CasePattern{tag, rp, cp, flip};
                    } while (std::next_permutation(cp.begin(), cp.begin() + n));
                } while (std::next_permutation(rp.begin(), rp.begin() + n));
            }
        }
        throw Error(ErrorKind::UnreachablePattern, "pattern matches no reduction case");
    }

    int phase_offset(std::span<const ResidueClass> r1, std::span<const ResidueClass> r2)
    {
        if (r1.size() != r2.size())
            throw Error(ErrorKind::NoOffset, "rows of different length");
        int x = -1;
        for (std::size_t i = 0; i < r1.size(); ++i)
        {
            const int d = ((r2[i].omega_exponent() - r1[i].omega_exponent()) % 4 + 4) % 4;
            if (x < 0)
                x = d;
            else if (x != d)
                throw Error(ErrorKind::NoOffset, "no single phase aligns the rows");
        }
        return x < 0 ? 0 : x;
    }

} // namespace ctsynth
