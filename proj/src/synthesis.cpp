#include "ctsynth/synthesis.hpp"

#include <algorithm>
#include <climits>
#include <optional>

#include "ctsynth/error.hpp"

namespace ctsynth
{

    namespace
    {
        int mod4(int x) { return ((x % 4) + 4) % 4; }

        [[noreturn]] void impossible(const std::string &what) { throw Error(ErrorKind::ImpossibleBranch, what); }

        /**
         * Working state of one reduction round: the matrix being reduced, the fixed
         * exponent k, and a view that maps template coordinates onto actual rows and
         * columns. Every operation is recorded in the round.
         */
        class RoundState
        {
        public:
            RoundState(ExactMatrix &w, int k, ReductionRound &rec) : _w(w), _k(k), _rec(rec) { refresh(); }

            void bind(const CasePattern &cp) { _cp = cp; }

            const ResidueClass &res(int r, int c) const
            {
                const auto [i, j] = actual(r, c);
                return _res(i, j);
            }

            /// Omega exponent (mod 4) of a unit entry.
            int exp(int r, int c) const
            {
                const ResidueClass &x = res(r, c);
                if (!x.is_unit())
                    impossible("expected a unit residue at template position (" + std::to_string(r + 1) + "," +
                               std::to_string(c + 1) + ")");
                return x.omega_exponent();
            }

            /// x with w^x * (template row from) == (template row to) on the given columns, mod delta^3.
            int offset(int from, int to, std::initializer_list<int> cols) const
            {
                std::vector<ResidueClass> a, b;
                for (int c : cols)
                {
                    a.push_back(res(from, c));
                    b.push_back(res(to, c));
                }
                return phase_offset(a, b);
            }

            void phase_line(int r, int p)
            {
                apply(ElementaryOp::omega_phase(_cp.row_perm[r], mod4(p), _cp.transposed ? Side::Right : Side::Left));
            }

            void phase_cross(int c, int p)
            {
                apply(ElementaryOp::omega_phase(_cp.col_perm[c], mod4(p), _cp.transposed ? Side::Left : Side::Right));
            }

            bool congruent(int r1, int r2, int modulus) const
            {
                for (int c = 0; c < _w.dim(); ++c)
                {
                    const ResidueClass &a = res(r1, c), &b = res(r2, c);
                    if (a.x0() != b.x0() || a.x1() != b.x1() || (modulus == 3 && a.x2() != b.x2()))
                        return false;
                }
                return true;
            }

            /**
             * Hadamard on two template rows that are congruent modulo delta^modulus.
             * Modulo delta^3 both lines drop below k; modulo delta^2 neither exceeds k.
             */
            void hadamard(int r1, int r2, int modulus)
            {
                if (!congruent(r1, r2, modulus))
                    impossible("rows " + std::to_string(r1 + 1) + "," + std::to_string(r2 + 1) +
                               " are not congruent modulo delta^" + std::to_string(modulus));
                const int a = _cp.row_perm[r1], b = _cp.row_perm[r2];
                const Side side = _cp.transposed ? Side::Right : Side::Left;
                apply(ElementaryOp::hadamard(a, b, side));
                ++_rec.hadamards;

                int line_k = 0;
                for (int t = 0; t < _w.dim(); ++t)
                {
                    for (int line : {a, b})
                    {
                        const DOmega &e = side == Side::Left ? _w(line, t) : _w(t, line);
                        line_k = std::max(line_k, e.dexp());
                    }
                }
                if (modulus == 3 ? line_k >= _k : line_k > _k)
                    impossible("Hadamard under a delta^" + std::to_string(modulus) +
                               " congruence left exponent " + std::to_string(line_k) + " (k=" + std::to_string(_k) + ")");
            }

            int dim() const { return _w.dim(); }

        private:
            std::pair<int, int> actual(int r, int c) const
            {
                if (_cp.transposed)
                    return {_cp.col_perm[c], _cp.row_perm[r]};
                return {_cp.row_perm[r], _cp.col_perm[c]};
            }

            void apply(const ElementaryOp &op)
            {
                if (op.kind == OpKind::OmegaPhase && op.power == 0)
                    return;
                apply_elementary_in_place(op, _w);
                (op.side == Side::Left ? _rec.left_ops : _rec.right_ops).push_back(op);
                refresh();
            }

            void refresh() { _res = residue_matrix(_w, 3, _k); }

            ExactMatrix &_w;
            int _k;
            ReductionRound &_rec;
            CasePattern _cp;
            ResidueMatrix _res;
        };

        // 2x2: rows congruent mod delta^3 after one row phase.
        void handle_2x2(RoundState &s)
        {
            s.phase_line(0, s.offset(0, 1, {0, 1}));
            s.hadamard(0, 1, 3);
        }

        void handle_3x3(RoundState &s)
        {
            // The off-block entries delta*x have delta | x.
            for (auto [r, c] : {std::pair{0, 2}, {1, 2}, {2, 0}, {2, 1}})
                if (s.res(r, c).x0() || s.res(r, c).x1())
                    impossible("3x3 off-block entry not divisible by delta^2");
            s.phase_line(0, s.offset(0, 1, {0, 1}));
            s.hadamard(0, 1, 3);
        }

        void handle_i(RoundState &s)
        {
            for (int c : {0, 1})
                if (s.res(2, c).x1() != s.res(3, c).x1())
                    impossible("case (i): lower rows disagree modulo delta^2");
            s.phase_line(0, s.offset(0, 1, {0, 1}));
            s.hadamard(0, 1, 3);
        }

        void handle_ii(RoundState &s)
        {
            s.phase_line(0, s.offset(0, 1, {0, 1, 2, 3}));
            s.hadamard(0, 1, 3);
        }

        // Only delta^2 congruence is available; re-dispatches into (i) or (ii).
        void handle_iii(RoundState &s)
        {
            s.phase_line(0, s.offset(0, 1, {0, 1}));
            s.hadamard(0, 1, 2);
        }

        void handle_iv(RoundState &s)
        {
            s.phase_line(0, s.offset(0, 1, {0, 1}));
            if (s.congruent(0, 1, 3))
            {
                s.hadamard(0, 1, 3);
                return;
            }
            // The defect between rows 1 and 2 is exactly delta^2 somewhere.
            const ResidueClass delta_sq(3, 0, 0, 1);
            bool defect = false;
            for (int c : {2, 3})
            {
                const ResidueClass diff = s.res(0, c) + s.res(1, c);
                if (diff == delta_sq)
                    defect = true;
                else if (!diff.is_zero())
                    impossible("case (iv): rows 1,2 differ by more than delta^2");
            }
            if (!defect)
                impossible("case (iv): rows 1,2 neither congruent nor off by delta^2");

            s.phase_line(2, s.offset(2, 3, {0, 1}));
            for (int c : {2, 3})
                if (mod4(s.exp(2, c) - s.exp(3, c)) != 2)
                    impossible("case (iv): lower rows not offset by w^2");
            s.hadamard(2, 3, 2);
        }

        // Case (v) sub-cases; F, G name the two normalized rows and row 3 is checked against them.
        void finish_case_2(RoundState &s, int l, int m, int p)
        {
            const bool distinct = l && m && p && l != m && m != p && l != p;
            if (distinct)
            {
                if (l == 1 && m == 2 && p == 3)
                    s.hadamard(1, 2, 3);
                else if (l == 3 && m == 2 && p == 1)
                    s.hadamard(1, 2, 2);
                else
                    impossible("case (v) 2.1: inner product of rows 2,3 nonzero");
                return;
            }
            if (l == 0 && m == p)
            {
                if (m % 2)
                    impossible("case (v) 2.2: l=0 with m=p odd");
                s.hadamard(0, 2, 2);
            }
            else if (m == 0 && l == p)
                s.hadamard(l % 2 ? 1 : 0, 2, 2);
            else if (p == 0 && l == m)
            {
                if (l % 2)
                    impossible("case (v) 2.2: p=0 with l=m odd");
                s.hadamard(0, 2, 2);
            }
            else
                impossible("case (v) 2.2: exponents fit no two-pair pattern");
        }

        void finish_case_3_2(RoundState &s, int f, int g, int l, int m, int p)
        {
            const bool distinct = l && m && p && l != m && m != p && l != p;
            if (distinct)
            {
                if (l == 2 && (m == 1 || m == 3))
                    s.hadamard(g, 2, 2);
                else
                    impossible("case (v) 3.2.1: inner product of rows 2,3 nonzero");
                return;
            }
            if (l == 0 && m == p)
                s.hadamard(m % 2 ? g : f, 2, 2);
            else if (m == 0 && l == p)
            {
                if (l % 2)
                    impossible("case (v) 3.2.2: m=0 with l=p odd");
                s.hadamard(f, 2, 2);
            }
            else if (p == 0 && l == m)
            {
                if (l % 2)
                    impossible("case (v) 3.2.2: p=0 with l=m odd");
                s.hadamard(f, 2, 2);
            }
            else
                impossible("case (v) 3.2.2: exponents fit no two-pair pattern");
        }

        void handle_v(RoundState &s)
        {
            std::array<int, 4> d{};
            for (int c = 0; c < 4; ++c)
                d[c] = mod4(s.exp(1, c) - s.exp(0, c));

            // Case 1: one phase aligns rows 1 and 2 modulo delta^3.
            if (d[0] == d[1] && d[1] == d[2] && d[2] == d[3])
            {
                s.phase_line(0, d[0]);
                s.hadamard(0, 1, 3);
                return;
            }

            std::array<int, 4> seen{};
            for (int v : d)
                ++seen[v];
            const bool distinct = std::all_of(seen.begin(), seen.end(), [](int n) { return n == 1; });

            // Normalize row 1 to all ones with column phases.
            for (int c = 0; c < 4; ++c)
                s.phase_cross(c, -s.exp(0, c));

            if (distinct)
            {
                // Case 2: order columns so row 2 reads 1, w, w^2, w^3.
                std::array<int, 4> sigma{};
                for (int c = 0; c < 4; ++c)
                    sigma[s.exp(1, c)] = c;
                s.phase_line(2, -s.exp(2, sigma[0]));
                finish_case_2(s, s.exp(2, sigma[1]), s.exp(2, sigma[2]), s.exp(2, sigma[3]));
                return;
            }

            // Case 3: two pairs of equal differences.
            int partner = -1;
            for (int c = 1; c < 4; ++c)
                if (d[c] == d[0])
                    partner = c;
            std::array<int, 2> a_cols{0, partner};
            std::array<int, 2> b_cols{};
            for (int c = 1, i = 0; c < 4; ++c)
                if (c != partner)
                    b_cols[i++] = c;
            if (partner < 0 || d[b_cols[0]] != d[b_cols[1]] || d[b_cols[0]] == d[0])
                impossible("case (v): row differences fit none of the three patterns");

            s.phase_line(1, -s.exp(1, a_cols[0]));
            s.phase_line(2, -s.exp(2, a_cols[0]));
            const int g = s.exp(1, b_cols[0]);
            if (g % 2 == 0)
            {
                s.hadamard(0, 1, 2); // 3.1
                return;
            }
            int f = 0, gr = 1;
            if (g == 3)
            {
                // 3.3: shift the B columns by w so the roles of rows 1 and 2 swap.
                s.phase_cross(b_cols[0], 1);
                s.phase_cross(b_cols[1], 1);
                f = 1;
                gr = 0;
            }
            for (int c = 0; c < 4; ++c)
            {
                const bool in_b = c == b_cols[0] || c == b_cols[1];
                if (s.exp(f, c) != 0 || s.exp(gr, c) != (in_b ? 1 : 0))
                    impossible("case (v) 3.2: normalization did not produce the template");
            }
            finish_case_3_2(s, f, gr, s.exp(2, a_cols[1]), s.exp(2, b_cols[0]), s.exp(2, b_cols[1]));
        }

        void dispatch(RoundState &s, const CasePattern &cp)
        {
            s.bind(cp);
            switch (cp.tag)
            {
            case CaseTag::Case2x2AllOnes: handle_2x2(s); break;
            case CaseTag::Case3x3Block: handle_3x3(s); break;
            case CaseTag::CaseI: handle_i(s); break;
            case CaseTag::CaseII: handle_ii(s); break;
            case CaseTag::CaseIII: handle_iii(s); break;
            case CaseTag::CaseIV: handle_iv(s); break;
            case CaseTag::CaseV: handle_v(s); break;
            }
        }

        std::optional<int> omega_exponent_of(const DOmega &x)
        {
            if (x.dexp() != 0)
                return std::nullopt;
            for (int l = 0; l < 8; ++l)
                if (x.num() == ZOmega::omega_power(l))
                    return l;
            return std::nullopt;
        }
    } // namespace

    ReductionRound reduce_round_in_place(ExactMatrix &u, int k)
    {
        if (u.dim() < 2 || u.dim() > 4)
            throw Error(ErrorKind::UnsupportedDim, "reduction rounds need dim 2..4");
        if (k == 1)
            throw Error(ErrorKind::KEqualsOne, "least delta exponent 1 cannot occur for a unitary");
        const int measured = matrix_delta_exponent(u);
        if (k < 2 || measured != k)
            throw Error(ErrorKind::DeltaExponentTooSmall,
                        "round needs k = least delta exponent > 1 (k=" + std::to_string(k) +
                            ", measured " + std::to_string(measured) + ")");

        ReductionRound rec;
        rec.k_before = k;
        RoundState state(u, k, rec);
        int prev_rank = INT_MAX;
        while (matrix_delta_exponent(u) == k)
        {
            if (rec.hadamards >= max_hadamards_per_round)
                throw Error(ErrorKind::NoProgress, "round exceeded the Hadamard budget");
            const CasePattern cp = classify_pattern(residue_matrix(u, 1, k).ones());
            if (case_rank(cp.tag) >= prev_rank)
                throw Error(ErrorKind::NoProgress, std::string("case ") + case_tag_name(cp.tag) +
                                                       " did not lower the progress rank");
            prev_rank = case_rank(cp.tag);
            rec.case_chain.push_back(cp.tag);
            dispatch(state, cp);
        }
        rec.k_after = matrix_delta_exponent(u);
        if (rec.k_after == 1)
            throw Error(ErrorKind::KEqualsOne, "round produced least delta exponent 1");
        return rec;
    }

    ReductionRound reduce_round(const ExactMatrix &u, int k)
    {
        ExactMatrix w = u;
        return reduce_round_in_place(w, k);
    }

    std::vector<ElementaryOp> base_case_solve(const ExactMatrix &u)
    {
        const int n = u.dim();
        if (n > 4)
            throw Error(ErrorKind::UnsupportedDim, "base case needs dim 1..4");
        if (!is_unitary(u))
            throw Error(ErrorKind::NotUnitary, "base case input is not unitary");
        for (int r = 0; r < n; ++r)
        {
            int row_nonzero = 0, col_nonzero = 0;
            for (int c = 0; c < n; ++c)
            {
                if (!u(r, c).is_zero())
                {
                    ++row_nonzero;
                    if (!omega_exponent_of(u(r, c)))
                        throw Error(ErrorKind::NotMonomial, "entry is neither 0 nor a power of w");
                }
                col_nonzero += !u(c, r).is_zero();
            }
            if (row_nonzero != 1 || col_nonzero != 1)
                throw Error(ErrorKind::NotMonomial, "row or column without exactly one nonzero entry");
        }

        ExactMatrix w = u;
        std::vector<ElementaryOp> ops;
        for (int c = 0; c < n; ++c)
        {
            int r = c;
            while (w(r, c).is_zero())
                ++r;
            if (r != c)
            {
                ops.push_back(ElementaryOp::swap(c, r));
                apply_elementary_in_place(ops.back(), w);
            }
            const int l = *omega_exponent_of(w(c, c));
            if (l != 0)
            {
                ops.push_back(ElementaryOp::omega_phase(c, 8 - l));
                apply_elementary_in_place(ops.back(), w);
            }
        }
        if (!(w == ExactMatrix::identity(n)))
            impossible("base case did not reach the identity");
        return ops;
    }

    Decomposition synthesize(const ExactMatrix &u, const SynthOptions &options)
    {
        if (u.dim() < 1 || u.dim() > 4)
            throw Error(ErrorKind::UnsupportedDim, "synthesis supports dim 1..4");
        if (!is_unitary(u))
            throw Error(ErrorKind::NotUnitary, "input matrix is not unitary");

        Decomposition d;
        d.dim = u.dim();
        ExactMatrix w = u;
        int k = matrix_delta_exponent(w);
        d.source_k = k;
        if (k == 1)
            throw Error(ErrorKind::KEqualsOne, "least delta exponent 1 cannot occur for a unitary");
        while (k > 1)
        {
            d.rounds.push_back(reduce_round_in_place(w, k));
            if (options.verify_rounds && !is_unitary(w))
                impossible("unitarity lost during a reduction round");
            k = d.rounds.back().k_after;
        }
        d.base_ops = base_case_solve(w);

        // L * U * R = I  =>  U = L^-1 * R^-1
        for (const auto &round : d.rounds)
            for (const auto &op : round.left_ops)
                for (auto inv : invert_elementary(op))
                    d.word.push_back(inv);
        for (const auto &op : d.base_ops)
            for (auto inv : invert_elementary(op))
                d.word.push_back(inv);
        for (auto round = d.rounds.rbegin(); round != d.rounds.rend(); ++round)
            for (auto op = round->right_ops.rbegin(); op != round->right_ops.rend(); ++op)
                for (auto inv : invert_elementary(*op))
                    d.word.push_back(inv);
        for (auto &op : d.word)
            op.side = Side::Left;
        return d;
    }

    bool verify_decomposition(const ExactMatrix &u, const Decomposition &d)
    {
        if (d.dim != u.dim())
            return false;
        return word_product(d.word, u.dim()) == u;
    }

} // namespace ctsynth
