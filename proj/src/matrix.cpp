#include "ctsynth/matrix.hpp"

#include <algorithm>
#include <utility>

#include "ctsynth/error.hpp"

namespace ctsynth
{

    ExactMatrix::ExactMatrix(int dim) : _dim(dim)
    {
        if (dim < 1 || dim > max_dim)
            throw Error(ErrorKind::DimensionMismatch, "matrix dimension " + std::to_string(dim) + " out of range");
        _entries.resize(static_cast<std::size_t>(dim * dim));
    }

    ExactMatrix ExactMatrix::identity(int dim)
    {
        ExactMatrix m(dim);
        for (int i = 0; i < dim; ++i)
            m(i, i) = DOmega::from_int(1);
        return m;
    }

    std::string ExactMatrix::key() const
    {
        std::string s;
        s.reserve(_entries.size() * 12);
        for (const auto &e : _entries)
        {
            s += e.to_string();
            s += ';';
        }
        return s;
    }

    ExactMatrix mat_mul(const ExactMatrix &a, const ExactMatrix &b)
    {
        if (a.dim() != b.dim())
            throw Error(ErrorKind::DimensionMismatch, "mat_mul of " + std::to_string(a.dim()) + "x" +
                                                          std::to_string(a.dim()) + " and " +
                                                          std::to_string(b.dim()) + "x" + std::to_string(b.dim()));
        const int n = a.dim();
        ExactMatrix r(n);
        for (int i = 0; i < n; ++i)
        {
            for (int j = 0; j < n; ++j)
            {
                // Accumulate at a common exponent and canonicalize once.
                int k = 0;
                for (int l = 0; l < n; ++l)
                    if (!a(i, l).is_zero() && !b(l, j).is_zero())
                        k = std::max(k, a(i, l).dexp() + b(l, j).dexp());
                ZOmega acc;
                for (int l = 0; l < n; ++l)
                {
                    if (a(i, l).is_zero() || b(l, j).is_zero())
                        continue;
                    acc += (a(i, l).num() * b(l, j).num()).mul_delta(k - a(i, l).dexp() - b(l, j).dexp());
                }
                r(i, j) = DOmega(std::move(acc), k);
            }
        }
        return r;
    }

    ExactMatrix adjoint(const ExactMatrix &a)
    {
        ExactMatrix r(a.dim());
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j)
                r(j, i) = conj_dagger(a(i, j));
        return r;
    }

    bool is_unitary(const ExactMatrix &a) { return mat_mul(adjoint(a), a) == ExactMatrix::identity(a.dim()); }

    int matrix_delta_exponent(const ExactMatrix &a)
    {
        int k = 0;
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j)
                k = std::max(k, a(i, j).dexp());
        return k;
    }

    BitMatrix ResidueMatrix::ones() const
    {
        BitMatrix b;
        b.dim = dim;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                b.bits[i][j] = static_cast<std::uint8_t>(grid[i][j].x0());
        return b;
    }

    ResidueMatrix residue_matrix(const ExactMatrix &a, int n, int k)
    {
        if (a.dim() > 4)
            throw Error(ErrorKind::DimensionMismatch, "residue matrices are limited to dim <= 4");
        ResidueMatrix r;
        r.dim = a.dim();
        r.modulus_exp = n;
        r.k = k;
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j)
                r.grid[i][j] = rho_k(a(i, j), n, k);
        return r;
    }

    // --------------------------------------------------------- ElementaryOp

    ElementaryOp ElementaryOp::omega_phase(int j, int power, Side side)
    {
        return ElementaryOp{OpKind::OmegaPhase, j, j, ((power % 8) + 8) % 8, side};
    }

    ElementaryOp ElementaryOp::hadamard(int j, int m, Side side)
    {
        if (j == m)
            throw Error(ErrorKind::IndexOutOfRange, "two-level operator needs distinct indices");
        return ElementaryOp{OpKind::Hadamard, std::min(j, m), std::max(j, m), 0, side};
    }

    ElementaryOp ElementaryOp::swap(int j, int m, Side side)
    {
        if (j == m)
            throw Error(ErrorKind::IndexOutOfRange, "two-level operator needs distinct indices");
        return ElementaryOp{OpKind::Swap, std::min(j, m), std::max(j, m), 0, side};
    }

    std::string ElementaryOp::to_string() const
    {
        switch (kind)
        {
        case OpKind::OmegaPhase:
            return "w[" + std::to_string(j + 1) + "]^" + std::to_string(power);
        case OpKind::Hadamard:
            return "H[" + std::to_string(j + 1) + "," + std::to_string(m + 1) + "]";
        case OpKind::Swap:
            return "X[" + std::to_string(j + 1) + "," + std::to_string(m + 1) + "]";
        }
        return "?";
    }

    namespace
    {
        void check_indices(const ElementaryOp &op, int dim)
        {
            const bool bad = op.j < 0 || op.j >= dim || (op.is_two_level() && (op.m < 0 || op.m >= dim || op.m == op.j));
            if (bad)
                throw Error(ErrorKind::IndexOutOfRange, op.to_string() + " does not fit dimension " + std::to_string(dim));
        }
    } // namespace

    ExactMatrix elementary_to_matrix(const ElementaryOp &op, int dim)
    {
        check_indices(op, dim);
        ExactMatrix m = ExactMatrix::identity(dim);
        switch (op.kind)
        {
        case OpKind::OmegaPhase:
            m(op.j, op.j) = DOmega::omega_power(op.power);
            break;
        case OpKind::Hadamard:
        {
            const DOmega h = DOmega::inv_sqrt2();
            m(op.j, op.j) = h;
            m(op.j, op.m) = h;
            m(op.m, op.j) = h;
            m(op.m, op.m) = -h;
            break;
        }
        case OpKind::Swap:
            m(op.j, op.j) = DOmega();
            m(op.m, op.m) = DOmega();
            m(op.j, op.m) = DOmega::from_int(1);
            m(op.m, op.j) = DOmega::from_int(1);
            break;
        }
        return m;
    }

    void apply_elementary_in_place(const ElementaryOp &op, ExactMatrix &a)
    {
        check_indices(op, a.dim());
        const int n = a.dim();
        const bool left = op.side == Side::Left;
        // Left acts on rows, right on columns; the elementary matrices are symmetric.
        auto at = [&](int line, int t) -> DOmega & { return left ? a(line, t) : a(t, line); };

        switch (op.kind)
        {
        case OpKind::OmegaPhase:
            if (op.power % 8 == 0)
                return;
            for (int t = 0; t < n; ++t)
                at(op.j, t) = at(op.j, t).mul_omega(op.power);
            break;
        case OpKind::Hadamard:
            for (int t = 0; t < n; ++t)
            {
                DOmega x = at(op.j, t);
                DOmega y = at(op.m, t);
                at(op.j, t) = (x + y).div_sqrt2();
                at(op.m, t) = (x - y).div_sqrt2();
            }
            break;
        case OpKind::Swap:
            for (int t = 0; t < n; ++t)
                std::swap(at(op.j, t), at(op.m, t));
            break;
        }
    }

    ExactMatrix apply_elementary(const ElementaryOp &op, ExactMatrix a)
    {
        apply_elementary_in_place(op, a);
        return a;
    }

    std::vector<ElementaryOp> invert_elementary(const ElementaryOp &op)
    {
        if (op.kind == OpKind::OmegaPhase)
            return {ElementaryOp::omega_phase(op.j, 8 - op.power, op.side)};
        return {op};
    }

    ExactMatrix word_product(std::span<const ElementaryOp> word, int dim)
    {
        ExactMatrix acc = ExactMatrix::identity(dim);
        for (ElementaryOp op : word)
        {
            op.side = Side::Right;
            apply_elementary_in_place(op, acc);
        }
        return acc;
    }

} // namespace ctsynth
