#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ctsynth/ring.hpp"

namespace ctsynth
{

    /// Square matrix over D[w]. Synthesis uses dims 1..4; circuit simulation goes up to 8.
    class ExactMatrix
    {
    public:
        static constexpr int max_dim = 8;

        explicit ExactMatrix(int dim);
        static ExactMatrix identity(int dim);

        int dim() const noexcept { return _dim; }

        const DOmega &operator()(int r, int c) const { return _entries[r * _dim + c]; }
        DOmega &operator()(int r, int c) { return _entries[r * _dim + c]; }

        bool operator==(const ExactMatrix &) const = default;

        /// Canonical text rendering, usable as an exact hash key.
        std::string key() const;

    private:
        int _dim;
        std::vector<DOmega> _entries;
    };

    ExactMatrix mat_mul(const ExactMatrix &a, const ExactMatrix &b);
    ExactMatrix adjoint(const ExactMatrix &a);
    bool is_unitary(const ExactMatrix &a);
    int matrix_delta_exponent(const ExactMatrix &a);

    /// 0/1 matrix, e.g. rho_1^k(U).
    struct BitMatrix
    {
        int dim = 0;
        std::array<std::array<std::uint8_t, 4>, 4> bits{};

        std::uint8_t operator()(int r, int c) const { return bits[r][c]; }
        bool operator==(const BitMatrix &) const = default;
    };

    struct ResidueMatrix
    {
        int dim = 0;
        int modulus_exp = 1;
        int k = 0;
        std::array<std::array<ResidueClass, 4>, 4> grid{};

        const ResidueClass &operator()(int r, int c) const { return grid[r][c]; }
        /// The x0 bits (equivalently rho_1^k).
        BitMatrix ones() const;
    };

    /// Entrywise rho_n(delta^k * a); throws DeltaExponentTooSmall when k is not a delta exponent.
    ResidueMatrix residue_matrix(const ExactMatrix &a, int n, int k);

    enum class OpKind
    {
        OmegaPhase,
        Hadamard,
        Swap,
    };

    enum class Side
    {
        Left,
        Right,
    };

    /**
     * One- and two-level elementary operators w_[j]^p, H_[j,m], X_[j,m].
     * Indices are 0-based; text rendering is 1-based.
     */
    struct ElementaryOp
    {
        OpKind kind = OpKind::OmegaPhase;
        int j = 0;
        int m = 0;     // unused for OmegaPhase
        int power = 0; // OmegaPhase only, kept in [0, 8)
        Side side = Side::Left;

        static ElementaryOp omega_phase(int j, int power, Side side = Side::Left);
        static ElementaryOp hadamard(int j, int m, Side side = Side::Left);
        static ElementaryOp swap(int j, int m, Side side = Side::Left);

        bool is_two_level() const noexcept { return kind != OpKind::OmegaPhase; }

        /// "w[1]^3", "H[1,2]", "X[3,4]"
        std::string to_string() const;

        bool operator==(const ElementaryOp &) const = default;
    };

    ExactMatrix elementary_to_matrix(const ElementaryOp &op, int dim);

    /// Row (Left) or column (Right) update; equal to the full product with elementary_to_matrix.
    void apply_elementary_in_place(const ElementaryOp &op, ExactMatrix &a);
    ExactMatrix apply_elementary(const ElementaryOp &op, ExactMatrix a);

    std::vector<ElementaryOp> invert_elementary(const ElementaryOp &op);

    /// word[0] * word[1] * ... as an exact matrix; sides are ignored.
    ExactMatrix word_product(std::span<const ElementaryOp> word, int dim);

} // namespace ctsynth
