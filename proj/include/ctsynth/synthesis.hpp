#pragma once

#include <array>
#include <span>
#include <vector>

#include "ctsynth/matrix.hpp"

namespace ctsynth
{

    enum class CaseTag
    {
        Case2x2AllOnes,
        Case3x3Block,
        CaseI,
        CaseII,
        CaseIII,
        CaseIV,
        CaseV,
    };

    const char *case_tag_name(CaseTag tag) noexcept;

    /// Position in the per-round progress order v > iv > iii > ii = i (= 2x2 = 3x3).
    int case_rank(CaseTag tag) noexcept;

    /**
     * A rho_1^k pattern normalized to one of the case templates.
     *
     * Template entry (r, c) sits at actual entry (row_perm[r], col_perm[c]), or at
     * (col_perm[c], row_perm[r]) when transposed. In other words template rows are
     * actual rows (actual columns when transposed) and row_perm picks which.
     */
    struct CasePattern
    {
        CaseTag tag = CaseTag::Case2x2AllOnes;
        std::array<int, 4> row_perm{0, 1, 2, 3};
        std::array<int, 4> col_perm{0, 1, 2, 3};
        bool transposed = false;
    };

    /// The 0/1 template for a tag (dim 2 for 2x2, 3 for 3x3, 4 otherwise).
    BitMatrix case_template(CaseTag tag);

    /// Throws UnreachablePattern if the row/column parity conditions fail or nothing matches.
    CasePattern classify_pattern(const BitMatrix &pattern);

    /// x (mod 4) with s1[i] + x == s2[i] for every position; inputs must be unit residues mod delta^3.
    int phase_offset(std::span<const ResidueClass> r1, std::span<const ResidueClass> r2);

    struct ReductionRound
    {
        std::vector<ElementaryOp> left_ops;  // in application order
        std::vector<ElementaryOp> right_ops; // in application order
        int k_before = 0;
        int k_after = 0;
        std::vector<CaseTag> case_chain;
        int hadamards = 0;
    };

    /// At most this many Hadamard-type applications per round.
    inline constexpr int max_hadamards_per_round = 4;

    struct SynthOptions
    {
        /// Check unitarity exactly after every round (slow).
        bool verify_rounds = false;
    };

    struct Decomposition
    {
        int dim = 0;
        /// word[0] * word[1] * ... == U
        std::vector<ElementaryOp> word;
        std::vector<ReductionRound> rounds;
        std::vector<ElementaryOp> base_ops;
        int source_k = 0;
    };

    /// For a monomial unitary U: W with product(W) * U == I, built from Swap and OmegaPhase.
    std::vector<ElementaryOp> base_case_solve(const ExactMatrix &u);

    /// One reduction round; requires k == matrix_delta_exponent(u) > 1.
    ReductionRound reduce_round(const ExactMatrix &u, int k);
    /// Same, updating u to L * u * R.
    ReductionRound reduce_round_in_place(ExactMatrix &u, int k);

    Decomposition synthesize(const ExactMatrix &u, const SynthOptions &options = {});

    bool verify_decomposition(const ExactMatrix &u, const Decomposition &d);

} // namespace ctsynth
