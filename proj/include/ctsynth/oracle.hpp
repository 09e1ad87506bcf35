#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctsynth/circuit.hpp"

namespace ctsynth
{

    struct InstanceSpec
    {
        int qubits = 1;
        int gate_budget = 0;
        std::uint64_t seed = 0;
    };

    struct Instance
    {
        ExactMatrix matrix{1};
        /// Generating gates in time order.
        std::vector<Gate> word;
    };

    /// {H, S, T, W} on one qubit; {H, S, T on each qubit, both CNOTs, W} on two.
    std::vector<Gate> generator_alphabet(int qubits);

    /**
     * gate_budget draws from generator_alphabet with std::mt19937_64(seed),
     * each draw being rng() % alphabet size. Throws UnsupportedDim unless qubits is 1 or 2.
     */
    Instance random_instance(const InstanceSpec &spec);
    ExactMatrix random_unitary(const InstanceSpec &spec);

    /// Stable per-item seed from a base seed and two indices (splitmix64 finalizer).
    std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

    /// Every one- and two-level operator on dim, OmegaPhase powers 1..7.
    std::vector<ElementaryOp> elementary_alphabet(int dim);

    struct WordEntry
    {
        ExactMatrix matrix{1};
        std::vector<ElementaryOp> word;
    };

    /// Breadth-first products of at most max_len (<= 3) elementary ops, keyed by ExactMatrix::key().
    std::map<std::string, WordEntry> brute_force_words(int dim, int max_len);

    /// Gates used by search_template: H, S, Sdg, T, Tdg, X on each qubit and both CNOTs.
    std::vector<Gate> search_alphabet();

    /// Meet-in-the-middle search for a shortest two-qubit word equal to target.
    std::optional<std::vector<Gate>> search_template(const ExactMatrix &target, int max_len);

} // namespace ctsynth
