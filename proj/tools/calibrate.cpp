// Measures the constants frozen in include/ctsynth/bounds.hpp.
#include <algorithm>
#include <cstdint>
#include <iostream>
#include <random>

#include "ctsynth/circuit.hpp"
#include "ctsynth/oracle.hpp"
#include "ctsynth/synthesis.hpp"

using namespace ctsynth;

namespace
{
    struct Stats
    {
        std::size_t round_ops = 0;
        std::size_t base_ops = 0;
        int gates_per_op = 0;
        double len_per_k = 0;
        double gates_per_k = 0;
        int instances = 0;
    };

    void record(Stats &s, const ExactMatrix &u)
    {
        const Decomposition d = synthesize(u);
        for (const auto &r : d.rounds)
            s.round_ops = std::max(s.round_ops, r.left_ops.size() + r.right_ops.size());
        s.base_ops = std::max(s.base_ops, d.base_ops.size());
        if (u.dim() != 3)
        {
            for (const auto &op : d.word)
            {
                const ElementaryOp one[] = {op};
                s.gates_per_op = std::max(s.gates_per_op, gate_counts(emit(one, u.dim())).total);
            }
            if (d.source_k > 0)
                s.gates_per_k = std::max(s.gates_per_k, double(gate_counts(emit(d.word, d.dim)).total) / d.source_k);
        }
        if (d.source_k > 0)
            s.len_per_k = std::max(s.len_per_k, double(d.word.size()) / d.source_k);
        ++s.instances;
    }
} // namespace

int main(int argc, char **argv)
{
    const int trials = argc > 1 ? std::stoi(argv[1]) : 200;
    Stats s;
    for (int qubits : {1, 2})
        for (int budget = 0; budget <= 200; budget += 10)
            for (int t = 0; t < trials; ++t)
                record(s, random_unitary({qubits, budget, derive_seed(0xC0FFEE, budget * 4 + qubits, t)}));

    // Random elementary words reach matrices the gate generators rarely produce.
    std::mt19937_64 rng(0xCA11B);
    for (int dim = 2; dim <= 4; ++dim)
    {
        const auto alphabet = elementary_alphabet(dim);
        for (int t = 0; t < trials * 20; ++t)
        {
            ExactMatrix u = ExactMatrix::identity(dim);
            const int len = 1 + static_cast<int>(rng() % 120);
            for (int i = 0; i < len; ++i)
            {
                ElementaryOp op = alphabet[rng() % alphabet.size()];
                op.side = Side::Right;
                apply_elementary_in_place(op, u);
            }
            record(s, u);
        }
    }

    std::cout << "instances " << s.instances << '\n'
              << "max ops per round " << s.round_ops << '\n'
              << "max base ops " << s.base_ops << '\n'
              << "max gates per elementary op " << s.gates_per_op << '\n'
              << "max word length / k " << s.len_per_k << '\n'
              << "max gates / k " << s.gates_per_k << '\n';
}
