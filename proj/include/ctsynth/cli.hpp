#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ctsynth::cli
{

    enum ExitCode : int
    {
        exit_ok = 0,
        exit_mismatch = 1,
        exit_usage = 2,
        exit_not_unitary = 3,
        exit_internal = 4,
    };

    struct SynthArgs
    {
        std::string input;
        std::string out; // empty: standard output
        bool elementary = false;
        bool verify = false;
        bool debug = false;
    };

    int cmd_synth(const SynthArgs &args, std::ostream &out, std::ostream &err);

    int cmd_gen(int qubits, int gate_budget, std::uint64_t seed, std::ostream &out, std::ostream &err);

    /// "10,20,40" or "start:stop:step" (inclusive); throws ParseError.
    std::vector<int> parse_budgets(const std::string &text);

    struct BenchRow
    {
        int budget = 0;
        int trials = 0;
        double mean_k = 0;
        int max_k = 0;
        double mean_len = 0;
        int max_len = 0;
        double mean_gates = 0;
        int max_gates = 0;
        double mean_t = 0;
        int max_t = 0;
    };

    /// Trial t of a budget uses seed derive_seed(seed, budget, t).
    BenchRow bench_budget(int qubits, int gate_budget, int trials, std::uint64_t seed);

    int cmd_bench(int qubits, const std::string &budgets, int trials, std::uint64_t seed, std::ostream &out,
                  std::ostream &err);

    /// Quotient rings modulo delta, delta^2, delta^3 and the basis table modulo delta^3.
    std::string residue_tables();

    int cmd_tables(std::ostream &out);

    /// Checks a circuit (or, with elementary, a word file) against a matrix file.
    int cmd_verify(const std::string &matrix_path, const std::string &candidate_path, bool elementary,
                   std::ostream &out, std::ostream &err);

    /// Full command line without the program name.
    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace ctsynth::cli
