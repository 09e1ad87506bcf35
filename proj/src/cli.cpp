#include "ctsynth/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "ctsynth/circuit.hpp"
#include "ctsynth/error.hpp"
#include "ctsynth/matrix_io.hpp"
#include "ctsynth/oracle.hpp"
#include "ctsynth/synthesis.hpp"

namespace ctsynth::cli
{

    namespace
    {
        int exit_code_for(const Error &e)
        {
            switch (e.kind())
            {
            case ErrorKind::Parse:
            case ErrorKind::UnsupportedDim: return exit_usage;
            case ErrorKind::NotUnitary:
            case ErrorKind::KEqualsOne: return exit_not_unitary;
            default: return exit_internal;
            }
        }

        void deliver(const std::string &path, const std::string &text, std::ostream &out)
        {
            if (path.empty())
                out << text;
            else
                write_file(path, text);
        }

        int qubits_for_dim(int dim)
        {
            switch (dim)
            {
            case 1: return 0;
            case 2: return 1;
            case 4: return 2;
            default: return -1;
            }
        }

        std::string fixed2(double v)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.2f", v);
            return buf;
        }
    } // namespace

    int cmd_synth(const SynthArgs &args, std::ostream &out, std::ostream &err)
    {
        try
        {
            const ExactMatrix u = parse_matrix(read_file(args.input));
            if (args.debug)
            {
                for (int r = 0; r < u.dim(); ++r)
                    for (int c = 0; c < u.dim(); ++c)
                        err << "debug: entry (" << r + 1 << "," << c + 1 << ") " << format_entry(u(r, c))
                            << " = " << u(r, c).to_string() << " over delta\n";
            }
            if (!is_unitary(u))
            {
                err << "error: matrix in '" << args.input << "' is not unitary\n";
                return exit_not_unitary;
            }
            if (u.dim() == 3 && !args.elementary)
            {
                err << "error: dimension 3 has no qubit layout; use --elementary\n";
                return exit_usage;
            }

            const Decomposition d = synthesize(u);
            if (args.debug)
            {
                for (std::size_t i = 0; i < d.rounds.size(); ++i)
                {
                    const auto &round = d.rounds[i];
                    err << "debug: round " << i + 1 << " k " << round.k_before << " -> " << round.k_after
                        << " cases";
                    for (CaseTag t : round.case_chain)
                        err << ' ' << case_tag_name(t);
                    err << " hadamards " << round.hadamards << '\n';
                }
            }

            std::string body;
            std::string report = "# k " + std::to_string(d.source_k) + "\n# rounds " +
                                 std::to_string(d.rounds.size()) + "\n# elementary_ops " +
                                 std::to_string(d.word.size()) + "\n";
            bool ok = true;
            if (args.elementary)
            {
                body = write_word(d.word, d.dim);
                if (args.verify)
                {
                    int dim = 0;
                    const auto word = parse_word(body, dim);
                    ok = dim == u.dim() && word_product(word, dim) == u;
                }
            }
            else
            {
                const Circuit c = emit(d.word, d.dim);
                body = write_circuit(c);
                const GateCounts n = gate_counts(c);
                report += "# gates " + std::to_string(n.total) + "\n# t_count " + std::to_string(n.t_count) +
                          "\n# cnot " + std::to_string(n.cnot) + "\n# ancilla " + (n.uses_ancilla ? "1" : "0") +
                          "\n";
                if (args.verify)
                    ok = circuit_implements(parse_circuit(body), u);
            }
            if (args.verify)
                report += std::string("# verify ") + (ok ? "ok" : "MISMATCH") + "\n";

            deliver(args.out, body, out);
            out << report;
            if (!ok)
            {
                err << "error: exact verification failed\n";
                return exit_mismatch;
            }
            return exit_ok;
        }
        catch (const Error &e)
        {
            err << "error: " << e.what() << '\n';
            return exit_code_for(e);
        }
    }

    int cmd_gen(int qubits, int gate_budget, std::uint64_t seed, std::ostream &out, std::ostream &err)
    {
        if (qubits != 1 && qubits != 2)
        {
            err << "error: --qubits must be 1 or 2\n";
            return exit_usage;
        }
        if (gate_budget < 0)
        {
            err << "error: --budget must be non-negative\n";
            return exit_usage;
        }
        const Instance inst = random_instance({qubits, gate_budget, seed});
        std::string word;
        for (const auto &g : inst.word)
            word += (word.empty() ? "" : "; ") + g.to_string();
        out << "# qubits " << qubits << " budget " << gate_budget << " seed " << seed << '\n';
        out << "# word " << word << '\n';
        out << write_matrix(inst.matrix);
        return exit_ok;
    }

    std::vector<int> parse_budgets(const std::string &text)
    {
        auto number = [&](const std::string &s, std::size_t column) {
            if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); }) ||
                s.size() > 7)
                throw ParseError(1, static_cast<int>(column) + 1, "bad budget '" + s + "'");
            return std::stoi(s);
        };

        std::vector<int> out;
        if (text.find(':') != std::string::npos)
        {
            std::vector<std::pair<std::string, std::size_t>> parts;
            std::size_t start = 0;
            while (true)
            {
                const std::size_t colon = text.find(':', start);
                parts.emplace_back(text.substr(start, colon - start), start);
                if (colon == std::string::npos)
                    break;
                start = colon + 1;
            }
            if (parts.size() != 3)
                throw ParseError(1, 1, "range must be start:stop:step");
            const int lo = number(parts[0].first, parts[0].second);
            const int hi = number(parts[1].first, parts[1].second);
            const int step = number(parts[2].first, parts[2].second);
            if (step == 0 || hi < lo)
                throw ParseError(1, 1, "empty budget range");
            for (int b = lo; b <= hi; b += step)
                out.push_back(b);
            return out;
        }
        std::size_t start = 0;
        while (true)
        {
            const std::size_t comma = text.find(',', start);
            out.push_back(number(text.substr(start, comma - start), start));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        return out;
    }

    BenchRow bench_budget(int qubits, int gate_budget, int trials, std::uint64_t seed)
    {
        BenchRow row;
        row.budget = gate_budget;
        row.trials = trials;
        for (int t = 0; t < trials; ++t)
        {
            const ExactMatrix u = random_unitary({qubits, gate_budget, derive_seed(seed, gate_budget, t)});
            const Decomposition d = synthesize(u);
            const GateCounts n = gate_counts(emit(d.word, d.dim));
            const int len = static_cast<int>(d.word.size());
            row.mean_k += d.source_k;
            row.mean_len += len;
            row.mean_gates += n.total;
            row.mean_t += n.t_count;
            row.max_k = std::max(row.max_k, d.source_k);
            row.max_len = std::max(row.max_len, len);
            row.max_gates = std::max(row.max_gates, n.total);
            row.max_t = std::max(row.max_t, n.t_count);
        }
        if (trials > 0)
        {
            row.mean_k /= trials;
            row.mean_len /= trials;
            row.mean_gates /= trials;
            row.mean_t /= trials;
        }
        return row;
    }

    int cmd_bench(int qubits, const std::string &budgets, int trials, std::uint64_t seed, std::ostream &out,
                  std::ostream &err)
    {
        std::vector<int> list;
        try
        {
            list = parse_budgets(budgets);
        }
        catch (const ParseError &e)
        {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        if (qubits != 1 && qubits != 2)
        {
            err << "error: --qubits must be 1 or 2\n";
            return exit_usage;
        }
        if (trials < 1)
        {
            err << "error: --trials must be positive\n";
            return exit_usage;
        }

        try
        {
            out << "# budget trials mean_k max_k mean_len max_len mean_gates max_gates mean_t max_t\n";
            for (int b : list)
            {
                const BenchRow r = bench_budget(qubits, b, trials, seed);
                out << r.budget << ' ' << r.trials << ' ' << fixed2(r.mean_k) << ' ' << r.max_k << ' '
                    << fixed2(r.mean_len) << ' ' << r.max_len << ' ' << fixed2(r.mean_gates) << ' ' << r.max_gates
                    << ' ' << fixed2(r.mean_t) << ' ' << r.max_t << '\n';
            }
        }
        catch (const Error &e)
        {
            err << "error: " << e.what() << '\n';
            return exit_code_for(e);
        }
        return exit_ok;
    }

    std::string residue_tables()
    {
        struct Candidate
        {
            const char *name;
            ZOmega value;
        };
        const ZOmega one = ZOmega::from_int(1);
        const Candidate candidates[] = {
            {"0", ZOmega()},
            {"1", one},
            {"ω", ZOmega::omega_power(1)},
            {"ω²", ZOmega::omega_power(2)},
            {"ω³", ZOmega::omega_power(3)},
            {"1+ω", one + ZOmega::omega_power(1)},
            {"1+ω²", one + ZOmega::omega_power(2)},
            {"1+ω³", one + ZOmega::omega_power(3)},
        };
        const char *power[] = {"", "δ", "δ²", "δ³"};

        std::ostringstream s;
        std::vector<std::pair<const Candidate *, ResidueClass>> reps;
        for (int n = 1; n <= 3; ++n)
        {
            reps.clear();
            for (const auto &cand : candidates)
            {
                const ResidueClass r = rho(cand.value, n);
                const bool seen = std::any_of(reps.begin(), reps.end(), [&](const auto &p) { return p.second == r; });
                if (!seen)
                    reps.emplace_back(&cand, r);
            }
            s << "ℤ[ω]/(" << power[n] << ") = {";
            for (std::size_t i = 0; i < reps.size(); ++i)
                s << (i ? ", " : "") << reps[i].first->name;
            s << "}\n";
        }

        // Basis rows ordered as x0, then x2, then x1.
        std::sort(reps.begin(), reps.end(), [](const auto &l, const auto &r) {
            auto key = [](const ResidueClass &x) { return x.x0() * 4 + x.x2() * 2 + x.x1(); };
            return key(l.second) < key(r.second);
        });
        s << "\nbasis {1, δ, δ²} modulo δ³\n";
        for (const auto &[cand, r] : reps)
            s << cand->name << " | " << r.to_string() << '\n';
        return s.str();
    }

    int cmd_tables(std::ostream &out)
    {
        out << residue_tables();
        return exit_ok;
    }

    int cmd_verify(const std::string &matrix_path, const std::string &candidate_path, bool elementary,
                   std::ostream &out, std::ostream &err)
    {
        try
        {
            const ExactMatrix u = parse_matrix(read_file(matrix_path));
            const std::string text = read_file(candidate_path);
            bool ok = false;
            if (elementary)
            {
                int dim = 0;
                const auto word = parse_word(text, dim);
                if (dim != u.dim())
                {
                    err << "error: word dimension " << dim << " differs from matrix dimension " << u.dim() << '\n';
                    return exit_usage;
                }
                ok = word_product(word, dim) == u;
            }
            else
            {
                const int q = qubits_for_dim(u.dim());
                if (q < 0)
                {
                    err << "error: dimension " << u.dim() << " has no qubit layout\n";
                    return exit_usage;
                }
                ok = circuit_implements(parse_circuit(text, q), u);
            }
            out << (ok ? "ok\n" : "mismatch\n");
            return ok ? exit_ok : exit_mismatch;
        }
        catch (const Error &e)
        {
            err << "error: " << e.what() << '\n';
            return exit_code_for(e);
        }
    }

    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Exact Clifford+T synthesis for one- and two-qubit unitaries", "ctsynth"};
        app.require_subcommand(1);

        SynthArgs synth;
        auto *synth_cmd = app.add_subcommand("synth", "Decompose a matrix file into a circuit or elementary word");
        synth_cmd->add_option("input", synth.input, "Matrix file")->required();
        synth_cmd->add_flag("--elementary", synth.elementary, "Write the elementary word instead of a circuit");
        synth_cmd->add_flag("--verify", synth.verify, "Re-check the output exactly");
        synth_cmd->add_flag("--debug", synth.debug, "Log exact conversions and reduction rounds");
        synth_cmd->add_option("--out", synth.out, "Output file");

        int qubits = 1, budget = 0, trials = 10;
        std::uint64_t seed = 0;
        std::string out_path;
        auto *gen_cmd = app.add_subcommand("gen", "Generate a random exact unitary");
        gen_cmd->add_option("--qubits", qubits, "1 or 2")->required();
        gen_cmd->add_option("--budget", budget, "Number of random generator gates")->required();
        gen_cmd->add_option("--seed", seed, "Random seed")->required();
        gen_cmd->add_option("--out", out_path, "Output file");

        std::string budgets;
        auto *bench_cmd = app.add_subcommand("bench", "Gate counts against the delta exponent");
        bench_cmd->add_option("--qubits", qubits, "1 or 2")->required();
        bench_cmd->add_option("--budgets", budgets, "a,b,c or start:stop:step")->required();
        bench_cmd->add_option("--trials", trials, "Instances per budget");
        bench_cmd->add_option("--seed", seed, "Random seed")->required();
        bench_cmd->add_option("--out", out_path, "Output file");

        auto *tables_cmd = app.add_subcommand("tables", "Print residue tables modulo delta^n");
        tables_cmd->add_option("--out", out_path, "Output file");

        std::string matrix_path, candidate_path;
        bool verify_elementary = false, verify_debug = false;
        auto *verify_cmd = app.add_subcommand("verify", "Check a circuit or word file against a matrix file");
        verify_cmd->add_option("matrix", matrix_path, "Matrix file")->required();
        verify_cmd->add_option("candidate", candidate_path, "Circuit file, or word file with --elementary")
            ->required();
        verify_cmd->add_flag("--elementary", verify_elementary, "Candidate is an elementary word");
        verify_cmd->add_flag("--debug", verify_debug, "Print the parsed matrix");

        try
        {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError &e)
        {
            const int code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_usage;
        }

        // Commands whose output may go to --out render into a buffer first.
        std::ostringstream buffer;
        std::ostream &sink = out_path.empty() ? out : buffer;
        int code = exit_ok;
        if (*synth_cmd)
            return cmd_synth(synth, out, err);
        if (*gen_cmd)
            code = cmd_gen(qubits, budget, seed, sink, err);
        else if (*bench_cmd)
            code = cmd_bench(qubits, budgets, trials, seed, sink, err);
        else if (*tables_cmd)
            code = cmd_tables(sink);
        else if (*verify_cmd)
        {
            if (verify_debug)
            {
                try
                {
                    err << "debug: " << write_matrix(parse_matrix(read_file(matrix_path)));
                }
                catch (const Error &)
                {
                }
            }
            return cmd_verify(matrix_path, candidate_path, verify_elementary, out, err);
        }

        if (!out_path.empty() && code == exit_ok)
        {
            try
            {
                write_file(out_path, buffer.str());
            }
            catch (const Error &e)
            {
                err << "error: " << e.what() << '\n';
                return exit_usage;
            }
        }
        return code;
    }

} // namespace ctsynth::cli
