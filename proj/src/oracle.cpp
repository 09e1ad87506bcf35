#include "ctsynth/oracle.hpp"

#include <random>

#include "ctsynth/error.hpp"

namespace ctsynth
{

    std::vector<Gate> generator_alphabet(int qubits)
    {
        using K = GateKind;
        if (qubits == 1)
            return {Gate::single(K::H, 0), Gate::single(K::S, 0), Gate::single(K::T, 0), Gate::scalar(1)};
        if (qubits == 2)
            return {Gate::single(K::H, 0), Gate::single(K::H, 1), Gate::single(K::S, 0),
                    Gate::single(K::S, 1), Gate::single(K::T, 0), Gate::single(K::T, 1),
                    Gate::cnot(0, 1),      Gate::cnot(1, 0),      Gate::scalar(1)};
        throw Error(ErrorKind::UnsupportedDim, "instances need 1 or 2 qubits, got " + std::to_string(qubits));
    }

    Instance random_instance(const InstanceSpec &spec)
    {
        const auto alphabet = generator_alphabet(spec.qubits);
        if (spec.gate_budget < 0)
            throw Error(ErrorKind::IndexOutOfRange, "negative gate budget");
        std::mt19937_64 rng(spec.seed);
        Instance inst;
        inst.word.reserve(static_cast<std::size_t>(spec.gate_budget));
        for (int i = 0; i < spec.gate_budget; ++i)
            inst.word.push_back(alphabet[rng() % alphabet.size()]);
        inst.matrix = gate_list_matrix(inst.word, spec.qubits);
        return inst;
    }

    ExactMatrix random_unitary(const InstanceSpec &spec) { return random_instance(spec).matrix; }

    std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b)
    {
        auto mix = [](std::uint64_t z) {
            z += 0x9e3779b97f4a7c15ULL;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            return z ^ (z >> 31);
        };
        return mix(mix(mix(seed) ^ a) ^ b);
    }

    std::vector<ElementaryOp> elementary_alphabet(int dim)
    {
        std::vector<ElementaryOp> ops;
        for (int j = 0; j < dim; ++j)
            for (int p = 1; p < 8; ++p)
                ops.push_back(ElementaryOp::omega_phase(j, p));
        for (int j = 0; j < dim; ++j)
        {
            for (int m = j + 1; m < dim; ++m)
            {
                ops.push_back(ElementaryOp::hadamard(j, m));
                ops.push_back(ElementaryOp::swap(j, m));
            }
        }
        return ops;
    }

    std::map<std::string, WordEntry> brute_force_words(int dim, int max_len)
    {
        if (dim < 1 || dim > 4)
            throw Error(ErrorKind::UnsupportedDim, "brute force covers dims 1..4");
        if (max_len < 0 || max_len > 3)
            throw Error(ErrorKind::IndexOutOfRange, "brute force is limited to words of length 3");

        const auto alphabet = elementary_alphabet(dim);
        std::map<std::string, WordEntry> seen;
        WordEntry start{ExactMatrix::identity(dim), {}};
        seen.emplace(start.matrix.key(), start);
        std::vector<WordEntry> frontier{start};

        for (int len = 1; len <= max_len; ++len)
        {
            std::vector<WordEntry> next;
            for (const auto &w : frontier)
            {
                for (ElementaryOp op : alphabet)
                {
                    op.side = Side::Right;
                    WordEntry e{apply_elementary(op, w.matrix), w.word};
                    op.side = Side::Left;
                    e.word.push_back(op);
                    std::string key = e.matrix.key();
                    if (seen.count(key))
                        continue;
                    seen.emplace(std::move(key), e);
                    next.push_back(std::move(e));
                }
            }
            frontier = std::move(next);
        }
        return seen;
    }

    std::vector<Gate> search_alphabet()
    {
        using K = GateKind;
        std::vector<Gate> gates;
        for (int q : {0, 1})
            for (K k : {K::H, K::S, K::Sdg, K::T, K::Tdg, K::X})
                gates.push_back(Gate::single(k, q));
        gates.push_back(Gate::cnot(0, 1));
        gates.push_back(Gate::cnot(1, 0));
        return gates;
    }

    namespace
    {
        struct Node
        {
            ExactMatrix matrix{4};
            std::vector<Gate> word;
        };

        // Shortest word per reachable matrix, up to depth gates.
        std::map<std::string, Node> reachable(int depth)
        {
            const auto alphabet = search_alphabet();
            std::map<std::string, Node> seen;
            Node start{ExactMatrix::identity(4), {}};
            seen.emplace(start.matrix.key(), start);
            std::vector<Node> frontier{start};
            for (int d = 1; d <= depth; ++d)
            {
                std::vector<Node> next;
                for (const auto &n : frontier)
                {
                    for (const Gate &g : alphabet)
                    {
                        Node e{n.matrix, n.word};
                        apply_gate(g, e.matrix, 2);
                        e.word.push_back(g);
                        std::string key = e.matrix.key();
                        if (seen.count(key))
                            continue;
                        seen.emplace(std::move(key), e);
                        next.push_back(std::move(e));
                    }
                }
                frontier = std::move(next);
            }
            return seen;
        }
    } // namespace

    std::optional<std::vector<Gate>> search_template(const ExactMatrix &target, int max_len)
    {
        if (target.dim() != 4)
            throw Error(ErrorKind::DimensionMismatch, "template search works on two qubits");
        if (max_len < 0)
            return std::nullopt;

        // Word = first ++ second in time order, so target = M(second) * M(first).
        const auto forward = reachable((max_len + 1) / 2);
        const auto backward = reachable(max_len / 2);

        std::optional<std::vector<Gate>> best;
        for (const auto &[key, second] : backward)
        {
            const ExactMatrix need = mat_mul(adjoint(second.matrix), target);
            const auto hit = forward.find(need.key());
            if (hit == forward.end())
                continue;
            const std::size_t len = hit->second.word.size() + second.word.size();
            if (best && best->size() <= len)
                continue;
            std::vector<Gate> word = hit->second.word;
            word.insert(word.end(), second.word.begin(), second.word.end());
            best = std::move(word);
        }
        if (best && gate_list_matrix(*best, 2) != target)
            throw Error(ErrorKind::TemplateVerificationFailed, "search produced an inexact word");
        return best;
    }

} // namespace ctsynth
