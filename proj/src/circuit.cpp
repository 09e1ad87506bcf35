#include "ctsynth/circuit.hpp"

#include <charconv>
#include <sstream>

#include "ctsynth/error.hpp"

namespace ctsynth
{

    namespace
    {
        struct Mnemonic
        {
            const char *text;
            GateKind kind;
            int operands;
        };

        constexpr Mnemonic mnemonics[] = {
            {"H", GateKind::H, 1},          {"S", GateKind::S, 1},
            {"SDG", GateKind::Sdg, 1},      {"T", GateKind::T, 1},
            {"TDG", GateKind::Tdg, 1},      {"X", GateKind::X, 1},
            {"CNOT", GateKind::CNOT, 2},    {"W", GateKind::W, 1},
            {"ANC_INIT", GateKind::AncillaInit, 1}, {"ANC_FREE", GateKind::AncillaFree, 1},
        };

        const Mnemonic &mnemonic(GateKind k)
        {
            for (const auto &m : mnemonics)
                if (m.kind == k)
                    return m;
            return mnemonics[0];
        }

        bool is_marker(GateKind k) { return k == GateKind::AncillaInit || k == GateKind::AncillaFree; }

        // diag(1, w^p) on one wire.
        void phase(std::vector<Gate> &out, int q, int p)
        {
            p = ((p % 8) + 8) % 8;
            if (p == 6)
            {
                out.push_back(Gate::single(GateKind::Sdg, q));
                return;
            }
            if (p == 7)
            {
                out.push_back(Gate::single(GateKind::Tdg, q));
                return;
            }
            for (int i = 0; i < p / 2; ++i)
                out.push_back(Gate::single(GateKind::S, q));
            if (p % 2)
                out.push_back(Gate::single(GateKind::T, q));
        }

        // Bit of basis index i (dim 4) carried by qubit q; qubit 0 is the high bit.
        int bit(int i, int q) { return (i >> (1 - q)) & 1; }

        class Lowering
        {
        public:
            explicit Lowering(int dim) : _dim(dim) {}

            void op(const ElementaryOp &e)
            {
                if (_dim == 1)
                {
                    _gates.push_back(Gate::scalar(e.power));
                    return;
                }
                if (_dim == 2)
                    one_qubit(e);
                else
                    two_qubit(e);
            }

            bool used_ancilla() const { return _ancilla; }
            std::vector<Gate> take() { return std::move(_gates); }

        private:
            void one_qubit(const ElementaryOp &e)
            {
                switch (e.kind)
                {
                case OpKind::Hadamard: _gates.push_back(Gate::single(GateKind::H, 0)); break;
                case OpKind::Swap: _gates.push_back(Gate::single(GateKind::X, 0)); break;
                case OpKind::OmegaPhase:
                    if (e.power == 0)
                        break;
                    if (e.j == 1)
                    {
                        phase(_gates, 0, e.power);
                    }
                    else
                    {
                        // diag(w^p, 1) = w^p diag(1, w^-p)
                        _gates.push_back(Gate::scalar(e.power));
                        phase(_gates, 0, -e.power);
                    }
                    break;
                }
            }

            void two_qubit(const ElementaryOp &e)
            {
                if (e.kind == OpKind::OmegaPhase)
                    omega_phase(e.j, e.power);
                else
                    two_level(e.kind, e.j, e.m);
            }

            void two_level(OpKind kind, int j, int m)
            {
                const int diff = j ^ m;
                if (diff == 3)
                {
                    // CNOT(0 -> 1) maps the pair onto states that differ in qubit 0 only.
                    auto route = [](int i) { return i ^ ((i >> 1) & 1); };
                    _gates.push_back(Gate::cnot(0, 1));
                    two_level(kind, route(j), route(m));
                    _gates.push_back(Gate::cnot(0, 1));
                    return;
                }
                const int target = diff == 2 ? 0 : 1;
                const int control = 1 - target;
                const bool negative = bit(j, control) == 0;
                if (negative)
                    _gates.push_back(Gate::single(GateKind::X, control));
                if (kind == OpKind::Swap)
                {
                    _gates.push_back(Gate::cnot(control, target));
                }
                else
                {
                    const int wires[] = {control, target};
                    append_template(_gates, find_template(TemplateName::LambdaH), wires);
                }
                if (negative)
                    _gates.push_back(Gate::single(GateKind::X, control));
            }

            void omega_phase(int j, int p)
            {
                if (p == 0)
                    return;
                _ancilla = true;
                const int anc = 2;
                const int wires[] = {0, 1, anc};
                for (int q : {0, 1})
                    if (!bit(j, q))
                        _gates.push_back(Gate::single(GateKind::X, q));
                append_template(_gates, find_template(TemplateName::Lambda2IX), wires);
                phase(_gates, anc, p);
                append_template(_gates, find_template(TemplateName::Lambda2MinusIX), wires);
                for (int q : {0, 1})
                    if (!bit(j, q))
                        _gates.push_back(Gate::single(GateKind::X, q));
            }

            int _dim;
            bool _ancilla = false;
            std::vector<Gate> _gates;
        };

        [[noreturn]] void parse_fail(int line, int column, const std::string &what)
        {
            throw ParseError(line, column, what);
        }
    } // namespace

    void apply_gate(const Gate &gate, ExactMatrix &m, int wires)
    {
        const int dim = m.dim();
        auto mask = [&](int q) {
            if (q < 0 || q >= wires)
                throw Error(ErrorKind::IndexOutOfRange, "gate '" + gate.to_string() + "' outside " +
                                                            std::to_string(wires) + " wires");
            return 1 << (wires - 1 - q);
        };
        auto scale_rows = [&](int bitmask, int p) {
            for (int r = 0; r < dim; ++r)
                if (r & bitmask)
                    for (int c = 0; c < dim; ++c)
                        m(r, c) = m(r, c).mul_omega(p);
        };
        auto swap_rows = [&](int r1, int r2) {
            for (int c = 0; c < dim; ++c)
                std::swap(m(r1, c), m(r2, c));
        };

        switch (gate.kind)
        {
        case GateKind::H:
        {
            const int b = mask(gate.q0);
            for (int r = 0; r < dim; ++r)
            {
                if (r & b)
                    continue;
                for (int c = 0; c < dim; ++c)
                {
                    DOmega x = m(r, c), y = m(r | b, c);
                    m(r, c) = (x + y).div_sqrt2();
                    m(r | b, c) = (x - y).div_sqrt2();
                }
            }
            break;
        }
        case GateKind::S: scale_rows(mask(gate.q0), 2); break;
        case GateKind::Sdg: scale_rows(mask(gate.q0), 6); break;
        case GateKind::T: scale_rows(mask(gate.q0), 1); break;
        case GateKind::Tdg: scale_rows(mask(gate.q0), 7); break;
        case GateKind::X:
        {
            const int b = mask(gate.q0);
            for (int r = 0; r < dim; ++r)
                if (!(r & b))
                    swap_rows(r, r | b);
            break;
        }
        case GateKind::CNOT:
        {
            const int cb = mask(gate.q0), tb = mask(gate.q1);
            if (cb == tb)
                throw Error(ErrorKind::IndexOutOfRange, "CNOT control equals target");
            for (int r = 0; r < dim; ++r)
                if ((r & cb) && !(r & tb))
                    swap_rows(r, r | tb);
            break;
        }
        case GateKind::W:
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c)
                    m(r, c) = m(r, c).mul_omega(gate.power);
            break;
        case GateKind::AncillaInit:
        case GateKind::AncillaFree:
            mask(gate.q0);
            break;
        }
    }

    std::string Gate::to_string() const
    {
        const std::string name = mnemonic(kind).text;
        switch (kind)
        {
        case GateKind::CNOT: return name + " " + std::to_string(q0) + " " + std::to_string(q1);
        case GateKind::W: return name + " " + std::to_string(power);
        default: return name + " " + std::to_string(q0);
        }
    }

    Circuit emit(std::span<const ElementaryOp> word, int dim)
    {
        if (dim != 1 && dim != 2 && dim != 4)
            throw Error(ErrorKind::UnsupportedDim, "no qubit layout for dimension " + std::to_string(dim));
        for (const auto &e : word)
            if (e.j < 0 || e.j >= dim || (e.is_two_level() && (e.m < 0 || e.m >= dim || e.m == e.j)))
                throw Error(ErrorKind::IndexOutOfRange, e.to_string() + " does not fit dimension " + std::to_string(dim));

        Lowering lower(dim);
        // The first word factor acts last.
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            lower.op(*it);

        Circuit c;
        c.data_qubits = dim == 1 ? 0 : dim == 2 ? 1 : 2;
        c.uses_ancilla = lower.used_ancilla();
        if (c.uses_ancilla)
            c.gates.push_back(Gate::single(GateKind::AncillaInit, c.ancilla_wire()));
        auto body = lower.take();
        c.gates.insert(c.gates.end(), body.begin(), body.end());
        if (c.uses_ancilla)
            c.gates.push_back(Gate::single(GateKind::AncillaFree, c.ancilla_wire()));
        return c;
    }

    ExactMatrix gate_list_matrix(std::span<const Gate> gates, int wires)
    {
        if (wires < 0 || wires > 3)
            throw Error(ErrorKind::DimensionMismatch, "simulation supports at most 3 wires");
        ExactMatrix m = ExactMatrix::identity(1 << wires);
        for (const auto &g : gates)
            apply_gate(g, m, wires);
        return m;
    }

    ExactMatrix circuit_to_matrix(const Circuit &c) { return gate_list_matrix(c.gates, c.wires()); }

    ExactMatrix ancilla_restriction(const ExactMatrix &full)
    {
        if (full.dim() % 2)
            throw Error(ErrorKind::DimensionMismatch, "matrix has no ancilla wire");
        ExactMatrix r(full.dim() / 2);
        for (int i = 0; i < r.dim(); ++i)
            for (int j = 0; j < r.dim(); ++j)
                r(i, j) = full(2 * i, 2 * j);
        return r;
    }

    bool ancilla_block_diagonal(const ExactMatrix &full)
    {
        for (int i = 0; i < full.dim(); ++i)
            for (int j = 0; j < full.dim(); ++j)
                if ((i % 2) != (j % 2) && !full(i, j).is_zero())
                    return false;
        return true;
    }

    std::optional<std::string> check_circuit(const Circuit &c)
    {
        if (c.data_qubits < 0 || c.data_qubits > 2)
            return "data qubit count " + std::to_string(c.data_qubits) + " not supported";
        const int anc = c.ancilla_wire();
        int inits = 0, frees = 0;
        bool live = false;
        for (std::size_t i = 0; i < c.gates.size(); ++i)
        {
            const Gate &g = c.gates[i];
            const std::string where = "gate " + std::to_string(i + 1) + " '" + g.to_string() + "'";
            if (is_marker(g.kind))
            {
                if (!c.uses_ancilla || g.q0 != anc)
                    return where + " names a wire that is not the ancilla";
                if (g.kind == GateKind::AncillaInit)
                {
                    if (++inits > 1 || frees > 0)
                        return where + " initializes the ancilla twice";
                    live = true;
                }
                else
                {
                    if (++frees > 1 || !live)
                        return where + " frees an ancilla that is not live";
                    live = false;
                }
                continue;
            }
            if (g.kind == GateKind::W)
                continue;
            for (int q : {g.q0, g.kind == GateKind::CNOT ? g.q1 : g.q0})
            {
                if (q < 0 || q >= c.wires())
                    return where + " is outside the circuit wires";
                if (c.uses_ancilla && q == anc && !live)
                    return where + " touches the ancilla outside ANC_INIT/ANC_FREE";
            }
            if (g.kind == GateKind::CNOT && g.q0 == g.q1)
                return where + " has equal control and target";
        }
        if (c.uses_ancilla && (inits != 1 || frees != 1))
            return std::string("ancilla must be initialized and freed exactly once");
        return std::nullopt;
    }

    bool circuit_implements(const Circuit &c, const ExactMatrix &target)
    {
        if (check_circuit(c))
            return false;
        if (target.dim() != (1 << c.data_qubits))
            return false;
        const ExactMatrix full = circuit_to_matrix(c);
        if (!c.uses_ancilla)
            return full == target;
        return ancilla_block_diagonal(full) && ancilla_restriction(full) == target;
    }

    GateCounts gate_counts(const Circuit &c)
    {
        GateCounts n;
        n.uses_ancilla = c.uses_ancilla;
        for (const auto &g : c.gates)
        {
            if (is_marker(g.kind))
                continue;
            ++n.total;
            if (g.kind == GateKind::T || g.kind == GateKind::Tdg)
                ++n.t_count;
            else if (g.kind == GateKind::CNOT)
                ++n.cnot;
            else if (g.kind == GateKind::H)
                ++n.hadamard;
        }
        return n;
    }

    std::string write_circuit(const Circuit &c)
    {
        std::string out = "# data_qubits " + std::to_string(c.data_qubits) + "\n";
        for (const auto &g : c.gates)
        {
            out += g.to_string();
            out += '\n';
        }
        return out;
    }

    Circuit parse_circuit(std::string_view text, std::optional<int> data_qubits)
    {
        Circuit c;
        std::optional<int> header;
        std::optional<int> ancilla;
        std::vector<int> lines;
        int max_wire = -1;

        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size())
        {
            const std::size_t eol = std::min(text.find('\n', pos), text.size());
            std::string_view line = text.substr(pos, eol - pos);
            pos = eol + 1;
            ++line_no;

            const std::size_t hash = line.find('#');
            if (hash != std::string_view::npos)
            {
                std::istringstream comment{std::string(line.substr(hash + 1))};
                std::string word;
                int n = 0;
                if (comment >> word && word == "data_qubits" && comment >> n)
                    header = n;
                line = line.substr(0, hash);
            }

            // Tokens with 1-based start columns.
            std::vector<std::pair<std::string_view, int>> tokens;
            for (std::size_t i = 0; i < line.size();)
            {
                if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')
                {
                    ++i;
                    continue;
                }
                std::size_t j = i;
                while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                    ++j;
                tokens.emplace_back(line.substr(i, j - i), static_cast<int>(i) + 1);
                i = j;
            }
            if (tokens.empty())
                continue;

            const Mnemonic *mn = nullptr;
            for (const auto &m : mnemonics)
                if (tokens[0].first == m.text)
                    mn = &m;
            if (!mn)
                parse_fail(line_no, tokens[0].second, "unknown gate '" + std::string(tokens[0].first) + "'");
            if (static_cast<int>(tokens.size()) != 1 + mn->operands)
                parse_fail(line_no, tokens[0].second,
                           std::string(mn->text) + " takes " + std::to_string(mn->operands) + " operand(s)");

            int operand[2] = {0, 0};
            for (int k = 0; k < mn->operands; ++k)
            {
                const auto [tok, col] = tokens[1 + k];
                const char *first = tok.data();
                const char *last = first + tok.size();
                const auto [ptr, ec] = std::from_chars(first, last, operand[k]);
                if (ec != std::errc() || ptr != last)
                    parse_fail(line_no, col, "expected an integer, got '" + std::string(tok) + "'");
                if (mn->kind != GateKind::W && operand[k] < 0)
                    parse_fail(line_no, col, "negative wire index");
            }

            Gate g{mn->kind, operand[0], operand[1], 0};
            if (mn->kind == GateKind::W)
                g = Gate::scalar(operand[0]);
            else
                max_wire = std::max({max_wire, g.q0, mn->operands == 2 ? g.q1 : g.q0});
            if (mn->kind == GateKind::AncillaInit)
            {
                if (ancilla && *ancilla != g.q0)
                    parse_fail(line_no, tokens[1].second, "second ancilla wire");
                ancilla = g.q0;
            }
            c.gates.push_back(g);
            lines.push_back(line_no);
        }

        if (data_qubits)
            c.data_qubits = *data_qubits;
        else if (header)
            c.data_qubits = *header;
        else
            c.data_qubits = ancilla ? *ancilla : max_wire + 1;
        c.uses_ancilla = ancilla.has_value();
        if (ancilla && *ancilla != c.data_qubits)
            parse_fail(line_no, 1, "ancilla must be wire " + std::to_string(c.data_qubits));
        if (auto problem = check_circuit(c))
        {
            // Point at the offending gate when the message names one.
            int at = line_no;
            if (problem->rfind("gate ", 0) == 0)
            {
                const int idx = std::stoi(problem->substr(5));
                if (idx >= 1 && idx <= static_cast<int>(lines.size()))
                    at = lines[idx - 1];
            }
            parse_fail(at, 1, *problem);
        }
        return c;
    }

} // namespace ctsynth
