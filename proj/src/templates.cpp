#include "ctsynth/circuit.hpp"
#include "ctsynth/error.hpp"

namespace ctsynth
{

    const char *template_name(TemplateName name) noexcept
    {
        switch (name)
        {
        case TemplateName::LambdaIX: return "LambdaIX";
        case TemplateName::LambdaMinusIX: return "LambdaMinusIX";
        case TemplateName::Lambda2IX: return "Lambda2IX";
        case TemplateName::Lambda2MinusIX: return "Lambda2MinusIX";
        case TemplateName::LambdaH: return "LambdaH";
        case TemplateName::LambdaS: return "LambdaS";
        case TemplateName::Toffoli: return "Toffoli";
        }
        return "?";
    }

    namespace
    {
        Gate g(GateKind k, int q) { return Gate::single(k, q); }

        // Identity with the last 2x2 block replaced by [[a, b], [c, d]].
        ExactMatrix controlled_block(int dim, DOmega a, DOmega b, DOmega c, DOmega d)
        {
            ExactMatrix m = ExactMatrix::identity(dim);
            m(dim - 2, dim - 2) = std::move(a);
            m(dim - 2, dim - 1) = std::move(b);
            m(dim - 1, dim - 2) = std::move(c);
            m(dim - 1, dim - 1) = std::move(d);
            return m;
        }

        std::vector<Gate> lambda_s_body()
        {
            return {g(GateKind::T, 0), g(GateKind::T, 1), Gate::cnot(0, 1), g(GateKind::Tdg, 1), Gate::cnot(0, 1)};
        }

        std::vector<Gate> lambda_s_inverse_body()
        {
            return {Gate::cnot(0, 1), g(GateKind::T, 1), Gate::cnot(0, 1), g(GateKind::Tdg, 1), g(GateKind::Tdg, 0)};
        }

        // Seven T gates, controls 0 and 1, target 2.
        std::vector<Gate> toffoli_body()
        {
            return {
                g(GateKind::H, 2),   Gate::cnot(1, 2),    g(GateKind::Tdg, 2), Gate::cnot(0, 2),
                g(GateKind::T, 2),   Gate::cnot(1, 2),    g(GateKind::Tdg, 2), Gate::cnot(0, 2),
                g(GateKind::T, 1),   g(GateKind::T, 2),   g(GateKind::H, 2),   Gate::cnot(0, 1),
                g(GateKind::T, 0),   g(GateKind::Tdg, 1), Gate::cnot(0, 1),
            };
        }

        std::vector<Gate> concat(std::vector<Gate> a, const std::vector<Gate> &b)
        {
            a.insert(a.end(), b.begin(), b.end());
            return a;
        }
    } // namespace

    std::vector<GateTemplate> build_templates()
    {
        const DOmega zero;
        const DOmega one = DOmega::from_int(1);
        const DOmega i = DOmega::omega_power(2);
        const DOmega h = DOmega::inv_sqrt2();

        std::vector<GateTemplate> table;
        table.push_back({TemplateName::LambdaIX, 2, {g(GateKind::S, 0), Gate::cnot(0, 1)},
                         controlled_block(4, zero, i, i, zero)});
        table.push_back({TemplateName::LambdaMinusIX, 2, {g(GateKind::Sdg, 0), Gate::cnot(0, 1)},
                         controlled_block(4, zero, -i, -i, zero)});
        table.push_back({TemplateName::LambdaS, 2, lambda_s_body(), controlled_block(4, one, zero, zero, i)});
        table.push_back({TemplateName::LambdaH, 2,
                         {g(GateKind::S, 1), g(GateKind::H, 1), g(GateKind::T, 1), Gate::cnot(0, 1),
                          g(GateKind::Tdg, 1), g(GateKind::H, 1), g(GateKind::Sdg, 1)},
                         controlled_block(4, h, h, h, -h)});
        table.push_back({TemplateName::Toffoli, 3, toffoli_body(), controlled_block(8, zero, one, one, zero)});
        table.push_back({TemplateName::Lambda2IX, 3, concat(lambda_s_body(), toffoli_body()),
                         controlled_block(8, zero, i, i, zero)});
        table.push_back({TemplateName::Lambda2MinusIX, 3, concat(lambda_s_inverse_body(), toffoli_body()),
                         controlled_block(8, zero, -i, -i, zero)});

        for (const auto &t : table)
        {
            if (gate_list_matrix(t.body, t.qubits) != t.target)
                throw Error(ErrorKind::TemplateVerificationFailed,
                            std::string("template ") + template_name(t.name) + " does not match its target");
        }
        return table;
    }

    const std::vector<GateTemplate> &templates()
    {
        static const std::vector<GateTemplate> table = build_templates();
        return table;
    }

    const GateTemplate &find_template(TemplateName name)
    {
        for (const auto &t : templates())
            if (t.name == name)
                return t;
        throw Error(ErrorKind::TemplateVerificationFailed, std::string("missing template ") + template_name(name));
    }

    void append_template(std::vector<Gate> &out, const GateTemplate &t, std::span<const int> wires)
    {
        if (static_cast<int>(wires.size()) != t.qubits)
            throw Error(ErrorKind::DimensionMismatch, std::string("wrong wire count for ") + template_name(t.name));
        for (Gate gate : t.body)
        {
            gate.q0 = wires[gate.q0];
            if (gate.kind == GateKind::CNOT)
                gate.q1 = wires[gate.q1];
            out.push_back(gate);
        }
    }

} // namespace ctsynth
