#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctsynth/matrix.hpp"

namespace ctsynth
{

    enum class GateKind
    {
        H,
        S,
        Sdg,
        T,
        Tdg,
        X,
        CNOT,
        W, // global scalar w^p
        AncillaInit,
        AncillaFree,
    };

    /**
     * One gate. Single-qubit gates and the ancilla markers use q0; CNOT uses
     * q0 as control and q1 as target; W ignores wires and uses power.
     */
    struct Gate
    {
        GateKind kind = GateKind::H;
        int q0 = 0;
        int q1 = 0;
        int power = 0;

        static Gate single(GateKind kind, int q) { return Gate{kind, q, 0, 0}; }
        static Gate cnot(int control, int target) { return Gate{GateKind::CNOT, control, target, 0}; }
        static Gate scalar(int power) { return Gate{GateKind::W, 0, 0, ((power % 8) + 8) % 8}; }

        /// Line in the circuit text format, e.g. "CNOT 0 1".
        std::string to_string() const;

        bool operator==(const Gate &) const = default;
    };

    /// The ancilla, when present, is the wire right after the data wires (least significant bit).
    struct Circuit
    {
        int data_qubits = 1;
        bool uses_ancilla = false;
        std::vector<Gate> gates;

        int wires() const noexcept { return data_qubits + (uses_ancilla ? 1 : 0); }
        int ancilla_wire() const noexcept { return data_qubits; }
    };

    enum class TemplateName
    {
        LambdaIX,
        LambdaMinusIX,
        Lambda2IX,
        Lambda2MinusIX,
        LambdaH,
        LambdaS,
        Toffoli,
    };

    const char *template_name(TemplateName name) noexcept;

    /// Body on local wires 0..qubits-1; controls come first, the target last.
    struct GateTemplate
    {
        TemplateName name = TemplateName::LambdaIX;
        int qubits = 2;
        std::vector<Gate> body;
        ExactMatrix target{4};
    };

    /// Builds and exactly checks every template; throws TemplateVerificationFailed on a mismatch.
    std::vector<GateTemplate> build_templates();

    /// Process-wide table, built on first use.
    const std::vector<GateTemplate> &templates();
    const GateTemplate &find_template(TemplateName name);

    /// Appends a template body with local wire i mapped to wires[i].
    void append_template(std::vector<Gate> &out, const GateTemplate &t, std::span<const int> wires);

    /// Lowers a word (product word[0] * word[1] * ...) on dim 1, 2 or 4 to gates.
    Circuit emit(std::span<const ElementaryOp> word, int dim);

    /// m <- G * m, with m acting on the given number of wires.
    void apply_gate(const Gate &gate, ExactMatrix &m, int wires);

    /// Exact unitary over all wires (qubit 0 is the most significant bit).
    ExactMatrix gate_list_matrix(std::span<const Gate> gates, int wires);
    ExactMatrix circuit_to_matrix(const Circuit &c);

    /// Block of a full circuit matrix where the ancilla is 0 in and out.
    ExactMatrix ancilla_restriction(const ExactMatrix &full);
    /// No amplitude moves between ancilla-0 and ancilla-1 subspaces.
    bool ancilla_block_diagonal(const ExactMatrix &full);

    /// Marker placement and wire ranges; returns a description of the first problem.
    std::optional<std::string> check_circuit(const Circuit &c);

    /// Exact check of a circuit against a target on its data qubits.
    bool circuit_implements(const Circuit &c, const ExactMatrix &target);

    struct GateCounts
    {
        int total = 0;
        int t_count = 0;
        int cnot = 0;
        int hadamard = 0;
        bool uses_ancilla = false;

        bool operator==(const GateCounts &) const = default;
    };

    /// Ancilla markers are not gates and are not counted.
    GateCounts gate_counts(const Circuit &c);

    std::string write_circuit(const Circuit &c);
    /**
     * Parses the text format. data_qubits overrides the "# data_qubits n" header;
     * without either, it is inferred from the wires in use.
     */
    Circuit parse_circuit(std::string_view text, std::optional<int> data_qubits = std::nullopt);

} // namespace ctsynth
