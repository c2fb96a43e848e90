#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qpd::ir {

enum class InstrKind { Gate, Measure, Reset, Barrier };

/// Classical condition attached to an instruction: fires when the named
/// classical register holds exactly `value`.
struct Guard {
    std::string creg;
    std::uint64_t value = 0;

    friend bool operator==(const Guard&, const Guard&) = default;
};

struct Instruction {
    InstrKind kind = InstrKind::Gate;
    std::string gate;            // base gate name; empty for non-gate kinds
    std::vector<double> params;  // rotation angles, radians
    std::vector<int> qubits;     // global qubit indices, control(s) first
    int cbit = -1;               // measure destination (global classical bit)
    std::optional<Guard> guard;

    bool is_gate() const { return kind == InstrKind::Gate; }
    bool is_unitary() const { return kind == InstrKind::Gate && !guard.has_value(); }
    bool touches(int qubit) const;
};

struct RegisterInfo {
    std::string name;
    int offset = 0;
    int size = 0;

    bool contains(int bit) const { return bit >= offset && bit < offset + size; }
};

/// Fully elaborated circuit over the base gate set. Immutable by convention
/// once built; all analyses treat it as read-only.
struct Circuit {
    std::vector<Instruction> instructions;
    int n_qubits = 0;
    int n_clbits = 0;
    std::vector<RegisterInfo> qregs;
    std::vector<RegisterInfo> cregs;

    int instruction_count() const { return static_cast<int>(instructions.size()); }

    /// Checks the structural invariants (operand ranges, distinct operands
    /// within one instruction, parameter arity, guard placement).
    /// Throws std::invalid_argument on violation.
    void validate() const;

    const RegisterInfo* qreg_of(int qubit) const;
    const RegisterInfo* find_creg(const std::string& name) const;

    /// Renders a global qubit index as "reg[i]".
    std::string qubit_name(int qubit) const;
    std::string clbit_name(int clbit) const;
};

/// For each qubit, the index of the first non-barrier instruction acting on
/// it, or nullopt when no instruction touches the qubit.
std::vector<std::optional<int>> first_gate_map(const Circuit& circuit);

// Base gate set after elaboration. `u` carries (theta, phi, lambda).
bool is_base_gate(const std::string& name);
int base_gate_num_qubits(const std::string& name);
int base_gate_num_params(const std::string& name);

}  // namespace qpd::ir
