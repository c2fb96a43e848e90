#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpd/ir/circuit.hpp"
#include "qpd/numerics/schmidt.hpp"

namespace qpd::sim {

/// Raised when a circuit is wider than the configured simulation cap.
class CapacityError : public std::runtime_error {
public:
    CapacityError(int width, int cap)
        : std::runtime_error("circuit width " + std::to_string(width) +
                             " exceeds the simulation cap of " + std::to_string(cap) +
                             " qubits (state-based analysis cost grows as 2^n)"),
          width_(width),
          cap_(cap) {}

    int width() const { return width_; }
    int cap() const { return cap_; }

private:
    int width_;
    int cap_;
};

/// 2^k x 2^k unitary for a base gate. Local basis convention: operand j of
/// the instruction is bit j of the local index.
num::Matrix gate_matrix(const std::string& name, const std::vector<double>& params);

/// Applies one unguarded gate instruction; identity on non-operand qubits.
num::StateVector apply(const num::StateVector& state, const ir::Instruction& instruction);

/// Per-instruction state trace of the unitary prefix of a circuit.
struct StateTrace {
    /// states[t] is the state after instruction t (barriers repeat the
    /// previous state so indices stay aligned with the instruction list).
    std::vector<num::StateVector> states;
    int executed_count = 0;
    /// Index of the first measure, reset, or guarded instruction, if any;
    /// tracing stops there without error.
    std::optional<int> terminated_by;
};

constexpr int kDefaultMaxSimQubits = 16;

/// Simulates from |0...0>, recording the state after every instruction up
/// to (not including) the first measure/reset/guarded instruction. Throws
/// CapacityError when the circuit is wider than max_qubits.
StateTrace trace(const ir::Circuit& circuit, int max_qubits = kDefaultMaxSimQubits);

/// Full 2^n x 2^n unitary of a gate-only instruction list (barriers are
/// skipped). Intended for small n.
num::Matrix instructions_unitary(const std::vector<ir::Instruction>& instructions, int n_qubits);
num::Matrix circuit_unitary(const ir::Circuit& circuit);

}  // namespace qpd::sim
