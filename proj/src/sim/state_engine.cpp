#include "qpd/sim/state_engine.hpp"

#include <stdexcept>

namespace qpd::sim {

using num::cplx;
using num::Matrix;
using num::StateVector;

StateVector apply(const StateVector& state, const ir::Instruction& instruction) {
    if (!instruction.is_unitary())
        throw std::invalid_argument("apply: instruction is not an unguarded gate");
    for (int q : instruction.qubits)
        if (q < 0 || q >= state.n_qubits)
            throw std::invalid_argument("apply: operand qubit out of range");

    const Matrix u = gate_matrix(instruction.gate, instruction.params);
    const int k = static_cast<int>(instruction.qubits.size());
    const int sub = 1 << k;

    std::size_t op_mask = 0;
    for (int q : instruction.qubits) op_mask |= std::size_t{1} << q;
    // offsets[b]: local basis pattern b deposited on the operand bits
    std::vector<std::size_t> offsets(static_cast<std::size_t>(sub), 0);
    for (int b = 0; b < sub; ++b)
        for (int j = 0; j < k; ++j)
            if ((b >> j) & 1) offsets[b] |= std::size_t{1} << instruction.qubits[j];

    StateVector out = state;
    std::vector<cplx> in_vec(static_cast<std::size_t>(sub));
    std::vector<cplx> out_vec(static_cast<std::size_t>(sub));
    const std::size_t dim = state.dim();
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & op_mask) continue;
        for (int b = 0; b < sub; ++b) in_vec[b] = state.amps[base + offsets[b]];
        for (int r = 0; r < sub; ++r) {
            cplx acc{};
            for (int c = 0; c < sub; ++c) acc += u.at(r, c) * in_vec[c];
            out_vec[r] = acc;
        }
        for (int b = 0; b < sub; ++b) out.amps[base + offsets[b]] = out_vec[b];
    }
    return out;
}

StateTrace trace(const ir::Circuit& circuit, int max_qubits) {
    if (circuit.n_qubits > max_qubits) throw CapacityError(circuit.n_qubits, max_qubits);

    StateTrace tr;
    StateVector current = StateVector::zero_state(circuit.n_qubits);
    for (int idx = 0; idx < circuit.instruction_count(); ++idx) {
        const ir::Instruction& ins = circuit.instructions[idx];
        if (ins.kind == ir::InstrKind::Measure || ins.kind == ir::InstrKind::Reset || ins.guard) {
            tr.terminated_by = idx;
            break;
        }
        if (ins.kind == ir::InstrKind::Barrier) {
            tr.states.push_back(current);
            continue;
        }
        current = apply(current, ins);
        tr.states.push_back(current);
    }
    tr.executed_count = static_cast<int>(tr.states.size());
    return tr;
}

Matrix instructions_unitary(const std::vector<ir::Instruction>& instructions, int n_qubits) {
    const int dim = 1 << n_qubits;
    Matrix out(dim, dim);
    for (int col = 0; col < dim; ++col) {
        StateVector v;
        v.n_qubits = n_qubits;
        v.amps.assign(static_cast<std::size_t>(dim), cplx{});
        v.amps[static_cast<std::size_t>(col)] = 1.0;
        for (const ir::Instruction& ins : instructions) {
            if (ins.kind == ir::InstrKind::Barrier) continue;
            v = apply(v, ins);
        }
        for (int row = 0; row < dim; ++row) out.at(row, col) = v.amps[static_cast<std::size_t>(row)];
    }
    return out;
}

Matrix circuit_unitary(const ir::Circuit& circuit) {
    return instructions_unitary(circuit.instructions, circuit.n_qubits);
}

}  // namespace qpd::sim
