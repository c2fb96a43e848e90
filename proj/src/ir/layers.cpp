#include "qpd/ir/layers.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpd::ir {

int LayeredCircuit::gate_count(int layer_from, int layer_count) const {
    int total = 0;
    for (int l = layer_from; l < layer_from + layer_count; ++l)
        total += static_cast<int>(layers[l].size());
    return total;
}

LayeredCircuit layers(const Circuit& circuit) {
    LayeredCircuit out;
    // avail[q] = earliest layer still open for qubit q
    std::vector<int> avail(circuit.n_qubits, 0);
    for (int idx = 0; idx < circuit.instruction_count(); ++idx) {
        const Instruction& ins = circuit.instructions[idx];
        if (ins.kind == InstrKind::Barrier) {
            int boundary = 0;
            const std::vector<int>& qs = ins.qubits;
            if (qs.empty()) {
                for (int q = 0; q < circuit.n_qubits; ++q) boundary = std::max(boundary, avail[q]);
                for (int q = 0; q < circuit.n_qubits; ++q) avail[q] = boundary;
            } else {
                for (int q : qs) boundary = std::max(boundary, avail[q]);
                for (int q : qs) avail[q] = boundary;
            }
            continue;
        }
        int layer = 0;
        for (int q : ins.qubits) layer = std::max(layer, avail[q]);
        if (layer >= out.depth()) out.layers.resize(layer + 1);
        out.layers[layer].push_back(idx);
        for (int q : ins.qubits) avail[q] = layer + 1;
    }
    return out;
}

Circuit subcircuit(const Circuit& circuit, const LayeredCircuit& layered,
                   int layer_from, int layer_count) {
    if (layer_from < 0 || layer_count < 0 || layer_from + layer_count > layered.depth())
        throw std::out_of_range("subcircuit: layer range outside depth " +
                                std::to_string(layered.depth()));
    std::vector<int> selected;
    for (int l = layer_from; l < layer_from + layer_count; ++l)
        selected.insert(selected.end(), layered.layers[l].begin(), layered.layers[l].end());
    std::sort(selected.begin(), selected.end());

    Circuit out;
    out.n_qubits = circuit.n_qubits;
    out.n_clbits = circuit.n_clbits;
    out.qregs = circuit.qregs;
    out.cregs = circuit.cregs;
    out.instructions.reserve(selected.size());
    for (int idx : selected) out.instructions.push_back(circuit.instructions[idx]);
    return out;
}

Circuit subcircuit(const Circuit& circuit, int layer_from, int layer_count) {
    return subcircuit(circuit, layers(circuit), layer_from, layer_count);
}

}  // namespace qpd::ir
