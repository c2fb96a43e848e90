#pragma once

#include <vector>

#include "qpd/ir/circuit.hpp"

namespace qpd::ir {

/// Time-slice decomposition of a circuit. Each layer holds the indices of
/// instructions whose qubit sets are pairwise disjoint. Barriers act as
/// boundaries but never appear in a layer; depth() counts layers only.
struct LayeredCircuit {
    std::vector<std::vector<int>> layers;

    int depth() const { return static_cast<int>(layers.size()); }
    int gate_count(int layer_from, int layer_count) const;
};

/// Greedy as-soon-as-possible layering. Each non-barrier instruction is
/// placed in the earliest layer after every earlier instruction sharing a
/// qubit with it; a barrier forces all later instructions on its qubits
/// into strictly later layers.
LayeredCircuit layers(const Circuit& circuit);

/// New circuit with exactly the instructions of layers
/// [layer_from, layer_from + layer_count), in original relative order.
/// Same width and register map as the input. Throws std::out_of_range for
/// a range outside the depth.
Circuit subcircuit(const Circuit& circuit, const LayeredCircuit& layered,
                   int layer_from, int layer_count);

Circuit subcircuit(const Circuit& circuit, int layer_from, int layer_count);

}  // namespace qpd::ir
