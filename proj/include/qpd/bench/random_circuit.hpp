#pragma once

#include <cstdint>

#include "qpd/ir/circuit.hpp"

namespace qpd::bench {

/// Deterministic random circuit over one n-qubit register "q". Each of the
/// m layers is filled by drawing gates uniformly from
/// {x, y, z, h, s, t, rx, ry, rz, cx, cz, swap, ccx} (restricted to arities
/// that still fit) and operands without replacement until the layer holds
/// every qubit, so the resulting depth is exactly m. Angles are uniform in
/// [0, 2*pi). Identical (n, m, seed) triples produce identical circuits.
ir::Circuit random_circuit(int n_qubits, int depth, std::uint64_t seed);

}  // namespace qpd::bench
