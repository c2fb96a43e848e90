#pragma once

#include "qpd/ir/circuit.hpp"

namespace qpd::ir {

/// Structural inverse of a single gate instruction: inverse gate name, same
/// operands, parameters transformed per the fixed inversion table
/// (self-inverse gates unchanged, s<->sdg, t<->tdg, rotations negated,
/// u/cu3 (theta,phi,lambda) -> (-theta,-lambda,-phi)).
Instruction invert_instruction(const Instruction& ins);

/// Structural dagger: instruction order reversed, each gate inverted.
/// Barriers pass through. Throws std::invalid_argument when the circuit
/// contains measure or reset.
Circuit invert(const Circuit& circuit);

}  // namespace qpd::ir
