#pragma once

#include <string>

#include "qpd/ir/circuit.hpp"

namespace qpd::ir {

/// Renders the circuit back to OpenQASM 2.0 text. Parameters are printed
/// with enough digits to round-trip (re-parsing yields the same circuit
/// within 1e-12 on every angle).
std::string to_qasm(const Circuit& circuit);

}  // namespace qpd::ir
