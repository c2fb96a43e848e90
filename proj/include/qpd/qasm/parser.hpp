#pragma once

#include <string>

#include "qpd/qasm/ast.hpp"

namespace qpd::qasm {

/// Parses OpenQASM 2.0 source text into a Program. Performs the static
/// checks the format requires: version marker, declaration-before-use,
/// register index bounds, and call arities. Opaque gates and includes other
/// than "qelib1.inc" are rejected. Throws ParseError.
Program parse(const std::string& source);

}  // namespace qpd::qasm
