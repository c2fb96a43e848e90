#pragma once

#include "qpd/ir/circuit.hpp"
#include "qpd/qasm/ast.hpp"

namespace qpd::qasm {

/// Expands a parsed program into a flat Circuit over the base gate set.
/// User-defined macros and composite library gates are inlined; standard
/// single- and two-qubit library gates are kept as tagged instructions.
/// Whole-register operands broadcast per OpenQASM 2.0 semantics. Throws
/// ParseError on semantic violations (operand clashes, shape mismatches).
ir::Circuit elaborate(const Program& program);

/// parse + elaborate in one step.
ir::Circuit compile(const std::string& source);

}  // namespace qpd::qasm
