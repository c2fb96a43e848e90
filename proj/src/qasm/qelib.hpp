#pragma once

#include "qpd/qasm/ast.hpp"

namespace qpd::qasm {

/// The compiled-in standard gate library. `include "qelib1.inc"` maps to
/// this table; no filesystem lookup ever happens. The table is available
/// even without the include so that bare-gate sources parse.
const Program& qelib_program();

const GateMacro* qelib_find(const std::string& name);

/// Parses the embedded library source itself (stdlib lookups disabled).
Program parse_builtin_library(const std::string& source);

}  // namespace qpd::qasm
