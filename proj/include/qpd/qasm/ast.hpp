#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpd::qasm {

/// Parse or elaboration failure with source position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Constant or parameterized angle expression from the source.
struct Expr {
    enum class Kind { Number, Pi, Param, Unary, Binary, Negate };

    Kind kind = Kind::Number;
    double number = 0.0;     // Number
    std::string name;        // Param name or unary function name
    char op = 0;             // Binary operator: + - * / ^
    ExprPtr lhs, rhs;        // Binary operands; lhs also used for Unary/Negate
    int line = 0, column = 0;

    /// Evaluates with the given parameter bindings; unknown identifiers
    /// raise ParseError at the expression's source position.
    double eval(const std::map<std::string, double>& env) const;
};

/// One register operand in source form: `name` or `name[index]`.
struct Argument {
    std::string reg;
    std::optional<int> index;
    int line = 0, column = 0;
};

struct GuardSpec {
    std::string creg;
    std::uint64_t value = 0;
};

/// A statement inside the main body or a gate body.
struct Statement {
    enum class Kind { GateCall, Measure, Reset, Barrier };

    Kind kind = Kind::GateCall;
    // GateCall
    std::string name;
    std::vector<ExprPtr> params;
    std::vector<Argument> args;
    // Measure
    Argument measure_src, measure_dst;
    // Reset reuses args[0]; Barrier uses args
    std::optional<GuardSpec> guard;
    int line = 0, column = 0;
};

struct GateMacro {
    std::string name;
    std::vector<std::string> params;
    std::vector<std::string> qubits;
    std::vector<Statement> body;  // gate calls and barriers over formals
};

struct RegDecl {
    std::string name;
    int size = 0;
};

/// Parsed OpenQASM 2.0 program, before macro expansion.
struct Program {
    std::string version;                 // always "2.0" after a successful parse
    std::vector<std::string> includes;   // only "qelib1.inc" is accepted
    bool qelib_included = false;
    std::vector<RegDecl> qregs;
    std::vector<RegDecl> cregs;
    std::vector<GateMacro> macros;       // user-defined, in definition order
    std::vector<Statement> statements;

    const GateMacro* find_macro(const std::string& name) const;
    const RegDecl* find_qreg(const std::string& name) const;
    const RegDecl* find_creg(const std::string& name) const;
};

}  // namespace qpd::qasm
