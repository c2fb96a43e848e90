#include "qpd/qasm/parser.hpp"

#include <cmath>
#include <set>
#include <unordered_map>

#include "lexer.hpp"
#include "qelib.hpp"

namespace qpd::qasm {

double Expr::eval(const std::map<std::string, double>& env) const {
    switch (kind) {
        case Kind::Number:
            return number;
        case Kind::Pi:
            return M_PI;
        case Kind::Param: {
            auto it = env.find(name);
            if (it == env.end())
                throw ParseError("unbound identifier '" + name + "' in expression", line, column);
            return it->second;
        }
        case Kind::Negate:
            return -lhs->eval(env);
        case Kind::Unary: {
            double v = lhs->eval(env);
            if (name == "sin") return std::sin(v);
            if (name == "cos") return std::cos(v);
            if (name == "tan") return std::tan(v);
            if (name == "exp") return std::exp(v);
            if (name == "ln") return std::log(v);
            if (name == "sqrt") return std::sqrt(v);
            throw ParseError("unknown function '" + name + "'", line, column);
        }
        case Kind::Binary: {
            double a = lhs->eval(env);
            double b = rhs->eval(env);
            switch (op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/': return a / b;
                case '^': return std::pow(a, b);
            }
            throw ParseError("unknown operator", line, column);
        }
    }
    throw ParseError("malformed expression", line, column);
}

const GateMacro* Program::find_macro(const std::string& name) const {
    for (const auto& m : macros)
        if (m.name == name) return &m;
    return nullptr;
}

const RegDecl* Program::find_qreg(const std::string& name) const {
    for (const auto& r : qregs)
        if (r.name == name) return &r;
    return nullptr;
}

const RegDecl* Program::find_creg(const std::string& name) const {
    for (const auto& r : cregs)
        if (r.name == name) return &r;
    return nullptr;
}

namespace {

const std::set<std::string>& builtin_functions() {
    static const std::set<std::string> fns = {"sin", "cos", "tan", "exp", "ln", "sqrt"};
    return fns;
}

struct GateSignature {
    int n_params = 0;
    int n_qubits = 0;
};

class Parser {
public:
    explicit Parser(const std::string& source, bool with_stdlib = true)
        : tokens_(tokenize(source)) {
        known_gates_["U"] = {3, 1};
        known_gates_["CX"] = {0, 2};
        if (with_stdlib)
            for (const GateMacro& m : qelib_program().macros)
                known_gates_[m.name] = {static_cast<int>(m.params.size()),
                                        static_cast<int>(m.qubits.size())};
    }

    Program run() {
        parse_header();
        while (!at_eof()) parse_top_statement();
        return std::move(prog_);
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    Program prog_;
    std::unordered_map<std::string, GateSignature> known_gates_;

    const Token& peek(int ahead = 0) const {
        std::size_t i = pos_ + static_cast<std::size_t>(ahead);
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    const Token& advance() {
        const Token& t = tokens_[pos_];
        if (pos_ + 1 < tokens_.size()) ++pos_;
        return t;
    }
    bool at_eof() const { return peek().kind == TokenKind::Eof; }

    [[noreturn]] void fail(const std::string& msg, const Token& tok) const {
        throw ParseError(msg, tok.line, tok.column);
    }

    bool is_symbol(const Token& t, const char* s) const {
        return t.kind == TokenKind::Symbol && t.text == s;
    }
    bool is_ident(const Token& t, const char* s) const {
        return t.kind == TokenKind::Identifier && t.text == s;
    }
    const Token& expect_symbol(const char* s) {
        if (!is_symbol(peek(), s)) fail(std::string("expected '") + s + "'", peek());
        return advance();
    }
    const Token& expect_ident() {
        if (peek().kind != TokenKind::Identifier) fail("expected identifier", peek());
        return advance();
    }
    int expect_nonneg_int() {
        if (peek().kind != TokenKind::Integer) fail("expected integer", peek());
        return static_cast<int>(advance().int_value);
    }

    void parse_header() {
        const Token& kw = peek();
        if (!is_ident(kw, "OPENQASM")) fail("expected OPENQASM version header", kw);
        advance();
        const Token& ver = peek();
        if (ver.kind != TokenKind::Real && ver.kind != TokenKind::Integer)
            fail("expected version number", ver);
        if (ver.text != "2.0")
            fail("unsupported OpenQASM version '" + ver.text + "' (only 2.0 is accepted)", ver);
        prog_.version = ver.text;
        advance();
        expect_symbol(";");
    }

    void declare_name_free(const Token& name_tok) {
        const std::string& name = name_tok.text;
        if (prog_.find_qreg(name) || prog_.find_creg(name) || known_gates_.count(name))
            fail("identifier '" + name + "' already declared", name_tok);
    }

    void parse_top_statement() {
        const Token& t = peek();
        if (t.kind != TokenKind::Identifier) fail("expected statement", t);
        if (t.text == "include") {
            advance();
            const Token& path = peek();
            if (path.kind != TokenKind::String) fail("expected include path string", path);
            if (path.text != "qelib1.inc")
                fail("unsupported include '" + path.text + "' (only \"qelib1.inc\" is built in)",
                     path);
            advance();
            expect_symbol(";");
            if (!prog_.qelib_included) {
                prog_.qelib_included = true;
                prog_.includes.push_back(path.text);
            }
            return;
        }
        if (t.text == "qreg" || t.text == "creg") {
            bool quantum = t.text == "qreg";
            advance();
            const Token& name = expect_ident();
            declare_name_free(name);
            expect_symbol("[");
            int size = expect_nonneg_int();
            if (size <= 0) fail("register size must be positive", name);
            expect_symbol("]");
            expect_symbol(";");
            (quantum ? prog_.qregs : prog_.cregs).push_back({name.text, size});
            return;
        }
        if (t.text == "gate") {
            parse_gate_decl();
            return;
        }
        if (t.text == "opaque") {
            fail("unsupported construct: opaque gate declaration", t);
        }
        if (t.text == "if") {
            advance();
            expect_symbol("(");
            const Token& creg = expect_ident();
            if (!prog_.find_creg(creg.text))
                fail("undeclared classical register '" + creg.text + "'", creg);
            expect_symbol("==");
            if (peek().kind != TokenKind::Integer) fail("expected integer in condition", peek());
            std::uint64_t value = static_cast<std::uint64_t>(advance().int_value);
            expect_symbol(")");
            Statement stmt = parse_qop();
            if (stmt.kind == Statement::Kind::Reset)
                fail("guarded reset is not supported", t);
            stmt.guard = GuardSpec{creg.text, value};
            prog_.statements.push_back(std::move(stmt));
            return;
        }
        prog_.statements.push_back(parse_qop_or_barrier());
    }

    Statement parse_qop_or_barrier() {
        const Token& t = peek();
        if (is_ident(t, "barrier")) {
            Statement stmt;
            stmt.kind = Statement::Kind::Barrier;
            stmt.line = t.line;
            stmt.column = t.column;
            advance();
            stmt.args = parse_argument_list(/*allow_index=*/true, nullptr);
            expect_symbol(";");
            return stmt;
        }
        return parse_qop();
    }

    Statement parse_qop() {
        const Token& t = peek();
        if (t.kind != TokenKind::Identifier) fail("expected quantum operation", t);
        Statement stmt;
        stmt.line = t.line;
        stmt.column = t.column;
        if (t.text == "measure") {
            advance();
            stmt.kind = Statement::Kind::Measure;
            stmt.measure_src = parse_argument(/*allow_index=*/true, nullptr);
            check_reg(stmt.measure_src, /*quantum=*/true);
            expect_symbol("->");
            stmt.measure_dst = parse_argument(/*allow_index=*/true, nullptr);
            check_reg(stmt.measure_dst, /*quantum=*/false);
            expect_symbol(";");
            return stmt;
        }
        if (t.text == "reset") {
            advance();
            stmt.kind = Statement::Kind::Reset;
            stmt.args.push_back(parse_argument(/*allow_index=*/true, nullptr));
            check_reg(stmt.args[0], /*quantum=*/true);
            expect_symbol(";");
            return stmt;
        }
        // gate call
        stmt.kind = Statement::Kind::GateCall;
        stmt.name = t.text;
        advance();
        auto sig = known_gates_.find(stmt.name);
        if (sig == known_gates_.end())
            fail("use of undeclared gate '" + stmt.name + "'", t);
        if (is_symbol(peek(), "(")) {
            advance();
            if (!is_symbol(peek(), ")")) {
                stmt.params.push_back(parse_expr(nullptr));
                while (is_symbol(peek(), ",")) {
                    advance();
                    stmt.params.push_back(parse_expr(nullptr));
                }
            }
            expect_symbol(")");
        }
        if (static_cast<int>(stmt.params.size()) != sig->second.n_params)
            fail("gate '" + stmt.name + "' expects " + std::to_string(sig->second.n_params) +
                     " parameter(s), got " + std::to_string(stmt.params.size()),
                 t);
        stmt.args = parse_argument_list(/*allow_index=*/true, nullptr);
        for (const Argument& a : stmt.args) check_reg(a, /*quantum=*/true);
        if (static_cast<int>(stmt.args.size()) != sig->second.n_qubits)
            fail("gate '" + stmt.name + "' expects " + std::to_string(sig->second.n_qubits) +
                     " qubit argument(s), got " + std::to_string(stmt.args.size()),
                 t);
        expect_symbol(";");
        return stmt;
    }

    void check_reg(const Argument& arg, bool quantum) {
        const RegDecl* reg = quantum ? prog_.find_qreg(arg.reg) : prog_.find_creg(arg.reg);
        if (!reg)
            throw ParseError(std::string("undeclared ") + (quantum ? "quantum" : "classical") +
                                 " register '" + arg.reg + "'",
                             arg.line, arg.column);
        if (arg.index && (*arg.index < 0 || *arg.index >= reg->size))
            throw ParseError("index " + std::to_string(*arg.index) + " out of range for register '" +
                                 arg.reg + "[" + std::to_string(reg->size) + "]'",
                             arg.line, arg.column);
    }

    // formals == nullptr: top-level context (indexed or whole-register args).
    // formals != nullptr: gate body context (bare formal qubit names only).
    Argument parse_argument(bool allow_index, const std::vector<std::string>* formals) {
        const Token& name = expect_ident();
        Argument arg;
        arg.reg = name.text;
        arg.line = name.line;
        arg.column = name.column;
        if (formals) {
            bool found = false;
            for (const auto& f : *formals) found = found || f == arg.reg;
            if (!found) fail("unknown qubit argument '" + arg.reg + "' in gate body", name);
            return arg;
        }
        if (allow_index && is_symbol(peek(), "[")) {
            advance();
            arg.index = expect_nonneg_int();
            expect_symbol("]");
        }
        return arg;
    }

    std::vector<Argument> parse_argument_list(bool allow_index,
                                              const std::vector<std::string>* formals) {
        std::vector<Argument> args;
        args.push_back(parse_argument(allow_index, formals));
        while (is_symbol(peek(), ",")) {
            advance();
            args.push_back(parse_argument(allow_index, formals));
        }
        return args;
    }

    void parse_gate_decl() {
        const Token& kw = advance();  // 'gate'
        const Token& name = expect_ident();
        declare_name_free(name);
        GateMacro macro;
        macro.name = name.text;
        if (is_symbol(peek(), "(")) {
            advance();
            if (!is_symbol(peek(), ")")) {
                macro.params.push_back(expect_ident().text);
                while (is_symbol(peek(), ",")) {
                    advance();
                    macro.params.push_back(expect_ident().text);
                }
            }
            expect_symbol(")");
        }
        macro.qubits.push_back(expect_ident().text);
        while (is_symbol(peek(), ",")) {
            advance();
            macro.qubits.push_back(expect_ident().text);
        }
        expect_symbol("{");
        while (!is_symbol(peek(), "}")) {
            if (at_eof()) fail("unterminated gate body", kw);
            macro.body.push_back(parse_gate_body_statement(macro));
        }
        expect_symbol("}");
        known_gates_[macro.name] = {static_cast<int>(macro.params.size()),
                                    static_cast<int>(macro.qubits.size())};
        prog_.macros.push_back(std::move(macro));
    }

    Statement parse_gate_body_statement(const GateMacro& macro) {
        const Token& t = peek();
        if (t.kind != TokenKind::Identifier) fail("expected gate call in gate body", t);
        Statement stmt;
        stmt.line = t.line;
        stmt.column = t.column;
        if (t.text == "barrier") {
            advance();
            stmt.kind = Statement::Kind::Barrier;
            stmt.args = parse_argument_list(/*allow_index=*/false, &macro.qubits);
            expect_symbol(";");
            return stmt;
        }
        stmt.kind = Statement::Kind::GateCall;
        stmt.name = t.text;
        advance();
        auto sig = known_gates_.find(stmt.name);
        if (sig == known_gates_.end())
            fail("use of undeclared gate '" + stmt.name + "' in gate body", t);
        if (is_symbol(peek(), "(")) {
            advance();
            if (!is_symbol(peek(), ")")) {
                stmt.params.push_back(parse_expr(&macro.params));
                while (is_symbol(peek(), ",")) {
                    advance();
                    stmt.params.push_back(parse_expr(&macro.params));
                }
            }
            expect_symbol(")");
        }
        if (static_cast<int>(stmt.params.size()) != sig->second.n_params)
            fail("gate '" + stmt.name + "' expects " + std::to_string(sig->second.n_params) +
                     " parameter(s)",
                 t);
        stmt.args = parse_argument_list(/*allow_index=*/false, &macro.qubits);
        if (static_cast<int>(stmt.args.size()) != sig->second.n_qubits)
            fail("gate '" + stmt.name + "' expects " + std::to_string(sig->second.n_qubits) +
                     " qubit argument(s)",
                 t);
        expect_symbol(";");
        return stmt;
    }

    ExprPtr make_expr(Expr e) { return std::make_shared<Expr>(std::move(e)); }

    // additive := multiplicative (('+'|'-') multiplicative)*
    ExprPtr parse_expr(const std::vector<std::string>* param_names) {
        ExprPtr lhs = parse_term(param_names);
        while (is_symbol(peek(), "+") || is_symbol(peek(), "-")) {
            char op = advance().text[0];
            ExprPtr rhs = parse_term(param_names);
            Expr e;
            e.kind = Expr::Kind::Binary;
            e.op = op;
            e.lhs = lhs;
            e.rhs = rhs;
            e.line = lhs->line;
            e.column = lhs->column;
            lhs = make_expr(std::move(e));
        }
        return lhs;
    }

    ExprPtr parse_term(const std::vector<std::string>* param_names) {
        ExprPtr lhs = parse_unary(param_names);
        while (is_symbol(peek(), "*") || is_symbol(peek(), "/")) {
            char op = advance().text[0];
            ExprPtr rhs = parse_unary(param_names);
            Expr e;
            e.kind = Expr::Kind::Binary;
            e.op = op;
            e.lhs = lhs;
            e.rhs = rhs;
            e.line = lhs->line;
            e.column = lhs->column;
            lhs = make_expr(std::move(e));
        }
        return lhs;
    }

    ExprPtr parse_unary(const std::vector<std::string>* param_names) {
        if (is_symbol(peek(), "-")) {
            const Token& minus = advance();
            Expr e;
            e.kind = Expr::Kind::Negate;
            e.lhs = parse_unary(param_names);
            e.line = minus.line;
            e.column = minus.column;
            return make_expr(std::move(e));
        }
        return parse_power(param_names);
    }

    // power := primary ('^' unary)?   (right-associative)
    ExprPtr parse_power(const std::vector<std::string>* param_names) {
        ExprPtr base = parse_primary(param_names);
        if (is_symbol(peek(), "^")) {
            advance();
            ExprPtr exp = parse_unary(param_names);
            Expr e;
            e.kind = Expr::Kind::Binary;
            e.op = '^';
            e.lhs = base;
            e.rhs = exp;
            e.line = base->line;
            e.column = base->column;
            return make_expr(std::move(e));
        }
        return base;
    }

    ExprPtr parse_primary(const std::vector<std::string>* param_names) {
        const Token& t = peek();
        Expr e;
        e.line = t.line;
        e.column = t.column;
        if (t.kind == TokenKind::Real || t.kind == TokenKind::Integer) {
            advance();
            e.kind = Expr::Kind::Number;
            e.number = t.real_value;
            return make_expr(std::move(e));
        }
        if (is_symbol(t, "(")) {
            advance();
            ExprPtr inner = parse_expr(param_names);
            expect_symbol(")");
            return inner;
        }
        if (t.kind == TokenKind::Identifier) {
            advance();
            if (t.text == "pi") {
                e.kind = Expr::Kind::Pi;
                return make_expr(std::move(e));
            }
            if (builtin_functions().count(t.text)) {
                expect_symbol("(");
                ExprPtr arg = parse_expr(param_names);
                expect_symbol(")");
                e.kind = Expr::Kind::Unary;
                e.name = t.text;
                e.lhs = arg;
                return make_expr(std::move(e));
            }
            bool is_param = false;
            if (param_names)
                for (const auto& p : *param_names) is_param = is_param || p == t.text;
            if (!is_param)
                fail("undeclared identifier '" + t.text + "' in expression", t);
            e.kind = Expr::Kind::Param;
            e.name = t.text;
            return make_expr(std::move(e));
        }
        fail("expected expression", t);
    }
};

}  // namespace

Program parse(const std::string& source) { return Parser(source).run(); }

Program parse_builtin_library(const std::string& source) {
    return Parser(source, /*with_stdlib=*/false).run();
}

}  // namespace qpd::qasm
