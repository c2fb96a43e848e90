#include "qpd/qasm/elaborate.hpp"

#include <cmath>
#include <map>
#include <unordered_set>

#include "qelib.hpp"
#include "qpd/qasm/parser.hpp"

namespace qpd::qasm {

namespace {

// Library gates that stay as instructions instead of being inlined.
const std::unordered_set<std::string>& preserved_gates() {
    static const std::unordered_set<std::string> set = {
        "id", "x", "y",  "z",  "h",  "s",   "sdg", "t",  "tdg", "rx",
        "ry", "rz", "cx", "cz", "cy", "ch",  "cp",  "crz", "cu3", "swap",
        "ccx"};
    return set;
}

class Elaborator {
public:
    explicit Elaborator(const Program& program) : prog_(program) {
        int offset = 0;
        for (const RegDecl& r : prog_.qregs) {
            circuit_.qregs.push_back({r.name, offset, r.size});
            offset += r.size;
        }
        circuit_.n_qubits = offset;
        offset = 0;
        for (const RegDecl& r : prog_.cregs) {
            circuit_.cregs.push_back({r.name, offset, r.size});
            offset += r.size;
        }
        circuit_.n_clbits = offset;
    }

    ir::Circuit run() {
        for (const Statement& stmt : prog_.statements) expand_top(stmt);
        circuit_.validate();
        return std::move(circuit_);
    }

private:
    const Program& prog_;
    ir::Circuit circuit_;

    const ir::RegisterInfo* qreg_info(const std::string& name, int line, int col) const {
        for (const auto& r : circuit_.qregs)
            if (r.name == name) return &r;
        throw ParseError("undeclared quantum register '" + name + "'", line, col);
    }
    const ir::RegisterInfo* creg_info(const std::string& name, int line, int col) const {
        for (const auto& r : circuit_.cregs)
            if (r.name == name) return &r;
        throw ParseError("undeclared classical register '" + name + "'", line, col);
    }

    std::optional<ir::Guard> to_guard(const std::optional<GuardSpec>& g) const {
        if (!g) return std::nullopt;
        return ir::Guard{g->creg, g->value};
    }

    void emit_gate(std::string name, std::vector<double> params, std::vector<int> qubits,
                   const std::optional<ir::Guard>& guard, int line, int col) {
        // Canonical names for the hardware primitives and u-variants.
        if (name == "U" || name == "u" || name == "u3") {
            name = "u";
        } else if (name == "u2") {
            params = {M_PI / 2.0, params[0], params[1]};
            name = "u";
        } else if (name == "u1" || name == "p") {
            params = {0.0, 0.0, params[0]};
            name = "u";
        } else if (name == "u0") {
            params.clear();
            name = "id";
        } else if (name == "CX") {
            name = "cx";
        } else if (name == "cu1") {
            name = "cp";
        }
        for (std::size_t i = 0; i < qubits.size(); ++i)
            for (std::size_t j = i + 1; j < qubits.size(); ++j)
                if (qubits[i] == qubits[j])
                    throw ParseError("gate '" + name + "' applied to duplicate qubit operands",
                                     line, col);
        ir::Instruction ins;
        ins.kind = ir::InstrKind::Gate;
        ins.gate = std::move(name);
        ins.params = std::move(params);
        ins.qubits = std::move(qubits);
        ins.guard = guard;
        circuit_.instructions.push_back(std::move(ins));
    }

    // One gate application with fully resolved parameters and operands.
    void expand_call(const std::string& name, const std::vector<double>& params,
                     const std::vector<int>& qubits, const std::optional<ir::Guard>& guard,
                     int line, int col, int depth) {
        if (depth > 256)
            throw ParseError("gate expansion too deep (recursive macro?)", line, col);
        if (name == "U" || name == "CX") {
            emit_gate(name, params, qubits, guard, line, col);
            return;
        }
        if (const GateMacro* user = prog_.find_macro(name)) {
            expand_macro(*user, params, qubits, guard, depth);
            return;
        }
        if (preserved_gates().count(name) || name == "u" || name == "u1" || name == "u2" ||
            name == "u3" || name == "p" || name == "u0" || name == "cu1") {
            emit_gate(name, params, qubits, guard, line, col);
            return;
        }
        if (const GateMacro* lib = qelib_find(name)) {
            expand_macro(*lib, params, qubits, guard, depth);
            return;
        }
        throw ParseError("use of undeclared gate '" + name + "'", line, col);
    }

    void expand_macro(const GateMacro& macro, const std::vector<double>& params,
                      const std::vector<int>& qubits, const std::optional<ir::Guard>& guard,
                      int depth) {
        std::map<std::string, double> env;
        for (std::size_t i = 0; i < macro.params.size(); ++i) env[macro.params[i]] = params[i];
        std::map<std::string, int> binding;
        for (std::size_t i = 0; i < macro.qubits.size(); ++i) binding[macro.qubits[i]] = qubits[i];

        for (const Statement& stmt : macro.body) {
            if (stmt.kind == Statement::Kind::Barrier) {
                ir::Instruction ins;
                ins.kind = ir::InstrKind::Barrier;
                for (const Argument& a : stmt.args) ins.qubits.push_back(binding.at(a.reg));
                circuit_.instructions.push_back(std::move(ins));
                continue;
            }
            std::vector<double> vals;
            vals.reserve(stmt.params.size());
            for (const ExprPtr& e : stmt.params) vals.push_back(e->eval(env));
            std::vector<int> ops;
            ops.reserve(stmt.args.size());
            for (const Argument& a : stmt.args) ops.push_back(binding.at(a.reg));
            expand_call(stmt.name, vals, ops, guard, stmt.line, stmt.column, depth + 1);
        }
    }

    // Resolves a source argument to global qubit indices (one entry when
    // indexed, the whole register otherwise).
    std::vector<int> resolve_qarg(const Argument& arg) const {
        const ir::RegisterInfo* reg = qreg_info(arg.reg, arg.line, arg.column);
        if (arg.index) {
            if (*arg.index >= reg->size)
                throw ParseError("index out of range for register '" + arg.reg + "'", arg.line,
                                 arg.column);
            return {reg->offset + *arg.index};
        }
        std::vector<int> all(static_cast<std::size_t>(reg->size));
        for (int i = 0; i < reg->size; ++i) all[static_cast<std::size_t>(i)] = reg->offset + i;
        return all;
    }

    void expand_top(const Statement& stmt) {
        std::optional<ir::Guard> guard = to_guard(stmt.guard);
        switch (stmt.kind) {
            case Statement::Kind::Barrier: {
                ir::Instruction ins;
                ins.kind = ir::InstrKind::Barrier;
                for (const Argument& a : stmt.args)
                    for (int q : resolve_qarg(a)) ins.qubits.push_back(q);
                circuit_.instructions.push_back(std::move(ins));
                return;
            }
            case Statement::Kind::Reset: {
                for (int q : resolve_qarg(stmt.args[0])) {
                    ir::Instruction ins;
                    ins.kind = ir::InstrKind::Reset;
                    ins.qubits = {q};
                    circuit_.instructions.push_back(std::move(ins));
                }
                return;
            }
            case Statement::Kind::Measure: {
                const ir::RegisterInfo* src =
                    qreg_info(stmt.measure_src.reg, stmt.measure_src.line, stmt.measure_src.column);
                const ir::RegisterInfo* dst =
                    creg_info(stmt.measure_dst.reg, stmt.measure_dst.line, stmt.measure_dst.column);
                bool src_idx = stmt.measure_src.index.has_value();
                bool dst_idx = stmt.measure_dst.index.has_value();
                if (src_idx != dst_idx)
                    throw ParseError("measure operands must both be bits or both registers",
                                     stmt.line, stmt.column);
                if (src_idx) {
                    emit_measure(src->offset + *stmt.measure_src.index,
                                 dst->offset + *stmt.measure_dst.index, guard);
                } else {
                    if (src->size != dst->size)
                        throw ParseError("measure register sizes differ", stmt.line, stmt.column);
                    for (int i = 0; i < src->size; ++i)
                        emit_measure(src->offset + i, dst->offset + i, guard);
                }
                return;
            }
            case Statement::Kind::GateCall: {
                std::vector<double> vals;
                vals.reserve(stmt.params.size());
                const std::map<std::string, double> empty_env;
                for (const ExprPtr& e : stmt.params) vals.push_back(e->eval(empty_env));

                // Broadcast over whole-register operands.
                int broadcast = 1;
                for (const Argument& a : stmt.args) {
                    if (a.index) continue;
                    const ir::RegisterInfo* reg = qreg_info(a.reg, a.line, a.column);
                    if (broadcast == 1)
                        broadcast = reg->size;
                    else if (broadcast != reg->size)
                        throw ParseError("mismatched register sizes in gate broadcast", stmt.line,
                                         stmt.column);
                }
                for (int rep = 0; rep < broadcast; ++rep) {
                    std::vector<int> ops;
                    ops.reserve(stmt.args.size());
                    for (const Argument& a : stmt.args) {
                        const ir::RegisterInfo* reg = qreg_info(a.reg, a.line, a.column);
                        ops.push_back(a.index ? reg->offset + *a.index : reg->offset + rep);
                    }
                    expand_call(stmt.name, vals, ops, guard, stmt.line, stmt.column, 0);
                }
                return;
            }
        }
    }

    void emit_measure(int qubit, int clbit, const std::optional<ir::Guard>& guard) {
        ir::Instruction ins;
        ins.kind = ir::InstrKind::Measure;
        ins.qubits = {qubit};
        ins.cbit = clbit;
        ins.guard = guard;
        circuit_.instructions.push_back(std::move(ins));
    }
};

}  // namespace

ir::Circuit elaborate(const Program& program) { return Elaborator(program).run(); }

ir::Circuit compile(const std::string& source) { return elaborate(parse(source)); }

}  // namespace qpd::qasm
