#include "qpd/ir/circuit.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>

namespace qpd::ir {

bool Instruction::touches(int qubit) const {
    return std::find(qubits.begin(), qubits.end(), qubit) != qubits.end();
}

namespace {

struct GateSig {
    int n_qubits;
    int n_params;
};

const std::unordered_map<std::string, GateSig>& base_gate_table() {
    static const std::unordered_map<std::string, GateSig> table = {
        {"u", {1, 3}},   {"id", {1, 0}},  {"x", {1, 0}},    {"y", {1, 0}},
        {"z", {1, 0}},   {"h", {1, 0}},   {"s", {1, 0}},    {"sdg", {1, 0}},
        {"t", {1, 0}},   {"tdg", {1, 0}}, {"rx", {1, 1}},   {"ry", {1, 1}},
        {"rz", {1, 1}},  {"cx", {2, 0}},  {"cz", {2, 0}},   {"cy", {2, 0}},
        {"ch", {2, 0}},  {"swap", {2, 0}}, {"cp", {2, 1}},  {"crz", {2, 1}},
        {"cu3", {2, 3}}, {"ccx", {3, 0}},
    };
    return table;
}

}  // namespace

bool is_base_gate(const std::string& name) { return base_gate_table().count(name) > 0; }

int base_gate_num_qubits(const std::string& name) {
    auto it = base_gate_table().find(name);
    if (it == base_gate_table().end())
        throw std::invalid_argument("unknown base gate: " + name);
    return it->second.n_qubits;
}

int base_gate_num_params(const std::string& name) {
    auto it = base_gate_table().find(name);
    if (it == base_gate_table().end())
        throw std::invalid_argument("unknown base gate: " + name);
    return it->second.n_params;
}

void Circuit::validate() const {
    for (std::size_t idx = 0; idx < instructions.size(); ++idx) {
        const Instruction& ins = instructions[idx];
        const std::string where = "instruction " + std::to_string(idx);
        for (std::size_t i = 0; i < ins.qubits.size(); ++i) {
            if (ins.qubits[i] < 0 || ins.qubits[i] >= n_qubits)
                throw std::invalid_argument(where + ": qubit operand out of range");
            for (std::size_t j = i + 1; j < ins.qubits.size(); ++j)
                if (ins.qubits[i] == ins.qubits[j])
                    throw std::invalid_argument(where + ": duplicate qubit operand");
        }
        switch (ins.kind) {
            case InstrKind::Gate: {
                if (!is_base_gate(ins.gate))
                    throw std::invalid_argument(where + ": unknown gate '" + ins.gate + "'");
                if (static_cast<int>(ins.qubits.size()) != base_gate_num_qubits(ins.gate))
                    throw std::invalid_argument(where + ": operand count mismatch for " + ins.gate);
                if (static_cast<int>(ins.params.size()) != base_gate_num_params(ins.gate))
                    throw std::invalid_argument(where + ": parameter count mismatch for " + ins.gate);
                break;
            }
            case InstrKind::Measure:
                if (ins.qubits.size() != 1 || ins.cbit < 0 || ins.cbit >= n_clbits)
                    throw std::invalid_argument(where + ": malformed measure");
                break;
            case InstrKind::Reset:
                if (ins.qubits.size() != 1)
                    throw std::invalid_argument(where + ": malformed reset");
                if (ins.guard)
                    throw std::invalid_argument(where + ": guard not allowed on reset");
                break;
            case InstrKind::Barrier:
                if (ins.guard)
                    throw std::invalid_argument(where + ": guard not allowed on barrier");
                break;
        }
        if (ins.guard && !find_creg(ins.guard->creg))
            throw std::invalid_argument(where + ": guard references unknown register");
    }
}

const RegisterInfo* Circuit::qreg_of(int qubit) const {
    for (const auto& reg : qregs)
        if (reg.contains(qubit)) return &reg;
    return nullptr;
}

const RegisterInfo* Circuit::find_creg(const std::string& name) const {
    for (const auto& reg : cregs)
        if (reg.name == name) return &reg;
    return nullptr;
}

std::string Circuit::qubit_name(int qubit) const {
    if (const RegisterInfo* reg = qreg_of(qubit))
        return reg->name + "[" + std::to_string(qubit - reg->offset) + "]";
    return "q[" + std::to_string(qubit) + "]";
}

std::string Circuit::clbit_name(int clbit) const {
    for (const auto& reg : cregs)
        if (reg.contains(clbit))
            return reg.name + "[" + std::to_string(clbit - reg.offset) + "]";
    return "c[" + std::to_string(clbit) + "]";
}

std::vector<std::optional<int>> first_gate_map(const Circuit& circuit) {
    std::vector<std::optional<int>> first(circuit.n_qubits);
    for (int idx = 0; idx < circuit.instruction_count(); ++idx) {
        const Instruction& ins = circuit.instructions[idx];
        if (ins.kind == InstrKind::Barrier) continue;
        for (int q : ins.qubits)
            if (!first[q]) first[q] = idx;
    }
    return first;
}

}  // namespace qpd::ir
