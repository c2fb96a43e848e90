#include "qpd/ir/invert.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace qpd::ir {

namespace {

const std::unordered_set<std::string>& self_inverse_gates() {
    static const std::unordered_set<std::string> set = {
        "h", "x", "y", "z", "cx", "cz", "cy", "swap", "ccx", "id", "ch"};
    return set;
}

}  // namespace

Instruction invert_instruction(const Instruction& ins) {
    if (ins.kind != InstrKind::Gate)
        throw std::invalid_argument("invert: non-unitary instruction present");
    Instruction out = ins;
    const std::string& g = ins.gate;
    if (self_inverse_gates().count(g)) return out;
    if (g == "s") { out.gate = "sdg"; return out; }
    if (g == "sdg") { out.gate = "s"; return out; }
    if (g == "t") { out.gate = "tdg"; return out; }
    if (g == "tdg") { out.gate = "t"; return out; }
    if (g == "rx" || g == "ry" || g == "rz" || g == "cp" || g == "crz") {
        out.params[0] = -out.params[0];
        return out;
    }
    if (g == "u" || g == "cu3") {
        // (theta, phi, lambda) -> (-theta, -lambda, -phi)
        out.params = {-ins.params[0], -ins.params[2], -ins.params[1]};
        return out;
    }
    throw std::invalid_argument("invert: no inverse rule for gate '" + g + "'");
}

Circuit invert(const Circuit& circuit) {
    for (const Instruction& ins : circuit.instructions)
        if (ins.kind == InstrKind::Measure || ins.kind == InstrKind::Reset)
            throw std::invalid_argument("invert: non-unitary instruction present");

    Circuit out;
    out.n_qubits = circuit.n_qubits;
    out.n_clbits = circuit.n_clbits;
    out.qregs = circuit.qregs;
    out.cregs = circuit.cregs;
    out.instructions.reserve(circuit.instructions.size());
    for (auto it = circuit.instructions.rbegin(); it != circuit.instructions.rend(); ++it) {
        if (it->kind == InstrKind::Barrier)
            out.instructions.push_back(*it);
        else
            out.instructions.push_back(invert_instruction(*it));
    }
    return out;
}

}  // namespace qpd::ir
