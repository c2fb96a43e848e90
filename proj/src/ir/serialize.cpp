#include "qpd/ir/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace qpd::ir {

namespace {

std::string format_angle(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

}  // namespace

std::string to_qasm(const Circuit& circuit) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    for (const auto& reg : circuit.qregs)
        out << "qreg " << reg.name << "[" << reg.size << "];\n";
    for (const auto& reg : circuit.cregs)
        out << "creg " << reg.name << "[" << reg.size << "];\n";

    for (const Instruction& ins : circuit.instructions) {
        if (ins.guard)
            out << "if(" << ins.guard->creg << "==" << ins.guard->value << ") ";
        switch (ins.kind) {
            case InstrKind::Gate: {
                if (ins.gate == "u")
                    out << "U";
                else
                    out << ins.gate;
                if (!ins.params.empty()) {
                    out << "(";
                    for (std::size_t i = 0; i < ins.params.size(); ++i) {
                        if (i) out << ",";
                        out << format_angle(ins.params[i]);
                    }
                    out << ")";
                }
                out << " ";
                for (std::size_t i = 0; i < ins.qubits.size(); ++i) {
                    if (i) out << ",";
                    out << circuit.qubit_name(ins.qubits[i]);
                }
                out << ";\n";
                break;
            }
            case InstrKind::Measure:
                out << "measure " << circuit.qubit_name(ins.qubits[0]) << " -> "
                    << circuit.clbit_name(ins.cbit) << ";\n";
                break;
            case InstrKind::Reset:
                out << "reset " << circuit.qubit_name(ins.qubits[0]) << ";\n";
                break;
            case InstrKind::Barrier: {
                out << "barrier ";
                for (std::size_t i = 0; i < ins.qubits.size(); ++i) {
                    if (i) out << ",";
                    out << circuit.qubit_name(ins.qubits[i]);
                }
                out << ";\n";
                break;
            }
        }
    }
    return out.str();
}

}  // namespace qpd::ir
