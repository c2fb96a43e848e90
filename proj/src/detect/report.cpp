#include "qpd/detect/report.hpp"

#include <sstream>

#include "json.hpp"

namespace qpd::detect {

namespace {

using json = nlohmann::ordered_json;

json payload_to_json(const Payload& payload) {
    return std::visit(
        [](const auto& p) -> json {
            using T = std::decay_t<decltype(p)>;
            json j = json::object();
            if constexpr (std::is_same_v<T, UsPayload>) {
                if (p.register_level) {
                    j["granularity"] = "register";
                    j["register"] = p.reg;
                } else {
                    j["granularity"] = "qubit";
                    j["qubit"] = p.qubit;
                }
            } else if constexpr (std::is_same_v<T, BePayload>) {
                j["register"] = p.reg;
                j["bits"] = p.bits;
            } else if constexpr (std::is_same_v<T, AePayload>) {
                j["register"] = p.reg;
                j["angles"] = p.angles;
            } else if constexpr (std::is_same_v<T, AmpPayload>) {
                j["register"] = p.reg;
                json blocks = json::array();
                for (const AmpBlock& b : p.blocks) {
                    json jb;
                    jb["target"] = b.target;
                    jb["span"] = {b.first, b.last};
                    jb["rotations"] = b.rotations;
                    blocks.push_back(std::move(jb));
                }
                j["blocks"] = std::move(blocks);
            } else if constexpr (std::is_same_v<T, QpePayload>) {
                j["counting"] = p.counting;
                j["targets"] = p.targets;
                j["stages"] = {{"superposition", {p.superposition_span[0], p.superposition_span[1]}},
                               {"controlled", {p.controlled_span[0], p.controlled_span[1]}},
                               {"inverse_qft", {p.inverse_qft_span[0], p.inverse_qft_span[1]}}};
                j["verified"] = p.verified;
            } else if constexpr (std::is_same_v<T, UncPayload>) {
                j["layers_a"] = {p.layers_a[0], p.layers_a[1]};
                j["layers_b"] = {p.layers_b[0], p.layers_b[1]};
                j["copy_stage"] = p.copy_stage;
                j["swap_stage"] = p.swap_stage;
            } else if constexpr (std::is_same_v<T, PsmPayload>) {
                j["measure"] = p.measure_index;
                j["register"] = p.creg;
                json guards = json::array();
                for (const PsmGuard& g : p.guards) {
                    json jg;
                    jg["index"] = g.index;
                    jg["value"] = g.value;
                    guards.push_back(std::move(jg));
                }
                j["guards"] = std::move(guards);
            }
            return j;
        },
        payload);
}

}  // namespace

std::string report_to_json(const DetectionReport& report, int indent) {
    json j;
    j["circuit"] = report.circuit_id;
    json matches = json::array();
    for (const PatternMatch& m : report.matches) {
        json jm;
        jm["kind"] = to_string(m.kind);
        jm["span"] = {m.span_start, m.span_end};
        jm["qubits"] = m.qubits;
        jm["payload"] = payload_to_json(m.payload);
        matches.push_back(std::move(jm));
    }
    j["matches"] = std::move(matches);
    json skipped = json::array();
    for (const SkippedDetector& s : report.skipped) {
        json js;
        js["detector"] = s.detector;
        js["reason"] = s.reason;
        skipped.push_back(std::move(js));
    }
    j["skipped"] = std::move(skipped);
    return j.dump(indent);
}

std::string report_to_text(const DetectionReport& report) {
    std::ostringstream out;
    out << "circuit: " << report.circuit_id << "\n";
    if (report.matches.empty()) out << "no pattern matches\n";
    for (const PatternMatch& m : report.matches) {
        out << to_string(m.kind) << " span=[" << m.span_start << "," << m.span_end << "] qubits=[";
        for (std::size_t i = 0; i < m.qubits.size(); ++i) {
            if (i) out << ",";
            out << m.qubits[i];
        }
        out << "]";
        std::visit(
            [&](const auto& p) {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, UsPayload>) {
                    if (p.register_level)
                        out << " register " << p.reg;
                    else
                        out << " qubit " << p.qubit;
                } else if constexpr (std::is_same_v<T, BePayload>) {
                    out << " register " << p.reg << " bits " << p.bits;
                } else if constexpr (std::is_same_v<T, AePayload>) {
                    out << " register " << p.reg << " angles " << p.angles.size();
                } else if constexpr (std::is_same_v<T, AmpPayload>) {
                    out << " register " << p.reg << " blocks " << p.blocks.size();
                } else if constexpr (std::is_same_v<T, QpePayload>) {
                    out << " counting " << p.counting.size() << (p.verified ? " verified" : "");
                } else if constexpr (std::is_same_v<T, UncPayload>) {
                    out << " layers [" << p.layers_a[0] << "," << p.layers_a[1] << "] vs ["
                        << p.layers_b[0] << "," << p.layers_b[1] << "]";
                    if (p.copy_stage) out << " +copy+swap";
                } else if constexpr (std::is_same_v<T, PsmPayload>) {
                    out << " measure@" << p.measure_index << " register " << p.creg << " guards "
                        << p.guards.size();
                }
            },
            m.payload);
        out << "\n";
    }
    for (const SkippedDetector& s : report.skipped)
        out << "skipped " << s.detector << ": " << s.reason << "\n";
    return out.str();
}

}  // namespace qpd::detect
