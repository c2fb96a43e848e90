#include "qpd/detect/detectors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

#include "qpd/ir/invert.hpp"

namespace qpd::detect {

using ir::Circuit;
using ir::InstrKind;
using ir::Instruction;
using num::StateVector;
using sim::StateTrace;

std::string to_string(PatternKind kind) {
    switch (kind) {
        case PatternKind::US: return "US";
        case PatternKind::CE: return "CE";
        case PatternKind::BE: return "BE";
        case PatternKind::AE: return "AE";
        case PatternKind::AMP: return "AMP";
        case PatternKind::QPE: return "QPE";
        case PatternKind::UNC: return "UNC";
        case PatternKind::PSM: return "PSM";
    }
    return "?";
}

std::optional<PatternKind> pattern_from_string(const std::string& name) {
    for (PatternKind k : kAllPatterns)
        if (to_string(k) == name) return k;
    return std::nullopt;
}

namespace {

bool state_entangled_fast(const StateVector& state) {
    if (state.n_qubits < 2) return false;
    for (int q = 0; q < state.n_qubits; ++q)
        if (num::schmidt(state, {q}).rank > 1) return true;
    return false;
}

// Canonical bipartition halves all contain qubit 0; break on the first
// entangled one.
bool state_entangled_faithful(const StateVector& state) {
    const int n = state.n_qubits;
    if (n < 2) return false;
    const std::uint64_t limit = std::uint64_t{1} << (n - 1);
    std::vector<int> subset;
    for (std::uint64_t extra = 0; extra + 1 < limit; ++extra) {
        subset.clear();
        subset.push_back(0);
        for (int q = 1; q < n; ++q)
            if ((extra >> (q - 1)) & 1u) subset.push_back(q);
        if (num::schmidt(state, subset).rank > 1) return true;
    }
    return false;
}

bool state_entangled(const StateVector& state, CeMode mode) {
    return mode == CeMode::Faithful ? state_entangled_faithful(state)
                                    : state_entangled_fast(state);
}

}  // namespace

std::vector<PatternMatch> detect_creating_entanglement(const Circuit& circuit,
                                                       const StateTrace& trace, CeMode mode) {
    std::vector<PatternMatch> matches;
    bool previous = false;  // |0...0> is a product state
    for (int t = 0; t < trace.executed_count; ++t) {
        const Instruction& ins = circuit.instructions[t];
        bool current;
        if (ins.kind == InstrKind::Barrier) {
            current = previous;  // state repeated
        } else {
            current = state_entangled(trace.states[t], mode);
        }
        if (current && !previous) {
            PatternMatch m;
            m.kind = PatternKind::CE;
            m.span_start = t;
            m.span_end = t;
            m.qubits = ins.qubits;
            std::sort(m.qubits.begin(), m.qubits.end());
            matches.push_back(std::move(m));
        }
        previous = current;
    }
    return matches;
}

std::vector<PatternMatch> detect_uniform_superposition(const Circuit& circuit,
                                                       const StateTrace& trace, double amp_tol) {
    const int n = circuit.n_qubits;
    const double target = 1.0 / std::sqrt(2.0);
    std::vector<PatternMatch> matches;
    std::vector<int> qubit_entry(n, -1);
    std::vector<bool> reg_done(circuit.qregs.size(), false);
    std::vector<bool> uniform(n, false);

    for (int t = 0; t < trace.executed_count; ++t) {
        if (circuit.instructions[t].kind != InstrKind::Barrier) {
            const StateVector& state = trace.states[t];
            for (int q = 0; q < n; ++q) {
                bool separable = n == 1 || num::schmidt(state, {q}).rank == 1;
                if (!separable) {
                    uniform[q] = false;
                    continue;
                }
                double p0 = 0.0;
                for (std::size_t idx = 0; idx < state.dim(); ++idx)
                    if (!((idx >> q) & 1u)) p0 += std::norm(state.amps[idx]);
                uniform[q] = std::abs(std::sqrt(p0) - target) <= amp_tol;
            }
        }
        for (int q = 0; q < n; ++q) {
            if (uniform[q] && qubit_entry[q] < 0) {
                qubit_entry[q] = t;
                PatternMatch m;
                m.kind = PatternKind::US;
                m.span_start = t;
                m.span_end = t;
                m.qubits = {q};
                m.payload = UsPayload{false, "", q};
                matches.push_back(std::move(m));
            }
        }
        for (std::size_t r = 0; r < circuit.qregs.size(); ++r) {
            if (reg_done[r]) continue;
            const ir::RegisterInfo& reg = circuit.qregs[r];
            bool all = true;
            for (int q = reg.offset; q < reg.offset + reg.size; ++q) all = all && uniform[q];
            if (!all) continue;
            reg_done[r] = true;
            PatternMatch m;
            m.kind = PatternKind::US;
            m.span_start = t;
            m.span_end = t;
            for (int q = reg.offset; q < reg.offset + reg.size; ++q) m.qubits.push_back(q);
            m.payload = UsPayload{true, reg.name, -1};
            matches.push_back(std::move(m));
        }
    }
    std::stable_sort(matches.begin(), matches.end(), [](const PatternMatch& a, const PatternMatch& b) {
        return a.span_start < b.span_start;
    });
    return matches;
}

std::vector<PatternMatch> detect_basis_encoding(const Circuit& circuit) {
    std::vector<PatternMatch> matches;
    const auto first = first_gate_map(circuit);
    for (const ir::RegisterInfo& reg : circuit.qregs) {
        bool ok = true;
        std::vector<int> x_qubits;
        std::vector<int> x_indices;
        std::string bits(static_cast<std::size_t>(reg.size), '0');
        for (int i = 0; i < reg.size && ok; ++i) {
            int q = reg.offset + i;
            if (!first[q]) continue;  // untouched qubits are fine
            const Instruction& ins = circuit.instructions[*first[q]];
            if (ins.kind == InstrKind::Gate && ins.gate == "x") {
                bits[static_cast<std::size_t>(reg.size - 1 - i)] = '1';
                x_qubits.push_back(q);
                x_indices.push_back(*first[q]);
            } else {
                ok = false;  // multi-qubit or non-x first gate disqualifies
            }
        }
        if (!ok || x_qubits.empty()) continue;
        PatternMatch m;
        m.kind = PatternKind::BE;
        m.span_start = *std::min_element(x_indices.begin(), x_indices.end());
        m.span_end = *std::max_element(x_indices.begin(), x_indices.end());
        m.qubits = x_qubits;
        m.payload = BePayload{reg.name, bits};
        matches.push_back(std::move(m));
    }
    return matches;
}

std::vector<PatternMatch> detect_angle_encoding(const Circuit& circuit, double min_angle) {
    std::vector<PatternMatch> matches;
    const auto first = first_gate_map(circuit);
    for (const ir::RegisterInfo& reg : circuit.qregs) {
        if (reg.size < 2) continue;
        bool ok = true;
        std::vector<double> angles;
        int lo = circuit.instruction_count(), hi = -1;
        bool any_data = false;
        for (int i = 0; i < reg.size && ok; ++i) {
            int q = reg.offset + i;
            if (!first[q]) {
                ok = false;
                break;
            }
            const Instruction& ins = circuit.instructions[*first[q]];
            if (ins.kind != InstrKind::Gate || ins.gate != "ry") {
                ok = false;
                break;
            }
            angles.push_back(ins.params[0]);
            any_data = any_data || std::abs(ins.params[0]) > min_angle;
            lo = std::min(lo, *first[q]);
            hi = std::max(hi, *first[q]);
        }
        if (!ok || !any_data) continue;
        PatternMatch m;
        m.kind = PatternKind::AE;
        m.span_start = lo;
        m.span_end = hi;
        for (int q = reg.offset; q < reg.offset + reg.size; ++q) m.qubits.push_back(q);
        m.payload = AePayload{reg.name, std::move(angles)};
        matches.push_back(std::move(m));
    }
    return matches;
}

namespace {

// Maximal alternating run [rot, cx, rot, ...] at the head of one target
// qubit's activity. Rotations are ry/rz on the target; every cx must target
// it with a control inside the register.
struct RotationRun {
    int rotations = 0;
    bool has_cx = false;
    bool bare_ry = false;
    int first = -1;
    int last = -1;
};

RotationRun scan_rotation_run(const Circuit& circuit, const std::vector<int>& touching,
                              int target, const ir::RegisterInfo& reg) {
    RotationRun run;
    bool expect_rotation = true;
    std::string first_rot_gate;
    for (int idx : touching) {
        const Instruction& ins = circuit.instructions[idx];
        bool is_rot = ins.kind == InstrKind::Gate && (ins.gate == "ry" || ins.gate == "rz") &&
                      ins.qubits.size() == 1 && ins.qubits[0] == target;
        bool is_mux_cx = ins.kind == InstrKind::Gate && ins.gate == "cx" && ins.qubits[1] == target &&
                         reg.contains(ins.qubits[0]);
        if (expect_rotation ? !is_rot : !is_mux_cx) break;
        if (run.first < 0) run.first = idx;
        run.last = idx;
        if (is_rot) {
            ++run.rotations;
            if (run.rotations == 1) first_rot_gate = ins.gate;
        } else {
            run.has_cx = true;
        }
        expect_rotation = !expect_rotation;
    }
    run.bare_ry = run.rotations == 1 && !run.has_cx && first_rot_gate == "ry";
    return run;
}

}  // namespace

std::vector<PatternMatch> detect_amplitude_encoding(const Circuit& circuit) {
    std::vector<PatternMatch> matches;
    // Per-qubit instruction lists (barriers excluded).
    std::vector<std::vector<int>> touching(static_cast<std::size_t>(circuit.n_qubits));
    for (int idx = 0; idx < circuit.instruction_count(); ++idx) {
        const Instruction& ins = circuit.instructions[idx];
        if (ins.kind == InstrKind::Barrier) continue;
        for (int q : ins.qubits) touching[static_cast<std::size_t>(q)].push_back(idx);
    }

    for (const ir::RegisterInfo& reg : circuit.qregs) {
        std::vector<AmpBlock> full_blocks;
        std::optional<AmpBlock> bare;
        for (int i = 0; i < reg.size; ++i) {
            int q = reg.offset + i;
            RotationRun run = scan_rotation_run(circuit, touching[static_cast<std::size_t>(q)], q, reg);
            if (run.rotations >= 2) {
                full_blocks.push_back({q, run.first, run.last, run.rotations});
            } else if (run.bare_ry) {
                if (!bare || run.first < bare->first) bare = AmpBlock{q, run.first, run.last, 1};
            }
        }
        std::vector<AmpBlock> blocks = full_blocks;
        if (bare) {
            // A single bare ry only counts for the register's first target.
            bool earliest = true;
            for (const AmpBlock& b : full_blocks) earliest = earliest && bare->first < b.first;
            if (earliest) blocks.push_back(*bare);
        }
        int needed = std::max(1, reg.size - 1);
        if (static_cast<int>(blocks.size()) < needed) continue;

        std::sort(blocks.begin(), blocks.end(),
                  [](const AmpBlock& a, const AmpBlock& b) { return a.target < b.target; });
        PatternMatch m;
        m.kind = PatternKind::AMP;
        m.span_start = circuit.instruction_count();
        m.span_end = -1;
        for (const AmpBlock& b : blocks) {
            m.span_start = std::min(m.span_start, b.first);
            m.span_end = std::max(m.span_end, b.last);
            m.qubits.push_back(b.target);
        }
        std::sort(m.qubits.begin(), m.qubits.end());
        m.payload = AmpPayload{reg.name, std::move(blocks)};
        matches.push_back(std::move(m));
    }
    return matches;
}

namespace {

bool is_controlled_gate(const std::string& name) {
    static const std::unordered_set<std::string> set = {"cx", "cy", "cz", "ch",
                                                        "cp", "crz", "cu3", "ccx"};
    return set.count(name) > 0;
}

// Operand positions that act as controls. cz and cp are symmetric, so both
// positions qualify.
std::vector<int> control_positions(const std::string& name) {
    if (name == "ccx") return {0, 1};
    if (name == "cz" || name == "cp") return {0, 1};
    return {0};
}

std::optional<int> phase_power_of_two(double angle, double tol) {
    double mag = std::abs(angle);
    if (mag <= 0.0) return std::nullopt;
    double j = std::round(std::log2(M_PI / mag));
    if (j < 1.0 || j > 62.0) return std::nullopt;
    if (std::abs(mag - M_PI / std::pow(2.0, j)) > tol) return std::nullopt;
    return static_cast<int>(j);
}

}  // namespace

std::vector<PatternMatch> detect_qpe(const Circuit& circuit, const DetectConfig& config) {
    const auto first = first_gate_map(circuit);
    // Stage 1: counting set = qubits whose first gate is h.
    std::vector<int> counting;
    for (int q = 0; q < circuit.n_qubits; ++q) {
        if (!first[q]) continue;
        const Instruction& ins = circuit.instructions[*first[q]];
        if (ins.kind == InstrKind::Gate && ins.gate == "h") counting.push_back(q);
    }
    if (static_cast<int>(counting.size()) < 2) return {};
    std::vector<bool> in_c(static_cast<std::size_t>(circuit.n_qubits), false);
    for (int q : counting) in_c[static_cast<std::size_t>(q)] = true;

    int stage1_lo = circuit.instruction_count(), stage1_hi = -1;
    for (int q : counting) {
        stage1_lo = std::min(stage1_lo, *first[q]);
        stage1_hi = std::max(stage1_hi, *first[q]);
    }

    // Stage 2: each counting qubit controls at least one gate whose other
    // operands lie outside the counting set.
    std::map<int, int> first_controlled;  // counting qubit -> instruction
    std::set<int> targets;
    for (int idx = 0; idx < circuit.instruction_count(); ++idx) {
        const Instruction& ins = circuit.instructions[idx];
        if (ins.kind != InstrKind::Gate || !is_controlled_gate(ins.gate)) continue;
        for (int pos : control_positions(ins.gate)) {
            int q = ins.qubits[static_cast<std::size_t>(pos)];
            if (!in_c[static_cast<std::size_t>(q)] || idx <= *first[q]) continue;
            bool others_outside = true;
            for (int other : ins.qubits)
                if (other != q && in_c[static_cast<std::size_t>(other)]) others_outside = false;
            if (!others_outside) continue;
            if (!first_controlled.count(q)) {
                first_controlled[q] = idx;
                for (int other : ins.qubits)
                    if (other != q) targets.insert(other);
            }
        }
    }
    if (static_cast<int>(first_controlled.size()) != static_cast<int>(counting.size())) return {};
    int stage2_lo = circuit.instruction_count(), stage2_hi = -1;
    for (const auto& [q, idx] : first_controlled) {
        stage2_lo = std::min(stage2_lo, idx);
        stage2_hi = std::max(stage2_hi, idx);
    }

    // Stage 3: a block of h gates covering the counting set, interleaved
    // with pi/2^j controlled-phase gates between counting qubits, optional
    // swaps inside the set.
    std::vector<bool> h_seen(static_cast<std::size_t>(circuit.n_qubits), false);
    int phase_gates = 0;
    int sign = 0;
    int stage3_lo = -1, stage3_hi = -1;
    std::vector<int> block_instrs;
    bool block_ok = true;
    for (int idx = stage2_hi + 1; idx < circuit.instruction_count() && block_ok; ++idx) {
        const Instruction& ins = circuit.instructions[idx];
        if (ins.kind == InstrKind::Barrier) continue;
        bool touches_c = false;
        for (int q : ins.qubits) touches_c = touches_c || in_c[static_cast<std::size_t>(q)];
        if (!touches_c) continue;

        bool conforming = false;
        if (ins.kind == InstrKind::Gate && !ins.guard) {
            bool all_in_c = true;
            for (int q : ins.qubits) all_in_c = all_in_c && in_c[static_cast<std::size_t>(q)];
            if (ins.gate == "h" && all_in_c) {
                h_seen[static_cast<std::size_t>(ins.qubits[0])] = true;
                conforming = true;
            } else if (ins.gate == "swap" && all_in_c) {
                conforming = true;
            } else if ((ins.gate == "cp" || ins.gate == "crz") && all_in_c) {
                if (phase_power_of_two(ins.params[0], config.qpe_angle_tol)) {
                    int s = ins.params[0] > 0 ? 1 : -1;
                    if (sign == 0 || sign == s) {
                        sign = s;
                        ++phase_gates;
                        conforming = true;
                    }
                }
            }
        }
        if (!conforming) break;  // block ends at the first non-conforming touch
        if (stage3_lo < 0) stage3_lo = idx;
        stage3_hi = idx;
        block_instrs.push_back(idx);
    }
    bool all_h = true;
    for (int q : counting) all_h = all_h && h_seen[static_cast<std::size_t>(q)];
    if (!all_h || phase_gates < 1) return {};

    QpePayload payload;
    payload.counting = counting;
    payload.targets.assign(targets.begin(), targets.end());
    payload.superposition_span = {stage1_lo, stage1_hi};
    payload.controlled_span = {stage2_lo, stage2_hi};
    payload.inverse_qft_span = {stage3_lo, stage3_hi};

    if (config.qpe_verify && static_cast<int>(counting.size()) <= 8) {
        // Remap the counting qubits to 0..|C|-1 and compare the block's
        // unitary with the inverse DFT matrix up to global phase.
        std::map<int, int> remap;
        for (std::size_t i = 0; i < counting.size(); ++i) remap[counting[i]] = static_cast<int>(i);
        std::vector<Instruction> block;
        for (int idx : block_instrs) {
            Instruction ins = circuit.instructions[idx];
            for (int& q : ins.qubits) q = remap.at(q);
            block.push_back(std::move(ins));
        }
        const int c = static_cast<int>(counting.size());
        const int dim = 1 << c;
        num::Matrix u = sim::instructions_unitary(block, c);
        num::Matrix dft_inv(dim, dim);
        const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
        for (int r = 0; r < dim; ++r)
            for (int col = 0; col < dim; ++col) {
                double angle = -2.0 * M_PI * static_cast<double>(r) * static_cast<double>(col) /
                               static_cast<double>(dim);
                dft_inv.at(r, col) = num::cplx(std::cos(angle), std::sin(angle)) * scale;
            }
        // Align global phase on the largest entry of u.
        int br = 0, bc = 0;
        double best = -1.0;
        for (int r = 0; r < dim; ++r)
            for (int col = 0; col < dim; ++col)
                if (std::abs(u.at(r, col)) > best) {
                    best = std::abs(u.at(r, col));
                    br = r;
                    bc = col;
                }
        if (best < 1e-12) return {};
        num::cplx phase = dft_inv.at(br, bc) / u.at(br, bc);
        double worst = 0.0;
        for (int r = 0; r < dim; ++r)
            for (int col = 0; col < dim; ++col)
                worst = std::max(worst, std::abs(u.at(r, col) * phase - dft_inv.at(r, col)));
        if (worst > config.qpe_angle_tol) return {};
        payload.verified = true;
    }

    PatternMatch m;
    m.kind = PatternKind::QPE;
    m.span_start = stage1_lo;
    m.span_end = stage3_hi;
    m.qubits = counting;
    for (int t : payload.targets) m.qubits.push_back(t);
    std::sort(m.qubits.begin(), m.qubits.end());
    m.payload = std::move(payload);
    return {std::move(m)};
}

namespace {

struct CanonGate {
    std::vector<int> qubits;
    std::string name;
    std::vector<double> params;
};

struct LayerInfo {
    bool unitary = true;  // gates only, no guards
    int gate_count = 0;
    std::vector<CanonGate> canon;
    std::vector<CanonGate> inverse;
};

bool canon_equal(const CanonGate& a, const CanonGate& b, double angle_tol) {
    if (a.name != b.name || a.qubits != b.qubits || a.params.size() != b.params.size())
        return false;
    for (std::size_t i = 0; i < a.params.size(); ++i)
        if (std::abs(a.params[i] - b.params[i]) > angle_tol) return false;
    return true;
}

std::vector<LayerInfo> build_layer_infos(const Circuit& circuit,
                                         const ir::LayeredCircuit& layered) {
    std::vector<LayerInfo> infos(static_cast<std::size_t>(layered.depth()));
    for (int l = 0; l < layered.depth(); ++l) {
        LayerInfo& info = infos[static_cast<std::size_t>(l)];
        for (int idx : layered.layers[static_cast<std::size_t>(l)]) {
            const Instruction& ins = circuit.instructions[idx];
            if (!ins.is_unitary()) {
                info.unitary = false;
                break;
            }
            ++info.gate_count;
            info.canon.push_back({ins.qubits, ins.gate, ins.params});
            Instruction inv = ir::invert_instruction(ins);
            info.inverse.push_back({inv.qubits, inv.gate, inv.params});
        }
        auto by_qubits = [](const CanonGate& a, const CanonGate& b) { return a.qubits < b.qubits; };
        std::sort(info.canon.begin(), info.canon.end(), by_qubits);
        std::sort(info.inverse.begin(), info.inverse.end(), by_qubits);
    }
    return infos;
}

}  // namespace

std::optional<std::pair<std::array<int, 2>, std::array<int, 2>>> find_inverse_subcircuit(
    const Circuit& circuit, const ir::LayeredCircuit& layered, int min_gates, double angle_tol) {
    const int m = layered.depth();
    if (m < 2) return std::nullopt;
    const std::vector<LayerInfo> infos = build_layer_infos(circuit, layered);

    auto range_ok = [&](int start, int size) {
        int gates = 0;
        for (int l = start; l < start + size; ++l) {
            if (!infos[static_cast<std::size_t>(l)].unitary) return false;
            gates += infos[static_cast<std::size_t>(l)].gate_count;
        }
        return gates >= min_gates;
    };

    for (int size = 1; size <= m / 2; ++size) {
        for (int a = 0; a + 2 * size <= m; ++a) {
            if (!range_ok(a, size)) continue;
            for (int b = a + size; b + size <= m; ++b) {
                if (!range_ok(b, size)) continue;
                bool match = true;
                for (int j = 0; j < size && match; ++j) {
                    const LayerInfo& lb = infos[static_cast<std::size_t>(b + j)];
                    const LayerInfo& la = infos[static_cast<std::size_t>(a + size - 1 - j)];
                    if (lb.gate_count != la.gate_count) {
                        match = false;
                        break;
                    }
                    for (std::size_t g = 0; g < lb.canon.size() && match; ++g)
                        match = canon_equal(lb.canon[g], la.inverse[g], angle_tol);
                }
                if (match)
                    return std::make_pair(std::array<int, 2>{a, a + size - 1},
                                          std::array<int, 2>{b, b + size - 1});
            }
        }
    }
    return std::nullopt;
}

namespace {

struct InstrRange {
    int first = -1;
    int last = -1;
};

InstrRange instr_range(const ir::LayeredCircuit& layered, const std::array<int, 2>& range) {
    InstrRange out;
    for (int l = range[0]; l <= range[1]; ++l)
        for (int idx : layered.layers[static_cast<std::size_t>(l)]) {
            if (out.first < 0 || idx < out.first) out.first = idx;
            if (idx > out.last) out.last = idx;
        }
    return out;
}

// Fig-style copy/swap stages around an inverse region: a cx fan-out from a
// source register onto an ancilla register before the region, matching swap
// gates after it.
bool detect_copy_swap_stages(const Circuit& circuit, const ir::LayeredCircuit& layered,
                             const std::array<int, 2>& range_b) {
    const auto first = first_gate_map(circuit);
    InstrRange b = instr_range(layered, range_b);
    for (const ir::RegisterInfo& anc : circuit.qregs) {
        // Fan-out: every ancilla qubit's first gate is a cx targeting it.
        std::vector<std::pair<int, int>> pairs;  // (source qubit, ancilla qubit)
        bool ok = anc.size > 0;
        const ir::RegisterInfo* source = nullptr;
        int fanout_end = -1;
        for (int i = 0; i < anc.size && ok; ++i) {
            int q = anc.offset + i;
            if (!first[q]) {
                ok = false;
                break;
            }
            const Instruction& ins = circuit.instructions[*first[q]];
            if (ins.kind != InstrKind::Gate || ins.gate != "cx" || ins.qubits[1] != q) {
                ok = false;
                break;
            }
            const ir::RegisterInfo* src = circuit.qreg_of(ins.qubits[0]);
            if (!src || src == &anc || (source && src != source)) {
                ok = false;
                break;
            }
            source = src;
            pairs.emplace_back(ins.qubits[0], q);
            fanout_end = std::max(fanout_end, *first[q]);
        }
        if (!ok || !source || fanout_end >= b.first) continue;

        // The inverse region must not touch the ancilla register.
        bool region_clear = true;
        for (int l = range_b[0]; l <= range_b[1] && region_clear; ++l)
            for (int idx : layered.layers[static_cast<std::size_t>(l)])
                for (int q : circuit.instructions[idx].qubits)
                    region_clear = region_clear && !anc.contains(q);
        if (!region_clear) continue;

        // Swap stage: each (source, ancilla) pair swapped after the region.
        bool all_swapped = true;
        for (const auto& [f, a] : pairs) {
            bool found = false;
            for (int idx = b.last + 1; idx < circuit.instruction_count() && !found; ++idx) {
                const Instruction& ins = circuit.instructions[idx];
                if (ins.kind == InstrKind::Gate && ins.gate == "swap" &&
                    ((ins.qubits[0] == f && ins.qubits[1] == a) ||
                     (ins.qubits[0] == a && ins.qubits[1] == f)))
                    found = true;
            }
            all_swapped = all_swapped && found;
        }
        if (all_swapped) return true;
    }
    return false;
}

}  // namespace

std::vector<PatternMatch> detect_uncompute(const Circuit& circuit, const DetectConfig& config) {
    const ir::LayeredCircuit layered = ir::layers(circuit);
    auto hit = find_inverse_subcircuit(circuit, layered, config.unc.min_gates,
                                       config.invert_angle_tol);
    if (!hit) return {};

    InstrRange a = instr_range(layered, hit->first);
    InstrRange b = instr_range(layered, hit->second);

    if (config.unc.require_entangled && circuit.n_qubits <= config.max_sim_qubits) {
        // State before the inverse region, simulated over the unitary prefix.
        StateVector state = StateVector::zero_state(circuit.n_qubits);
        for (int idx = 0; idx < b.first; ++idx) {
            const Instruction& ins = circuit.instructions[idx];
            if (ins.kind == InstrKind::Barrier) continue;
            if (!ins.is_unitary()) break;
            state = sim::apply(state, ins);
        }
        if (!state_entangled_fast(state)) return {};
    }

    UncPayload payload;
    payload.layers_a = hit->first;
    payload.layers_b = hit->second;
    if (config.unc.detect_copy_swap && detect_copy_swap_stages(circuit, layered, hit->second)) {
        payload.copy_stage = true;
        payload.swap_stage = true;
    }

    PatternMatch m;
    m.kind = PatternKind::UNC;
    m.span_start = a.first;
    m.span_end = b.last;
    std::set<int> qs;
    for (int l = hit->first[0]; l <= hit->first[1]; ++l)
        for (int idx : layered.layers[static_cast<std::size_t>(l)])
            for (int q : circuit.instructions[idx].qubits) qs.insert(q);
    for (int l = hit->second[0]; l <= hit->second[1]; ++l)
        for (int idx : layered.layers[static_cast<std::size_t>(l)])
            for (int q : circuit.instructions[idx].qubits) qs.insert(q);
    m.qubits.assign(qs.begin(), qs.end());
    m.payload = payload;
    return {std::move(m)};
}

std::vector<PatternMatch> detect_post_selective_measurement(const Circuit& circuit) {
    std::vector<PatternMatch> matches;
    // measure index -> (register, guards seen later)
    struct Entry {
        int measure_index;
        std::string creg;
        int measure_qubit;
        std::vector<PsmGuard> guards;
        std::set<int> qubits;
    };
    std::vector<Entry> entries;

    for (int idx = 0; idx < circuit.instruction_count(); ++idx) {
        const Instruction& ins = circuit.instructions[idx];
        if (ins.kind == InstrKind::Measure) {
            for (const ir::RegisterInfo& reg : circuit.cregs) {
                if (!reg.contains(ins.cbit)) continue;
                entries.push_back({idx, reg.name, ins.qubits[0], {}, {ins.qubits[0]}});
                break;
            }
        }
        if (ins.guard) {
            for (Entry& e : entries) {
                if (e.creg != ins.guard->creg) continue;
                e.guards.push_back({idx, ins.guard->value});
                for (int q : ins.qubits) e.qubits.insert(q);
            }
        }
    }

    for (Entry& e : entries) {
        if (e.guards.empty()) continue;
        PatternMatch m;
        m.kind = PatternKind::PSM;
        m.span_start = e.measure_index;
        m.span_end = e.guards.back().index;
        m.qubits.assign(e.qubits.begin(), e.qubits.end());
        m.payload = PsmPayload{e.measure_index, e.creg, std::move(e.guards)};
        matches.push_back(std::move(m));
    }
    return matches;
}

DetectionReport detect_all(const Circuit& circuit, const DetectConfig& config,
                           const std::string& circuit_id) {
    DetectionReport report;
    report.circuit_id = circuit_id;

    const bool want_us = config.wants(PatternKind::US);
    const bool want_ce = config.wants(PatternKind::CE);
    if (want_us || want_ce) {
        if (circuit.n_qubits > config.max_sim_qubits) {
            std::string reason = "circuit width " + std::to_string(circuit.n_qubits) +
                                 " exceeds simulation cap of " +
                                 std::to_string(config.max_sim_qubits) + " qubits";
            if (want_us) report.skipped.push_back({"US", reason});
            if (want_ce) report.skipped.push_back({"CE", reason});
        } else {
            const StateTrace tr = sim::trace(circuit, config.max_sim_qubits);
            if (want_us) {
                auto ms = detect_uniform_superposition(circuit, tr, config.us_amp_tol);
                report.matches.insert(report.matches.end(), ms.begin(), ms.end());
                report.ran.push_back("US");
            }
            if (want_ce) {
                auto ms = detect_creating_entanglement(circuit, tr, config.ce_mode);
                report.matches.insert(report.matches.end(), ms.begin(), ms.end());
                report.ran.push_back("CE");
            }
        }
    }

    auto append = [&](PatternKind kind, std::vector<PatternMatch> ms) {
        report.matches.insert(report.matches.end(), ms.begin(), ms.end());
        report.ran.push_back(to_string(kind));
    };
    if (config.wants(PatternKind::BE)) append(PatternKind::BE, detect_basis_encoding(circuit));
    if (config.wants(PatternKind::AE))
        append(PatternKind::AE, detect_angle_encoding(circuit, config.ae_min_angle));
    if (config.wants(PatternKind::AMP))
        append(PatternKind::AMP, detect_amplitude_encoding(circuit));
    if (config.wants(PatternKind::QPE)) append(PatternKind::QPE, detect_qpe(circuit, config));
    if (config.wants(PatternKind::UNC)) append(PatternKind::UNC, detect_uncompute(circuit, config));
    if (config.wants(PatternKind::PSM))
        append(PatternKind::PSM, detect_post_selective_measurement(circuit));

    std::sort(report.matches.begin(), report.matches.end(),
              [](const PatternMatch& a, const PatternMatch& b) {
                  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
                  if (a.span_start != b.span_start) return a.span_start < b.span_start;
                  if (a.span_end != b.span_end) return a.span_end < b.span_end;
                  return a.qubits < b.qubits;
              });
    return report;
}

std::vector<PatternMatch> run_single_detector(const Circuit& circuit, PatternKind kind,
                                              const DetectConfig& config) {
    switch (kind) {
        case PatternKind::US: {
            const StateTrace tr = sim::trace(circuit, config.max_sim_qubits);
            return detect_uniform_superposition(circuit, tr, config.us_amp_tol);
        }
        case PatternKind::CE: {
            const StateTrace tr = sim::trace(circuit, config.max_sim_qubits);
            return detect_creating_entanglement(circuit, tr, config.ce_mode);
        }
        case PatternKind::BE: return detect_basis_encoding(circuit);
        case PatternKind::AE: return detect_angle_encoding(circuit, config.ae_min_angle);
        case PatternKind::AMP: return detect_amplitude_encoding(circuit);
        case PatternKind::QPE: return detect_qpe(circuit, config);
        case PatternKind::UNC: return detect_uncompute(circuit, config);
        case PatternKind::PSM: return detect_post_selective_measurement(circuit);
    }
    return {};
}

}  // namespace qpd::detect
