#pragma once

#include <optional>
#include <set>
#include <utility>

#include "qpd/detect/patterns.hpp"
#include "qpd/ir/circuit.hpp"
#include "qpd/ir/layers.hpp"
#include "qpd/sim/state_engine.hpp"

namespace qpd::detect {

enum class CeMode { Faithful, Fast };

struct UncOptions {
    int min_gates = 2;
    bool require_entangled = false;
    bool detect_copy_swap = false;
};

struct DetectConfig {
    int max_sim_qubits = sim::kDefaultMaxSimQubits;
    CeMode ce_mode = CeMode::Faithful;
    UncOptions unc;
    bool qpe_verify = false;

    // Tunable thresholds with their documented defaults.
    double qpe_angle_tol = 1e-6;    // controlled-phase angle matching
    double us_amp_tol = 1e-8;       // |alpha| distance from 1/sqrt(2)
    double invert_angle_tol = 1e-9; // inverse-subcircuit parameter matching
    double ae_min_angle = 1e-9;     // smallest angle that counts as data

    /// When set, detect_all runs only these detectors.
    std::optional<std::set<PatternKind>> only;

    bool wants(PatternKind kind) const { return !only || only->count(kind) > 0; }
};

/// Creating Entanglement. Faithful mode checks every bipartition of the
/// system per state (canonical halves containing qubit 0, break on the
/// first entangled one); fast mode checks only qubit-vs-rest bipartitions.
/// Both agree on pure states. A match is emitted at every instruction where
/// the entangled flag flips from false to true.
std::vector<PatternMatch> detect_creating_entanglement(const ir::Circuit& circuit,
                                                       const sim::StateTrace& trace,
                                                       CeMode mode = CeMode::Faithful);

/// Uniform Superposition. A qubit joins the uniform set when it is
/// unentangled from the rest and its reduced amplitudes have magnitude
/// 1/sqrt(2) within amp_tol (phases ignored). One match per qubit at its
/// first entry; a register-level match fires when all qubits of a declared
/// register are uniform simultaneously.
std::vector<PatternMatch> detect_uniform_superposition(const ir::Circuit& circuit,
                                                       const sim::StateTrace& trace,
                                                       double amp_tol = 1e-8);

std::vector<PatternMatch> detect_basis_encoding(const ir::Circuit& circuit);

std::vector<PatternMatch> detect_angle_encoding(const ir::Circuit& circuit,
                                                double min_angle = 1e-9);

std::vector<PatternMatch> detect_amplitude_encoding(const ir::Circuit& circuit);

std::vector<PatternMatch> detect_qpe(const ir::Circuit& circuit, const DetectConfig& config = {});

/// Alg-style scan over subcircuit sizes 1..depth/2: finds the first pair of
/// equal-size layer ranges (a gap is allowed) whose gate content is the
/// structural inverse of each other, both containing at least min_gates
/// gates. Returns inclusive layer ranges (a_first, a_last), (b_first,
/// b_last), or nullopt.
std::optional<std::pair<std::array<int, 2>, std::array<int, 2>>> find_inverse_subcircuit(
    const ir::Circuit& circuit, const ir::LayeredCircuit& layered, int min_gates = 2,
    double angle_tol = 1e-9);

std::vector<PatternMatch> detect_uncompute(const ir::Circuit& circuit,
                                           const DetectConfig& config = {});

std::vector<PatternMatch> detect_post_selective_measurement(const ir::Circuit& circuit);

/// Runs every selected detector, honoring the width cap for state-based
/// ones. Matches are reported in deterministic (kind, span) order.
DetectionReport detect_all(const ir::Circuit& circuit, const DetectConfig& config = {},
                           const std::string& circuit_id = "");

/// One detector by kind, including any simulation it needs. Used by the
/// scaling harness so timings cover the full analysis. Throws
/// sim::CapacityError when a state-based detector exceeds the cap.
std::vector<PatternMatch> run_single_detector(const ir::Circuit& circuit, PatternKind kind,
                                              const DetectConfig& config = {});

}  // namespace qpd::detect
