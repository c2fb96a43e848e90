#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace qpd::detect {

enum class PatternKind { US, CE, BE, AE, AMP, QPE, UNC, PSM };

constexpr std::array<PatternKind, 8> kAllPatterns = {
    PatternKind::US, PatternKind::CE,  PatternKind::BE,  PatternKind::AE,
    PatternKind::AMP, PatternKind::QPE, PatternKind::UNC, PatternKind::PSM};

std::string to_string(PatternKind kind);
std::optional<PatternKind> pattern_from_string(const std::string& name);

struct UsPayload {
    bool register_level = false;
    std::string reg;  // register-level matches
    int qubit = -1;   // qubit-level matches

    friend bool operator==(const UsPayload&, const UsPayload&) = default;
};

struct BePayload {
    std::string reg;
    std::string bits;  // most significant register index first

    friend bool operator==(const BePayload&, const BePayload&) = default;
};

struct AePayload {
    std::string reg;
    std::vector<double> angles;  // one per register qubit, index order

    friend bool operator==(const AePayload&, const AePayload&) = default;
};

struct AmpBlock {
    int target = -1;
    int first = -1;  // instruction span of the multiplexed-rotation run
    int last = -1;
    int rotations = 0;

    friend bool operator==(const AmpBlock&, const AmpBlock&) = default;
};

struct AmpPayload {
    std::string reg;
    std::vector<AmpBlock> blocks;

    friend bool operator==(const AmpPayload&, const AmpPayload&) = default;
};

struct QpePayload {
    std::vector<int> counting;
    std::vector<int> targets;
    std::array<int, 2> superposition_span{-1, -1};
    std::array<int, 2> controlled_span{-1, -1};
    std::array<int, 2> inverse_qft_span{-1, -1};
    bool verified = false;  // set when unitary verification ran and passed

    friend bool operator==(const QpePayload&, const QpePayload&) = default;
};

struct UncPayload {
    std::array<int, 2> layers_a{-1, -1};  // inclusive layer ranges
    std::array<int, 2> layers_b{-1, -1};
    bool copy_stage = false;
    bool swap_stage = false;

    friend bool operator==(const UncPayload&, const UncPayload&) = default;
};

struct PsmGuard {
    int index = -1;
    std::uint64_t value = 0;

    friend bool operator==(const PsmGuard&, const PsmGuard&) = default;
};

struct PsmPayload {
    int measure_index = -1;
    std::string creg;
    std::vector<PsmGuard> guards;

    friend bool operator==(const PsmPayload&, const PsmPayload&) = default;
};

using Payload = std::variant<std::monostate, UsPayload, BePayload, AePayload, AmpPayload,
                             QpePayload, UncPayload, PsmPayload>;

struct PatternMatch {
    PatternKind kind = PatternKind::US;
    int span_start = 0;  // instruction indices, inclusive
    int span_end = 0;
    std::vector<int> qubits;  // sorted
    Payload payload;

    friend bool operator==(const PatternMatch&, const PatternMatch&) = default;
};

struct SkippedDetector {
    std::string detector;
    std::string reason;
};

struct DetectionReport {
    std::string circuit_id;
    std::vector<PatternMatch> matches;
    std::vector<SkippedDetector> skipped;
    std::vector<std::string> ran;
};

}  // namespace qpd::detect
