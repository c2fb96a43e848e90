#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpd/detect/detectors.hpp"

namespace qpd::bench {

enum class ScalingMode { Width, Depth };

struct ScalingRow {
    std::string detector;
    ScalingMode mode = ScalingMode::Width;
    int fixed = 0;
    int size = 0;
    int repeats = 0;
    double mean_s = 0.0;
    double std_s = 0.0;
    bool skipped = false;  // state-based detector above the width cap
};

/// Times each requested detector on seeded random circuits: width mode
/// varies n with depth fixed, depth mode varies m with width fixed. Each
/// measurement wraps the detector call only (monotonic clock, parsing and
/// generation excluded); state-based timings include the state simulation
/// they need. Runs sequentially. A detector over the width cap yields a
/// sentinel row with NaN timings.
std::vector<ScalingRow> measure_scaling(ScalingMode mode, int fixed, const std::vector<int>& sizes,
                                        int repeats,
                                        const std::vector<detect::PatternKind>& detectors,
                                        std::uint64_t seed, const detect::DetectConfig& config = {});

/// Header: detector,mode,fixed,size,repeats,mean_s,std_s
std::string scaling_to_csv(const std::vector<ScalingRow>& rows);

}  // namespace qpd::bench
