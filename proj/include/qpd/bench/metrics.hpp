#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qpd/detect/detectors.hpp"

namespace qpd::bench {

struct GroundTruthEntry {
    std::string file;
    std::set<detect::PatternKind> patterns;
};

/// Loads a JSON array of {"file": "...", "patterns": ["US","CE",...]}.
std::vector<GroundTruthEntry> load_ground_truth(const std::string& path);

struct KindCounts {
    int tp = 0;
    int fp = 0;
    int fn = 0;

    std::optional<double> precision() const;
    std::optional<double> recall() const;
    double f1() const;
};

struct FileResult {
    std::string file;
    std::set<detect::PatternKind> expected;
    std::set<detect::PatternKind> detected;
    std::string error;  // nonempty when the file failed to parse
};

struct MetricsReport {
    std::map<detect::PatternKind, KindCounts> per_pattern;
    std::vector<FileResult> files;  // sorted by file name
    KindCounts micro;

    std::string to_json(int indent = 2) const;
    std::string to_text() const;
};

/// Runs detect_all on every ground-truth file under corpus_dir and scores
/// presence per (circuit, pattern kind). Files that fail to parse are
/// recorded as evaluation errors and excluded from the counts.
MetricsReport evaluate(const std::string& corpus_dir, const std::vector<GroundTruthEntry>& truth,
                       const detect::DetectConfig& config = {});

}  // namespace qpd::bench
