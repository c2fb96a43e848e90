#pragma once

#include <string>

#include "qpd/detect/patterns.hpp"

namespace qpd::detect {

/// Stable machine-readable form:
/// {circuit, matches:[{kind, span:[start,end], qubits:[...], payload}],
///  skipped:[{detector, reason}]}
std::string report_to_json(const DetectionReport& report, int indent = 2);

/// One line per match, human-oriented.
std::string report_to_text(const DetectionReport& report);

}  // namespace qpd::detect
