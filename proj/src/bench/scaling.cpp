#include "qpd/bench/scaling.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "qpd/bench/random_circuit.hpp"

namespace qpd::bench {

std::vector<ScalingRow> measure_scaling(ScalingMode mode, int fixed, const std::vector<int>& sizes,
                                        int repeats,
                                        const std::vector<detect::PatternKind>& detectors,
                                        std::uint64_t seed, const detect::DetectConfig& config) {
    std::vector<ScalingRow> rows;
    std::uint64_t circuit_index = 0;
    for (int size : sizes) {
        const int n = mode == ScalingMode::Width ? size : fixed;
        const int m = mode == ScalingMode::Width ? fixed : size;
        const ir::Circuit circuit = random_circuit(n, m, seed + circuit_index++);

        for (detect::PatternKind kind : detectors) {
            ScalingRow row;
            row.detector = detect::to_string(kind);
            row.mode = mode;
            row.fixed = fixed;
            row.size = size;
            row.repeats = repeats;

            bool state_based = kind == detect::PatternKind::US || kind == detect::PatternKind::CE;
            if (state_based && n > config.max_sim_qubits) {
                row.skipped = true;
                row.mean_s = std::numeric_limits<double>::quiet_NaN();
                row.std_s = std::numeric_limits<double>::quiet_NaN();
                rows.push_back(std::move(row));
                continue;
            }

            std::vector<double> samples;
            samples.reserve(static_cast<std::size_t>(repeats));
            for (int r = 0; r < repeats; ++r) {
                auto start = std::chrono::steady_clock::now();
                volatile std::size_t sink =
                    detect::run_single_detector(circuit, kind, config).size();
                auto stop = std::chrono::steady_clock::now();
                (void)sink;
                samples.push_back(std::chrono::duration<double>(stop - start).count());
            }
            double mean = 0.0;
            for (double s : samples) mean += s;
            mean /= static_cast<double>(samples.size());
            double var = 0.0;
            if (samples.size() > 1) {
                for (double s : samples) var += (s - mean) * (s - mean);
                var /= static_cast<double>(samples.size() - 1);
            }
            row.mean_s = mean;
            row.std_s = std::sqrt(var);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string scaling_to_csv(const std::vector<ScalingRow>& rows) {
    std::ostringstream out;
    out << "detector,mode,fixed,size,repeats,mean_s,std_s\n";
    for (const ScalingRow& row : rows) {
        char buf[256];
        if (row.skipped) {
            std::snprintf(buf, sizeof(buf), "%s,%s,%d,%d,%d,nan,nan\n", row.detector.c_str(),
                          row.mode == ScalingMode::Width ? "width" : "depth", row.fixed, row.size,
                          row.repeats);
        } else {
            std::snprintf(buf, sizeof(buf), "%s,%s,%d,%d,%d,%.9f,%.9f\n", row.detector.c_str(),
                          row.mode == ScalingMode::Width ? "width" : "depth", row.fixed, row.size,
                          row.repeats, row.mean_s, row.std_s);
        }
        out << buf;
    }
    return out.str();
}

}  // namespace qpd::bench
