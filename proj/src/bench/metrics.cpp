#include "qpd/bench/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qpd/qasm/elaborate.hpp"
#include "qpd/qasm/parser.hpp"

namespace qpd::bench {

using json = nlohmann::ordered_json;

std::vector<GroundTruthEntry> load_ground_truth(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ground truth file: " + path);
    json j = json::parse(in);
    if (!j.is_array()) throw std::runtime_error("ground truth must be a JSON array");
    std::vector<GroundTruthEntry> out;
    for (const auto& item : j) {
        GroundTruthEntry entry;
        entry.file = item.at("file").get<std::string>();
        for (const auto& p : item.at("patterns")) {
            auto kind = detect::pattern_from_string(p.get<std::string>());
            if (!kind)
                throw std::runtime_error("unknown pattern kind '" + p.get<std::string>() +
                                         "' in ground truth");
            entry.patterns.insert(*kind);
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::optional<double> KindCounts::precision() const {
    if (tp + fp == 0) return std::nullopt;
    return static_cast<double>(tp) / (tp + fp);
}

std::optional<double> KindCounts::recall() const {
    if (tp + fn == 0) return std::nullopt;
    return static_cast<double>(tp) / (tp + fn);
}

double KindCounts::f1() const {
    auto p = precision();
    auto r = recall();
    double pv = p.value_or(0.0), rv = r.value_or(0.0);
    if (pv + rv == 0.0) return 0.0;
    return 2.0 * pv * rv / (pv + rv);
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json counts_to_json(const KindCounts& c) {
    json j;
    j["tp"] = c.tp;
    j["fp"] = c.fp;
    j["fn"] = c.fn;
    if (auto p = c.precision()) j["precision"] = *p;
    if (auto r = c.recall()) j["recall"] = *r;
    j["f1"] = c.f1();
    return j;
}

std::string fmt3(std::optional<double> v) {
    if (!v) return "   -  ";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%6.4f", *v);
    return buf;
}

}  // namespace

std::string MetricsReport::to_json(int indent) const {
    json j;
    json per = json::object();
    for (const auto& [kind, counts] : per_pattern)
        per[detect::to_string(kind)] = counts_to_json(counts);
    j["per_pattern"] = std::move(per);
    json files_json = json::array();
    for (const FileResult& f : files) {
        json jf;
        jf["file"] = f.file;
        json exp = json::array(), det = json::array();
        for (auto k : f.expected) exp.push_back(detect::to_string(k));
        for (auto k : f.detected) det.push_back(detect::to_string(k));
        jf["expected"] = std::move(exp);
        jf["detected"] = std::move(det);
        if (!f.error.empty()) jf["error"] = f.error;
        files_json.push_back(std::move(jf));
    }
    j["files"] = std::move(files_json);
    j["micro"] = counts_to_json(micro);
    return j.dump(indent);
}

std::string MetricsReport::to_text() const {
    std::ostringstream out;
    out << "pattern    tp   fp   fn  precision  recall      f1\n";
    for (const auto& [kind, c] : per_pattern) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%-7s %5d %4d %4d     %s  %s  %6.4f\n",
                      detect::to_string(kind).c_str(), c.tp, c.fp, c.fn,
                      fmt3(c.precision()).c_str(), fmt3(c.recall()).c_str(), c.f1());
        out << buf;
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%-7s %5d %4d %4d     %s  %s  %6.4f\n", "micro", micro.tp,
                  micro.fp, micro.fn, fmt3(micro.precision()).c_str(), fmt3(micro.recall()).c_str(),
                  micro.f1());
    out << buf;
    for (const FileResult& f : files) {
        if (f.error.empty()) continue;
        out << "error: " << f.file << ": " << f.error << "\n";
    }
    return out.str();
}

MetricsReport evaluate(const std::string& corpus_dir, const std::vector<GroundTruthEntry>& truth,
                       const detect::DetectConfig& config) {
    MetricsReport report;
    for (detect::PatternKind kind : detect::kAllPatterns) report.per_pattern[kind];

    for (const GroundTruthEntry& entry : truth) {
        FileResult result;
        result.file = entry.file;
        result.expected = entry.patterns;
        const std::string path =
            corpus_dir.empty() ? entry.file : corpus_dir + "/" + entry.file;
        try {
            ir::Circuit circuit = qasm::compile(read_file(path));
            detect::DetectionReport det = detect::detect_all(circuit, config, entry.file);
            for (const detect::PatternMatch& m : det.matches) result.detected.insert(m.kind);
            for (detect::PatternKind kind : detect::kAllPatterns) {
                bool expected = entry.patterns.count(kind) > 0;
                bool detected = result.detected.count(kind) > 0;
                KindCounts& c = report.per_pattern[kind];
                if (expected && detected) ++c.tp;
                else if (detected) ++c.fp;
                else if (expected) ++c.fn;
            }
        } catch (const std::exception& e) {
            result.error = e.what();
        }
        report.files.push_back(std::move(result));
    }

    std::sort(report.files.begin(), report.files.end(),
              [](const FileResult& a, const FileResult& b) { return a.file < b.file; });
    for (const auto& [kind, c] : report.per_pattern) {
        report.micro.tp += c.tp;
        report.micro.fp += c.fp;
        report.micro.fn += c.fn;
    }
    return report;
}

}  // namespace qpd::bench
