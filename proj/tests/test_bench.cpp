#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "qpd/bench/metrics.hpp"
#include "qpd/bench/random_circuit.hpp"
#include "qpd/bench/scaling.hpp"
#include "qpd/ir/layers.hpp"
#include "qpd/ir/serialize.hpp"
#include "qpd/qasm/elaborate.hpp"

using namespace qpd;
using bench::GroundTruthEntry;
using detect::PatternKind;
namespace fs = std::filesystem;

namespace {

struct TempCorpus {
    fs::path dir;

    TempCorpus() {
        dir = fs::temp_directory_path() /
              ("qpd_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(dir);
    }
    ~TempCorpus() { fs::remove_all(dir); }

    void add(const std::string& name, const std::string& contents) {
        std::ofstream out(dir / name);
        out << contents;
    }
};

}  // namespace

TEST_CASE("metrics identities hold on a hand-computed fixture") {
    TempCorpus corpus;
    corpus.add("bell.qasm", "OPENQASM 2.0; qreg q[2]; h q[0]; cx q[0],q[1];");
    corpus.add("plain_h.qasm", "OPENQASM 2.0; qreg q[2]; h q[0]; h q[1];");
    corpus.add("xonly.qasm", "OPENQASM 2.0; qreg q[2]; x q[0]; x q[1];");

    std::vector<GroundTruthEntry> truth = {
        {"bell.qasm", {PatternKind::US, PatternKind::CE}},
        // expecting AMP on a plain h circuit gives exactly one FN
        {"plain_h.qasm", {PatternKind::US, PatternKind::AMP}},
        // not expecting BE where x gates are found gives one FP
        {"xonly.qasm", {}},
    };
    bench::MetricsReport report = bench::evaluate(corpus.dir.string(), truth);

    const auto& us = report.per_pattern.at(PatternKind::US);
    CHECK(us.tp == 2);
    CHECK(us.fp == 0);
    CHECK(us.fn == 0);
    CHECK(*us.precision() == doctest::Approx(1.0));
    CHECK(*us.recall() == doctest::Approx(1.0));
    CHECK(us.f1() == doctest::Approx(1.0));

    const auto& ce = report.per_pattern.at(PatternKind::CE);
    CHECK(ce.tp == 1);

    const auto& amp = report.per_pattern.at(PatternKind::AMP);
    CHECK(amp.tp == 0);
    CHECK(amp.fn == 1);
    CHECK(!amp.precision().has_value());  // no detections at all
    CHECK(*amp.recall() == doctest::Approx(0.0));
    CHECK(amp.f1() == doctest::Approx(0.0));

    const auto& be = report.per_pattern.at(PatternKind::BE);
    CHECK(be.fp == 1);
    CHECK(*be.precision() == doctest::Approx(0.0));
    CHECK(!be.recall().has_value());

    // P = TP/(TP+FP), R = TP/(TP+FN), F1 = 2PR/(P+R) on the totals
    const auto& micro = report.micro;
    CHECK(*micro.precision() ==
          doctest::Approx(static_cast<double>(micro.tp) / (micro.tp + micro.fp)));
    CHECK(*micro.recall() ==
          doctest::Approx(static_cast<double>(micro.tp) / (micro.tp + micro.fn)));
    double p = *micro.precision(), r = *micro.recall();
    CHECK(micro.f1() == doctest::Approx(2 * p * r / (p + r)));
}

TEST_CASE("a single Bell corpus with truth {US, CE} scores two true positives") {
    TempCorpus corpus;
    corpus.add("bell.qasm", "OPENQASM 2.0; qreg q[2]; h q[0]; cx q[0],q[1];");
    bench::MetricsReport report = bench::evaluate(
        corpus.dir.string(), {{"bell.qasm", {PatternKind::US, PatternKind::CE}}});
    CHECK(report.micro.tp == 2);
    CHECK(report.micro.fp == 0);
    CHECK(report.micro.fn == 0);
}

TEST_CASE("evaluation is order independent") {
    TempCorpus corpus;
    corpus.add("a.qasm", "OPENQASM 2.0; qreg q[2]; h q[0]; cx q[0],q[1];");
    corpus.add("b.qasm", "OPENQASM 2.0; qreg q[2]; x q[0]; x q[1];");
    corpus.add("c.qasm", "OPENQASM 2.0; qreg q[3]; h q;");
    std::vector<GroundTruthEntry> truth = {
        {"a.qasm", {PatternKind::US, PatternKind::CE}},
        {"b.qasm", {PatternKind::BE}},
        {"c.qasm", {PatternKind::US}},
    };
    bench::MetricsReport forward = bench::evaluate(corpus.dir.string(), truth);
    std::reverse(truth.begin(), truth.end());
    bench::MetricsReport backward = bench::evaluate(corpus.dir.string(), truth);
    CHECK(forward.to_json() == backward.to_json());
}

TEST_CASE("unparseable corpus files are recorded and the run continues") {
    TempCorpus corpus;
    corpus.add("good.qasm", "OPENQASM 2.0; qreg q[2]; h q[0]; cx q[0],q[1];");
    corpus.add("bad.qasm", "OPENQASM 3.0; qubit[2] q;");
    bench::MetricsReport report = bench::evaluate(
        corpus.dir.string(),
        {{"good.qasm", {PatternKind::US, PatternKind::CE}}, {"bad.qasm", {PatternKind::US}}});
    CHECK(report.micro.tp == 2);
    REQUIRE(report.files.size() == 2);
    CHECK(report.files[0].file == "bad.qasm");
    CHECK(!report.files[0].error.empty());
    CHECK(report.files[1].error.empty());
}

TEST_CASE("random circuits are deterministic per seed") {
    ir::Circuit a = bench::random_circuit(3, 5, 42);
    ir::Circuit b = bench::random_circuit(3, 5, 42);
    CHECK(ir::to_qasm(a) == ir::to_qasm(b));
    ir::Circuit c = bench::random_circuit(3, 5, 43);
    CHECK(ir::to_qasm(a) != ir::to_qasm(c));
}

TEST_CASE("width-1 random circuits hold one single-qubit gate per layer") {
    ir::Circuit c = bench::random_circuit(1, 10, 7);
    CHECK(c.instruction_count() == 10);
    for (const auto& ins : c.instructions) CHECK(ins.qubits.size() == 1);
    CHECK(ir::layers(c).depth() == 10);
}

TEST_CASE("random circuits reach the requested depth and stay valid") {
    for (std::uint64_t seed = 500; seed < 540; ++seed) {
        int n = 1 + static_cast<int>(seed % 7);
        int m = 1 + static_cast<int>(seed % 9);
        ir::Circuit c = bench::random_circuit(n, m, seed);
        CHECK_NOTHROW(c.validate());
        CHECK(ir::layers(c).depth() == m);
        // serialization round-trips losslessly
        CHECK(test_helpers::circuits_equivalent(qasm::compile(ir::to_qasm(c)), c, 1e-12));
    }
}

TEST_CASE("a 1000-qubit circuit parses and layers quickly") {
    auto start = std::chrono::steady_clock::now();
    ir::Circuit c = bench::random_circuit(1000, 5, 11);
    std::string text = ir::to_qasm(c);
    ir::Circuit reparsed = qasm::compile(text);
    ir::LayeredCircuit layered = ir::layers(reparsed);
    auto stop = std::chrono::steady_clock::now();
    CHECK(layered.depth() == 5);
    CHECK(std::chrono::duration<double>(stop - start).count() < 5.0);
}

TEST_CASE("measure_scaling emits one row per detector and size") {
    auto rows = bench::measure_scaling(bench::ScalingMode::Width, 3, {1, 2, 3}, 2,
                                       {PatternKind::BE, PatternKind::PSM}, 9);
    REQUIRE(rows.size() == 6);
    for (const auto& row : rows) {
        CHECK(row.repeats == 2);
        CHECK(row.mean_s >= 0.0);
        CHECK(row.std_s >= 0.0);
        CHECK(!row.skipped);
    }
    std::string csv = bench::scaling_to_csv(rows);
    CHECK(csv.rfind("detector,mode,fixed,size,repeats,mean_s,std_s\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
}

TEST_CASE("state-based detectors above the cap yield sentinel rows") {
    detect::DetectConfig config;
    config.max_sim_qubits = 4;
    auto rows = bench::measure_scaling(bench::ScalingMode::Width, 2, {3, 8}, 1,
                                       {PatternKind::CE}, 13, config);
    REQUIRE(rows.size() == 2);
    CHECK(!rows[0].skipped);
    CHECK(rows[1].skipped);
    CHECK(std::isnan(rows[1].mean_s));
    CHECK(bench::scaling_to_csv(rows).find("nan,nan") != std::string::npos);
}
