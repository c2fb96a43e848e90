#include "qpd/cli/run.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qpd/bench/metrics.hpp"
#include "qpd/bench/random_circuit.hpp"
#include "qpd/bench/scaling.hpp"
#include "qpd/detect/report.hpp"
#include "qpd/ir/serialize.hpp"
#include "qpd/qasm/elaborate.hpp"

namespace qpd::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

int env_max_sim_qubits() {
    if (const char* env = std::getenv("QPD_MAX_SIM_QUBITS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return sim::kDefaultMaxSimQubits;
}

std::set<detect::PatternKind> parse_kinds(const std::vector<std::string>& names) {
    std::set<detect::PatternKind> kinds;
    for (const std::string& name : names) {
        auto kind = detect::pattern_from_string(name);
        if (!kind) throw CLI::ValidationError("--patterns", "unknown pattern kind '" + name + "'");
        kinds.insert(*kind);
    }
    return kinds;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qpd - quantum design pattern detection for OpenQASM 2.0 circuits"};
    app.require_subcommand(1);

    // detect
    std::string detect_file;
    std::vector<std::string> detect_patterns;
    std::string detect_format = "text";
    std::string ce_mode = "faithful";
    int max_sim_qubits = env_max_sim_qubits();
    int unc_min_gates = 2;
    bool unc_require_entangled = false;
    bool unc_copy_swap = false;
    bool qpe_verify = false;
    auto* cmd_detect = app.add_subcommand("detect", "detect patterns in a QASM file");
    cmd_detect->add_option("file", detect_file, "input .qasm file")->required();
    cmd_detect->add_option("--patterns", detect_patterns, "comma-separated pattern kinds")
        ->delimiter(',');
    cmd_detect->add_option("--format", detect_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_detect->add_option("--ce-mode", ce_mode, "entanglement detector mode")
        ->check(CLI::IsMember({"faithful", "fast"}));
    cmd_detect->add_option("--max-sim-qubits", max_sim_qubits, "width cap for state-based detectors");
    cmd_detect->add_option("--unc-min-gates", unc_min_gates, "minimum gates per inverse range");
    cmd_detect->add_flag("--unc-require-entangled", unc_require_entangled,
                         "keep inverse-subcircuit hits only after an entangled state");
    cmd_detect->add_flag("--unc-copy-swap", unc_copy_swap, "also look for copy/swap stages");
    cmd_detect->add_flag("--qpe-verify", qpe_verify,
                         "verify the inverse-QFT block unitary (<= 8 counting qubits)");

    // bench
    std::string bench_corpus, bench_truth, bench_out;
    auto* cmd_bench = app.add_subcommand("bench", "evaluate detectors against a labeled corpus");
    cmd_bench->add_option("--corpus", bench_corpus, "corpus directory")->required();
    cmd_bench->add_option("--truth", bench_truth, "ground truth JSON file")->required();
    cmd_bench->add_option("--out", bench_out, "write the JSON report here");

    // scale
    std::string scale_mode;
    int scale_fixed = 0;
    std::vector<int> scale_sizes;
    int scale_repeats = 20;
    std::vector<std::string> scale_detectors;
    std::uint64_t scale_seed = 1;
    std::string scale_out;
    auto* cmd_scale = app.add_subcommand("scale", "runtime scaling on random circuits");
    cmd_scale->add_option("--mode", scale_mode, "width or depth")
        ->required()
        ->check(CLI::IsMember({"width", "depth"}));
    cmd_scale->add_option("--fixed", scale_fixed, "the fixed dimension")->required();
    cmd_scale->add_option("--sizes", scale_sizes, "sizes for the varying dimension")
        ->required()
        ->delimiter(',');
    cmd_scale->add_option("--repeats", scale_repeats, "measurements per point");
    cmd_scale->add_option("--detectors", scale_detectors, "pattern kinds to time")
        ->required()
        ->delimiter(',');
    cmd_scale->add_option("--seed", scale_seed, "random circuit seed");
    cmd_scale->add_option("--out", scale_out, "CSV output file")->required();
    cmd_scale->add_option("--max-sim-qubits", max_sim_qubits, "width cap for state-based detectors");

    // random
    int random_qubits = 0, random_depth = 0;
    std::uint64_t random_seed = 0;
    std::string random_out;
    auto* cmd_random = app.add_subcommand("random", "generate a seeded random circuit");
    cmd_random->add_option("--qubits", random_qubits, "circuit width")->required();
    cmd_random->add_option("--depth", random_depth, "circuit depth")->required();
    cmd_random->add_option("--seed", random_seed, "generator seed")->required();
    cmd_random->add_option("--out", random_out, "output .qasm file")->required();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    detect::DetectConfig config;
    config.max_sim_qubits = max_sim_qubits;
    config.ce_mode = ce_mode == "fast" ? detect::CeMode::Fast : detect::CeMode::Faithful;
    config.unc.min_gates = unc_min_gates;
    config.unc.require_entangled = unc_require_entangled;
    config.unc.detect_copy_swap = unc_copy_swap;
    config.qpe_verify = qpe_verify;

    try {
        if (cmd_detect->parsed()) {
            if (!detect_patterns.empty()) config.only = parse_kinds(detect_patterns);
            ir::Circuit circuit = qasm::compile(read_file(detect_file));
            detect::DetectionReport report = detect::detect_all(circuit, config, detect_file);
            if (detect_format == "json")
                out << detect::report_to_json(report) << "\n";
            else
                out << detect::report_to_text(report);
            return 0;
        }
        if (cmd_bench->parsed()) {
            auto truth = bench::load_ground_truth(bench_truth);
            bench::MetricsReport report = bench::evaluate(bench_corpus, truth, config);
            out << report.to_text();
            if (!bench_out.empty())
                write_file(bench_out, report.to_json() + "\n");
            else
                out << report.to_json() << "\n";
            return 0;
        }
        if (cmd_scale->parsed()) {
            std::vector<detect::PatternKind> kinds;
            for (const std::string& name : scale_detectors) {
                auto kind = detect::pattern_from_string(name);
                if (!kind) {
                    err << "unknown detector '" << name << "'\n";
                    return 1;
                }
                kinds.push_back(*kind);
            }
            auto mode = scale_mode == "width" ? bench::ScalingMode::Width : bench::ScalingMode::Depth;
            auto rows =
                bench::measure_scaling(mode, scale_fixed, scale_sizes, scale_repeats, kinds,
                                       scale_seed, config);
            std::string csv = bench::scaling_to_csv(rows);
            write_file(scale_out, csv);
            out << csv;
            return 0;
        }
        if (cmd_random->parsed()) {
            ir::Circuit circuit = bench::random_circuit(random_qubits, random_depth, random_seed);
            write_file(random_out, ir::to_qasm(circuit));
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

}  // namespace qpd::cli
