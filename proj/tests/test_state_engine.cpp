#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "qpd/bench/random_circuit.hpp"
#include "qpd/ir/invert.hpp"
#include "qpd/qasm/elaborate.hpp"
#include "qpd/sim/state_engine.hpp"

using namespace qpd;
using num::cplx;
using num::StateVector;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

ir::Instruction gate(const std::string& name, std::vector<int> qubits,
                     std::vector<double> params = {}) {
    ir::Instruction ins;
    ins.kind = ir::InstrKind::Gate;
    ins.gate = name;
    ins.qubits = std::move(qubits);
    ins.params = std::move(params);
    return ins;
}

}  // namespace

TEST_CASE("h takes |0> to the uniform superposition") {
    StateVector s = sim::apply(StateVector::zero_state(1), gate("h", {0}));
    CHECK(std::abs(s.amps[0] - kInvSqrt2) < 1e-12);
    CHECK(std::abs(s.amps[1] - kInvSqrt2) < 1e-12);
}

TEST_CASE("x flips |0> to |1>") {
    StateVector s = sim::apply(StateVector::zero_state(1), gate("x", {0}));
    CHECK(std::abs(s.amps[0]) < 1e-15);
    CHECK(std::abs(s.amps[1] - 1.0) < 1e-15);
}

TEST_CASE("cx entangles the uniform control") {
    StateVector s;
    s.n_qubits = 2;
    s.amps = {kInvSqrt2, kInvSqrt2, 0.0, 0.0};  // (|00> + |01>)/sqrt(2), q0 superposed
    StateVector out = sim::apply(s, gate("cx", {0, 1}));
    CHECK(std::abs(out.amps[0] - kInvSqrt2) < 1e-12);
    CHECK(std::abs(out.amps[3] - kInvSqrt2) < 1e-12);
    CHECK(std::abs(out.amps[1]) < 1e-15);
    CHECK(std::abs(out.amps[2]) < 1e-15);
}

TEST_CASE("apply rejects non-gate instructions") {
    ir::Instruction measure;
    measure.kind = ir::InstrKind::Measure;
    measure.qubits = {0};
    measure.cbit = 0;
    CHECK_THROWS_AS(sim::apply(StateVector::zero_state(1), measure), std::invalid_argument);

    ir::Instruction guarded = gate("x", {0});
    guarded.guard = ir::Guard{"c", 1};
    CHECK_THROWS_AS(sim::apply(StateVector::zero_state(1), guarded), std::invalid_argument);

    CHECK_THROWS_AS(sim::apply(StateVector::zero_state(1), gate("x", {3})),
                    std::invalid_argument);
}

TEST_CASE("every base gate matrix is unitary") {
    struct Case {
        const char* name;
        std::vector<double> params;
    };
    const Case cases[] = {
        {"u", {0.3, 0.7, 1.1}}, {"id", {}}, {"x", {}}, {"y", {}}, {"z", {}},
        {"h", {}},  {"s", {}},  {"sdg", {}}, {"t", {}}, {"tdg", {}},
        {"rx", {0.42}}, {"ry", {1.3}}, {"rz", {2.2}},
        {"cx", {}}, {"cz", {}}, {"cy", {}}, {"ch", {}}, {"swap", {}},
        {"cp", {0.9}}, {"crz", {0.8}}, {"cu3", {0.3, 0.2, 0.1}}, {"ccx", {}},
    };
    for (const Case& c : cases) {
        CAPTURE(c.name);
        num::Matrix u = sim::gate_matrix(c.name, c.params);
        num::Matrix prod = u.multiply(u.adjoint());
        CHECK(test_helpers::max_identity_distance(prod) <= 1e-12);
    }
}

TEST_CASE("trace records both states of the two-gate entangler") {
    ir::Circuit c = qasm::compile("OPENQASM 2.0; qreg q[2]; h q[0]; cx q[0],q[1];");
    sim::StateTrace tr = sim::trace(c);
    REQUIRE(tr.executed_count == 2);
    CHECK(!tr.terminated_by.has_value());
    CHECK(std::abs(tr.states[0].amps[0] - kInvSqrt2) < 1e-12);
    CHECK(std::abs(tr.states[0].amps[1] - kInvSqrt2) < 1e-12);
    CHECK(std::abs(tr.states[1].amps[0] - kInvSqrt2) < 1e-12);
    CHECK(std::abs(tr.states[1].amps[3] - kInvSqrt2) < 1e-12);
}

TEST_CASE("trace stops at the first measurement") {
    ir::Circuit c = qasm::compile(
        "OPENQASM 2.0; include \"qelib1.inc\"; qreg q[3]; creg c0[1]; creg c1[1];\n"
        "u3(0.3,0.2,0.1) q[0]; h q[1]; cx q[1],q[2]; barrier q; cx q[0],q[1]; h q[0];\n"
        "measure q[0] -> c0[0]; measure q[1] -> c1[0]; if(c0==1) z q[2]; if(c1==1) x q[2];");
    sim::StateTrace tr = sim::trace(c);
    REQUIRE(tr.terminated_by.has_value());
    CHECK(*tr.terminated_by == 6);  // the first measure
    CHECK(tr.executed_count == 6);  // prefix instructions, barrier included
    for (const StateVector& s : tr.states) CHECK(std::abs(s.norm() - 1.0) < 1e-10);
    // barrier repeats the previous state
    CHECK(tr.states[3].amps == tr.states[2].amps);
}

TEST_CASE("trace of an empty circuit is empty") {
    ir::Circuit c = qasm::compile("OPENQASM 2.0; qreg q[2];");
    sim::StateTrace tr = sim::trace(c);
    CHECK(tr.executed_count == 0);
    CHECK(!tr.terminated_by.has_value());
}

TEST_CASE("trace rejects circuits wider than the cap") {
    ir::Circuit c = bench::random_circuit(17, 1, 3);
    try {
        sim::trace(c, 16);
        FAIL("expected CapacityError");
    } catch (const sim::CapacityError& e) {
        CHECK(e.width() == 17);
        CHECK(e.cap() == 16);
        CHECK(std::string(e.what()).find("16") != std::string::npos);
    }
    // a raised cap admits the same circuit
    CHECK_NOTHROW(sim::trace(bench::random_circuit(17, 1, 3), 18));
}

TEST_CASE("norms stay 1 along random traces") {
    for (std::uint64_t seed = 40; seed < 48; ++seed) {
        ir::Circuit c = bench::random_circuit(4, 6, seed);
        sim::StateTrace tr = sim::trace(c);
        CHECK(tr.executed_count == c.instruction_count());
        for (const StateVector& s : tr.states) CHECK(std::abs(s.norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("a circuit followed by its inverse returns to |0...0>") {
    for (std::uint64_t seed = 100; seed < 112; ++seed) {
        int n = 3 + static_cast<int>(seed % 3);
        ir::Circuit c = bench::random_circuit(n, 4, seed);
        ir::Circuit inv = ir::invert(c);
        ir::Circuit both = c;
        both.instructions.insert(both.instructions.end(), inv.instructions.begin(),
                                 inv.instructions.end());
        sim::StateTrace tr = sim::trace(both);
        const StateVector& last = tr.states.back();
        CHECK(std::abs(last.amps[0] - 1.0) < 1e-9);
        double rest = 0.0;
        for (std::size_t i = 1; i < last.amps.size(); ++i) rest += std::norm(last.amps[i]);
        CHECK(rest < 1e-18);
    }
}
