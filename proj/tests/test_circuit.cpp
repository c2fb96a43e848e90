#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "qpd/bench/random_circuit.hpp"
#include "qpd/ir/invert.hpp"
#include "qpd/ir/layers.hpp"
#include "qpd/ir/serialize.hpp"
#include "qpd/qasm/elaborate.hpp"
#include "qpd/sim/state_engine.hpp"

using namespace qpd;
using test_helpers::circuits_equivalent;

namespace {

ir::Circuit fig2_circuit() {
    return qasm::compile("OPENQASM 2.0; qreg q[2]; h q[0]; cx q[0],q[1];");
}

}  // namespace

TEST_CASE("two-gate entangler has two time slices") {
    CHECK(ir::layers(fig2_circuit()).depth() == 2);
}

TEST_CASE("disjoint gates share a layer") {
    ir::Circuit c = qasm::compile("OPENQASM 2.0; qreg q[3]; h q[0]; h q[1]; h q[2];");
    ir::LayeredCircuit l = ir::layers(c);
    CHECK(l.depth() == 1);
    CHECK(l.layers[0].size() == 3);
}

TEST_CASE("barriers split layers without counting as gates") {
    ir::Circuit c = qasm::compile("OPENQASM 2.0; qreg q[1]; h q[0]; barrier q; h q[0];");
    ir::LayeredCircuit l = ir::layers(c);
    CHECK(l.depth() == 2);
    CHECK(l.layers[0] == std::vector<int>{0});
    CHECK(l.layers[1] == std::vector<int>{2});
}

TEST_CASE("barrier forces later instructions on disjoint qubits into later layers") {
    ir::Circuit c = qasm::compile("OPENQASM 2.0; qreg q[2]; h q[0]; barrier q; h q[1];");
    ir::LayeredCircuit l = ir::layers(c);
    REQUIRE(l.depth() == 2);
    CHECK(l.layers[1] == std::vector<int>{2});
}

TEST_CASE("subcircuit slices layers in original order") {
    ir::Circuit fig2 = fig2_circuit();
    SUBCASE("full range is structurally equal") {
        ir::Circuit full = ir::subcircuit(fig2, 0, 2);
        CHECK(circuits_equivalent(full, fig2));
    }
    SUBCASE("second slice holds only the cx") {
        ir::Circuit slice = ir::subcircuit(fig2, 1, 1);
        REQUIRE(slice.instruction_count() == 1);
        CHECK(slice.instructions[0].gate == "cx");
        CHECK(slice.n_qubits == 2);
    }
    SUBCASE("count zero gives an empty circuit") {
        CHECK(ir::subcircuit(fig2, 0, 0).instruction_count() == 0);
    }
    SUBCASE("out-of-range slices throw") {
        CHECK_THROWS_AS(ir::subcircuit(fig2, 1, 5), std::out_of_range);
        CHECK_THROWS_AS(ir::subcircuit(fig2, -1, 1), std::out_of_range);
    }
}

TEST_CASE("invert reverses order and inverts gates") {
    ir::Circuit inv = ir::invert(fig2_circuit());
    REQUIRE(inv.instruction_count() == 2);
    CHECK(inv.instructions[0].gate == "cx");
    CHECK(inv.instructions[1].gate == "h");
}

TEST_CASE("rotation inversion negates the angle") {
    ir::Circuit c = qasm::compile("OPENQASM 2.0; qreg q[1]; ry(0.3) q[0];");
    ir::Circuit inv = ir::invert(c);
    CHECK(inv.instructions[0].gate == "ry");
    CHECK(inv.instructions[0].params[0] == doctest::Approx(-0.3));
}

TEST_CASE("inverse table covers the full gate set") {
    ir::Circuit c = qasm::compile(
        "OPENQASM 2.0; include \"qelib1.inc\"; qreg q[3];\n"
        "s q[0]; t q[1]; sdg q[2]; tdg q[0]; U(0.4,0.5,0.6) q[1]; cu3(0.1,0.2,0.3) q[0],q[2];\n"
        "crz(0.7) q[0],q[1]; cp(0.8) q[1],q[2]; swap q[0],q[1]; ccx q[0],q[1],q[2]; ch q[0],q[1];");
    ir::Circuit inv = ir::invert(c);
    // composing with the inverse gives the identity
    std::vector<ir::Instruction> both = c.instructions;
    both.insert(both.end(), inv.instructions.begin(), inv.instructions.end());
    CHECK(test_helpers::max_identity_distance(sim::instructions_unitary(both, 3)) < 1e-9);
}

TEST_CASE("invert rejects measurement") {
    ir::Circuit c = qasm::compile(
        "OPENQASM 2.0; qreg q[1]; creg c[1]; h q[0]; measure q[0] -> c[0];");
    CHECK_THROWS_AS(ir::invert(c), std::invalid_argument);
}

TEST_CASE("compose with inverse yields identity on random circuits") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        ir::Circuit c = bench::random_circuit(3, 4, seed);
        ir::Circuit inv = ir::invert(c);
        std::vector<ir::Instruction> both = c.instructions;
        both.insert(both.end(), inv.instructions.begin(), inv.instructions.end());
        CHECK(test_helpers::max_identity_distance(sim::instructions_unitary(both, 3)) < 1e-9);
    }
}

TEST_CASE("first gate map reports per-qubit first instructions") {
    SUBCASE("single x") {
        ir::Circuit c = qasm::compile("OPENQASM 2.0; qreg q[3]; x q[1];");
        auto first = ir::first_gate_map(c);
        CHECK(!first[0]);
        CHECK(first[1] == 0);
        CHECK(!first[2]);
    }
    SUBCASE("two-gate entangler") {
        auto first = ir::first_gate_map(fig2_circuit());
        CHECK(first[0] == 0);
        CHECK(first[1] == 1);
    }
    SUBCASE("empty circuit") {
        ir::Circuit c = qasm::compile("OPENQASM 2.0; qreg q[2];");
        auto first = ir::first_gate_map(c);
        CHECK(!first[0]);
        CHECK(!first[1]);
    }
    SUBCASE("barriers are not first gates") {
        ir::Circuit c = qasm::compile("OPENQASM 2.0; qreg q[1]; barrier q; h q[0];");
        auto first = ir::first_gate_map(c);
        CHECK(first[0] == 1);
    }
}

TEST_CASE("layer properties hold over seeded random circuits") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        int n = 1 + static_cast<int>(seed % 6);
        int m = 1 + static_cast<int>((seed / 6) % 8);
        ir::Circuit c = bench::random_circuit(n, m, seed);
        ir::LayeredCircuit l = ir::layers(c);

        // each instruction in exactly one layer
        std::set<int> seen;
        for (const auto& layer : l.layers) {
            std::set<int> qubits;
            for (int idx : layer) {
                CHECK(seen.insert(idx).second);
                for (int q : c.instructions[idx].qubits) CHECK(qubits.insert(q).second);
            }
        }
        CHECK(static_cast<int>(seen.size()) == c.instruction_count());

        // order preserved on shared qubits
        std::vector<int> layer_of(c.instructions.size());
        for (int li = 0; li < l.depth(); ++li)
            for (int idx : l.layers[li]) layer_of[idx] = li;
        for (std::size_t i = 0; i < c.instructions.size(); ++i)
            for (std::size_t j = i + 1; j < c.instructions.size(); ++j) {
                bool share = false;
                for (int q : c.instructions[i].qubits) share = share || c.instructions[j].touches(q);
                if (share) CHECK(layer_of[i] < layer_of[j]);
            }

        CHECK(l.depth() <= c.instruction_count());
        if (n == 1) CHECK(l.depth() == c.instruction_count());
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("double inversion is the structural identity") {
    for (std::uint64_t seed = 10; seed < 30; ++seed) {
        ir::Circuit c = bench::random_circuit(4, 5, seed);
        CHECK(circuits_equivalent(ir::invert(ir::invert(c)), c, 1e-12));
    }
}
