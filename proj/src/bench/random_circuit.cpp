#include "qpd/bench/random_circuit.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qpd::bench {

namespace {

struct GateSpec {
    const char* name;
    int arity;
    int n_params;
};

constexpr GateSpec kGatePool[] = {
    {"x", 1, 0},  {"y", 1, 0},  {"z", 1, 0},    {"h", 1, 0},  {"s", 1, 0},
    {"t", 1, 0},  {"rx", 1, 1}, {"ry", 1, 1},   {"rz", 1, 1}, {"cx", 2, 0},
    {"cz", 2, 0}, {"swap", 2, 0}, {"ccx", 3, 0},
};

// Bounded draws via modulo keep the stream identical across platforms
// (std::uniform_int_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next(std::uint64_t bound) { return engine_() % bound; }

    double angle() {
        return 2.0 * M_PI * (static_cast<double>(engine_() >> 11) * 0x1.0p-53);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace

ir::Circuit random_circuit(int n_qubits, int depth, std::uint64_t seed) {
    if (n_qubits < 1 || depth < 1)
        throw std::invalid_argument("random_circuit: need n_qubits >= 1 and depth >= 1");

    Rng rng(seed);
    ir::Circuit circuit;
    circuit.n_qubits = n_qubits;
    circuit.qregs.push_back({"q", 0, n_qubits});

    for (int layer = 0; layer < depth; ++layer) {
        std::vector<int> pool(static_cast<std::size_t>(n_qubits));
        for (int q = 0; q < n_qubits; ++q) pool[static_cast<std::size_t>(q)] = q;
        while (!pool.empty()) {
            std::vector<const GateSpec*> feasible;
            for (const GateSpec& g : kGatePool)
                if (g.arity <= static_cast<int>(pool.size())) feasible.push_back(&g);
            const GateSpec& gate = *feasible[rng.next(feasible.size())];

            ir::Instruction ins;
            ins.kind = ir::InstrKind::Gate;
            ins.gate = gate.name;
            for (int k = 0; k < gate.arity; ++k) {
                std::size_t pick = rng.next(pool.size());
                ins.qubits.push_back(pool[pick]);
                pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
            }
            for (int p = 0; p < gate.n_params; ++p) ins.params.push_back(rng.angle());
            circuit.instructions.push_back(std::move(ins));
        }
    }
    circuit.validate();
    return circuit;
}

}  // namespace qpd::bench
