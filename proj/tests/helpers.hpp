#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qpd/ir/circuit.hpp"
#include "qpd/numerics/matrix.hpp"
#include "qpd/numerics/schmidt.hpp"

namespace test_helpers {

using qpd::num::cplx;
using qpd::num::Matrix;
using qpd::num::StateVector;

// Independent oracle for singular values: Hermitian Jacobi eigenvalue
// iteration on the Gram matrix M^H M, square roots of the eigenvalues.
// Deliberately a different algorithm and code path from the library SVD.
inline std::vector<double> gram_singular_values(const Matrix& m) {
    Matrix g = m.adjoint().multiply(m);
    const int n = g.rows;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(g.at(p, q)));
        if (off < 1e-15) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                cplx b = g.at(p, q);
                if (std::abs(b) < 1e-18) continue;
                double phi = std::arg(b);
                double theta = 0.5 * std::atan2(2.0 * std::abs(b),
                                                g.at(q, q).real() - g.at(p, p).real());
                double c = std::cos(theta), s = std::sin(theta);
                cplx eip = std::exp(cplx(0.0, phi));
                // J[p][p]=c, J[p][q]=s, J[q][p]=-s*conj(eip), J[q][q]=c*conj(eip)
                for (int i = 0; i < n; ++i) {
                    cplx gp = g.at(i, p), gq = g.at(i, q);
                    g.at(i, p) = gp * c - gq * (s * std::conj(eip));
                    g.at(i, q) = gp * s + gq * (c * std::conj(eip));
                }
                for (int j = 0; j < n; ++j) {
                    cplx gp = g.at(p, j), gq = g.at(q, j);
                    g.at(p, j) = c * gp - (s * eip) * gq;
                    g.at(q, j) = s * gp + (c * eip) * gq;
                }
            }
        }
    }
    std::vector<double> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) values[i] = std::sqrt(std::max(0.0, g.at(i, i).real()));
    std::sort(values.begin(), values.end(), std::greater<double>());
    return values;
}

// Brute-force purity: build the reduced density matrix entry by entry from
// |psi><psi| and sum |entries|^2. Independent of bipartition_matrix.
inline double brute_force_purity(const StateVector& state, const std::vector<int>& subset_a) {
    std::vector<int> a = subset_a;
    std::sort(a.begin(), a.end());
    std::vector<int> b;
    for (int q = 0; q < state.n_qubits; ++q)
        if (!std::binary_search(a.begin(), a.end(), q)) b.push_back(q);
    const int da = 1 << static_cast<int>(a.size());
    const int db = 1 << static_cast<int>(b.size());
    auto global_index = [&](int ai, int bi) {
        std::size_t idx = 0;
        for (std::size_t k = 0; k < a.size(); ++k)
            if ((ai >> k) & 1) idx |= std::size_t{1} << a[k];
        for (std::size_t k = 0; k < b.size(); ++k)
            if ((bi >> k) & 1) idx |= std::size_t{1} << b[k];
        return idx;
    };
    double total = 0.0;
    for (int r = 0; r < da; ++r)
        for (int c = 0; c < da; ++c) {
            cplx rho_rc{};
            for (int bi = 0; bi < db; ++bi)
                rho_rc += state.amps[global_index(r, bi)] *
                          std::conj(state.amps[global_index(c, bi)]);
            total += std::norm(rho_rc);
        }
    return total;
}

inline StateVector random_state(int n_qubits, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    StateVector s;
    s.n_qubits = n_qubits;
    s.amps.resize(std::size_t{1} << n_qubits);
    for (auto& a : s.amps) a = cplx(gauss(rng), gauss(rng));
    double nrm = s.norm();
    for (auto& a : s.amps) a /= nrm;
    return s;
}

inline StateVector random_product_state(int n_qubits, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    StateVector s;
    s.n_qubits = n_qubits;
    s.amps.assign(std::size_t{1} << n_qubits, cplx{1.0, 0.0});
    for (int q = 0; q < n_qubits; ++q) {
        cplx a0(gauss(rng), gauss(rng)), a1(gauss(rng), gauss(rng));
        double nrm = std::sqrt(std::norm(a0) + std::norm(a1));
        a0 /= nrm;
        a1 /= nrm;
        for (std::size_t idx = 0; idx < s.amps.size(); ++idx)
            s.amps[idx] *= ((idx >> q) & 1u) ? a1 : a0;
    }
    return s;
}

// Embeds a k-qubit gate matrix into the full 2^n space (operand j of
// `positions` is local bit j). Test-local alternative to the engine's
// gather/scatter application.
inline Matrix embed_gate(const Matrix& u, const std::vector<int>& positions, int n_qubits) {
    const int dim = 1 << n_qubits;
    const int k = static_cast<int>(positions.size());
    const int sub = 1 << k;
    Matrix out(dim, dim);
    for (int col = 0; col < dim; ++col) {
        int local_in = 0;
        for (int j = 0; j < k; ++j) local_in |= ((col >> positions[j]) & 1) << j;
        int rest = col;
        for (int j = 0; j < k; ++j) rest &= ~(1 << positions[j]);
        for (int local_out = 0; local_out < sub; ++local_out) {
            cplx v = u.at(local_out, local_in);
            if (v == cplx{}) continue;
            int row = rest;
            for (int j = 0; j < k; ++j)
                if ((local_out >> j) & 1) row |= 1 << positions[j];
            out.at(row, col) += v;
        }
    }
    return out;
}

inline double max_identity_distance(const Matrix& m) {
    double worst = 0.0;
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            worst = std::max(worst, std::abs(m.at(r, c) - (r == c ? cplx{1.0} : cplx{})));
    return worst;
}

inline bool instructions_equivalent(const qpd::ir::Instruction& a, const qpd::ir::Instruction& b,
                                    double tol) {
    if (a.kind != b.kind || a.gate != b.gate || a.qubits != b.qubits || a.cbit != b.cbit ||
        a.guard != b.guard || a.params.size() != b.params.size())
        return false;
    for (std::size_t i = 0; i < a.params.size(); ++i)
        if (std::abs(a.params[i] - b.params[i]) > tol) return false;
    return true;
}

inline bool circuits_equivalent(const qpd::ir::Circuit& a, const qpd::ir::Circuit& b,
                                double tol = 1e-12) {
    if (a.n_qubits != b.n_qubits || a.instructions.size() != b.instructions.size()) return false;
    for (std::size_t i = 0; i < a.instructions.size(); ++i)
        if (!instructions_equivalent(a.instructions[i], b.instructions[i], tol)) return false;
    return true;
}

}  // namespace test_helpers
