#pragma once

#include <vector>

#include "qpd/numerics/matrix.hpp"

namespace qpd::num {

/// Pure n-qubit state. Basis convention: qubit i is bit i of the amplitude
/// index (qubit 0 least significant).
struct StateVector {
    std::vector<cplx> amps;
    int n_qubits = 0;

    static StateVector zero_state(int n_qubits);
    double norm() const;
    std::size_t dim() const { return amps.size(); }
};

struct SchmidtDecomposition {
    std::vector<double> coefficients;  // non-increasing, non-negative
    int rank = 0;                      // values above the relative threshold
    std::vector<int> subset_a;         // the bipartition's A side (sorted)
};

/// Reshapes the state across (subset_a | complement) and returns the
/// singular values. Rank counts values above
/// max(1e-10 * sigma_max, 1e-12). Subset must be a proper nonempty subset.
SchmidtDecomposition schmidt(const StateVector& state, const std::vector<int>& subset_a);

/// Tr(rho_A^2) of the reduced state on subset_a; equals 1 exactly when the
/// bipartition is unentangled. Same subset preconditions as schmidt().
double purity(const StateVector& state, const std::vector<int>& subset_a);

/// Reshape helper shared by schmidt and purity: rows indexed by subset_a
/// bits, columns by complement bits.
Matrix bipartition_matrix(const StateVector& state, const std::vector<int>& subset_a);

}  // namespace qpd::num
