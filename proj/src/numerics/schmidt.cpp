#include "qpd/numerics/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qpd/numerics/svd.hpp"

namespace qpd::num {

StateVector StateVector::zero_state(int n_qubits) {
    StateVector s;
    s.n_qubits = n_qubits;
    s.amps.assign(std::size_t{1} << n_qubits, cplx{});
    s.amps[0] = 1.0;
    return s;
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const cplx& a : amps) sum += std::norm(a);
    return std::sqrt(sum);
}

namespace {

std::vector<int> sorted_checked_subset(const StateVector& state, const std::vector<int>& subset_a) {
    std::vector<int> a = subset_a;
    std::sort(a.begin(), a.end());
    if (a.empty() || static_cast<int>(a.size()) >= state.n_qubits)
        throw std::invalid_argument("bipartition subset must be a proper nonempty subset");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || a[i] >= state.n_qubits)
            throw std::invalid_argument("bipartition subset qubit out of range");
        if (i > 0 && a[i] == a[i - 1])
            throw std::invalid_argument("bipartition subset has duplicate qubit");
    }
    return a;
}

}  // namespace

Matrix bipartition_matrix(const StateVector& state, const std::vector<int>& subset_a) {
    std::vector<int> a = sorted_checked_subset(state, subset_a);
    std::vector<int> b;
    b.reserve(state.n_qubits - a.size());
    for (int q = 0; q < state.n_qubits; ++q)
        if (!std::binary_search(a.begin(), a.end(), q)) b.push_back(q);

    Matrix m(1 << static_cast<int>(a.size()), 1 << static_cast<int>(b.size()));
    const std::size_t dim = state.dim();
    for (std::size_t idx = 0; idx < dim; ++idx) {
        int row = 0, col = 0;
        for (std::size_t i = 0; i < a.size(); ++i) row |= static_cast<int>((idx >> a[i]) & 1u) << i;
        for (std::size_t i = 0; i < b.size(); ++i) col |= static_cast<int>((idx >> b[i]) & 1u) << i;
        m.at(row, col) = state.amps[idx];
    }
    return m;
}

SchmidtDecomposition schmidt(const StateVector& state, const std::vector<int>& subset_a) {
    std::vector<int> a = sorted_checked_subset(state, subset_a);
    SchmidtDecomposition out;
    out.subset_a = a;
    out.coefficients = singular_values(bipartition_matrix(state, a));
    double largest = out.coefficients.empty() ? 0.0 : out.coefficients.front();
    double threshold = std::max(1e-10 * largest, 1e-12);
    for (double v : out.coefficients)
        if (v > threshold) ++out.rank;
    return out;
}

double purity(const StateVector& state, const std::vector<int>& subset_a) {
    Matrix m = bipartition_matrix(state, subset_a);
    // Tr(rho_A^2) with rho_A = M M^dagger, so the trace is the squared
    // Frobenius norm of M M^dagger.
    double total = 0.0;
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.rows; ++j) {
            cplx entry{};
            for (int k = 0; k < m.cols; ++k) entry += m.at(i, k) * std::conj(m.at(j, k));
            total += std::norm(entry);
        }
    }
    return total;
}

}  // namespace qpd::num
