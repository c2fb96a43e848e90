#include "qpd/numerics/svd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qpd::num {

Matrix Matrix::multiply(const Matrix& other) const {
    Matrix out(rows, other.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            cplx aik = at(i, k);
            if (aik == cplx{}) continue;
            for (int j = 0; j < other.cols; ++j) out.at(i, j) += aik * other.at(k, j);
        }
    return out;
}

Matrix Matrix::adjoint() const {
    Matrix out(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(j, i) = std::conj(at(i, j));
    return out;
}

double Matrix::max_abs_diff(const Matrix& other) const {
    double worst = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i)
        worst = std::max(worst, std::abs(data[i] - other.data[i]));
    return worst;
}

namespace {

// Column-major working copy so column updates are contiguous.
struct Columns {
    int rows;
    int cols;
    std::vector<cplx> a;

    cplx* col(int j) { return a.data() + static_cast<std::size_t>(j) * rows; }
};

}  // namespace

std::vector<double> singular_values(const Matrix& matrix) {
    for (const cplx& v : matrix.data)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("singular_values: non-finite matrix entry");

    // Work on the orientation with fewer columns; singular values are
    // invariant under transposition.
    const bool transpose = matrix.cols > matrix.rows;
    Columns w;
    w.rows = transpose ? matrix.cols : matrix.rows;
    w.cols = transpose ? matrix.rows : matrix.cols;
    w.a.resize(static_cast<std::size_t>(w.rows) * w.cols);
    for (int r = 0; r < matrix.rows; ++r)
        for (int c = 0; c < matrix.cols; ++c) {
            if (transpose)
                w.col(r)[c] = matrix.at(r, c);
            else
                w.col(c)[r] = matrix.at(r, c);
        }

    const int n = w.cols;
    const int m = w.rows;
    const double tol = 1e-14;
    const int max_sweeps = 60;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                cplx* cp = w.col(p);
                cplx* cq = w.col(q);
                double app = 0.0, aqq = 0.0;
                cplx apq{};
                for (int i = 0; i < m; ++i) {
                    app += std::norm(cp[i]);
                    aqq += std::norm(cq[i]);
                    apq += std::conj(cp[i]) * cq[i];
                }
                double off = std::abs(apq);
                if (off <= tol * std::sqrt(app * aqq) || off == 0.0) continue;
                rotated = true;

                // Phase-align column q so the coupling becomes real, then
                // apply the classic real Jacobi rotation.
                cplx phase = apq / off;
                double tau = (aqq - app) / (2.0 * off);
                double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = c * t;
                for (int i = 0; i < m; ++i) {
                    cplx qv = cq[i] * std::conj(phase);
                    cplx pv = cp[i];
                    cp[i] = c * pv - s * qv;
                    cq[i] = s * pv + c * qv;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> values(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        double sq = 0.0;
        const cplx* cj = w.col(j);
        for (int i = 0; i < m; ++i) sq += std::norm(cj[i]);
        values[static_cast<std::size_t>(j)] = std::sqrt(sq);
    }
    std::sort(values.begin(), values.end(), std::greater<double>());
    return values;
}

}  // namespace qpd::num
