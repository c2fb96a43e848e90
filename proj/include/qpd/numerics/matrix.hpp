#pragma once

#include <complex>
#include <vector>

namespace qpd::num {

using cplx = std::complex<double>;

/// Dense row-major complex matrix.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<cplx> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

    cplx& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    const cplx& at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    Matrix multiply(const Matrix& other) const;
    Matrix adjoint() const;
    double max_abs_diff(const Matrix& other) const;
};

}  // namespace qpd::num
