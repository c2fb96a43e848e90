#include <cmath>
#include <stdexcept>

#include "qpd/sim/state_engine.hpp"

namespace qpd::sim {

using num::cplx;
using num::Matrix;

namespace {

Matrix mat2(cplx a, cplx b, cplx c, cplx d) {
    Matrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

Matrix u_matrix(double theta, double phi, double lambda) {
    const double ct = std::cos(theta / 2.0);
    const double st = std::sin(theta / 2.0);
    const cplx i{0.0, 1.0};
    return mat2(ct, -std::exp(i * lambda) * st, std::exp(i * phi) * st,
                std::exp(i * (phi + lambda)) * ct);
}

// Controlled extension of a single-qubit gate. Local bit 0 is the control
// (operand 0), local bit 1 the target.
Matrix controlled(const Matrix& u, int n_controls) {
    const int n = n_controls + 1;
    const int dim = 1 << n;
    const int control_mask = (1 << n_controls) - 1;
    Matrix m(dim, dim);
    for (int in = 0; in < dim; ++in) {
        if ((in & control_mask) != control_mask) {
            m.at(in, in) = 1.0;
            continue;
        }
        int target_bit = (in >> n_controls) & 1;
        for (int out_bit = 0; out_bit < 2; ++out_bit) {
            cplx v = u.at(out_bit, target_bit);
            if (v == cplx{}) continue;
            int out = (in & control_mask) | (out_bit << n_controls);
            m.at(out, in) = v;
        }
    }
    return m;
}

}  // namespace

Matrix gate_matrix(const std::string& name, const std::vector<double>& params) {
    const cplx i{0.0, 1.0};
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    if (name == "u") return u_matrix(params[0], params[1], params[2]);
    if (name == "id") return Matrix::identity(2);
    if (name == "x") return mat2(0, 1, 1, 0);
    if (name == "y") return mat2(0, -i, i, 0);
    if (name == "z") return mat2(1, 0, 0, -1);
    if (name == "h") return mat2(inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2);
    if (name == "s") return mat2(1, 0, 0, i);
    if (name == "sdg") return mat2(1, 0, 0, -i);
    if (name == "t") return mat2(1, 0, 0, std::exp(i * (M_PI / 4.0)));
    if (name == "tdg") return mat2(1, 0, 0, std::exp(-i * (M_PI / 4.0)));
    if (name == "rx") {
        double c = std::cos(params[0] / 2.0), s = std::sin(params[0] / 2.0);
        return mat2(c, -i * s, -i * s, c);
    }
    if (name == "ry") {
        double c = std::cos(params[0] / 2.0), s = std::sin(params[0] / 2.0);
        return mat2(c, -s, s, c);
    }
    if (name == "rz") {
        return mat2(std::exp(-i * (params[0] / 2.0)), 0, 0, std::exp(i * (params[0] / 2.0)));
    }
    if (name == "cx") return controlled(mat2(0, 1, 1, 0), 1);
    if (name == "cy") return controlled(mat2(0, -i, i, 0), 1);
    if (name == "cz") return controlled(mat2(1, 0, 0, -1), 1);
    if (name == "ch") return controlled(mat2(inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2), 1);
    if (name == "cp") return controlled(mat2(1, 0, 0, std::exp(i * params[0])), 1);
    if (name == "crz")
        return controlled(
            mat2(std::exp(-i * (params[0] / 2.0)), 0, 0, std::exp(i * (params[0] / 2.0))), 1);
    if (name == "cu3") return controlled(u_matrix(params[0], params[1], params[2]), 1);
    if (name == "ccx") return controlled(mat2(0, 1, 1, 0), 2);
    if (name == "swap") {
        Matrix m(4, 4);
        m.at(0, 0) = 1.0;
        m.at(2, 1) = 1.0;
        m.at(1, 2) = 1.0;
        m.at(3, 3) = 1.0;
        return m;
    }
    throw std::invalid_argument("gate_matrix: unknown gate '" + name + "'");
}

}  // namespace qpd::sim
