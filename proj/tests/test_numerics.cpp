#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "qpd/numerics/schmidt.hpp"
#include "qpd/numerics/svd.hpp"

using namespace qpd;
using num::cplx;
using num::Matrix;
using num::StateVector;
using test_helpers::brute_force_purity;
using test_helpers::gram_singular_values;
using test_helpers::random_product_state;
using test_helpers::random_state;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

StateVector bell_state() {
    StateVector s;
    s.n_qubits = 2;
    s.amps = {kInvSqrt2, 0.0, 0.0, kInvSqrt2};
    return s;
}

StateVector ghz3() {
    StateVector s;
    s.n_qubits = 3;
    s.amps.assign(8, cplx{});
    s.amps[0] = kInvSqrt2;
    s.amps[7] = kInvSqrt2;
    return s;
}

Matrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m(rows, cols);
    for (auto& v : m.data) v = cplx(gauss(rng), gauss(rng));
    return m;
}

}  // namespace

TEST_CASE("singular values of the identity") {
    std::vector<double> sv = num::singular_values(Matrix::identity(2));
    REQUIRE(sv.size() == 2);
    CHECK(sv[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sv[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Bell reshape has two equal coefficients") {
    Matrix m(2, 2);
    m.at(0, 0) = kInvSqrt2;
    m.at(1, 1) = kInvSqrt2;
    std::vector<double> sv = num::singular_values(m);
    CHECK(std::abs(sv[0] - kInvSqrt2) < 1e-12);
    CHECK(std::abs(sv[1] - kInvSqrt2) < 1e-12);
}

TEST_CASE("random matrices agree with the Gram-eigenvalue oracle") {
    std::mt19937_64 rng(20240);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix m = random_matrix(4, 4, rng);
        std::vector<double> fast = num::singular_values(m);
        std::vector<double> oracle = gram_singular_values(m);
        REQUIRE(fast.size() == oracle.size());
        for (std::size_t i = 0; i < fast.size(); ++i)
            CHECK(std::abs(fast[i] - oracle[i]) < 1e-9);
    }
    // rectangular shapes, both orientations
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = random_matrix(trial % 2 ? 2 : 8, trial % 2 ? 8 : 2, rng);
        std::vector<double> fast = num::singular_values(m);
        std::vector<double> oracle = gram_singular_values(m);
        for (std::size_t i = 0; i < std::min(fast.size(), oracle.size()); ++i)
            CHECK(std::abs(fast[i] - oracle[i]) < 1e-9);
    }
}

TEST_CASE("singular values reject non-finite entries") {
    Matrix m(2, 2);
    m.at(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(num::singular_values(m), std::invalid_argument);
}

TEST_CASE("schmidt of a product basis state") {
    StateVector s = StateVector::zero_state(2);
    num::SchmidtDecomposition d = num::schmidt(s, {0});
    CHECK(d.rank == 1);
    CHECK(d.coefficients[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("schmidt of the Bell state has rank 2") {
    num::SchmidtDecomposition d = num::schmidt(bell_state(), {0});
    CHECK(d.rank == 2);
    CHECK(std::abs(d.coefficients[0] - kInvSqrt2) < 1e-10);
    CHECK(std::abs(d.coefficients[1] - kInvSqrt2) < 1e-10);
}

TEST_CASE("uniform unentangled two-qubit state has rank 1") {
    StateVector s;
    s.n_qubits = 2;
    s.amps = {kInvSqrt2, kInvSqrt2, 0.0, 0.0};
    CHECK(num::schmidt(s, {0}).rank == 1);
    CHECK(num::schmidt(s, {1}).rank == 1);
    CHECK(num::schmidt(s, {0}).coefficients[0] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("schmidt rejects empty and full subsets") {
    StateVector s = bell_state();
    CHECK_THROWS_AS(num::schmidt(s, {}), std::invalid_argument);
    CHECK_THROWS_AS(num::schmidt(s, {0, 1}), std::invalid_argument);
}

TEST_CASE("purity matches the brute-force reduced density matrix") {
    SUBCASE("product state") {
        std::mt19937_64 rng(7);
        StateVector s = random_product_state(3, rng);
        for (int q = 0; q < 3; ++q) CHECK(num::purity(s, {q}) == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("Bell state") {
        CHECK(num::purity(bell_state(), {0}) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(brute_force_purity(bell_state(), {0}) == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("GHZ-3") {
        CHECK(num::purity(ghz3(), {0}) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(brute_force_purity(ghz3(), {0}) == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("random states, both routes agree") {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 40; ++trial) {
            StateVector s = random_state(2 + trial % 3, rng);
            for (int q = 0; q < s.n_qubits; ++q)
                CHECK(num::purity(s, {q}) ==
                      doctest::Approx(brute_force_purity(s, {q})).epsilon(1e-10));
        }
    }
}

TEST_CASE("schmidt invariants over random states") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + trial % 3;
        StateVector s = random_state(n, rng);
        for (int q = 0; q < n; ++q) {
            num::SchmidtDecomposition d = num::schmidt(s, {q});
            double sumsq = 0.0;
            for (double c : d.coefficients) sumsq += c * c;
            CHECK(std::abs(sumsq - 1.0) < 1e-9);
            for (std::size_t i = 1; i < d.coefficients.size(); ++i)
                CHECK(d.coefficients[i] <= d.coefficients[i - 1] + 1e-15);
            CHECK(d.rank >= 1);

            // rank of the complement matches
            std::vector<int> rest;
            for (int r = 0; r < n; ++r)
                if (r != q) rest.push_back(r);
            CHECK(num::schmidt(s, rest).rank == d.rank);
        }
    }
}

TEST_CASE("rank verdicts agree with the purity oracle") {
    std::mt19937_64 rng(2024);
    int disagreements = 0;
    int states = 0;
    for (int trial = 0; trial < 520; ++trial) {
        int n = 2 + trial % 3;
        StateVector s = trial % 5 == 4 ? random_product_state(n, rng) : random_state(n, rng);
        ++states;
        for (int q = 0; q < n; ++q) {
            bool rank_says = num::schmidt(s, {q}).rank > 1;
            bool purity_says = num::purity(s, {q}) < 1.0 - 1e-7;
            if (rank_says != purity_says) ++disagreements;
        }
    }
    CHECK(states >= 500);
    CHECK(disagreements == 0);
}

TEST_CASE("schmidt is invariant under relabeling inside the subset") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        StateVector s = random_state(4, rng);
        num::SchmidtDecomposition a = num::schmidt(s, {0, 2});
        num::SchmidtDecomposition b = num::schmidt(s, {2, 0});
        REQUIRE(a.coefficients.size() == b.coefficients.size());
        for (std::size_t i = 0; i < a.coefficients.size(); ++i)
            CHECK(std::abs(a.coefficients[i] - b.coefficients[i]) < 1e-10);
    }
}
