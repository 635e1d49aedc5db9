#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "bellsim/linalg.hpp"
#include "test_util.hpp"

using namespace bellsim;

namespace {

const ComplexMatrix kPauliX(2, {Complex{0, 0}, Complex{1, 0}, Complex{1, 0},
                                Complex{0, 0}});
const ComplexMatrix kPauliZ(2, {Complex{1, 0}, Complex{0, 0}, Complex{0, 0},
                                Complex{-1, 0}});

}  // namespace

TEST_CASE("construction validates dimension and finiteness") {
    CHECK_THROWS_AS(StateVector({Complex{1, 0}, Complex{0, 0}, Complex{0, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ComplexMatrix(3, std::vector<Complex>(9)), std::invalid_argument);
    CHECK_THROWS_AS(ComplexMatrix(2, std::vector<Complex>(3)), std::invalid_argument);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(StateVector({Complex{nan, 0}, Complex{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(ComplexMatrix(2, {Complex{0, inf}, Complex{0, 0}, Complex{0, 0},
                                      Complex{0, 0}}),
                    std::invalid_argument);
}

TEST_CASE("tensor of identities is the identity") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(max_abs_diff(tensor(i2, i2), ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("tensor X (x) I matches the hand expansion") {
    const ComplexMatrix m = tensor(kPauliX, ComplexMatrix::identity(2));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const bool one = (i == 0 && j == 2) || (i == 1 && j == 3) ||
                             (i == 2 && j == 0) || (i == 3 && j == 1);
            CHECK(m(i, j) == (one ? Complex{1, 0} : Complex{0, 0}));
        }
    }
}

TEST_CASE("tensor is bilinear") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix a = testutil::random_matrix(rng, 2);
        const ComplexMatrix b = testutil::random_matrix(rng, 2);
        const Complex c{testutil::uniform(rng, -2, 2), testutil::uniform(rng, -2, 2)};
        CHECK(max_abs_diff(tensor(c * a, b), c * tensor(a, b)) < 1e-12);
        CHECK(max_abs_diff(tensor(a, c * b), c * tensor(a, b)) < 1e-12);
    }
}

TEST_CASE("tensor rejects non-2x2 operands") {
    const ComplexMatrix i4 = ComplexMatrix::identity(4);
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK_THROWS_AS(tensor(i4, i4), std::invalid_argument);
    CHECK_THROWS_AS(tensor(i2, i4), std::invalid_argument);
}

TEST_CASE("expectation on the identity is 1") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = trial % 2 ? 2 : 4;
        const StateVector psi = testutil::random_state(rng, dim);
        CHECK(expectation(psi, ComplexMatrix::identity(dim)) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("expectation eigenvector and superposition cases") {
    const StateVector up({Complex{1, 0}, Complex{0, 0}});
    CHECK(expectation(up, kPauliZ) == doctest::Approx(1.0).epsilon(1e-15));

    const double r = 1.0 / std::sqrt(2.0);
    const StateVector plus({Complex{r, 0}, Complex{r, 0}});
    CHECK(std::abs(expectation(plus, kPauliZ)) < 1e-15);
}

TEST_CASE("expectation rejects bad inputs") {
    const StateVector up({Complex{1, 0}, Complex{0, 0}});
    const ComplexMatrix non_hermitian(2, {Complex{0, 0}, Complex{1, 0},
                                          Complex{0, 0}, Complex{0, 0}});
    CHECK_THROWS_AS(expectation(up, non_hermitian), std::invalid_argument);

    const StateVector unnormalized({Complex{1, 0}, Complex{1, 0}});
    CHECK_THROWS_AS(expectation(unnormalized, kPauliZ), std::invalid_argument);

    const StateVector dim4 = StateVector::basis(4, 0);
    CHECK_THROWS_AS(expectation(dim4, kPauliZ), std::invalid_argument);
}

TEST_CASE("adjoint is an involution") {
    std::mt19937_64 rng(13);
    for (int dim : {2, 4}) {
        const ComplexMatrix m = testutil::random_matrix(rng, dim);
        CHECK(max_abs_diff(adjoint(adjoint(m)), m) == 0.0);
    }
}

TEST_CASE("matmul with the identity and basis-vector column extraction") {
    std::mt19937_64 rng(14);
    for (int dim : {2, 4}) {
        const ComplexMatrix m = testutil::random_matrix(rng, dim);
        CHECK(max_abs_diff(m * ComplexMatrix::identity(dim), m) == 0.0);
        for (int i = 0; i < dim; ++i) {
            const StateVector col = m * StateVector::basis(dim, i);
            for (int r = 0; r < dim; ++r) CHECK(col[r] == m(r, i));
        }
    }
}

TEST_CASE("arithmetic rejects dimension mismatches") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    const ComplexMatrix i4 = ComplexMatrix::identity(4);
    CHECK_THROWS_AS(i2 + i4, std::invalid_argument);
    CHECK_THROWS_AS(i2 * i4, std::invalid_argument);
    CHECK_THROWS_AS(i4 * StateVector::basis(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(inner_product(StateVector::basis(2, 0), StateVector::basis(4, 0)),
                    std::invalid_argument);
}

TEST_CASE("tensor of unitaries is unitary") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexMatrix a = testutil::random_unitary2(rng);
        const ComplexMatrix b = testutil::random_unitary2(rng);
        REQUIRE(a.is_unitary());
        REQUIRE(b.is_unitary());
        CHECK(tensor(a, b).is_unitary());
    }
}

TEST_CASE("expectation of Hermitian operators has small imaginary residue") {
    // The residue check lives inside expectation(); 1000 random pairs must
    // all pass it.
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 1000; ++trial) {
        const int dim = trial % 2 ? 2 : 4;
        const ComplexMatrix h = testutil::random_hermitian(rng, dim);
        const StateVector psi = testutil::random_state(rng, dim);
        CHECK_NOTHROW(expectation(psi, h));
    }
}

TEST_CASE("hermitian and unitary predicates") {
    CHECK(kPauliZ.is_hermitian());
    CHECK(kPauliZ.is_unitary());
    const ComplexMatrix skew(2, {Complex{0, 0}, Complex{0, 1}, Complex{0, 1},
                                 Complex{0, 0}});
    CHECK_FALSE(skew.is_hermitian());
    const ComplexMatrix half = Complex{0.5, 0} * ComplexMatrix::identity(2);
    CHECK_FALSE(half.is_unitary());
    CHECK(half.is_hermitian());
}

TEST_CASE("equal_up_to_phase ignores global phase only") {
    std::mt19937_64 rng(17);
    const StateVector psi = testutil::random_state(rng, 4);
    std::vector<Complex> rotated;
    for (int i = 0; i < 4; ++i) rotated.push_back(std::polar(1.0, 0.83) * psi[i]);
    CHECK(equal_up_to_phase(psi, StateVector(rotated)));
    CHECK_FALSE(equal_up_to_phase(psi, testutil::random_state(rng, 4)));
}
