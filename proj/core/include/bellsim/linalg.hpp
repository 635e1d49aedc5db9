// Dense complex linear algebra at dimensions 2 and 4: states, operators,
// tensor products, expectation values, and the structural predicates
// (Hermitian, unitary) the rest of the toolkit relies on.

#pragma once

#include <complex>
#include <vector>

namespace bellsim {

using Complex = std::complex<double>;

// Tolerance for structural predicates (Hermitian, unitary, normalized).
inline constexpr double kStructuralTol = 1e-12;
// Tolerance on the imaginary residue of expectation values.
inline constexpr double kResidueTol = 1e-10;

/// Normalized-or-not complex vector of dimension 2 or 4. Immutable.
class StateVector {
public:
    explicit StateVector(std::vector<Complex> amplitudes);

    /// e_i in the given dimension.
    static StateVector basis(int dim, int index);

    int dim() const { return static_cast<int>(amps_.size()); }
    const Complex& operator[](int i) const;

    double squared_norm() const;
    bool is_normalized(double tol = kStructuralTol) const;

private:
    std::vector<Complex> amps_;
};

/// Row-major complex matrix of dimension 2 or 4. Entries are validated
/// finite at construction; instances are immutable.
class ComplexMatrix {
public:
    ComplexMatrix(int dim, std::vector<Complex> entries);

    static ComplexMatrix zero(int dim);
    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }
    const Complex& operator()(int row, int col) const;

    bool is_hermitian(double tol = kStructuralTol) const;
    bool is_unitary(double tol = kStructuralTol) const;
    Complex trace() const;

private:
    int dim_;
    std::vector<Complex> entries_;

    friend ComplexMatrix operator+(const ComplexMatrix&, const ComplexMatrix&);
    friend ComplexMatrix operator-(const ComplexMatrix&, const ComplexMatrix&);
    friend ComplexMatrix operator*(const ComplexMatrix&, const ComplexMatrix&);
    friend ComplexMatrix operator*(const Complex&, const ComplexMatrix&);
    friend StateVector operator*(const ComplexMatrix&, const StateVector&);
    friend ComplexMatrix adjoint(const ComplexMatrix&);
    friend ComplexMatrix tensor(const ComplexMatrix&, const ComplexMatrix&);
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const Complex& c, const ComplexMatrix& m);
StateVector operator*(const ComplexMatrix& m, const StateVector& v);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);

/// Kronecker product of two 2x2 operators; (i,j)x(k,l) -> (2i+k, 2j+l).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product of two dimension-2 states.
StateVector tensor(const StateVector& a, const StateVector& b);

/// <bra|ket>, conjugate-linear in the first argument.
Complex inner_product(const StateVector& bra, const StateVector& ket);

/// <psi|M|psi> for Hermitian M and normalized psi. The imaginary residue
/// of the raw inner product must stay below kResidueTol; it is discarded
/// after the check.
double expectation(const StateVector& state, const ComplexMatrix& op);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Phase-insensitive state comparison: | |<a|b>| - 1 | < tol.
bool equal_up_to_phase(const StateVector& a, const StateVector& b,
                       double tol = kStructuralTol);

}  // namespace bellsim
