#include "bellsim/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bellsim {

namespace {

void check_dim(int dim, const char* what) {
    if (dim != 2 && dim != 4) {
        throw std::invalid_argument(std::string(what) +
                                    ": dimension must be 2 or 4, got " +
                                    std::to_string(dim));
    }
}

void check_finite(const std::vector<Complex>& values, const char* what) {
    for (const Complex& z : values) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument(std::string(what) +
                                        ": non-finite entry");
        }
    }
}

}  // namespace

StateVector::StateVector(std::vector<Complex> amplitudes)
    : amps_(std::move(amplitudes)) {
    check_dim(static_cast<int>(amps_.size()), "StateVector");
    check_finite(amps_, "StateVector");
}

StateVector StateVector::basis(int dim, int index) {
    check_dim(dim, "StateVector::basis");
    if (index < 0 || index >= dim) {
        throw std::invalid_argument("StateVector::basis: index out of range");
    }
    std::vector<Complex> amps(dim, Complex{0.0, 0.0});
    amps[index] = Complex{1.0, 0.0};
    return StateVector(std::move(amps));
}

const Complex& StateVector::operator[](int i) const {
    if (i < 0 || i >= dim()) {
        throw std::out_of_range("StateVector: index out of range");
    }
    return amps_[i];
}

double StateVector::squared_norm() const {
    double s = 0.0;
    for (const Complex& a : amps_) s += std::norm(a);
    return s;
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(squared_norm() - 1.0) < tol;
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    check_dim(dim_, "ComplexMatrix");
    if (entries_.size() != static_cast<std::size_t>(dim_) * dim_) {
        throw std::invalid_argument("ComplexMatrix: entry count does not match dimension");
    }
    check_finite(entries_, "ComplexMatrix");
}

ComplexMatrix ComplexMatrix::zero(int dim) {
    check_dim(dim, "ComplexMatrix::zero");
    return ComplexMatrix(dim, std::vector<Complex>(static_cast<std::size_t>(dim) * dim));
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m = zero(dim);
    for (int i = 0; i < dim; ++i) m.entries_[i * dim + i] = Complex{1.0, 0.0};
    return m;
}

const Complex& ComplexMatrix::operator()(int row, int col) const {
    if (row < 0 || row >= dim_ || col < 0 || col >= dim_) {
        throw std::out_of_range("ComplexMatrix: index out of range");
    }
    return entries_[row * dim_ + col];
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            if (std::abs(entries_[i * dim_ + j] - std::conj(entries_[j * dim_ + i])) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
    const ComplexMatrix product = *this * adjoint(*this);
    return max_abs_diff(product, identity(dim_)) < tol;
}

Complex ComplexMatrix::trace() const {
    Complex t{0.0, 0.0};
    for (int i = 0; i < dim_; ++i) t += entries_[i * dim_ + i];
    return t;
}

namespace {

void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
    }
}

}  // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b, "operator+");
    std::vector<Complex> out(a.entries_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.entries_[i] + b.entries_[i];
    return ComplexMatrix(a.dim_, std::move(out));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b, "operator-");
    std::vector<Complex> out(a.entries_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.entries_[i] - b.entries_[i];
    return ComplexMatrix(a.dim_, std::move(out));
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b, "operator*");
    const int d = a.dim_;
    std::vector<Complex> out(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            Complex s{0.0, 0.0};
            for (int k = 0; k < d; ++k) {
                s += a.entries_[i * d + k] * b.entries_[k * d + j];
            }
            out[i * d + j] = s;
        }
    }
    return ComplexMatrix(d, std::move(out));
}

ComplexMatrix operator*(const Complex& c, const ComplexMatrix& m) {
    std::vector<Complex> out(m.entries_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * m.entries_[i];
    return ComplexMatrix(m.dim_, std::move(out));
}

StateVector operator*(const ComplexMatrix& m, const StateVector& v) {
    if (m.dim() != v.dim()) {
        throw std::invalid_argument("matvec: dimension mismatch");
    }
    const int d = m.dim_;
    std::vector<Complex> out(d, Complex{0.0, 0.0});
    for (int i = 0; i < d; ++i) {
        Complex s{0.0, 0.0};
        for (int j = 0; j < d; ++j) s += m.entries_[i * d + j] * v[j];
        out[i] = s;
    }
    return StateVector(std::move(out));
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    const int d = m.dim_;
    std::vector<Complex> out(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            out[j * d + i] = std::conj(m.entries_[i * d + j]);
        }
    }
    return ComplexMatrix(d, std::move(out));
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != 2 || b.dim() != 2) {
        throw std::invalid_argument("tensor: operands must both have dimension 2");
    }
    std::vector<Complex> out(16);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) {
                    out[(2 * i + k) * 4 + (2 * j + l)] =
                        a.entries_[i * 2 + j] * b.entries_[k * 2 + l];
                }
            }
        }
    }
    return ComplexMatrix(4, std::move(out));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    if (a.dim() != 2 || b.dim() != 2) {
        throw std::invalid_argument("tensor: states must both have dimension 2");
    }
    std::vector<Complex> out(4);
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) out[2 * i + k] = a[i] * b[k];
    }
    return StateVector(std::move(out));
}

Complex inner_product(const StateVector& bra, const StateVector& ket) {
    if (bra.dim() != ket.dim()) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    Complex s{0.0, 0.0};
    for (int i = 0; i < bra.dim(); ++i) s += std::conj(bra[i]) * ket[i];
    return s;
}

double expectation(const StateVector& state, const ComplexMatrix& op) {
    if (state.dim() != op.dim()) {
        throw std::invalid_argument("expectation: dimension mismatch");
    }
    if (!op.is_hermitian()) {
        throw std::invalid_argument("expectation: operator is not Hermitian");
    }
    if (!state.is_normalized()) {
        throw std::invalid_argument("expectation: state is not normalized");
    }
    const Complex raw = inner_product(state, op * state);
    if (std::abs(raw.imag()) >= kResidueTol) {
        throw std::logic_error("expectation: imaginary residue exceeds tolerance");
    }
    return raw.real();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b, "max_abs_diff");
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
        }
    }
    return m;
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
    return std::abs(std::abs(inner_product(a, b)) - 1.0) < tol;
}

}  // namespace bellsim
