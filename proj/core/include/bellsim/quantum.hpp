// Two-level quantum machinery: Hamiltonians, time evolution, generalized
// Pauli operators, the singlet state, correlation functions, the CHSH
// operator, and the optimal measurement times.

#pragma once

#include "bellsim/linalg.hpp"

namespace bellsim {

// Sign relating the realized correlation to cos(dE*(n-m)). The concrete
// antisymmetric singlet in the energy eigenbasis gives -cos; only the
// magnitude carries physics (bound 2, maximum 2*sqrt(2)). The grid tests
// re-derive this constant and assert it is the same at every point.
inline constexpr double kCorrelationSign = -1.0;

/// Nondegenerate two-level Hamiltonian, hbar = 1. Energies are inverse
/// times; the gap delta_e = e_minus - e_plus may be negative but not zero.
class Hamiltonian {
public:
    Hamiltonian(double e_plus, double e_minus);

    double e_plus() const { return e_plus_; }
    double e_minus() const { return e_minus_; }
    double delta_e() const { return e_minus_ - e_plus_; }

private:
    double e_plus_;
    double e_minus_;
};

/// The four measurement times: wing 1 measures at t or t_prime, wing 2 at
/// u or u_prime. Within a wing the two times must differ.
class TimeSettings {
public:
    TimeSettings(double t, double t_prime, double u, double u_prime);

    double t() const { return t_; }
    double t_prime() const { return t_prime_; }
    double u() const { return u_; }
    double u_prime() const { return u_prime_; }

    /// Time on wing 1 (wing 2) selected by index 0 or 1.
    double wing1(int setting) const;
    double wing2(int setting) const;

private:
    double t_, t_prime_, u_, u_prime_;
};

/// Unitary, self-adjoint, traceless operator on C^2, parameterized by one
/// angle phi; the second Bloch angle is frozen on the equator, so the
/// matrix is cos(phi) X + sin(phi) Y in the energy eigenbasis.
class GeneralizedPauli {
public:
    explicit GeneralizedPauli(double phi);

    double phi() const { return phi_; }
    ComplexMatrix matrix() const;

    /// Eigenvectors (|+> +- e^{i phi} |->)/sqrt(2) with eigenvalues +-1.
    StateVector eigenvector_plus() const;
    StateVector eigenvector_minus() const;

private:
    double phi_;
};

/// cos(phi) X + sin(phi) Y = [[0, e^{-i phi}], [e^{i phi}, 0]].
ComplexMatrix sigma_phi(double phi);

/// e^{iHt} = diag(e^{i e_plus t}, e^{i e_minus t}).
ComplexMatrix evolution(const Hamiltonian& h, double t);

/// e^{iHt} sigma_phi(0) e^{-iHt}; closed form sigma_phi(delta_e * t).
ComplexMatrix sigma_at_time(const Hamiltonian& h, double t);

/// diag(e^{i delta}, 1). In this representation conjugation retards the
/// angle: u_delta_alpha(d) * sigma_phi(a) * u_delta_alpha(d)^dag equals
/// sigma_phi(a - d), so mapping sigma_phi(a) to sigma_phi(a') uses
/// d = a - a'.
ComplexMatrix u_delta_alpha(double delta);

/// Antisymmetric two-system state (|+-> - |-+>)/sqrt(2), amplitudes
/// (0, c, -c, 0) with |c| = 1/sqrt(2).
StateVector singlet();

/// (e^{iHm} (x) e^{iHn}) |singlet>.
StateVector evolved_state(const Hamiltonian& h, double m, double n);

/// Reference formula cos(delta_e * (n - m)).
double correlation_analytic(const Hamiltonian& h, double m, double n);

/// <S(m,n)| sigma_0 (x) sigma_0 |S(m,n)>; equals
/// kCorrelationSign * correlation_analytic within 1e-12.
double correlation_simulated(const Hamiltonian& h, double m, double n);

/// Both wings evolve for the same time t, wing 1 under g1*H and wing 2
/// under g2*H; equals kCorrelationSign * cos(delta_e * t * (g2 - g1)).
double correlation_g(const Hamiltonian& h, double t, double g1, double g2);

/// sigma_t (x) sigma_u - sigma_t (x) sigma_u' + sigma_t' (x) sigma_u
/// + sigma_t' (x) sigma_u'. Hermitian; operator norm at most 2*sqrt(2).
ComplexMatrix chsh_operator(const Hamiltonian& h, const TimeSettings& s);

/// The four-term CHSH value on the singlet. Computed both as the
/// expectation of chsh_operator and as the signed sum of four
/// correlations; the two routes must agree within 1e-12.
double chsh_value(const Hamiltonian& h, const TimeSettings& s);

/// Times t = t0/dE, t' = (t0 + pi/2)/dE, u = (t0 + pi/4)/dE,
/// u' = (t0 + 3pi/4)/dE; t0 is a free phase offset. At these settings
/// |chsh_value| = 2*sqrt(2).
TimeSettings optimal_settings(const Hamiltonian& h, double t0);

}  // namespace bellsim
