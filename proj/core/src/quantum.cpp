#include "bellsim/quantum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bellsim {

namespace {

void check_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument(std::string(what) + ": non-finite value");
    }
}

constexpr double kPi = std::numbers::pi;

}  // namespace

Hamiltonian::Hamiltonian(double e_plus, double e_minus)
    : e_plus_(e_plus), e_minus_(e_minus) {
    check_finite(e_plus, "Hamiltonian");
    check_finite(e_minus, "Hamiltonian");
    if (delta_e() == 0.0) {
        throw std::invalid_argument("Hamiltonian: degenerate spectrum (delta_e = 0)");
    }
}

TimeSettings::TimeSettings(double t, double t_prime, double u, double u_prime)
    : t_(t), t_prime_(t_prime), u_(u), u_prime_(u_prime) {
    check_finite(t, "TimeSettings");
    check_finite(t_prime, "TimeSettings");
    check_finite(u, "TimeSettings");
    check_finite(u_prime, "TimeSettings");
    if (t_ == t_prime_ || u_ == u_prime_) {
        throw std::invalid_argument("TimeSettings: times within a wing must differ");
    }
}

double TimeSettings::wing1(int setting) const {
    if (setting != 0 && setting != 1) {
        throw std::invalid_argument("TimeSettings::wing1: setting must be 0 or 1");
    }
    return setting == 0 ? t_ : t_prime_;
}

double TimeSettings::wing2(int setting) const {
    if (setting != 0 && setting != 1) {
        throw std::invalid_argument("TimeSettings::wing2: setting must be 0 or 1");
    }
    return setting == 0 ? u_ : u_prime_;
}

GeneralizedPauli::GeneralizedPauli(double phi) : phi_(phi) {
    check_finite(phi, "GeneralizedPauli");
}

ComplexMatrix GeneralizedPauli::matrix() const { return sigma_phi(phi_); }

StateVector GeneralizedPauli::eigenvector_plus() const {
    const double r = 1.0 / std::sqrt(2.0);
    return StateVector({Complex{r, 0.0}, r * std::polar(1.0, phi_)});
}

StateVector GeneralizedPauli::eigenvector_minus() const {
    const double r = 1.0 / std::sqrt(2.0);
    return StateVector({Complex{r, 0.0}, -r * std::polar(1.0, phi_)});
}

ComplexMatrix sigma_phi(double phi) {
    check_finite(phi, "sigma_phi");
    return ComplexMatrix(2, {Complex{0.0, 0.0}, std::polar(1.0, -phi),
                             std::polar(1.0, phi), Complex{0.0, 0.0}});
}

ComplexMatrix evolution(const Hamiltonian& h, double t) {
    check_finite(t, "evolution");
    return ComplexMatrix(2, {std::polar(1.0, h.e_plus() * t), Complex{0.0, 0.0},
                             Complex{0.0, 0.0}, std::polar(1.0, h.e_minus() * t)});
}

ComplexMatrix sigma_at_time(const Hamiltonian& h, double t) {
    const ComplexMatrix u = evolution(h, t);
    return u * sigma_phi(0.0) * adjoint(u);
}

ComplexMatrix u_delta_alpha(double delta) {
    check_finite(delta, "u_delta_alpha");
    return ComplexMatrix(2, {std::polar(1.0, delta), Complex{0.0, 0.0},
                             Complex{0.0, 0.0}, Complex{1.0, 0.0}});
}

StateVector singlet() {
    const double r = 1.0 / std::sqrt(2.0);
    return StateVector({Complex{0.0, 0.0}, Complex{r, 0.0}, Complex{-r, 0.0},
                        Complex{0.0, 0.0}});
}

StateVector evolved_state(const Hamiltonian& h, double m, double n) {
    return tensor(evolution(h, m), evolution(h, n)) * singlet();
}

double correlation_analytic(const Hamiltonian& h, double m, double n) {
    check_finite(m, "correlation_analytic");
    check_finite(n, "correlation_analytic");
    return std::cos(h.delta_e() * (n - m));
}

double correlation_simulated(const Hamiltonian& h, double m, double n) {
    const ComplexMatrix observable = tensor(sigma_phi(0.0), sigma_phi(0.0));
    return expectation(evolved_state(h, m, n), observable);
}

double correlation_g(const Hamiltonian& h, double t, double g1, double g2) {
    check_finite(t, "correlation_g");
    check_finite(g1, "correlation_g");
    check_finite(g2, "correlation_g");
    // e^{i(gH)t} = e^{iH(gt)}, so wing-wise scaled couplings reduce to
    // wing-wise evolution times.
    return correlation_simulated(h, g1 * t, g2 * t);
}

ComplexMatrix chsh_operator(const Hamiltonian& h, const TimeSettings& s) {
    const ComplexMatrix s_t = sigma_at_time(h, s.t());
    const ComplexMatrix s_tp = sigma_at_time(h, s.t_prime());
    const ComplexMatrix s_u = sigma_at_time(h, s.u());
    const ComplexMatrix s_up = sigma_at_time(h, s.u_prime());
    return tensor(s_t, s_u) - tensor(s_t, s_up) + tensor(s_tp, s_u) +
           tensor(s_tp, s_up);
}

double chsh_value(const Hamiltonian& h, const TimeSettings& s) {
    const double by_operator = expectation(singlet(), chsh_operator(h, s));
    const double by_correlations =
        correlation_simulated(h, s.t(), s.u()) -
        correlation_simulated(h, s.t(), s.u_prime()) +
        correlation_simulated(h, s.t_prime(), s.u()) +
        correlation_simulated(h, s.t_prime(), s.u_prime());
    if (std::abs(by_operator - by_correlations) >= 1e-12) {
        throw std::logic_error("chsh_value: operator and correlation routes disagree");
    }
    return by_operator;
}

TimeSettings optimal_settings(const Hamiltonian& h, double t0) {
    check_finite(t0, "optimal_settings");
    const double de = h.delta_e();
    return TimeSettings(t0 / de, (t0 + kPi / 2.0) / de, (t0 + kPi / 4.0) / de,
                        (t0 + 3.0 * kPi / 4.0) / de);
}

}  // namespace bellsim
