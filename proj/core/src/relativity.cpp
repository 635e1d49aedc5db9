#include "bellsim/relativity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace bellsim::rel {

namespace {

constexpr double kSimultaneityGuard = 1e-12;

void check_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + ": non-finite value");
    }
}

bool coincident(const Event& e1, const Event& e2) {
    return e1.t == e2.t && e1.x == e2.x;
}

}  // namespace

Event::Event(double t_, double x_, std::string label_)
    : t(t_), x(x_), label(std::move(label_)) {
    check_finite(t, "Event");
    check_finite(x, "Event");
}

Boost::Boost(double v) : v_(v) {
    check_finite(v, "Boost");
    if (std::abs(v) >= 1.0) {
        throw std::invalid_argument("Boost: |v| must be < 1");
    }
}

double Boost::gamma() const { return 1.0 / std::sqrt(1.0 - v_ * v_); }

std::string to_string(IntervalClass c) {
    switch (c) {
        case IntervalClass::Timelike: return "timelike";
        case IntervalClass::Spacelike: return "spacelike";
        case IntervalClass::Lightlike: return "lightlike";
    }
    throw std::logic_error("to_string: bad IntervalClass");
}

Event boost(const Event& e, const Boost& b) {
    const double g = b.gamma();
    return Event(g * (e.t - b.v() * e.x), g * (e.x - b.v() * e.t), e.label);
}

Boost compose(const Boost& first, const Boost& second) {
    return Boost((first.v() + second.v()) / (1.0 + first.v() * second.v()));
}

double interval(const Event& e1, const Event& e2) {
    const double dt = e2.t - e1.t;
    const double dx = e2.x - e1.x;
    return dt * dt - dx * dx;
}

IntervalClass classify(const Event& e1, const Event& e2) {
    const double dt = e2.t - e1.t;
    const double dx = e2.x - e1.x;
    const double inv = dt * dt - dx * dx;
    const double band = 1e-9 * std::max({dt * dt, dx * dx, 1.0});
    if (std::abs(inv) <= band) return IntervalClass::Lightlike;
    return inv > 0.0 ? IntervalClass::Timelike : IntervalClass::Spacelike;
}

std::optional<double> critical_velocity(const Event& e1, const Event& e2) {
    if (coincident(e1, e2)) {
        throw std::invalid_argument("critical_velocity: coincident events");
    }
    if (classify(e1, e2) != IntervalClass::Spacelike) return std::nullopt;
    return (e2.t - e1.t) / (e2.x - e1.x);
}

namespace {

// Ordering of the three frame times at velocity v; nullopt when two of
// them fall within the simultaneity guard.
std::optional<std::array<int, 3>> ordering_at(const std::array<Event, 3>& events,
                                              double v) {
    const Boost b(v);
    std::array<std::pair<double, int>, 3> times;
    for (int i = 0; i < 3; ++i) times[i] = {boost(events[i], b).t, i};
    std::sort(times.begin(), times.end());
    if (times[1].first - times[0].first < kSimultaneityGuard ||
        times[2].first - times[1].first < kSimultaneityGuard) {
        return std::nullopt;
    }
    return std::array<int, 3>{times[0].second, times[1].second, times[2].second};
}

}  // namespace

std::vector<OrderingWitness> achievable_orderings(const std::array<Event, 3>& events) {
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (coincident(events[i], events[j])) {
                throw std::invalid_argument("achievable_orderings: coincident events");
            }
        }
    }

    std::vector<double> cuts{-1.0, 1.0};
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const auto v = critical_velocity(events[i], events[j]);
            if (v && std::abs(*v) < 1.0) cuts.push_back(*v);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<OrderingWitness> result;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i];
        const double hi = cuts[i + 1];
        // Probe the interval midpoint; step toward the ends if the probe
        // lands on a near-simultaneity.
        std::optional<std::array<int, 3>> order;
        double probe = 0.5 * (lo + hi);
        for (const double f : {0.5, 0.25, 0.75, 0.1, 0.9}) {
            probe = lo + f * (hi - lo);
            order = ordering_at(events, probe);
            if (order) break;
        }
        if (!order) continue;
        const bool seen = std::any_of(result.begin(), result.end(),
                                      [&](const OrderingWitness& w) {
                                          return w.order == *order;
                                      });
        if (!seen) result.push_back(OrderingWitness{*order, probe});
    }

    std::sort(result.begin(), result.end(),
              [](const OrderingWitness& a, const OrderingWitness& b) {
                  return a.order < b.order;
              });
    return result;
}

}  // namespace bellsim::rel
