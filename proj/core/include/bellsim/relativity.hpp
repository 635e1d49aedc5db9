// 1+1 Minkowski kinematics, c = 1: events, Lorentz boosts, interval
// classification, and the time-orderings of three events achievable
// across inertial frames.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace bellsim::rel {

struct Event {
    double t = 0.0;
    double x = 0.0;
    std::string label;

    Event() = default;
    Event(double t, double x, std::string label = {});
};

/// Velocity strictly inside (-1, 1).
class Boost {
public:
    explicit Boost(double v);

    double v() const { return v_; }
    double gamma() const;

private:
    double v_;
};

enum class IntervalClass { Timelike, Spacelike, Lightlike };

std::string to_string(IntervalClass c);

/// t' = gamma (t - v x), x' = gamma (x - v t); label preserved.
Event boost(const Event& e, const Boost& b);

/// Velocity addition: boost(v1) followed by boost(v2).
Boost compose(const Boost& first, const Boost& second);

/// dt^2 - dx^2 for e2 - e1.
double interval(const Event& e1, const Event& e2);

/// Sign of the invariant interval, with a relative lightlike band
/// |dt^2 - dx^2| <= 1e-9 * max(dt^2, dx^2, 1).
IntervalClass classify(const Event& e1, const Event& e2);

/// For a spacelike pair, the boost velocity dt/dx at which the pair is
/// simultaneous; the time order flips across it. Timelike and lightlike
/// pairs have frame-invariant order and return no value. Coincident
/// events are rejected.
std::optional<double> critical_velocity(const Event& e1, const Event& e2);

struct OrderingWitness {
    std::array<int, 3> order;  // input indices, earliest frame time first
    double velocity;           // one frame realizing the ordering
};

/// All strict time-orderings of three pairwise non-coincident events over
/// boosts in (-1, 1). The critical velocities of the spacelike pairs
/// partition (-1, 1); each open interval is probed once. Frames where any
/// pair is simultaneous (within a 1e-12 guard on frame-time differences)
/// are excluded. Results are sorted by ordering for determinism.
std::vector<OrderingWitness> achievable_orderings(const std::array<Event, 3>& events);

}  // namespace bellsim::rel
