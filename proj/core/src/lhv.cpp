#include "bellsim/lhv.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <tuple>

namespace bellsim::lhv {

namespace {

void check_wing(int wing) {
    if (wing != 1 && wing != 2) {
        throw std::invalid_argument("wing must be 1 or 2");
    }
}

void check_value(int value) {
    if (value != 1 && value != -1) {
        throw std::invalid_argument("strategy values must be +1 or -1");
    }
}

int sign_from_bit(unsigned index, int bit) {
    return (index >> bit) & 1u ? -1 : 1;
}

}  // namespace

SettingLabels::SettingLabels(std::string a, std::string a_prime, std::string b,
                             std::string b_prime)
    : a_(std::move(a)), a_prime_(std::move(a_prime)), b_(std::move(b)),
      b_prime_(std::move(b_prime)) {
    if (a_ == a_prime_ || b_ == b_prime_) {
        throw std::invalid_argument("SettingLabels: labels within a wing must be distinct");
    }
}

SettingLabels SettingLabels::abstract() {
    return SettingLabels("a", "a'", "b", "b'");
}

const std::string& SettingLabels::wing1(int setting) const {
    if (setting != 0 && setting != 1) {
        throw std::invalid_argument("SettingLabels::wing1: setting must be 0 or 1");
    }
    return setting == 0 ? a_ : a_prime_;
}

const std::string& SettingLabels::wing2(int setting) const {
    if (setting != 0 && setting != 1) {
        throw std::invalid_argument("SettingLabels::wing2: setting must be 0 or 1");
    }
    return setting == 0 ? b_ : b_prime_;
}

Strategy Strategy::from_index(unsigned index, const SettingLabels& labels) {
    if (index >= 256) {
        throw std::invalid_argument("Strategy::from_index: index must be < 256");
    }
    Strategy s;
    int bit = 0;
    for (int own = 0; own < 2; ++own) {
        for (int other = 0; other < 2; ++other) {
            s.set(1, labels.wing1(own), labels.wing2(other), sign_from_bit(index, bit++));
        }
    }
    for (int own = 0; own < 2; ++own) {
        for (int other = 0; other < 2; ++other) {
            s.set(2, labels.wing2(own), labels.wing1(other), sign_from_bit(index, bit++));
        }
    }
    return s;
}

void Strategy::set(int wing, const std::string& own, const std::string& other, int value) {
    check_wing(wing);
    check_value(value);
    table_[{wing, own, other}] = value;
}

int Strategy::value(int wing, const std::string& own, const std::string& other) const {
    check_wing(wing);
    const auto it = table_.find({wing, own, other});
    if (it == table_.end()) {
        throw std::invalid_argument("Strategy: missing table entry (" +
                                    std::to_string(wing) + ", " + own + ", " +
                                    other + ")");
    }
    return it->second;
}

PIStrategy PIStrategy::from_index(unsigned index, const SettingLabels& labels) {
    if (index >= 16) {
        throw std::invalid_argument("PIStrategy::from_index: index must be < 16");
    }
    PIStrategy s;
    s.set(1, labels.a(), sign_from_bit(index, 0));
    s.set(1, labels.a_prime(), sign_from_bit(index, 1));
    s.set(2, labels.b(), sign_from_bit(index, 2));
    s.set(2, labels.b_prime(), sign_from_bit(index, 3));
    return s;
}

void PIStrategy::set(int wing, const std::string& own, int value) {
    check_wing(wing);
    check_value(value);
    table_[{wing, own}] = value;
}

int PIStrategy::value(int wing, const std::string& own) const {
    check_wing(wing);
    const auto it = table_.find({wing, own});
    if (it == table_.end()) {
        throw std::invalid_argument("PIStrategy: missing table entry (" +
                                    std::to_string(wing) + ", " + own + ")");
    }
    return it->second;
}

Ensemble Ensemble::of(std::vector<PIStrategy> members) {
    if (members.empty()) {
        throw std::invalid_argument("Ensemble: needs at least one member");
    }
    Ensemble e;
    e.members_ = std::move(members);
    return e;
}

Ensemble Ensemble::of(std::vector<Strategy> members) {
    if (members.empty()) {
        throw std::invalid_argument("Ensemble: needs at least one member");
    }
    Ensemble e;
    e.members_ = std::move(members);
    return e;
}

std::size_t Ensemble::size() const {
    return parameter_independent() ? pi_members().size() : full_members().size();
}

bool Ensemble::parameter_independent() const {
    return std::holds_alternative<std::vector<PIStrategy>>(members_);
}

const std::vector<PIStrategy>& Ensemble::pi_members() const {
    if (!parameter_independent()) {
        throw std::logic_error("Ensemble: not a parameter-independent ensemble");
    }
    return std::get<std::vector<PIStrategy>>(members_);
}

const std::vector<Strategy>& Ensemble::full_members() const {
    if (parameter_independent()) {
        throw std::logic_error("Ensemble: not a full-strategy ensemble");
    }
    return std::get<std::vector<Strategy>>(members_);
}

namespace {

std::int64_t bell_terms(const Strategy& s, const SettingLabels& l) {
    const std::string& a = l.a();
    const std::string& ap = l.a_prime();
    const std::string& b = l.b();
    const std::string& bp = l.b_prime();
    return static_cast<std::int64_t>(s.value(1, a, b)) * s.value(2, b, a) -
           static_cast<std::int64_t>(s.value(1, a, bp)) * s.value(2, bp, a) +
           static_cast<std::int64_t>(s.value(1, ap, b)) * s.value(2, b, ap) +
           static_cast<std::int64_t>(s.value(1, ap, bp)) * s.value(2, bp, ap);
}

std::int64_t bell_terms(const PIStrategy& s, const SettingLabels& l) {
    const std::string& a = l.a();
    const std::string& ap = l.a_prime();
    const std::string& b = l.b();
    const std::string& bp = l.b_prime();
    return static_cast<std::int64_t>(s.value(1, a)) * s.value(2, b) -
           static_cast<std::int64_t>(s.value(1, a)) * s.value(2, bp) +
           static_cast<std::int64_t>(s.value(1, ap)) * s.value(2, b) +
           static_cast<std::int64_t>(s.value(1, ap)) * s.value(2, bp);
}

}  // namespace

double bell_combination(const Strategy& strategy, const SettingLabels& labels) {
    return static_cast<double>(bell_terms(strategy, labels));
}

double bell_combination(const PIStrategy& strategy, const SettingLabels& labels) {
    return static_cast<double>(bell_terms(strategy, labels));
}

PIScanResult max_over_pi_strategies(const SettingLabels& labels) {
    PIScanResult result{0.0, PIStrategy{}, 0};
    for (unsigned index = 0; index < 16; ++index) {
        PIStrategy s = PIStrategy::from_index(index, labels);
        const double v = std::abs(bell_combination(s, labels));
        if (v > result.max_abs) {
            result.max_abs = v;
            result.witness = std::move(s);
        }
        ++result.scanned;
    }
    return result;
}

FullScanResult max_over_full_strategies(const SettingLabels& labels) {
    FullScanResult result{0.0, Strategy{}, 0};
    for (unsigned index = 0; index < 256; ++index) {
        Strategy s = Strategy::from_index(index, labels);
        const double v = std::abs(bell_combination(s, labels));
        if (v > result.max_abs) {
            result.max_abs = v;
            result.witness = std::move(s);
        }
        ++result.scanned;
    }
    return result;
}

bool second_parameter_dependent(const Strategy& strategy, const SettingLabels& labels) {
    for (int own = 0; own < 2; ++own) {
        if (strategy.value(1, labels.wing1(own), labels.wing2(0)) !=
            strategy.value(1, labels.wing1(own), labels.wing2(1))) {
            return true;
        }
        if (strategy.value(2, labels.wing2(own), labels.wing1(0)) !=
            strategy.value(2, labels.wing2(own), labels.wing1(1))) {
            return true;
        }
    }
    return false;
}

double ensemble_correlation(const Ensemble& e, const std::string& m, const std::string& n) {
    if (!e.parameter_independent()) {
        throw std::invalid_argument(
            "ensemble_correlation: undefined for full-strategy ensembles");
    }
    std::int64_t sum = 0;
    for (const PIStrategy& s : e.pi_members()) {
        sum += static_cast<std::int64_t>(s.value(1, m)) * s.value(2, n);
    }
    return static_cast<double>(sum) / static_cast<double>(e.size());
}

double ensemble_bell(const Ensemble& e, const SettingLabels& labels) {
    if (!e.parameter_independent()) {
        throw std::invalid_argument("ensemble_bell: undefined for full-strategy ensembles");
    }
    std::int64_t sum = 0;
    for (const PIStrategy& s : e.pi_members()) sum += bell_terms(s, labels);
    return static_cast<double>(sum) / static_cast<double>(e.size());
}

}  // namespace bellsim::lhv
