// Local-realist models: per-pair dichotomous value assignments, the
// four-term Bell combination, exhaustive maxima over strategy tables, and
// ensemble correlation estimates. Strategy values are exact +-1 integers;
// ensemble averages accumulate in integers and divide once.

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace bellsim::lhv {

/// Two opaque setting labels per wing; labels may denote angles or times.
/// Wing 1 chooses between a and a_prime, wing 2 between b and b_prime.
class SettingLabels {
public:
    SettingLabels(std::string a, std::string a_prime, std::string b,
                  std::string b_prime);

    /// The plain {"a", "a'", "b", "b'"} labelling.
    static SettingLabels abstract();

    const std::string& a() const { return a_; }
    const std::string& a_prime() const { return a_prime_; }
    const std::string& b() const { return b_; }
    const std::string& b_prime() const { return b_prime_; }

    /// Wing-1 (wing-2) label selected by index 0 or 1.
    const std::string& wing1(int setting) const;
    const std::string& wing2(int setting) const;

private:
    std::string a_, a_prime_, b_, b_prime_;
};

/// Value assignment sigma^s_{m,n} = +-1 keyed by (wing, own setting,
/// distant setting); a complete table has 8 entries.
class Strategy {
public:
    Strategy() = default;

    /// Entry order for index 0..255: wing 1 pairs (a,b), (a,b'), (a',b),
    /// (a',b'), then wing 2 pairs (b,a), (b,a'), (b',a), (b',a'); a set
    /// bit stores -1.
    static Strategy from_index(unsigned index, const SettingLabels& labels);

    void set(int wing, const std::string& own, const std::string& other, int value);
    int value(int wing, const std::string& own, const std::string& other) const;

    std::size_t table_size() const { return table_.size(); }
    const std::map<std::tuple<int, std::string, std::string>, int>& table() const {
        return table_;
    }

    friend bool operator==(const Strategy&, const Strategy&) = default;

private:
    std::map<std::tuple<int, std::string, std::string>, int> table_;
};

/// Parameter-independent assignment sigma^s_m = +-1 keyed by (wing, own
/// setting); a complete table has 4 entries.
class PIStrategy {
public:
    PIStrategy() = default;

    /// Entry order for index 0..15: wing 1 a, a', then wing 2 b, b'; a set
    /// bit stores -1.
    static PIStrategy from_index(unsigned index, const SettingLabels& labels);

    void set(int wing, const std::string& own, int value);
    int value(int wing, const std::string& own) const;

    std::size_t table_size() const { return table_.size(); }
    const std::map<std::pair<int, std::string>, int>& table() const { return table_; }

    friend bool operator==(const PIStrategy&, const PIStrategy&) = default;

private:
    std::map<std::pair<int, std::string>, int> table_;
};

/// Uniformly weighted collection of N >= 1 strategies of one kind.
class Ensemble {
public:
    static Ensemble of(std::vector<PIStrategy> members);
    static Ensemble of(std::vector<Strategy> members);

    std::size_t size() const;
    bool parameter_independent() const;
    const std::vector<PIStrategy>& pi_members() const;
    const std::vector<Strategy>& full_members() const;

private:
    std::variant<std::vector<PIStrategy>, std::vector<Strategy>> members_;
};

/// B(k) = s1(a,b) s2(b,a) - s1(a,b') s2(b',a) + s1(a',b) s2(b,a')
///      + s1(a',b') s2(b',a'). Wing-2 lookups put the own setting first.
double bell_combination(const Strategy& strategy, const SettingLabels& labels);
double bell_combination(const PIStrategy& strategy, const SettingLabels& labels);

struct PIScanResult {
    double max_abs;
    PIStrategy witness;   // first table in index order achieving the max
    int scanned;
};

struct FullScanResult {
    double max_abs;
    Strategy witness;
    int scanned;
};

/// Exhaustive |B| maximum over all 16 parameter-independent tables; the
/// maximum is exactly 2.
PIScanResult max_over_pi_strategies(const SettingLabels& labels);

/// Exhaustive |B| maximum over all 256 full tables; the maximum is
/// exactly 4.
FullScanResult max_over_full_strategies(const SettingLabels& labels);

/// True when some (wing, own setting) value differs across the distant
/// setting.
bool second_parameter_dependent(const Strategy& strategy, const SettingLabels& labels);

/// (1/N) sum of s1_m(k) s2_n(k); defined for parameter-independent
/// ensembles only.
double ensemble_correlation(const Ensemble& e, const std::string& m, const std::string& n);

/// Ensemble average of the Bell combination; always in [-2, 2].
double ensemble_bell(const Ensemble& e, const SettingLabels& labels);

}  // namespace bellsim::lhv
