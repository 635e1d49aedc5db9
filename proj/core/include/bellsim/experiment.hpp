// Finite-statistics simulation: Born-rule joint-outcome sampling on the
// evolved singlet, per-pair setting scheduling, and CHSH estimation with
// binomial uncertainty.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bellsim/quantum.hpp"

namespace bellsim::mc {

/// Outcome-pair probabilities for measuring sigma_0 (x) sigma_0 on the
/// evolved singlet: (+,+), (+,-), (-,+), (-,-). Sums to 1; both
/// single-wing marginals are 1/2.
struct JointDistribution {
    double p_pp;
    double p_pm;
    double p_mp;
    double p_mm;

    double correlation() const { return p_pp + p_mm - p_pm - p_mp; }
};

struct PairRecord {
    std::uint64_t k;   // pair index, 0-based
    int setting1;      // 0 = t, 1 = t'
    int setting2;      // 0 = u, 1 = u'
    int outcome1;      // +1 or -1
    int outcome2;
};

/// How per-pair settings are chosen: independent uniform over the four
/// combinations, or pinned to one cell for per-cell statistics.
struct SchedulerPolicy {
    enum class Kind { Uniform, Fixed };

    Kind kind = Kind::Uniform;
    int cell = 0;  // Fixed only: 2*setting1 + setting2

    static SchedulerPolicy uniform();
    static SchedulerPolicy fixed(int cell);
    /// Accepts "uniform" or "fixed(i)" with i in 0..3.
    static SchedulerPolicy parse(const std::string& id);
    std::string id() const;
};

struct CellStat {
    double correlation;
    std::uint64_t count;
};

struct ChshEstimate {
    double value;
    double std_error;
    std::array<CellStat, 4> per_setting;  // index 2*setting1 + setting2
};

/// Born-rule probabilities via the eigenprojectors (I +- sigma_0)/2 on
/// |S(m,n)>. Values within 1e-12 of the [0,1] boundary are clamped.
JointDistribution joint_distribution(const Hamiltonian& h, double m, double n);

/// Samples n_pairs records. Pair k consumes stream draws 2k (settings)
/// and 2k+1 (outcome), so the record list is a pure function of
/// (seed, n_pairs, scheduler policy).
std::vector<PairRecord> run_experiment(const Hamiltonian& h, const TimeSettings& s,
                                       std::uint64_t n_pairs, std::uint64_t seed,
                                       const SchedulerPolicy& scheduler = {});

/// Per-cell correlations (exact integer means), the signed four-term CHSH
/// value with the minus on the (t, u') cell, and the plug-in binomial
/// standard error sqrt(sum (1 - P^2)/count). Every cell needs count >= 2.
ChshEstimate estimate_chsh(const std::vector<PairRecord>& records,
                           const TimeSettings& s);

}  // namespace bellsim::mc
