#include "bellsim/experiment.hpp"

#include <cmath>
#include <stdexcept>

#include "bellsim/random.hpp"

namespace bellsim::mc {

SchedulerPolicy SchedulerPolicy::uniform() { return SchedulerPolicy{}; }

SchedulerPolicy SchedulerPolicy::fixed(int cell) {
    if (cell < 0 || cell > 3) {
        throw std::invalid_argument("SchedulerPolicy::fixed: cell must be in 0..3");
    }
    return SchedulerPolicy{Kind::Fixed, cell};
}

SchedulerPolicy SchedulerPolicy::parse(const std::string& id) {
    if (id == "uniform") return uniform();
    if (id.size() == 8 && id.rfind("fixed(", 0) == 0 && id.back() == ')' &&
        id[6] >= '0' && id[6] <= '3') {
        return fixed(id[6] - '0');
    }
    throw std::invalid_argument("unknown scheduler id: " + id);
}

std::string SchedulerPolicy::id() const {
    if (kind == Kind::Uniform) return "uniform";
    return "fixed(" + std::to_string(cell) + ")";
}

namespace {

double clamp_probability(double p) {
    if (p < 0.0 && p > -1e-12) return 0.0;
    if (p > 1.0 && p < 1.0 + 1e-12) return 1.0;
    return p;
}

}  // namespace

JointDistribution joint_distribution(const Hamiltonian& h, double m, double n) {
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    const ComplexMatrix sigma = sigma_phi(0.0);
    const ComplexMatrix proj_plus = Complex{0.5, 0.0} * (id2 + sigma);
    const ComplexMatrix proj_minus = Complex{0.5, 0.0} * (id2 - sigma);
    const StateVector psi = evolved_state(h, m, n);

    JointDistribution d{};
    d.p_pp = clamp_probability(expectation(psi, tensor(proj_plus, proj_plus)));
    d.p_pm = clamp_probability(expectation(psi, tensor(proj_plus, proj_minus)));
    d.p_mp = clamp_probability(expectation(psi, tensor(proj_minus, proj_plus)));
    d.p_mm = clamp_probability(expectation(psi, tensor(proj_minus, proj_minus)));
    return d;
}

std::vector<PairRecord> run_experiment(const Hamiltonian& h, const TimeSettings& s,
                                       std::uint64_t n_pairs, std::uint64_t seed,
                                       const SchedulerPolicy& scheduler) {
    if (n_pairs < 1) {
        throw std::invalid_argument("run_experiment: n_pairs must be >= 1");
    }
    if (scheduler.cell < 0 || scheduler.cell > 3) {
        throw std::invalid_argument("run_experiment: scheduler cell out of range");
    }

    // One Born distribution per setting cell.
    std::array<JointDistribution, 4> dists;
    for (int cell = 0; cell < 4; ++cell) {
        dists[cell] = joint_distribution(h, s.wing1(cell >> 1), s.wing2(cell & 1));
    }

    std::vector<PairRecord> records;
    records.reserve(n_pairs);
    for (std::uint64_t k = 0; k < n_pairs; ++k) {
        int cell = scheduler.cell;
        if (scheduler.kind == SchedulerPolicy::Kind::Uniform) {
            const double u = rng_uniform(seed, 2 * k);
            cell = std::min(3, static_cast<int>(u * 4.0));
        }
        const JointDistribution& d = dists[cell];
        const double u = rng_uniform(seed, 2 * k + 1);
        int outcome1 = 1;
        int outcome2 = 1;
        if (u < d.p_pp) {
            // (+,+)
        } else if (u < d.p_pp + d.p_pm) {
            outcome2 = -1;
        } else if (u < d.p_pp + d.p_pm + d.p_mp) {
            outcome1 = -1;
        } else {
            outcome1 = -1;
            outcome2 = -1;
        }
        records.push_back(PairRecord{k, cell >> 1, cell & 1, outcome1, outcome2});
    }
    return records;
}

ChshEstimate estimate_chsh(const std::vector<PairRecord>& records,
                           const TimeSettings& s) {
    std::array<std::int64_t, 4> sums{};
    std::array<std::uint64_t, 4> counts{};
    for (const PairRecord& r : records) {
        if ((r.setting1 != 0 && r.setting1 != 1) ||
            (r.setting2 != 0 && r.setting2 != 1)) {
            throw std::invalid_argument("estimate_chsh: setting index out of range");
        }
        const int cell = 2 * r.setting1 + r.setting2;
        sums[cell] += static_cast<std::int64_t>(r.outcome1) * r.outcome2;
        counts[cell] += 1;
    }

    ChshEstimate est{};
    double variance = 0.0;
    static constexpr const char* kWing1Names[2] = {"t", "t'"};
    static constexpr const char* kWing2Names[2] = {"u", "u'"};
    for (int cell = 0; cell < 4; ++cell) {
        if (counts[cell] < 2) {
            throw std::invalid_argument(
                std::string("estimate_chsh: setting cell (") +
                kWing1Names[cell >> 1] + " = " +
                std::to_string(s.wing1(cell >> 1)) + ", " +
                kWing2Names[cell & 1] + " = " +
                std::to_string(s.wing2(cell & 1)) + ") has count " +
                std::to_string(counts[cell]) + " < 2");
        }
        const double p = static_cast<double>(sums[cell]) /
                         static_cast<double>(counts[cell]);
        est.per_setting[cell] = CellStat{p, counts[cell]};
        variance += (1.0 - p * p) / static_cast<double>(counts[cell]);
    }
    est.value = est.per_setting[0].correlation - est.per_setting[1].correlation +
                est.per_setting[2].correlation + est.per_setting[3].correlation;
    est.std_error = std::sqrt(variance);
    return est;
}

}  // namespace bellsim::mc
