#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "bellsim/experiment.hpp"
#include "bellsim/random.hpp"
#include "test_util.hpp"

using namespace bellsim;
using namespace bellsim::mc;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("rng matches the splitmix64 reference sequence") {
    CHECK(rng_word(0, 0) == 0xE220A8397B1DCDAFULL);
    CHECK(rng_word(0, 1) == 0x6E789E6AA1B965F4ULL);
    CHECK(rng_word(0, 2) == 0x06C45D188009454FULL);
    // Random access agrees with sequential indexing by construction.
    CHECK(rng_uniform(0, 0) == doctest::Approx(0.8833108082136426).epsilon(1e-15));
    for (int i = 0; i < 1000; ++i) {
        const double u = rng_uniform(123456789ULL, i);
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("scheduler policy ids parse and round-trip") {
    CHECK(SchedulerPolicy::parse("uniform").kind == SchedulerPolicy::Kind::Uniform);
    const SchedulerPolicy fixed2 = SchedulerPolicy::parse("fixed(2)");
    CHECK(fixed2.kind == SchedulerPolicy::Kind::Fixed);
    CHECK(fixed2.cell == 2);
    CHECK(fixed2.id() == "fixed(2)");
    CHECK(SchedulerPolicy::uniform().id() == "uniform");
    CHECK_THROWS_AS(SchedulerPolicy::parse("roundrobin"), std::invalid_argument);
    CHECK_THROWS_AS(SchedulerPolicy::parse("fixed(4)"), std::invalid_argument);
    CHECK_THROWS_AS(SchedulerPolicy::fixed(5), std::invalid_argument);

    // Aggregate-constructed policies are still range-checked downstream.
    const Hamiltonian h(0.0, 1.0);
    CHECK_THROWS_AS(run_experiment(h, optimal_settings(h, 0.0), 10, 0,
                                   SchedulerPolicy{SchedulerPolicy::Kind::Fixed, 9}),
                    std::invalid_argument);
}

TEST_CASE("joint distribution at equal settings is perfectly anticorrelated") {
    const Hamiltonian h(0.0, 1.0);
    const JointDistribution d = joint_distribution(h, 0.8, 0.8);
    CHECK(d.p_pp == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(d.p_mm == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(d.p_pm == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(d.p_mp == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(d.p_pp >= 0.0);
    CHECK(d.p_mm >= 0.0);
}

TEST_CASE("joint distribution at a quarter-period gap is uniform") {
    const Hamiltonian h(0.0, 1.0);
    const JointDistribution d = joint_distribution(h, 0.0, kPi / 2.0);
    CHECK(d.p_pp == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(d.p_pm == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(d.p_mp == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(d.p_mm == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("joint distribution invariants on a grid") {
    std::mt19937_64 rng(51);
    const Hamiltonian h = testutil::random_hamiltonian(rng);
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            const double m = -4.0 + 8.0 * i / 19.0;
            const double n = -4.0 + 8.0 * j / 19.0;
            const JointDistribution d = joint_distribution(h, m, n);
            for (const double p : {d.p_pp, d.p_pm, d.p_mp, d.p_mm}) {
                CHECK(p >= 0.0);
                CHECK(p <= 1.0);
            }
            CHECK(d.p_pp + d.p_pm + d.p_mp + d.p_mm ==
                  doctest::Approx(1.0).epsilon(1e-12));
            // Both single-wing marginals are 1/2.
            CHECK(d.p_pp + d.p_pm == doctest::Approx(0.5).epsilon(1e-12));
            CHECK(d.p_pp + d.p_mp == doctest::Approx(0.5).epsilon(1e-12));
            CHECK(std::abs(d.correlation() - correlation_simulated(h, m, n)) < 1e-12);
        }
    }
}

TEST_CASE("run_experiment is deterministic in the seed") {
    const Hamiltonian h(0.0, 1.0);
    const TimeSettings s = optimal_settings(h, 0.0);
    const auto a = run_experiment(h, s, 2000, 42);
    const auto b = run_experiment(h, s, 2000, 42);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].k == b[i].k);
        CHECK(a[i].setting1 == b[i].setting1);
        CHECK(a[i].setting2 == b[i].setting2);
        CHECK(a[i].outcome1 == b[i].outcome1);
        CHECK(a[i].outcome2 == b[i].outcome2);
    }
    const auto c = run_experiment(h, s, 2000, 43);
    bool identical = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].outcome1 != c[i].outcome1 || a[i].outcome2 != c[i].outcome2 ||
            a[i].setting1 != c[i].setting1 || a[i].setting2 != c[i].setting2) {
            identical = false;
            break;
        }
    }
    CHECK_FALSE(identical);
    CHECK_THROWS_AS(run_experiment(h, s, 0, 1), std::invalid_argument);
}

TEST_CASE("pair streams are keyed by index, not by total count") {
    // Pair k consumes only draws 2k and 2k+1, so a shorter run is a
    // prefix of a longer one and disjoint ranges can be sampled
    // independently.
    const Hamiltonian h(0.0, 1.0);
    const TimeSettings s = optimal_settings(h, 0.0);
    const auto longer = run_experiment(h, s, 3000, 11);
    const auto shorter = run_experiment(h, s, 1000, 11);
    for (std::size_t i = 0; i < shorter.size(); ++i) {
        CHECK(shorter[i].setting1 == longer[i].setting1);
        CHECK(shorter[i].setting2 == longer[i].setting2);
        CHECK(shorter[i].outcome1 == longer[i].outcome1);
        CHECK(shorter[i].outcome2 == longer[i].outcome2);
    }
}

TEST_CASE("uniform scheduler balances the four setting cells") {
    const Hamiltonian h(0.0, 1.0);
    const TimeSettings s = optimal_settings(h, 0.0);
    const auto records = run_experiment(h, s, 100000, 7);
    std::array<int, 4> counts{};
    for (const PairRecord& r : records) counts[2 * r.setting1 + r.setting2]++;
    for (const int c : counts) {
        CHECK(c >= 24000);
        CHECK(c <= 26000);
    }
}

TEST_CASE("fixed scheduler pins every pair to one cell") {
    const Hamiltonian h(0.0, 1.0);
    const TimeSettings s = optimal_settings(h, 0.0);
    const auto records = run_experiment(h, s, 500, 5, SchedulerPolicy::fixed(3));
    for (const PairRecord& r : records) {
        CHECK(r.setting1 == 1);
        CHECK(r.setting2 == 1);
    }
}

TEST_CASE("outcome frequencies converge to the Born distribution") {
    const Hamiltonian h(0.0, 1.0);
    const TimeSettings s = optimal_settings(h, 0.0);
    const std::uint64_t n = 50000;
    for (int cell = 0; cell < 4; ++cell) {
        const auto records = run_experiment(h, s, n, 99, SchedulerPolicy::fixed(cell));
        const JointDistribution d =
            joint_distribution(h, s.wing1(cell >> 1), s.wing2(cell & 1));
        std::array<double, 4> freq{};
        for (const PairRecord& r : records) {
            freq[(r.outcome1 > 0 ? 0 : 2) + (r.outcome2 > 0 ? 0 : 1)] += 1.0;
        }
        const std::array<double, 4> expected{d.p_pp, d.p_pm, d.p_mp, d.p_mm};
        for (int o = 0; o < 4; ++o) {
            const double p_hat = freq[o] / static_cast<double>(n);
            const double sigma =
                std::sqrt(expected[o] * (1.0 - expected[o]) / static_cast<double>(n));
            CHECK(std::abs(p_hat - expected[o]) <= 4.0 * sigma + 1e-12);
        }
    }
}

TEST_CASE("estimate_chsh on constant records") {
    const Hamiltonian h(0.0, 1.0);
    const TimeSettings s = optimal_settings(h, 0.0);
    std::vector<PairRecord> records;
    std::uint64_t k = 0;
    for (int cell = 0; cell < 4; ++cell) {
        for (int rep = 0; rep < 3; ++rep) {
            records.push_back(PairRecord{k++, cell >> 1, cell & 1, 1, 1});
        }
    }
    const ChshEstimate est = estimate_chsh(records, s);
    CHECK(est.value == 2.0);  // 1 - 1 + 1 + 1
    CHECK(est.std_error == 0.0);
    for (const CellStat& cs : est.per_setting) {
        CHECK(cs.correlation == 1.0);
        CHECK(cs.count == 3);
    }
}

TEST_CASE("estimate_chsh requires at least two records per cell") {
    const Hamiltonian h(0.0, 1.0);
    const TimeSettings s = optimal_settings(h, 0.0);
    std::vector<PairRecord> records{PairRecord{0, 0, 0, 1, 1},
                                    PairRecord{1, 0, 1, 1, 1},
                                    PairRecord{2, 1, 0, 1, 1},
                                    PairRecord{3, 1, 1, 1, 1}};
    CHECK_THROWS_WITH_AS(estimate_chsh(records, s),
                         doctest::Contains("has count 1"), std::invalid_argument);
}

TEST_CASE("estimate_chsh is invariant under record order") {
    const Hamiltonian h(0.0, 1.0);
    const TimeSettings s = optimal_settings(h, 0.0);
    auto records = run_experiment(h, s, 5000, 3);
    const ChshEstimate before = estimate_chsh(records, s);
    std::mt19937_64 rng(52);
    std::shuffle(records.begin(), records.end(), rng);
    const ChshEstimate after = estimate_chsh(records, s);
    CHECK(before.value == after.value);
    CHECK(before.std_error == after.std_error);
}

TEST_CASE("estimates converge to the exact value at binomial rate") {
    const Hamiltonian h(0.0, 1.0);
    const TimeSettings s = optimal_settings(h, 0.0);
    const double exact = chsh_value(h, s);
    for (const std::uint64_t n :
         {std::uint64_t{1000}, std::uint64_t{10000}, std::uint64_t{100000}}) {
        int within = 0;
        const int seeds = 100;
        for (int seed = 0; seed < seeds; ++seed) {
            const ChshEstimate est =
                estimate_chsh(run_experiment(h, s, n, seed), s);
            if (std::abs(est.value - exact) <= 4.0 * est.std_error) ++within;
        }
        CHECK(within >= 95);
    }
}

TEST_CASE("no estimate can exceed the algebraic cap of 4") {
    const Hamiltonian h(0.0, 1.0);
    const TimeSettings s = optimal_settings(h, 0.0);
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        const auto records = run_experiment(h, s, 8 + rng() % 400, rng());
        bool all_cells = true;
        std::array<int, 4> counts{};
        for (const auto& r : records) counts[2 * r.setting1 + r.setting2]++;
        for (const int c : counts) all_cells = all_cells && c >= 2;
        if (!all_cells) continue;
        CHECK(std::abs(estimate_chsh(records, s).value) <= 4.0);
    }
}
