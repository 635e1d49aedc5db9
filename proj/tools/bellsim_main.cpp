// Command-line driver: optimal, scan, simulate, lhv, frames, verify.
//
// Every command prints its run manifest first (as "# key = value" lines)
// followed by a CSV table. Exit codes: 0 success, 1 verification
// mismatch, 2 invalid arguments or preconditions, 3 I/O failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bellsim/experiment.hpp"
#include "bellsim/io.hpp"
#include "bellsim/lhv.hpp"
#include "bellsim/quantum.hpp"
#include "bellsim/relativity.hpp"

namespace {

using namespace bellsim;
namespace fs = std::filesystem;

constexpr double kPi = std::numbers::pi;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitIoFailure = 3;

struct CommonOptions {
    double delta_e = 1.0;
    std::optional<double> e_plus;
    std::optional<double> e_minus;
    double t0 = 0.0;
    std::uint64_t seed = 0;
};

Hamiltonian make_hamiltonian(const CommonOptions& common) {
    if (common.e_plus.has_value() != common.e_minus.has_value()) {
        throw std::invalid_argument("--e-plus and --e-minus must be given together");
    }
    if (common.e_plus) {
        return Hamiltonian(*common.e_plus, *common.e_minus);
    }
    return Hamiltonian(0.0, common.delta_e);
}

void print_manifest(const io::RunManifest& manifest) {
    std::istringstream in(manifest.serialize());
    std::string line;
    while (std::getline(in, line)) std::cout << "# " << line << "\n";
}

std::map<std::string, std::string> hamiltonian_params(const CommonOptions& common) {
    std::map<std::string, std::string> params;
    if (common.e_plus) {
        params["e_plus"] = io::format_double(*common.e_plus);
        params["e_minus"] = io::format_double(*common.e_minus);
    } else {
        params["delta_e"] = io::format_double(common.delta_e);
    }
    return params;
}

int cmd_optimal(const CommonOptions& common) {
    const Hamiltonian h = make_hamiltonian(common);
    auto params = hamiltonian_params(common);
    params["t0"] = io::format_double(common.t0);
    print_manifest(io::make_manifest("optimal", std::move(params)));

    const TimeSettings s = optimal_settings(h, common.t0);
    io::OutputTable table({"t", "t_prime", "u", "u_prime", "chsh_value"});
    table.add_row({s.t(), s.t_prime(), s.u(), s.u_prime(), chsh_value(h, s)});
    std::cout << table.to_csv();
    return kExitOk;
}

int cmd_scan(const CommonOptions& common, int steps) {
    if (steps < 1) {
        throw std::invalid_argument("--steps must be >= 1");
    }
    const Hamiltonian h = make_hamiltonian(common);
    auto params = hamiltonian_params(common);
    params["t0"] = io::format_double(common.t0);
    params["steps"] = std::to_string(steps);
    print_manifest(io::make_manifest("scan", std::move(params)));

    // Shear the optimal pattern: the phase delta is added to the wing-2
    // times only, sweeping one period.
    const TimeSettings base = optimal_settings(h, common.t0);
    io::OutputTable table({"delta", "chsh_value"});
    for (int i = 0; i < steps; ++i) {
        const double delta = 2.0 * kPi * i / steps;
        const double shift = delta / h.delta_e();
        const TimeSettings sheared(base.t(), base.t_prime(), base.u() + shift,
                                   base.u_prime() + shift);
        table.add_row({delta, chsh_value(h, sheared)});
    }
    std::cout << table.to_csv();
    return kExitOk;
}

int cmd_simulate(const CommonOptions& common, std::uint64_t pairs,
                 const std::string& scheduler_id, const std::string& out_dir) {
    if (pairs < 4) {
        throw std::invalid_argument("--pairs must be >= 4");
    }
    const Hamiltonian h = make_hamiltonian(common);
    const mc::SchedulerPolicy scheduler = mc::SchedulerPolicy::parse(scheduler_id);

    auto params = hamiltonian_params(common);
    params["t0"] = io::format_double(common.t0);
    params["pairs"] = std::to_string(pairs);
    params["seed"] = std::to_string(common.seed);
    params["scheduler"] = scheduler.id();
    params["out"] = out_dir;
    const io::RunManifest manifest = io::make_manifest("simulate", std::move(params));
    print_manifest(manifest);

    const TimeSettings s = optimal_settings(h, common.t0);
    const auto records = mc::run_experiment(h, s, pairs, common.seed, scheduler);
    const mc::ChshEstimate est = mc::estimate_chsh(records, s);

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw io::IoError("cannot create output directory: " + out_dir);
    }
    io::write_file(out_dir + "/manifest.txt", manifest.serialize());
    io::write_file(out_dir + "/records.csv", io::serialize_records(records));
    io::write_file(out_dir + "/summary.txt", io::build_summary(h, s, est, pairs));

    io::OutputTable table({"pairs", "chsh_estimate", "std_error", "chsh_exact"});
    table.add_row({static_cast<std::int64_t>(pairs), est.value, est.std_error,
                   chsh_value(h, s)});
    std::cout << table.to_csv();
    return kExitOk;
}

std::string witness_text(const lhv::PIStrategy& s, const lhv::SettingLabels& labels) {
    std::string out;
    for (int wing = 1; wing <= 2; ++wing) {
        for (int own = 0; own < 2; ++own) {
            const std::string& label =
                wing == 1 ? labels.wing1(own) : labels.wing2(own);
            if (!out.empty()) out += ' ';
            out += "s" + std::to_string(wing) + "(" + label +
                   ")=" + (s.value(wing, label) > 0 ? "+1" : "-1");
        }
    }
    return out;
}

std::string witness_text(const lhv::Strategy& s, const lhv::SettingLabels& labels) {
    std::string out;
    for (int wing = 1; wing <= 2; ++wing) {
        for (int own = 0; own < 2; ++own) {
            for (int other = 0; other < 2; ++other) {
                const std::string& own_label =
                    wing == 1 ? labels.wing1(own) : labels.wing2(own);
                const std::string& other_label =
                    wing == 1 ? labels.wing2(other) : labels.wing1(other);
                if (!out.empty()) out += ' ';
                out += "s" + std::to_string(wing) + "(" + own_label + "|" +
                       other_label +
                       ")=" + (s.value(wing, own_label, other_label) > 0 ? "+1" : "-1");
            }
        }
    }
    return out;
}

int cmd_lhv() {
    print_manifest(io::make_manifest("lhv", {}));
    const lhv::SettingLabels labels = lhv::SettingLabels::abstract();
    const lhv::PIScanResult pi = lhv::max_over_pi_strategies(labels);
    const lhv::FullScanResult full = lhv::max_over_full_strategies(labels);

    io::OutputTable table({"model", "max_abs", "strategies_scanned",
                           "witness_entries", "witness"});
    table.add_row({std::string("parameter-independent"), pi.max_abs,
                   static_cast<std::int64_t>(pi.scanned),
                   static_cast<std::int64_t>(pi.witness.table_size()),
                   witness_text(pi.witness, labels)});
    table.add_row({std::string("unconstrained"), full.max_abs,
                   static_cast<std::int64_t>(full.scanned),
                   static_cast<std::int64_t>(full.witness.table_size()),
                   witness_text(full.witness, labels)});
    std::cout << table.to_csv();
    return kExitOk;
}

rel::Event parse_event(const std::string& spec, int index) {
    // "t,x" or "label:t,x"
    std::string label = "e" + std::to_string(index + 1);
    std::string coords = spec;
    const std::size_t colon = spec.find(':');
    if (colon != std::string::npos) {
        label = spec.substr(0, colon);
        coords = spec.substr(colon + 1);
    }
    const std::size_t comma = coords.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("event must be t,x or label:t,x — got " + spec);
    }
    return rel::Event(io::parse_double(coords.substr(0, comma)),
                      io::parse_double(coords.substr(comma + 1)), label);
}

int cmd_frames(const std::vector<std::string>& event_specs) {
    std::array<rel::Event, 3> events{parse_event(event_specs.at(0), 0),
                                     parse_event(event_specs.at(1), 1),
                                     parse_event(event_specs.at(2), 2)};
    std::map<std::string, std::string> params;
    for (int i = 0; i < 3; ++i) {
        params["event" + std::to_string(i + 1)] =
            events[i].label + ":" + io::format_double(events[i].t) + "," +
            io::format_double(events[i].x);
    }
    print_manifest(io::make_manifest("frames", std::move(params)));

    io::OutputTable pairs({"pair", "interval_class", "critical_velocity"});
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const auto v = rel::critical_velocity(events[i], events[j]);
            pairs.add_row({events[i].label + "-" + events[j].label,
                           rel::to_string(rel::classify(events[i], events[j])),
                           v ? io::format_double(*v) : std::string("none")});
        }
    }
    std::cout << pairs.to_csv();

    io::OutputTable orderings({"ordering", "witness_velocity"});
    for (const rel::OrderingWitness& w : rel::achievable_orderings(events)) {
        std::string text;
        for (const int idx : w.order) {
            if (!text.empty()) text += " < ";
            text += events[idx].label;
        }
        orderings.add_row({text, w.velocity});
    }
    std::cout << "\n" << orderings.to_csv();
    return kExitOk;
}

int cmd_verify(const std::string& run_dir) {
    print_manifest(io::make_manifest("verify", {{"dir", run_dir}}));

    const io::RunManifest manifest =
        io::RunManifest::parse(io::read_file(run_dir + "/manifest.txt"));
    if (manifest.command != "simulate") {
        throw std::invalid_argument("verify: manifest is not from a simulate run");
    }
    const auto& p = manifest.parameters;
    const Hamiltonian h =
        p.count("e_plus") ? Hamiltonian(io::parse_double(p.at("e_plus")),
                                        io::parse_double(p.at("e_minus")))
                          : Hamiltonian(0.0, io::parse_double(p.at("delta_e")));
    const TimeSettings s = optimal_settings(h, io::parse_double(p.at("t0")));
    const std::uint64_t pairs = std::stoull(p.at("pairs"));

    const auto records = io::parse_records(io::read_file(run_dir + "/records.csv"));
    if (records.size() != pairs) {
        throw std::invalid_argument("verify: record count does not match manifest");
    }
    const std::string recomputed =
        io::build_summary(h, s, mc::estimate_chsh(records, s), pairs);
    const std::string stored = io::read_file(run_dir + "/summary.txt");

    const bool match = recomputed == stored;
    io::OutputTable table({"records", "summary_match"});
    table.add_row({static_cast<std::int64_t>(records.size()),
                   std::string(match ? "yes" : "no")});
    std::cout << table.to_csv();
    return match ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-parameterized Bell/CHSH experiment toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config");

    CommonOptions common;
    app.add_option("--delta-e", common.delta_e,
                   "Energy gap (defines H as diag(0, delta_e))")
        ->capture_default_str();
    auto* opt_eplus = app.add_option("--e-plus", common.e_plus, "Lower level energy");
    app.add_option("--e-minus", common.e_minus, "Upper level energy")
        ->needs(opt_eplus);
    app.add_option("--t0", common.t0, "Phase offset of the optimal settings")
        ->capture_default_str();
    app.add_option("--seed", common.seed, "RNG seed")->capture_default_str();

    auto* optimal = app.add_subcommand(
        "optimal", "Print the optimal measurement times and the CHSH value");

    int steps = 64;
    auto* scan = app.add_subcommand(
        "scan", "Sweep a phase shear over the wing-2 times and tabulate CHSH");
    scan->add_option("--steps", steps, "Number of shear values in [0, 2pi)")
        ->capture_default_str();

    std::uint64_t pairs = 10000;
    std::string scheduler_id = "uniform";
    std::string out_dir;
    auto* simulate = app.add_subcommand(
        "simulate", "Sample pair records at the optimal settings and write files");
    simulate->add_option("--pairs", pairs, "Number of pairs (>= 4)")
        ->capture_default_str();
    simulate->add_option("--scheduler", scheduler_id, "uniform or fixed(i), i in 0..3")
        ->capture_default_str();
    simulate->add_option("--out", out_dir, "Output directory")->required();

    auto* lhv_cmd = app.add_subcommand(
        "lhv", "Print the local-realist maxima with witness tables");

    std::vector<std::string> event_specs;
    auto* frames = app.add_subcommand(
        "frames", "Classify three events and enumerate frame time-orderings");
    frames->add_option("events", event_specs, "Three events as t,x or label:t,x")
        ->expected(3)
        ->required();

    std::string verify_dir;
    auto* verify = app.add_subcommand(
        "verify", "Recompute a simulate run's summary from its records");
    verify->add_option("dir", verify_dir, "Run directory written by simulate")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadArguments;
    }

    try {
        if (optimal->parsed()) return cmd_optimal(common);
        if (scan->parsed()) return cmd_scan(common, steps);
        if (simulate->parsed()) {
            return cmd_simulate(common, pairs, scheduler_id, out_dir);
        }
        if (lhv_cmd->parsed()) return cmd_lhv();
        if (frames->parsed()) return cmd_frames(event_specs);
        if (verify->parsed()) return cmd_verify(verify_dir);
    } catch (const io::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIoFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    }
    return kExitBadArguments;
}
