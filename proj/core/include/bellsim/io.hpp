// Run manifests, plot-ready tables, and the on-disk formats: key/value
// text for manifests and summaries, CSV with a header row for tables,
// one line per record for pair streams. Floats are printed with 17
// significant digits so every value round-trips.

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bellsim/experiment.hpp"
#include "bellsim/quantum.hpp"

namespace bellsim::io {

inline constexpr const char* kVersion = "0.1.0";

/// Filesystem/stream failure; the CLI maps it to exit code 3.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string format_double(double value);  // %.17g
double parse_double(const std::string& text);

/// Rectangular table of labels and numbers; serialized as CSV with a
/// header row, LF line endings.
class OutputTable {
public:
    using Cell = std::variant<std::string, double, std::int64_t>;

    explicit OutputTable(std::vector<std::string> columns);

    void add_row(std::vector<Cell> row);

    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const { return rows_; }
    std::size_t row_count() const { return rows_.size(); }

    std::string to_csv() const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

/// What produced a run: command, full parameter set, artifact version,
/// RNG algorithm id, timestamp. Serializes to "key = value" lines and
/// re-parses to an equal value.
struct RunManifest {
    std::string command;
    std::string version;
    std::string rng_algorithm;
    std::string timestamp;  // ISO-8601 UTC
    std::map<std::string, std::string> parameters;

    std::string serialize() const;
    static RunManifest parse(const std::string& text);

    friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

/// Manifest for the current run: fills version, RNG id, and the current
/// UTC time.
RunManifest make_manifest(std::string command,
                          std::map<std::string, std::string> parameters);

/// One record per line: k,setting1,setting2,outcome1,outcome2 with
/// settings as indices 0/1 and outcomes as +1/-1.
std::string serialize_records(const std::vector<mc::PairRecord>& records);
std::vector<mc::PairRecord> parse_records(const std::string& text);

/// Key/value summary of a simulation, a pure function of the run
/// parameters and the record stream, so `verify` can recompute it byte
/// for byte.
std::string build_summary(const Hamiltonian& h, const TimeSettings& s,
                          const mc::ChshEstimate& estimate,
                          std::uint64_t n_pairs);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace bellsim::io
