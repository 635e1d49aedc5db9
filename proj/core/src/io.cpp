#include "bellsim/io.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "bellsim/random.hpp"

namespace bellsim::io {

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

double parse_double(const std::string& text) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_double: not a number: " + text);
    }
    if (pos != text.size()) {
        throw std::invalid_argument("parse_double: trailing characters: " + text);
    }
    return v;
}

OutputTable::OutputTable(std::vector<std::string> columns)
    : columns_(std::move(columns)) {
    if (columns_.empty()) {
        throw std::invalid_argument("OutputTable: needs at least one column");
    }
}

void OutputTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size()) {
        throw std::invalid_argument("OutputTable: row arity does not match columns");
    }
    rows_.push_back(std::move(row));
}

namespace {

std::string cell_text(const OutputTable::Cell& cell) {
    if (const auto* s = std::get_if<std::string>(&cell)) return *s;
    if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
    return std::to_string(std::get<std::int64_t>(cell));
}

}  // namespace

std::string OutputTable::to_csv() const {
    std::string out;
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (c) out += ',';
        out += columns_[c];
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += cell_text(row[c]);
        }
        out += '\n';
    }
    return out;
}

namespace {

void append_line(std::string& out, const std::string& key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
}

}  // namespace

std::string RunManifest::serialize() const {
    std::string out;
    append_line(out, "command", command);
    append_line(out, "version", version);
    append_line(out, "rng", rng_algorithm);
    append_line(out, "timestamp", timestamp);
    for (const auto& [key, value] : parameters) {
        append_line(out, "param." + key, value);
    }
    return out;
}

RunManifest RunManifest::parse(const std::string& text) {
    RunManifest m;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::size_t sep = line.find(" = ");
        if (sep == std::string::npos) {
            throw std::invalid_argument("RunManifest::parse: bad line: " + line);
        }
        const std::string key = line.substr(0, sep);
        const std::string value = line.substr(sep + 3);
        if (key == "command") {
            m.command = value;
        } else if (key == "version") {
            m.version = value;
        } else if (key == "rng") {
            m.rng_algorithm = value;
        } else if (key == "timestamp") {
            m.timestamp = value;
        } else if (key.rfind("param.", 0) == 0) {
            m.parameters[key.substr(6)] = value;
        } else {
            throw std::invalid_argument("RunManifest::parse: unknown key: " + key);
        }
    }
    return m;
}

RunManifest make_manifest(std::string command,
                          std::map<std::string, std::string> parameters) {
    RunManifest m;
    m.command = std::move(command);
    m.version = kVersion;
    m.rng_algorithm = mc::kRngAlgorithm;
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
    m.timestamp = buf;
    m.parameters = std::move(parameters);
    return m;
}

std::string serialize_records(const std::vector<mc::PairRecord>& records) {
    std::string out;
    for (const mc::PairRecord& r : records) {
        out += std::to_string(r.k);
        out += ',';
        out += std::to_string(r.setting1);
        out += ',';
        out += std::to_string(r.setting2);
        out += ',';
        out += r.outcome1 > 0 ? "+1" : "-1";
        out += ',';
        out += r.outcome2 > 0 ? "+1" : "-1";
        out += '\n';
    }
    return out;
}

namespace {

int parse_outcome(const std::string& field) {
    if (field == "+1") return 1;
    if (field == "-1") return -1;
    throw std::invalid_argument("parse_records: bad outcome: " + field);
}

}  // namespace

std::vector<mc::PairRecord> parse_records(const std::string& text) {
    std::vector<mc::PairRecord> records;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::array<std::string, 5> fields;
        std::size_t start = 0;
        for (int f = 0; f < 5; ++f) {
            const std::size_t comma = line.find(',', start);
            if ((f < 4) != (comma != std::string::npos)) {
                throw std::invalid_argument("parse_records: bad line: " + line);
            }
            fields[f] = line.substr(start, comma == std::string::npos
                                               ? std::string::npos
                                               : comma - start);
            start = comma + 1;
        }
        mc::PairRecord r{};
        r.k = std::stoull(fields[0]);
        r.setting1 = std::stoi(fields[1]);
        r.setting2 = std::stoi(fields[2]);
        if ((r.setting1 != 0 && r.setting1 != 1) ||
            (r.setting2 != 0 && r.setting2 != 1)) {
            throw std::invalid_argument("parse_records: bad setting index: " + line);
        }
        r.outcome1 = parse_outcome(fields[3]);
        r.outcome2 = parse_outcome(fields[4]);
        records.push_back(r);
    }
    return records;
}

std::string build_summary(const Hamiltonian& h, const TimeSettings& s,
                          const mc::ChshEstimate& estimate,
                          std::uint64_t n_pairs) {
    std::string out;
    append_line(out, "pairs", std::to_string(n_pairs));
    append_line(out, "delta_e", format_double(h.delta_e()));
    append_line(out, "t", format_double(s.t()));
    append_line(out, "t_prime", format_double(s.t_prime()));
    append_line(out, "u", format_double(s.u()));
    append_line(out, "u_prime", format_double(s.u_prime()));
    static constexpr const char* kCellNames[4] = {"t_u", "t_uprime",
                                                  "tprime_u", "tprime_uprime"};
    for (int cell = 0; cell < 4; ++cell) {
        append_line(out, std::string("corr_") + kCellNames[cell],
                    format_double(estimate.per_setting[cell].correlation));
        append_line(out, std::string("count_") + kCellNames[cell],
                    std::to_string(estimate.per_setting[cell].count));
    }
    append_line(out, "chsh_estimate", format_double(estimate.value));
    append_line(out, "chsh_std_error", format_double(estimate.std_error));
    append_line(out, "chsh_exact", format_double(chsh_value(h, s)));
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open for reading: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("read failed: " + path);
    }
    return buf.str();
}

}  // namespace bellsim::io
