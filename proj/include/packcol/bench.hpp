#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "packcol/exact.hpp"
#include "packcol/heuristics.hpp"

namespace packcol {

enum class ExpectationKind { Exact, Bound };

struct Expectation {
    int value = 0;
    ExpectationKind kind = ExpectationKind::Exact;
    std::string source; // paper-table | formula | oracle
};

/// One benchmark instance. See bench/README.md for the JSON schema.
struct BenchCase {
    std::string name;
    std::string graph; // graph_from_spec syntax
    std::optional<Expectation> expected;
    std::vector<std::string> algorithms; // greedy | ls | ga | exact
    std::vector<std::uint64_t> seeds{0};
    /// Solve at this k only instead of minimizing.
    std::optional<int> k;
    std::optional<int> upper_bound;
    int greedy_runs = 6;
    LsConfig ls{};
    GaConfig ga{};
    SearchBudget budget{};
};

struct BenchRow {
    std::string case_name;
    std::string algorithm;
    std::uint64_t seed = 0;
    std::optional<int> k_achieved;
    bool solved = false;
    double time_ms = 0.0;
    std::string status; // ok | unsolved | budget | error
    std::string message;
    std::vector<int> certificate;

    friend bool operator==(const BenchRow &, const BenchRow &) = default;
};

struct BenchSummary {
    std::string case_name;
    std::string algorithm;
    std::optional<int> best;
    double median_time_ms = 0.0;
    std::optional<bool> pass; // unset when the case has no expectation

    friend bool operator==(const BenchSummary &, const BenchSummary &) = default;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::vector<BenchSummary> summaries;

    friend bool operator==(const BenchReport &, const BenchReport &) = default;
};

std::vector<BenchCase> load_suite(const std::filesystem::path &path);
std::vector<BenchCase> suite_from_json(const nlohmann::json &j);

/// Runs every case on up to `jobs` worker threads. Rows come out in suite
/// order, then algorithm order, then seed order, whatever the thread count.
/// A case whose graph cannot be built yields one "error" row and the suite
/// continues.
BenchReport run_suite(const std::vector<BenchCase> &suite, int jobs = 1);

enum class ReportFormat { Csv, Json };

ReportFormat parse_report_format(const std::string &name);

nlohmann::json report_to_json(const BenchReport &r);
BenchReport report_from_json(const nlohmann::json &j);
void write_csv(std::ostream &out, const BenchReport &r);

/// Writes the report; std::runtime_error naming the path on I/O failure.
void emit_report(const BenchReport &r, ReportFormat format, const std::filesystem::path &path);

} // namespace packcol
