#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace zetalab {

// Machine-readable experiment report: one labelled numeric record per row,
// plus the inputs/backend/tolerance metadata needed to reproduce it.
// Serialization is deterministic (fields keep insertion order, numbers are
// printed with %.17g), so identical (inputs, backend, version, partition
// count) give byte-identical files.  Wall-clock timing is therefore only
// recorded when explicitly requested.
struct ExperimentReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string backend;
    std::vector<std::string> columns;
    struct Row {
        std::string label;
        std::vector<double> values;
    };
    std::vector<Row> rows;
    std::vector<std::pair<std::string, std::string>> metadata;

    void add_input(const std::string& k, const std::string& v) { inputs.emplace_back(k, v); }
    void add_input(const std::string& k, double v);
    void add_meta(const std::string& k, const std::string& v) { metadata.emplace_back(k, v); }
    void add_meta(const std::string& k, double v);
    void add_row(const std::string& label, std::vector<double> values) {
        rows.push_back({label, std::move(values)});
    }
};

std::string format_full(double v);  // %.17g

std::string to_csv(const ExperimentReport& rep);
std::string to_json(const ExperimentReport& rep);

// Minimal line chart of the report rows: first column as x, remaining
// columns as polylines (row index as x for single-column reports).
std::string to_svg(const ExperimentReport& rep);

// Writes serialized content to `path`, or to stdout when path is "-".
void write_text(const std::string& path, const std::string& content);

// Trend harness: one row per scale with value, target, rel_gap, and the
// final monotone-trend verdict ("improving" when rel_gap never increases
// along the ladder, "not-monotone" otherwise, "insufficient data" for fewer
// than two rows).
struct ConvergenceRow {
    double scale;
    double value;
    double target;
    double rel_gap;
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
    std::string verdict;
};

ConvergenceTable convergence_table(const std::vector<double>& scales,
                                   const std::function<ConvergenceRow(double)>& eval);

// Appends the table to a report as rows (scale, value, target, rel_gap,
// gap_nonincreasing) plus a trend_verdict metadata entry.
void append_convergence(ExperimentReport& rep, const ConvergenceTable& table);

}  // namespace zetalab
