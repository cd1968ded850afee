#include "zetalab/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace zetalab {

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void ExperimentReport::add_input(const std::string& k, double v) {
    inputs.emplace_back(k, format_full(v));
}

void ExperimentReport::add_meta(const std::string& k, double v) {
    metadata.emplace_back(k, format_full(v));
}

std::string to_csv(const ExperimentReport& rep) {
    std::ostringstream os;
    os << "label";
    for (const auto& c : rep.columns) os << "," << c;
    os << "\n";
    for (const auto& row : rep.rows) {
        os << row.label;
        for (double v : row.values) os << "," << format_full(v);
        os << "\n";
    }
    return os.str();
}

std::string to_json(const ExperimentReport& rep) {
    nlohmann::ordered_json j;
    j["command"] = rep.command;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rep.inputs) inputs[k] = v;
    j["inputs"] = inputs;
    j["backend"] = rep.backend;
    j["columns"] = rep.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : rep.rows) {
        nlohmann::ordered_json r;
        r["label"] = row.label;
        r["values"] = row.values;
        rows.push_back(r);
    }
    j["rows"] = rows;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rep.metadata) meta[k] = v;
    j["metadata"] = meta;
    return j.dump(2) + "\n";
}

std::string to_svg(const ExperimentReport& rep) {
    constexpr int W = 720, H = 440, ML = 70, MR = 20, MT = 20, MB = 40;
    const int n = static_cast<int>(rep.rows.size());
    const int n_cols = static_cast<int>(rep.columns.size());

    std::vector<double> xs;
    int y_begin = (n_cols >= 2) ? 1 : 0;
    for (int i = 0; i < n; ++i)
        xs.push_back(n_cols >= 2 ? rep.rows[i].values[0] : static_cast<double>(i));

    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (int i = 0; i < n; ++i) {
        if (first) { xmin = xmax = xs[i]; first = false; }
        xmin = std::min(xmin, xs[i]);
        xmax = std::max(xmax, xs[i]);
        for (int c = y_begin; c < n_cols && c < static_cast<int>(rep.rows[i].values.size()); ++c) {
            const double v = rep.rows[i].values[c];
            if (i == 0 && c == y_begin) { ymin = ymax = v; }
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;

    auto px = [&](double x) { return ML + (x - xmin) / (xmax - xmin) * (W - ML - MR); };
    auto py = [&](double y) { return H - MB - (y - ymin) / (ymax - ymin) * (H - MT - MB); };

    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"" << ML << "\" y1=\"" << H - MB << "\" x2=\"" << W - MR << "\" y2=\""
       << H - MB << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML << "\" y2=\"" << H - MB
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << ML << "\" y=\"" << H - 8 << "\" font-size=\"12\">" << format_full(xmin)
       << "</text>\n<text x=\"" << W - MR - 60 << "\" y=\"" << H - 8 << "\" font-size=\"12\">"
       << format_full(xmax) << "</text>\n";
    os << "<text x=\"4\" y=\"" << H - MB << "\" font-size=\"12\">" << format_full(ymin)
       << "</text>\n<text x=\"4\" y=\"" << MT + 10 << "\" font-size=\"12\">" << format_full(ymax)
       << "</text>\n";

    for (int c = y_begin; c < n_cols; ++c) {
        os << "<polyline fill=\"none\" stroke=\"" << kColors[(c - y_begin) % 8]
           << "\" stroke-width=\"1.5\" points=\"";
        for (int i = 0; i < n; ++i) {
            if (c >= static_cast<int>(rep.rows[i].values.size())) continue;
            os << px(xs[i]) << "," << py(rep.rows[i].values[c]) << " ";
        }
        os << "\"/>\n";
        os << "<text x=\"" << W - MR - 150 << "\" y=\"" << MT + 14 * (c - y_begin + 1)
           << "\" font-size=\"12\" fill=\"" << kColors[(c - y_begin) % 8] << "\">"
           << rep.columns[c] << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void write_text(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << content;
}

ConvergenceTable convergence_table(const std::vector<double>& scales,
                                   const std::function<ConvergenceRow(double)>& eval) {
    ConvergenceTable table;
    for (double s : scales) table.rows.push_back(eval(s));
    if (table.rows.size() < 2) {
        table.verdict = "insufficient data";
        return table;
    }
    bool improving = true;
    for (std::size_t i = 1; i < table.rows.size(); ++i)
        if (table.rows[i].rel_gap > table.rows[i - 1].rel_gap) improving = false;
    table.verdict = improving ? "improving" : "not-monotone";
    return table;
}

void append_convergence(ExperimentReport& rep, const ConvergenceTable& table) {
    rep.columns = {"scale", "value", "target", "rel_gap", "gap_nonincreasing"};
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& r = table.rows[i];
        const double mono =
            (i == 0 || r.rel_gap <= table.rows[i - 1].rel_gap) ? 1.0 : 0.0;
        rep.add_row(format_full(r.scale), {r.scale, r.value, r.target, r.rel_gap, mono});
    }
    rep.add_meta("trend_verdict", table.verdict);
}

}  // namespace zetalab
