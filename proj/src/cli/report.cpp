// Copyright 2026 The pqcopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pqcopt/cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>

namespace pqcopt {

namespace fs = std::filesystem;

namespace {

std::string fixed(double v, int digits) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string xml_escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '&':
            out += "&amp;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

} // namespace

std::vector<ReportRow> build_report(std::span<const RoleReport> entries) {
    std::vector<ReportRow> rows;
    std::map<std::string, std::size_t> reference;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto &e = entries[i];
        rows.push_back({e.report.ansatz_id, e.report.mode, e.report.mean, e.report.std, std::nullopt, false});
        if (e.role != "baseline") {
            continue;
        }
        auto it = reference.find(e.report.mode);
        if (it == reference.end() || e.report.mean > entries[it->second].report.mean) {
            reference[e.report.mode] = i;
        }
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        reference.try_emplace(entries[i].report.mode, i);
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::size_t ref = reference.at(entries[i].report.mode);
        if (ref == i) {
            rows[i].reference = true;
            continue;
        }
        try {
            rows[i].cohens_d = cohens_d(entries[i].report.accuracies, entries[ref].report.accuracies);
        } catch (const std::exception &) {
            // too few values or zero spread: undefined, left empty
        }
    }
    return rows;
}

std::string report_csv(std::span<const ReportRow> rows) {
    std::string csv = "design,environment,mean,std,cohens_d,reference\n";
    for (const auto &r : rows) {
        csv += r.design + "," + r.environment + "," + fixed(r.mean, 6) + "," + fixed(r.std, 6) + "," +
               (r.cohens_d ? fixed(*r.cohens_d, 4) : "") + "," + (r.reference ? "1" : "0") + "\n";
    }
    return csv;
}

std::string report_svg(std::span<const ReportRow> rows) {
    const int bar = 48, gap = 28, left = 60, top = 30, height = 260;
    const int width = left + static_cast<int>(rows.size()) * (bar + gap) + gap;
    const int total_h = top + height + 120;
    auto y_of = [&](double v) { return top + height - v * height; };
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
                    "\" height=\"" + std::to_string(total_h) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int t = 0; t <= 10; t += 2) {
        const double v = t / 10.0;
        const std::string y = fixed(y_of(v), 1);
        s += "<line x1=\"" + std::to_string(left) + "\" x2=\"" + std::to_string(width) + "\" y1=\"" + y +
             "\" y2=\"" + y + "\" stroke=\"#ddd\"/>\n";
        s += "<text x=\"" + std::to_string(left - 6) + "\" y=\"" + y + "\" text-anchor=\"end\">" +
             fixed(v, 1) + "</text>\n";
    }
    s += "<text x=\"14\" y=\"" + std::to_string(top + height / 2) +
         "\" transform=\"rotate(-90 14 " + std::to_string(top + height / 2) +
         ")\" text-anchor=\"middle\">mean accuracy</text>\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto &r = rows[i];
        const int x = left + gap + static_cast<int>(i) * (bar + gap);
        const char *fill = r.environment == "noisy" ? "#d9822b" : "#3572a5";
        const double m = std::clamp(r.mean, 0.0, 1.0);
        s += "<rect x=\"" + std::to_string(x) + "\" y=\"" + fixed(y_of(m), 1) + "\" width=\"" +
             std::to_string(bar) + "\" height=\"" + fixed(m * height, 1) + "\" fill=\"" + fill + "\"/>\n";
        const std::string cx = std::to_string(x + bar / 2);
        const std::string lo = fixed(y_of(std::clamp(r.mean - r.std, 0.0, 1.0)), 1);
        const std::string hi = fixed(y_of(std::clamp(r.mean + r.std, 0.0, 1.0)), 1);
        s += "<line x1=\"" + cx + "\" x2=\"" + cx + "\" y1=\"" + lo + "\" y2=\"" + hi + "\" stroke=\"black\"/>\n";
        for (const auto &y : {lo, hi}) {
            s += "<line x1=\"" + std::to_string(x + bar / 2 - 6) + "\" x2=\"" + std::to_string(x + bar / 2 + 6) +
                 "\" y1=\"" + y + "\" y2=\"" + y + "\" stroke=\"black\"/>\n";
        }
        std::string label = xml_escape(r.design) + " [" + xml_escape(r.environment) + "]";
        if (r.cohens_d) {
            label += " d=" + fixed(*r.cohens_d, 2);
        }
        const std::string ly = std::to_string(top + height + 12);
        s += "<text x=\"" + cx + "\" y=\"" + ly + "\" transform=\"rotate(35 " + cx + " " + ly + ")\">" + label +
             "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

std::vector<ReportRow> cmd_report(std::span<const fs::path> run_dirs, const fs::path &out, bool force) {
    if (run_dirs.empty()) {
        throw std::invalid_argument("report needs at least one run directory");
    }
    std::vector<RoleReport> entries;
    for (const auto &dir : run_dirs) {
        auto e = read_evals(dir);
        entries.insert(entries.end(), e.begin(), e.end());
    }
    if (entries.empty()) {
        throw std::invalid_argument("no evaluation reports found in the given runs");
    }
    fs::create_directories(out);
    if (!force && fs::exists(out / "report.csv")) {
        throw std::runtime_error((out / "report.csv").string() + " exists; pass --force to overwrite");
    }
    auto rows = build_report(entries);
    const std::string csv = report_csv(rows);
    for (const char *name : {"report.csv", "summary.csv"}) {
        std::ofstream(out / name, std::ios::binary) << csv;
    }
    std::ofstream(out / "report.svg", std::ios::binary) << report_svg(rows);
    return rows;
}

} // namespace pqcopt
