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

#include "pqcopt/data/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pqcopt {

void Dataset::validate() const {
    if (features.size() != labels.size()) {
        throw std::invalid_argument("dataset " + name + ": feature/label row count mismatch");
    }
    if (labels.empty()) {
        throw std::invalid_argument("dataset " + name + " is empty");
    }
    const std::size_t width = n_features();
    for (const auto &row : features) {
        if (row.size() != width || width == 0) {
            throw std::invalid_argument("dataset " + name + ": ragged feature rows");
        }
        for (double v : row) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument("dataset " + name + ": non-finite feature value");
            }
        }
    }
    std::vector<bool> seen(static_cast<std::size_t>(std::max(n_classes, 0)), false);
    for (int y : labels) {
        if (y < 0 || y >= n_classes) {
            throw std::invalid_argument("dataset " + name + ": label out of range");
        }
        seen[static_cast<std::size_t>(y)] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw std::invalid_argument("dataset " + name + ": a class has no samples");
    }
}

std::map<int, std::size_t> Dataset::class_histogram() const {
    std::map<int, std::size_t> h;
    for (int y : labels) {
        ++h[y];
    }
    return h;
}

Dataset Dataset::subset(std::span<const std::size_t> rows) const {
    Dataset out{name, {}, {}, n_classes};
    out.features.reserve(rows.size());
    out.labels.reserve(rows.size());
    for (std::size_t r : rows) {
        out.features.push_back(features.at(r));
        out.labels.push_back(labels.at(r));
    }
    return out;
}

Dataset gen_synthetic(std::uint64_t seed, const SyntheticConfig &cfg) {
    if (cfg.n_samples < 4 || !(cfg.majority_fraction > 0.0 && cfg.majority_fraction < 1.0)) {
        throw std::invalid_argument("synthetic: need >= 4 samples and a fraction in (0, 1)");
    }
    Rng rng(seed);
    const int n0 = static_cast<int>(std::lround(cfg.n_samples * cfg.majority_fraction));
    const int n1 = cfg.n_samples - n0;
    const double s = cfg.class_sep;
    struct Cluster {
        double cx, cy;
        int label, count;
    };
    const Cluster clusters[4] = {
        {-s, -s, 0, n0 / 2},
        {+s, +s, 0, n0 - n0 / 2},
        {-s, +s, 1, n1 / 2},
        {+s, -s, 1, n1 - n1 / 2},
    };
    double mix[2][2];
    for (auto &r : mix) {
        for (double &v : r) {
            v = 2.0 * uniform01(rng) - 1.0;
        }
    }

    Dataset ds{"synthetic", {}, {}, 2};
    for (const Cluster &c : clusters) {
        for (int i = 0; i < c.count; ++i) {
            const double a = c.cx + standard_normal(rng);
            const double b = c.cy + standard_normal(rng);
            std::vector<double> row{a, b, 0.0, 0.0};
            for (int r = 0; r < 2; ++r) {
                row[2 + r] = mix[r][0] * a + mix[r][1] * b + cfg.redundant_noise * standard_normal(rng);
            }
            ds.features.push_back(std::move(row));
            ds.labels.push_back(c.label);
        }
    }
    if (cfg.flip_fraction > 0.0) {
        for (int &y : ds.labels) {
            if (uniform01(rng) < cfg.flip_fraction) {
                y = static_cast<int>(uniform_index(rng, 2));
            }
        }
    }
    std::vector<std::size_t> order(ds.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    shuffle(std::span(order), rng);
    Dataset shuffled = ds.subset(order);
    shuffled.validate();
    return shuffled;
}

std::filesystem::path default_iris_path() {
    return std::filesystem::path(PQCOPT_SOURCE_ROOT) / "data" / "iris.csv";
}

Dataset load_iris(const std::filesystem::path &path) {
    Dataset ds = read_csv(path, "iris");
    if (ds.size() != 150 || ds.n_features() != 4 || ds.n_classes != 3) {
        throw std::invalid_argument("iris fixture " + path.string() + " has unexpected shape");
    }
    return ds;
}

namespace {

double parse_double(const std::string &cell, const std::string &where) {
    double v = 0.0;
    const char *end = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(cell.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw std::invalid_argument("bad number '" + cell + "' in " + where);
    }
    return v;
}

} // namespace

Dataset read_csv(const std::filesystem::path &path, const std::string &name) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open dataset " + path.string());
    }
    Dataset ds{name.empty() ? path.stem().string() : name, {}, {}, 0};
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("dataset " + path.string() + " has no header");
    }
    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            header.push_back(cell);
        }
    }
    if (header.size() < 2 || header.back() != "label") {
        throw std::invalid_argument("dataset " + path.string() + ": header must end in 'label'");
    }
    int max_label = -1;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(cell);
        }
        if (cells.size() != header.size()) {
            throw std::invalid_argument("dataset " + path.string() + ": wrong column count");
        }
        std::vector<double> row;
        for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
            row.push_back(parse_double(cells[i], path.string()));
        }
        const double y = parse_double(cells.back(), path.string());
        if (y != std::floor(y) || y < 0) {
            throw std::invalid_argument("dataset " + path.string() + ": non-integer label");
        }
        ds.features.push_back(std::move(row));
        ds.labels.push_back(static_cast<int>(y));
        max_label = std::max(max_label, static_cast<int>(y));
    }
    ds.n_classes = max_label + 1;
    ds.validate();
    return ds;
}

void write_csv(const Dataset &ds, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    for (std::size_t j = 0; j < ds.n_features(); ++j) {
        out << 'f' << j << ',';
    }
    out << "label\n";
    char buf[32];
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (double v : ds.features[i]) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << buf << ',';
        }
        out << ds.labels[i] << '\n';
    }
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

std::vector<double> ScalingParams::apply(std::span<const double> row) const {
    if (row.size() != min.size()) {
        throw std::invalid_argument("scaling: feature width mismatch");
    }
    std::vector<double> out(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
        const double range = max[j] - min[j];
        if (range <= 0.0) {
            out[j] = 0.5 * (lo + hi);
            continue;
        }
        out[j] = std::clamp(lo + (row[j] - min[j]) / range * (hi - lo), lo, hi);
    }
    return out;
}

ScalingParams fit_scaling(const Dataset &ds, std::span<const std::size_t> fit_rows, double lo,
                          double hi) {
    if (fit_rows.empty()) {
        throw std::invalid_argument("scaling needs at least one fit row");
    }
    ScalingParams p{lo, hi, ds.features.at(fit_rows[0]), ds.features.at(fit_rows[0])};
    for (std::size_t r : fit_rows) {
        const auto &row = ds.features.at(r);
        for (std::size_t j = 0; j < row.size(); ++j) {
            p.min[j] = std::min(p.min[j], row[j]);
            p.max[j] = std::max(p.max[j], row[j]);
        }
    }
    return p;
}

std::pair<Dataset, ScalingParams> scale_features(const Dataset &ds,
                                                 std::span<const std::size_t> fit_rows,
                                                 double lo, double hi) {
    ScalingParams p = fit_scaling(ds, fit_rows, lo, hi);
    Dataset out = ds;
    for (auto &row : out.features) {
        row = p.apply(row);
    }
    return {std::move(out), std::move(p)};
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
stratified_split(std::span<const int> labels, double train_fraction, Rng &rng) {
    std::map<int, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        by_class[labels[i]].push_back(i);
    }
    std::vector<std::size_t> train, val;
    for (auto &[label, rows] : by_class) {
        shuffle(std::span(rows), rng);
        const auto n_train = static_cast<std::size_t>(
            std::lround(train_fraction * static_cast<double>(rows.size())));
        train.insert(train.end(), rows.begin(), rows.begin() + static_cast<long>(n_train));
        val.insert(val.end(), rows.begin() + static_cast<long>(n_train), rows.end());
    }
    std::sort(train.begin(), train.end());
    std::sort(val.begin(), val.end());
    return {std::move(train), std::move(val)};
}

} // namespace pqcopt
