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

#include "pqcopt/bopt/trial_log.hpp"

#include <sstream>
#include <stdexcept>

namespace pqcopt {

using nlohmann::json;

json trial_to_json(const Trial &t) {
    json doc{{"id", t.id},
             {"assignment", t.assignment},
             {"objectives", t.objectives},
             {"state", std::string(to_string(t.state))},
             {"seed", t.seed},
             {"wall_time", t.wall_time}};
    if (!t.error.empty()) {
        doc["error"] = t.error;
    }
    return doc;
}

Trial trial_from_json(const json &doc) {
    Trial t;
    t.id = doc.at("id").get<int>();
    t.assignment = doc.at("assignment").get<std::vector<int>>();
    t.objectives = doc.at("objectives").get<std::vector<double>>();
    t.state = parse_trial_state(doc.at("state").get<std::string>());
    t.seed = doc.at("seed").get<std::uint64_t>();
    t.wall_time = doc.at("wall_time").get<double>();
    t.error = doc.value("error", std::string{});
    return t;
}

TrialLogWriter::TrialLogWriter(const std::filesystem::path &path) {
    bool needs_newline = false;
    if (std::filesystem::exists(path) && std::filesystem::file_size(path) > 0) {
        std::ifstream in(path, std::ios::binary);
        in.seekg(-1, std::ios::end);
        needs_newline = in.get() != '\n';
    }
    out_.open(path, std::ios::app);
    if (!out_) {
        throw std::runtime_error("cannot open trial log " + path.string());
    }
    if (needs_newline) {
        out_ << '\n';
    }
}

void TrialLogWriter::write(const Trial &t) {
    out_ << trial_to_json(t).dump() << '\n';
    out_.flush();
    if (!out_) {
        throw std::runtime_error("trial log write failed");
    }
}

std::vector<Trial> read_trial_log(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open trial log " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    std::vector<Trial> trials;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos < text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const bool terminated = nl != std::string::npos;
        const std::string line = text.substr(pos, terminated ? nl - pos : std::string::npos);
        pos = terminated ? nl + 1 : text.size();
        ++line_no;
        if (line.empty()) {
            continue;
        }
        json doc;
        try {
            doc = json::parse(line);
        } catch (const json::parse_error &) {
            continue; // torn write from an interrupted run
        }
        try {
            trials.push_back(trial_from_json(doc));
        } catch (const std::exception &e) {
            throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) +
                                        ": malformed trial record: " + e.what());
        }
    }
    return trials;
}

} // namespace pqcopt
