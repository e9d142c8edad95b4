// Copyright 2026 The qbrain Authors
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

#include "qbrain/game_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qbrain {
namespace {

using nlohmann::json;

std::int64_t get_int(const json& v, const std::string& key) {
    if (!v.is_number_integer()) throw std::invalid_argument("game config: " + key + " must be an integer");
    return v.get<std::int64_t>();
}

}  // namespace

GameConfig parse_game_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("game config: malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("game config: top level must be an object");

    GameConfig cfg;
    for (const auto& [key, v] : doc.items()) {
        if (key == "road_length") {
            cfg.road_length = get_int(v, key);
        } else if (key == "detection_window") {
            cfg.detection_window = get_int(v, key);
        } else if (key == "spawn_horizon") {
            cfg.spawn_horizon = get_int(v, key);
        } else if (key == "spawn_prob") {
            if (!v.is_number()) throw std::invalid_argument("game config: spawn_prob must be a number");
            cfg.spawn_prob = v.get<double>();
        } else if (key == "min_gap") {
            cfg.min_gap = get_int(v, key);
        } else if (key == "max_ticks") {
            if (!v.is_null()) cfg.max_ticks = get_int(v, key);
        } else if (key == "seed") {
            if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
                throw std::invalid_argument("game config: seed must be a non-negative integer");
            }
            cfg.seed = v.get<std::uint64_t>();
        } else {
            throw std::invalid_argument("game config: unknown field \"" + key + "\"");
        }
    }
    cfg.validate();
    return cfg;
}

GameConfig load_game_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_game_config(buf.str());
}

std::string trace_line(const TickTrace& rec) {
    nlohmann::ordered_json obstacles = nlohmann::ordered_json::array();
    for (const auto& ob : rec.obstacles) {
        obstacles.push_back({{"track", ob.track}, {"row", ob.row}, {"dir", ob.direction}});
    }
    nlohmann::ordered_json line;
    line["tick"] = rec.tick;
    line["row"] = rec.after.row;
    line["left_lane"] = rec.after.left_lane;
    line["altitude"] = rec.after.altitude;
    line["s1"] = rec.sensors.s1 ? 1 : 0;
    line["s2"] = rec.sensors.s2 ? 1 : 0;
    line["m1"] = rec.motors.m1 ? 1 : 0;
    line["m2"] = rec.motors.m2 ? 1 : 0;
    line["m3"] = rec.motors.m3 ? 1 : 0;
    line["obstacles"] = std::move(obstacles);
    line["status"] = std::string(status_name(rec.status));
    return line.dump();
}

void write_trace_jsonl(std::ostream& os, std::span<const TickTrace> trace) {
    for (const auto& rec : trace) os << trace_line(rec) << '\n';
}

}  // namespace qbrain
