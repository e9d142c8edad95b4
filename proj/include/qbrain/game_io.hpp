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

// JSON config input and JSONL trace output for the lane game.

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "qbrain/game.hpp"

namespace qbrain {

/// Parses a JSON object whose keys are GameConfig field names (road_length,
/// detection_window, spawn_horizon, spawn_prob, min_gap, max_ticks, seed).
/// Absent keys keep their defaults. Unknown keys, wrong types and invalid
/// values throw std::invalid_argument.
GameConfig parse_game_config(std::string_view json_text);

/// Reads and parses a config file. Throws std::runtime_error if unreadable.
GameConfig load_game_config(const std::string& path);

/// One JSON object, no trailing newline, keys in this order:
/// tick, row, left_lane, altitude, s1, s2, m1, m2, m3, obstacles, status.
/// Pose fields are the pose after the tick; obstacles are {track, row, dir}.
std::string trace_line(const TickTrace& rec);

/// One trace_line per record, each followed by '\n'.
void write_trace_jsonl(std::ostream& os, std::span<const TickTrace> trace);

}  // namespace qbrain
