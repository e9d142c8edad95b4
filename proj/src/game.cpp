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

#include "qbrain/game.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qbrain/errors.hpp"

namespace qbrain {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

void GameConfig::validate() const {
    auto fail = [](const std::string& msg) { throw std::invalid_argument("game config: " + msg); };
    if (road_length < 1) fail("road_length must be >= 1");
    if (detection_window < 2) fail("detection_window must be >= 2");
    if (spawn_horizon <= detection_window) fail("spawn_horizon must exceed detection_window");
    if (!(spawn_prob >= 0.0 && spawn_prob <= 1.0)) fail("spawn_prob must be in [0, 1]");
    if (min_gap < 0) fail("min_gap must be >= 0");
    if (effective_max_ticks() < 1) fail("max_ticks must be >= 1");
}

int track_lane(int track) {
    if (track == 1) return 1;
    if (track == 2) return kLaneCount;
    throw std::invalid_argument("track must be 1 or 2");
}

std::string_view status_name(GameStatus status) {
    switch (status) {
        case GameStatus::Running: return "running";
        case GameStatus::Won: return "won";
        case GameStatus::Collided: return "collided";
        case GameStatus::TimedOut: return "timed_out";
    }
    return "?";
}

GameState GameState::start(const GameConfig& config) {
    config.validate();
    GameState s;
    s.config = config;
    s.rng = SplitMix64(config.seed);
    return s;
}

SensorInput sense(const GameState& state) {
    const auto lo = state.robot.row + 1;
    const auto hi = state.robot.row + state.config.detection_window;
    SensorInput in;
    for (const auto& ob : state.obstacles) {
        if (ob.row < lo || ob.row > hi) continue;
        (ob.track == 1 ? in.s1 : in.s2) = true;
    }
    return in;
}

void act(GameState& state, MotorOutput motors) {
    auto& robot = state.robot;
    if (motors.m3) {
        robot.altitude = 1;
    } else {
        robot.altitude = 0;
        if (motors.m1 && !motors.m2) {
            robot.left_lane = std::min(robot.left_lane + 1, kLaneCount - 1);
        } else if (!motors.m1 && motors.m2) {
            robot.left_lane = std::max(robot.left_lane - 1, 1);
        }
    }
    robot.row += 1;
}

bool has_collision(const GameState& state) {
    if (state.robot.altitude != 0) return false;
    return std::any_of(state.obstacles.begin(), state.obstacles.end(), [&](const Obstacle& ob) {
        return ob.row == state.robot.row && state.robot.occupies_lane(track_lane(ob.track));
    });
}

void spawn_obstacles(GameState& state) {
    const auto spawn_row = state.robot.row + state.config.spawn_horizon;
    for (int track : {1, 2}) {
        const bool coin = state.rng.next_unit() < state.config.spawn_prob;
        const int direction = state.rng.next_bit() ? +1 : -1;
        if (!coin) continue;
        const bool blocked =
            std::any_of(state.obstacles.begin(), state.obstacles.end(), [&](const Obstacle& ob) {
                return ob.track == track && std::abs(ob.row - spawn_row) <= state.config.min_gap;
            });
        if (!blocked) state.obstacles.push_back({track, spawn_row, direction});
    }
}

TickTrace step(GameState& state, BrainKind brain) {
    if (state.status != GameStatus::Running) {
        throw InvalidStateError("step called on a finished episode (status " +
                                std::string(status_name(state.status)) + ")");
    }
    TickTrace rec;
    rec.tick = state.tick;
    rec.before = state.robot;

    rec.sensors = sense(state);
    rec.motors = drive_with(brain, rec.sensors);
    act(state, rec.motors);

    for (auto& ob : state.obstacles) ob.row += ob.direction;

    const bool collided = has_collision(state);

    const auto behind = state.robot.row - 2;
    std::erase_if(state.obstacles, [&](const Obstacle& ob) { return ob.row < behind; });
    spawn_obstacles(state);

    state.tick += 1;
    if (collided) {
        state.status = GameStatus::Collided;
    } else if (state.robot.row >= state.config.road_length) {
        state.status = GameStatus::Won;
    } else if (state.tick >= state.config.effective_max_ticks()) {
        state.status = GameStatus::TimedOut;
    }

    rec.after = state.robot;
    rec.obstacles = state.obstacles;
    rec.status = state.status;
    return rec;
}

EpisodeResult run_episode(const GameConfig& config, BrainKind brain) {
    GameState state = GameState::start(config);
    EpisodeResult result;
    while (state.status == GameStatus::Running) {
        result.trace.push_back(step(state, brain));
        if (state.status == GameStatus::Collided) result.collision_tick = result.trace.back().tick;
    }
    result.status = state.status;
    result.ticks_elapsed = state.tick;
    return result;
}

}  // namespace qbrain
