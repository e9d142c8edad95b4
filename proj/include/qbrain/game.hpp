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

// Lane game on a four-lane road.
//
// The robot is two lanes wide (left_lane and left_lane + 1, left_lane in
// 1..3) and advances one row per tick. Obstacles live only on the terminal
// lanes: track 1 is lane 1, track 2 is lane 4. Each obstacle moves one row
// per tick in a direction fixed at spawn, so an approaching obstacle closes
// two rows per tick and one moving with the robot keeps its offset.
//
// One tick, in order:
//   1. sense: s1 (s2) is set iff a track-1 (track-2) obstacle sits in rows
//      [row + 1, row + detection_window]
//   2. the brain maps (s1, s2) to (m1, m2, m3)
//   3. act: m3 lifts off (no lane change); otherwise m1 alone shifts right,
//      m2 alone shifts left, both keep the lane; row += 1 always
//   4. obstacles move
//   5. collision iff on the ground and an obstacle shares the robot's row and
//      one of its lanes
//   6. obstacles more than two rows behind are dropped, then new ones spawn
//   7. won at row >= road_length, timed out at tick >= max_ticks
//
// Spawning draws four values per tick from a splitmix64 stream: for track 1 a
// spawn coin then a direction coin, then the same for track 2. Both coins are
// drawn even when the track is blocked, so the stream position depends only
// on the tick count.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qbrain/brain.hpp"

namespace qbrain {

inline constexpr int kLaneCount = 4;
inline constexpr int kStartLeftLane = 2;

/// splitmix64 (Steele, Lea, Flood). Portable and bit-identical everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next();

    /// Uniform in [0, 1) with 53 bits of resolution.
    double next_unit();

    /// Fair coin from the top bit.
    bool next_bit() { return (next() >> 63) != 0; }

    std::uint64_t state() const { return state_; }

    friend bool operator==(const SplitMix64&, const SplitMix64&) = default;

private:
    std::uint64_t state_;
};

struct GameConfig {
    std::int64_t road_length = 100;
    std::int64_t detection_window = 3;
    std::int64_t spawn_horizon = 10;
    double spawn_prob = 0.15;
    std::int64_t min_gap = 2;
    /// Defaults to 4 * road_length when unset.
    std::optional<std::int64_t> max_ticks;
    std::uint64_t seed = 0;

    std::int64_t effective_max_ticks() const { return max_ticks.value_or(4 * road_length); }

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;

    friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

struct RobotPose {
    std::int64_t row = 0;
    int left_lane = kStartLeftLane;
    int altitude = 0;

    bool occupies_lane(int lane) const { return lane == left_lane || lane == left_lane + 1; }

    friend bool operator==(const RobotPose&, const RobotPose&) = default;
};

struct Obstacle {
    int track = 1;          ///< 1 or 2
    std::int64_t row = 0;
    int direction = -1;     ///< rows per tick, -1 or +1

    friend bool operator==(const Obstacle&, const Obstacle&) = default;
};

/// Lane a track runs on (1 -> 1, 2 -> 4).
int track_lane(int track);

enum class GameStatus { Running, Won, Collided, TimedOut };

std::string_view status_name(GameStatus status);

struct GameState {
    GameConfig config;
    RobotPose robot;
    std::vector<Obstacle> obstacles;
    SplitMix64 rng;
    std::int64_t tick = 0;
    GameStatus status = GameStatus::Running;

    /// Validates the config and seeds the generator; empty road, robot on lanes 2-3.
    static GameState start(const GameConfig& config);

    friend bool operator==(const GameState&, const GameState&) = default;
};

struct TickTrace {
    std::int64_t tick = 0;
    RobotPose before;
    RobotPose after;
    SensorInput sensors;
    MotorOutput motors;
    std::vector<Obstacle> obstacles;  ///< after movement, despawn and spawn
    GameStatus status = GameStatus::Running;

    friend bool operator==(const TickTrace&, const TickTrace&) = default;
};

struct EpisodeResult {
    GameStatus status = GameStatus::Running;
    std::int64_t ticks_elapsed = 0;
    std::optional<std::int64_t> collision_tick;
    std::vector<TickTrace> trace;

    friend bool operator==(const EpisodeResult&, const EpisodeResult&) = default;
};

SensorInput sense(const GameState& state);

/// Applies one motor command: lane change or lift-off, then advance one row.
void act(GameState& state, MotorOutput motors);

/// True when the robot is on the ground and shares a cell with an obstacle.
bool has_collision(const GameState& state);

void spawn_obstacles(GameState& state);

/// One full tick. Throws InvalidStateError unless the state is running.
TickTrace step(GameState& state, BrainKind brain);

/// Steps until the episode ends.
EpisodeResult run_episode(const GameConfig& config, BrainKind brain);

}  // namespace qbrain
