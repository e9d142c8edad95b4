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

// qbrain: command-line front end.
//
//   qbrain circuit-run    --input 01 [--lowered]
//   qbrain circuit-export [--out FILE]
//   qbrain drive          --s1 0 --s2 1 [--brain quantum|quantum-lowered|classical]
//   qbrain game-run       [--seed N] [--episodes K] [--config FILE] [--brain B]
//                         [--trace-out FILE] [--jobs J]
//
// Exit status: 0 ok, 1 a game episode collided, 2 usage error, 3 I/O error,
// 4 internal consistency failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qbrain/brain.hpp"
#include "qbrain/errors.hpp"
#include "qbrain/game.hpp"
#include "qbrain/game_io.hpp"
#include "qbrain/qasm.hpp"

namespace {

using namespace qbrain;

constexpr int kExitCollision = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BrainKind brain_or_throw(const std::string& name) {
    if (auto kind = parse_brain(name)) return *kind;
    throw UsageError("unknown brain \"" + name + "\"");
}

int circuit_run(const std::string& input, bool lowered) {
    if (input.size() != 2 || (input[0] != '0' && input[0] != '1') ||
        (input[1] != '0' && input[1] != '1')) {
        throw UsageError("--input must be one of 00, 01, 10, 11");
    }
    const SensorInput in{input[0] == '1', input[1] == '1'};
    const auto dist = robot_outcomes(in, lowered);
    std::printf("input=%s lowered=%s\n", input.c_str(), lowered ? "true" : "false");
    for (std::size_t k = 0; k < dist.outcome_count(); ++k) {
        std::printf("%s %.6f\n", dist.bitstring(k).c_str(), dist.probability(k));
    }
    return 0;
}

int circuit_export(const std::optional<std::string>& out) {
    const std::string text = export_qasm(lowered_robot_circuit(), RobotLayout::kMeasured);
    if (!out) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(*out, std::ios::binary);
    if (!f) throw IoError("cannot open " + *out + " for writing");
    f << text;
    f.close();
    if (!f) throw IoError("failed writing " + *out);
    return 0;
}

int drive_cmd(int s1, int s2, const std::string& brain) {
    const auto kind = brain_or_throw(brain);
    const auto out = drive_with(kind, SensorInput{s1 == 1, s2 == 1});
    std::printf("%d %d %d %s\n", out.m1 ? 1 : 0, out.m2 ? 1 : 0, out.m3 ? 1 : 0,
                std::string(behavior_label(out)).c_str());
    return 0;
}

struct GameRunOptions {
    std::optional<std::uint64_t> seed;
    std::int64_t episodes = 1;
    std::optional<std::string> config_path;
    std::string brain = "quantum";
    std::optional<std::string> trace_out;
    int jobs = 1;
};

int game_run(const GameRunOptions& opt) {
    const auto kind = brain_or_throw(opt.brain);
    if (opt.episodes < 1) throw UsageError("--episodes must be >= 1");
    if (opt.jobs < 1) throw UsageError("--jobs must be >= 1");

    GameConfig base;
    if (opt.config_path) {
        try {
            base = load_game_config(*opt.config_path);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        } catch (const std::runtime_error& e) {
            throw IoError(e.what());
        }
    }
    if (opt.seed) base.seed = *opt.seed;

    std::optional<std::ofstream> trace_file;
    if (opt.trace_out) {
        trace_file.emplace(*opt.trace_out, std::ios::binary);
        if (!*trace_file) throw IoError("cannot open " + *opt.trace_out + " for writing");
    }

    // Episode i uses seed base.seed + i; results are reported in that order.
    const auto n = static_cast<std::size_t>(opt.episodes);
    std::vector<EpisodeResult> results(n);
    auto run_range = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < n; i += stride) {
            GameConfig cfg = base;
            cfg.seed = base.seed + i;
            results[i] = run_episode(cfg, kind);
        }
    };
    const auto workers = static_cast<std::size_t>(opt.jobs);
    std::vector<std::future<void>> pending;
    for (std::size_t w = 1; w < workers; ++w) pending.push_back(std::async(std::launch::async, run_range, w, workers));
    run_range(0, workers);
    for (auto& f : pending) f.get();

    std::int64_t wins = 0, collisions = 0, timeouts = 0, total_ticks = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& r = results[i];
        std::printf("seed=%llu status=%s ticks=%lld\n",
                    static_cast<unsigned long long>(base.seed + i),
                    std::string(status_name(r.status)).c_str(),
                    static_cast<long long>(r.ticks_elapsed));
        wins += r.status == GameStatus::Won;
        collisions += r.status == GameStatus::Collided;
        timeouts += r.status == GameStatus::TimedOut;
        total_ticks += r.ticks_elapsed;
        if (trace_file) write_trace_jsonl(*trace_file, r.trace);
    }
    if (trace_file) {
        trace_file->close();
        if (!*trace_file) throw IoError("failed writing " + *opt.trace_out);
    }
    std::printf("episodes=%lld wins=%lld collisions=%lld timeouts=%lld mean_ticks=%.6f\n",
                static_cast<long long>(n), static_cast<long long>(wins),
                static_cast<long long>(collisions), static_cast<long long>(timeouts),
                static_cast<double>(total_ticks) / static_cast<double>(n));
    return collisions > 0 ? kExitCollision : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Braitenberg vehicle: circuit simulation, QASM export and lane game"};
    app.require_subcommand(1);

    std::string input;
    bool lowered = false;
    auto* run = app.add_subcommand("circuit-run", "Print the motor outcome distribution for one sensor input");
    run->add_option("--input", input, "Sensor bits s1s2 (00, 01, 10, 11)")->required();
    run->add_flag("--lowered", lowered, "Simulate the Clifford+T lowered circuit");

    std::optional<std::string> export_out;
    auto* exp = app.add_subcommand("circuit-export", "Write the lowered robot circuit as OpenQASM 2.0");
    exp->add_option("--out", export_out, "Output file (standard output if omitted)");

    int s1 = 0, s2 = 0;
    std::string drive_brain = "quantum";
    auto* drv = app.add_subcommand("drive", "Print the motor command for one sensor input");
    drv->add_option("--s1", s1, "First sensor bit")->required()->check(CLI::IsMember({0, 1}));
    drv->add_option("--s2", s2, "Second sensor bit")->required()->check(CLI::IsMember({0, 1}));
    drv->add_option("--brain", drive_brain, "quantum, quantum-lowered or classical");

    GameRunOptions game;
    auto* gr = app.add_subcommand("game-run", "Run seeded lane-game episodes");
    gr->add_option("--seed", game.seed, "Seed of the first episode; episode i uses seed + i");
    gr->add_option("--episodes", game.episodes, "Number of episodes");
    gr->add_option("--config", game.config_path, "Game config JSON");
    gr->add_option("--brain", game.brain, "quantum, quantum-lowered or classical");
    gr->add_option("--trace-out", game.trace_out, "Write per-tick JSONL traces, episodes in seed order");
    gr->add_option("--jobs", game.jobs, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*run) return circuit_run(input, lowered);
        if (*exp) return circuit_export(export_out);
        if (*drv) return drive_cmd(s1, s2, drive_brain);
        if (*gr) return game_run(game);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const InternalConsistencyError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
