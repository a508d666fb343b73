#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torus/engine.hpp"

namespace torus {

// One recorded grid state: owners and strengths, row-major. Productions are
// stored once per replay since they never change.
struct Frame {
    std::vector<std::uint8_t> owners;
    std::vector<std::uint8_t> strengths;
    bool operator==(const Frame&) const = default;
};

struct Ejection {
    int player = 0;
    int turn = 0;  // frame index whose step the player missed
    std::string reason;
    bool operator==(const Ejection&) const = default;
};

// How the map came to be; lets a replay regenerate its map exactly.
struct GeneratorInfo {
    std::string type = "external";  // "noise" for generated maps
    int players = 0;
    double gamma = 0.0;
    bool operator==(const GeneratorInfo&) const = default;
};

struct Replay {
    int version = 1;
    int width = 0;
    int height = 0;
    int numPlayers = 0;
    std::vector<std::string> playerNames;
    std::uint64_t seed = 0;
    GeneratorInfo generator;
    std::vector<std::uint8_t> productions;
    std::vector<Frame> frames;                    // frames.size() == turns + 1
    std::vector<std::vector<MoveSet>> moves;      // moves[t][player-1], Still omitted
    std::vector<int> ranks;                       // ranks[player-1], permutation of 1..P
    std::vector<Ejection> ejections;

    int turns() const { return static_cast<int>(moves.size()); }
    Frame frameOf(const GameState& state) const;
    bool operator==(const Replay&) const = default;
};

Frame frameOf(const GameState& state);
Frame frameOf(const GameMap& map);

// Reconstructs the full game state at frame t of a replay (alive players are
// those owning at least one site).
GameState stateAt(const Replay& r, int t);

// Replay persistence: a single self-describing JSON document, conventionally
// with a .hltr extension. Reading validates the schema and reports the field
// path of the first violation; a truncated or tampered file never yields a
// partial replay.
void writeReplay(const Replay& r, const std::string& path);
std::string replayToJson(const Replay& r);
Replay readReplay(const std::string& path);
Replay replayFromJson(const std::string& text, const std::string& name = "replay");

struct PlayerStats {
    int territory = 0;
    long long totalStrength = 0;
    long long totalProduction = 0;
};

// Per-owner aggregates at frame t. Index 0 is the neutral owner, so the
// territories of all entries sum to W*H. Out-of-range t raises ConfigError.
std::vector<PlayerStats> frameStats(const Replay& r, int t);

// log10 of the number of joint move sets available with `pieceCount` pieces,
// five choices each: pieceCount * log10(5).
double branchingLog10(long long pieceCount);

// Gini coefficient of the replay's production array.
double replayGini(const Replay& r);

// Nearest-0.01 rounding used when histogramming Gini coefficients.
double roundToHundredth(double v);

struct VerifyResult {
    bool ok = true;
    std::string message;  // first failure, empty when ok
};

// Re-executes every recorded transition: feeding frame t and the recorded
// moves (after applying that turn's ejections) into step must reproduce
// frame t+1 exactly. Also checks structural invariants: strengths in range,
// ownership partition, production immutability, rank permutation.
VerifyResult verifyReplay(const Replay& r);

}  // namespace torus
