#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "torus/errors.hpp"

namespace torus {

// Direction codes are part of the wire protocol and the replay format; the
// numeric values must stay stable. NORTH decrements the row, EAST increments
// the column, both with toroidal wrap.
enum class Direction : std::uint8_t {
    Still = 0,
    North = 1,
    East = 2,
    South = 3,
    West = 4,
};

inline constexpr std::array<Direction, 5> kAllDirections = {
    Direction::Still, Direction::North, Direction::East, Direction::South, Direction::West};

inline constexpr std::array<Direction, 4> kCardinals = {
    Direction::North, Direction::East, Direction::South, Direction::West};

const char* directionName(Direction d);

// Grid coordinate: x is the column (0..W-1), y the row (0..H-1). Raw moves
// may carry out-of-range coordinates until validateMoves drops them.
struct Location {
    int x = 0;
    int y = 0;
    bool operator==(const Location&) const = default;
};

// One cell of the grid. owner 0 is neutral; production never changes for the
// duration of a game.
struct Site {
    std::uint8_t owner = 0;
    std::uint8_t strength = 0;
    std::uint8_t production = 0;
    bool operator==(const Site&) const = default;
};

struct GameMap {
    int width = 0;
    int height = 0;
    std::vector<Site> sites;  // row-major, sites[y * width + x]

    GameMap() = default;
    GameMap(int w, int h) : width(w), height(h), sites(static_cast<std::size_t>(w) * h) {}

    int size() const { return width * height; }
    int index(int x, int y) const { return y * width + x; }
    int index(Location l) const { return l.y * width + l.x; }
    bool inBounds(Location l) const {
        return l.x >= 0 && l.x < width && l.y >= 0 && l.y < height;
    }
    Site& at(Location l) { return sites[index(l)]; }
    const Site& at(Location l) const { return sites[index(l)]; }
    Site& at(int x, int y) { return sites[index(x, y)]; }
    const Site& at(int x, int y) const { return sites[index(x, y)]; }

    bool operator==(const GameMap&) const = default;
};

// Toroidal neighbor; Still returns loc unchanged. Dimensions must be positive.
Location neighbor(Location loc, Direction dir, int width, int height);

struct Move {
    Location loc;
    Direction dir = Direction::Still;
    bool operator==(const Move&) const = default;
};

using MoveSet = std::vector<Move>;

// Full game state at one turn. Players not alive own zero sites; their
// eliminationTurn records the frame index at which they first owned none.
struct GameState {
    GameMap map;
    int turn = 0;
    int numPlayers = 0;
    std::vector<std::uint8_t> alive;     // indexed by player id, [0] unused
    std::vector<int> eliminationTurn;    // indexed by player id, -1 while alive

    bool isAlive(int player) const {
        return player >= 1 && player <= numPlayers && alive[player] != 0;
    }
    int aliveCount() const;
    int territory(int owner) const;  // owner 0 counts neutral sites
};

// Builds the turn-0 state. numPlayers is taken from the highest owner id on
// the map; every player 1..numPlayers must own at least one site.
GameState initialState(GameMap map);

struct ValidatedMoves {
    MoveSet moves;   // one entry per owned site, row-major, Still by default
    int dropped = 0; // raw moves discarded (out of range or unowned)
};

// Sanitizes an arbitrary raw move list for one player. Never fails: invalid
// moves are dropped, duplicates resolve last-wins, unmentioned owned sites
// default to Still.
ValidatedMoves validateMoves(const MoveSet& raw, const GameState& state, int player);

// Advances the state by one turn, resolving all players' moves
// simultaneously: production, movement, same-owner merging, combat, capture,
// elimination. movesByPlayer is indexed by player id (entries beyond the
// vector's size are treated as all-Still). Moves must already be validated;
// a move for a site the player does not own is an EngineFault.
GameState step(const GameState& state, const std::vector<MoveSet>& movesByPlayer);

// floor(10 * sqrt(W * H)): 200..500 turns across the generated size range.
int defaultTurnLimit(int width, int height);

bool gameOver(const GameState& state, int turnLimit);

struct RankEntry {
    int player = 0;
    int rank = 0;  // 1 = winner
};

// Ranks all players once the game is over (at most one player alive, or the
// turn limit reached). Later elimination ranks better; survivors are ordered
// by territory, then total strength, then lower id. Calling this mid-game is
// a contract violation.
std::vector<RankEntry> finalRanks(const GameState& state, int turnLimit);

// Thrown by a move provider to signal that its player must be ejected from
// the game (subprocess timeout, closed stream, malformed output, ...).
struct PolicyFailure {
    std::string reason;
};

// Callback supplying one player's raw moves for the current frame.
using MoveProvider = std::function<MoveSet(const GameState&, int player)>;

struct RunOptions {
    int turnLimit = 0;  // 0 selects defaultTurnLimit
    std::vector<std::string> playerNames;
};

struct Replay;  // defined in torus/replay.hpp

// Runs a full game: validate + step until a single player remains or the
// turn limit is hit. A provider that throws PolicyFailure (or any exception)
// is ejected: its sites turn neutral keeping their strength, and the game
// continues. Returns the complete replay.
Replay runGame(const GameMap& map, const std::vector<MoveProvider>& providers,
               const RunOptions& options = {});

}  // namespace torus
