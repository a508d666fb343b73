#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "torus/engine.hpp"
#include "torus/replay.hpp"

namespace torus::protocol {

// ---- Wire encoding -------------------------------------------------------
//
// Newline-delimited, space-separated decimal text. A frame line is the
// run-length-encoded owner list ("count owner" pairs summing to W*H,
// row-major) followed by all W*H strengths. The init message is four lines:
// player id, "W H", the W*H productions, and the initial frame line.

std::string encodeInit(int playerId, const GameMap& map);
std::string encodeFrame(const GameMap& map);
std::string encodeFrame(const GameState& state);

struct DecodedFrame {
    std::vector<std::uint8_t> owners;
    std::vector<std::uint8_t> strengths;
};

// Strict decoders; malformed text raises ReadError.
DecodedFrame decodeFrame(const std::string& line, int width, int height);

struct DecodedInit {
    int playerId = 0;
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> productions;
    DecodedFrame first;
};

DecodedInit decodeInit(const std::string& fourLines);

// Applies a decoded frame onto a map (owners and strengths; productions stay).
void applyFrame(GameMap& map, const DecodedFrame& frame);

// Parses a move line: whitespace-separated "x y dir" triples; the empty line
// is a valid empty move set. Returns nullopt for anything else (dangling
// tokens, non-integers, direction outside 0..4) -- the caller ejects the bot.
std::optional<MoveSet> parseMoves(const std::string& line);

// ---- Bot sessions ---------------------------------------------------------

enum class EjectReason { none, timeout, closed, malformed };
const char* ejectReasonName(EjectReason r);

enum class SessionState { spawned, named, playing, ejected, closed };

struct SessionConfig {
    std::vector<std::string> command;  // argv, executed without a shell
    std::string stderrPath;            // empty -> /dev/null
    int initDeadlineMs = 15000;
    int turnDeadlineMs = 1000;
    std::size_t maxLineBytes = 1 << 20;
};

// A child process speaking the wire protocol on its standard streams. All
// reads and writes respect the configured deadlines; any violation ejects
// the bot with a machine-readable reason and terminates the process.
class BotSession {
public:
    explicit BotSession(SessionConfig config);
    ~BotSession();
    BotSession(const BotSession&) = delete;
    BotSession& operator=(const BotSession&) = delete;

    // Sends the init message and waits for the bot's name line.
    std::optional<std::string> handshake(int playerId, const GameMap& map);

    // Sends one frame line and waits for the move line.
    std::optional<MoveSet> requestMoves(const std::string& frameLine);

    SessionState state() const { return state_; }
    EjectReason ejectReason() const { return reason_; }
    const std::string& name() const { return name_; }

    // Graceful termination (SIGTERM, then SIGKILL).
    void close();

private:
    void eject(EjectReason reason);
    std::optional<std::string> readLine(int deadlineMs);
    bool writeAll(const std::string& data, int deadlineMs);

    SessionConfig config_;
    SessionState state_ = SessionState::spawned;
    EjectReason reason_ = EjectReason::none;
    std::string name_;
    std::string readBuffer_;
    int pid_ = -1;
    int stdinFd_ = -1;
    int stdoutFd_ = -1;
};

// Splits a bot command string on whitespace into an argv. No shell quoting
// is interpreted; see README.
std::vector<std::string> splitCommand(const std::string& command);

struct MatchOptions {
    int turnLimit = 0;  // 0 -> defaultTurnLimit
    int initDeadlineMs = 15000;
    int turnDeadlineMs = 1000;
    std::string logDir;   // per-bot stderr logs when non-empty
    std::string logTag;   // filename prefix for this match's logs
};

// Plays one full game between subprocess bots on the given map. Sessions are
// serviced in player-id order every turn; any protocol violation ejects the
// offending bot and the game continues.
Replay playMatch(const std::vector<std::vector<std::string>>& botCommands,
                 const GameMap& map, const MatchOptions& options = {});

}  // namespace torus::protocol
