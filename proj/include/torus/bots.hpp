#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "torus/engine.hpp"
#include "torus/rng.hpp"

namespace torus::bots {

// A move policy with per-game private memory. decide() is called once per
// frame, in frame order, and must emit moves only for sites the player owns.
// Given the same frame sequence and seed a policy is fully deterministic.
class Policy {
public:
    virtual ~Policy() = default;
    virtual MoveSet decide(const GameState& state, int player) = 0;
    virtual const char* name() const = 0;
};

// Every owned piece moves in an independently uniform direction among the
// five choices.
std::unique_ptr<Policy> makeRandomPolicy(std::uint64_t seed);

// Every owned piece holds still.
std::unique_ptr<Policy> makeStillPolicy();

// Greedy expansion baseline: border pieces capture the adjacent non-owned
// site with the best production/strength ratio once strong enough; interior
// pieces bank strength to five times their production, then march to the
// nearest border.
std::unique_ptr<Policy> makeExpanderPolicy();

// Wraps another policy with a non-aggression filter: moves that would bring
// a piece near an opponent that has never attacked us are rewritten to
// Still. Once an opponent makes contact it is flagged an aggressor forever
// and the inner policy's moves pass through unchanged for it.
std::unique_ptr<Policy> makeNapPolicy(std::unique_ptr<Policy> inner);

// Factory for the bundled policies: "random", "still", "expander",
// "nap-expander". Unknown names raise ConfigError.
std::unique_ptr<Policy> makePolicy(const std::string& name, std::uint64_t seed);
const std::vector<std::string>& policyNames();

// Adapts a policy to the engine's callback interface.
MoveProvider asProvider(std::shared_ptr<Policy> policy);

// Runs a policy as a wire-protocol client: reads the init message from `in`,
// answers with the bot's name, then serves one move line per frame line
// until the stream closes. This is what `torus-arena bot <policy>` executes.
int runProtocolClient(std::istream& in, std::ostream& out, Policy& policy);

}  // namespace torus::bots
