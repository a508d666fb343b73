#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "torus/engine.hpp"

namespace torus::mapgen {

struct MapGenParams {
    int players = 2;             // 2..6
    std::uint64_t seed = 0;
    std::optional<int> width;    // drawn in 20..50 when unset
    std::optional<int> height;
    std::optional<double> gamma; // concentration exponent >= 1, drawn in [1, 3.5] when unset
};

// A generated map together with the parameter values that were actually used
// (drawn fields resolved), so the map can be regenerated from a replay.
struct GeneratedMap {
    GameMap map;
    int players = 0;
    std::uint64_t seed = 0;
    int width = 0;
    int height = 0;
    double gamma = 1.0;
};

// Seeded, fair map generator. Production is multi-octave toroidal value
// noise raised to gamma and quantized to 0..15; neutral strengths correlate
// with production; each player gets one strength-255 start site, and every
// player's surroundings are an exact translate of every other's.
// Explicit dimensions that cannot accommodate the player tiling (or fall
// outside 20..50) raise ConfigError.
GeneratedMap generateMap(const MapGenParams& params);

// Mean-absolute-difference Gini coefficient:
//   G = sum_ij |x_i - x_j| / (2 n sum_j x_j)
// Result lies in [0, 1 - 1/n]; 0 iff all values are equal. Empty, all-zero or
// negative input raises ConfigError.
double giniCoefficient(const std::vector<double>& values);

// Gini of a map's production array.
double productionGini(const GameMap& map);

// Plain-text map format: line 1 "W H", then W*H productions, W*H strengths,
// W*H owners, each space-separated and row-major.
std::string saveMapText(const GameMap& map);
GameMap loadMapText(std::istream& in, const std::string& name = "map");
GameMap loadMapFile(const std::string& path);
void saveMapFile(const GameMap& map, const std::string& path);

}  // namespace torus::mapgen
