#pragma once

// Seeded instance generators. All coordinates are dyadic rationals, and the
// output depends only on the spec (the RNG mapping is fixed, not delegated to
// <random> distributions).

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "ohs/instance.hpp"

namespace ohs {

enum class GenKind { uniform_squares, one_point_nest, grid_khan, homothet_random };

std::string to_string(GenKind k);
/// Throws std::invalid_argument for unknown names.
GenKind gen_kind_from_string(const std::string& s);

struct GenSpec {
    GenKind kind = GenKind::uniform_squares;
    std::uint64_t seed = 0;
    std::size_t n = 1;
    std::size_t m = 1;
    double rho = 1.0;
    std::optional<SimplePolygon> polygon;
};

/// Coordinates of uniform points live on this grid inside [0,1).
inline constexpr int kGridBits = 20;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform in [0, bound), bound >= 1; rejection sampling.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);
    /// Uniform multiple of 2^-kGridBits in [0, 1).
    double grid_unit();

private:
    std::mt19937_64 engine_;
};

/// Throws std::invalid_argument on n, m < 1, rho < 1, or a missing polygon.
Instance generate(const GenSpec& spec);

Instance gen_uniform(const GenSpec& spec);
Instance gen_one_point_nest(const GenSpec& spec);
Instance gen_grid_khan(const GenSpec& spec);
Instance gen_homothet_random(const GenSpec& spec);

/// Triangle (0,0),(1,0),(0,1), used when homothet-random gets no polygon.
SimplePolygon default_triangle();

}  // namespace ohs
