#include "ohs/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

namespace ohs {

namespace {

constexpr double kGrid = 1.0 / static_cast<double>(1U << kGridBits);

nlohmann::ordered_json header(const GenSpec& spec) {
    nlohmann::ordered_json meta;
    meta["generator"] = to_string(spec.kind);
    meta["seed"] = spec.seed;
    meta["n"] = spec.n;
    meta["m"] = spec.m;
    meta["rho"] = spec.rho;
    return meta;
}

std::vector<Point> distinct_grid_points(Rng& rng, std::size_t n) {
    std::set<std::pair<double, double>> seen;
    std::vector<Point> out;
    out.reserve(n);
    while (out.size() < n) {
        const Point p{rng.grid_unit(), rng.grid_unit()};
        if (seen.emplace(p.x, p.y).second) out.push_back(p);
    }
    return out;
}

bool contains_any(const AxisRect& r, const std::vector<Point>& pts) {
    return std::any_of(pts.begin(), pts.end(), [&](Point p) { return rect_contains_point(r, p); });
}

void check_sizes(const GenSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("n must be >= 1");
    if (spec.m < 1) throw std::invalid_argument("m must be >= 1");
    if (!(spec.rho >= 1.0)) throw std::invalid_argument("rho must be >= 1");
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % bound + 1) % bound;
    for (;;) {
        const std::uint64_t v = engine_();
        if (v <= limit) return v % bound;
    }
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::grid_unit() { return static_cast<double>(below(std::uint64_t{1} << kGridBits)) * kGrid; }

std::string to_string(GenKind k) {
    switch (k) {
        case GenKind::uniform_squares: return "uniform-squares";
        case GenKind::one_point_nest: return "one-point-nest";
        case GenKind::grid_khan: return "grid-khan";
        case GenKind::homothet_random: return "homothet-random";
    }
    return "?";
}

GenKind gen_kind_from_string(const std::string& s) {
    for (GenKind k : {GenKind::uniform_squares, GenKind::one_point_nest, GenKind::grid_khan, GenKind::homothet_random}) {
        if (to_string(k) == s) return k;
    }
    throw std::invalid_argument("unknown generator kind: " + s);
}

SimplePolygon default_triangle() { return SimplePolygon::make({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}); }

Instance generate(const GenSpec& spec) {
    switch (spec.kind) {
        case GenKind::uniform_squares: return gen_uniform(spec);
        case GenKind::one_point_nest: return gen_one_point_nest(spec);
        case GenKind::grid_khan: return gen_grid_khan(spec);
        case GenKind::homothet_random: return gen_homothet_random(spec);
    }
    throw std::invalid_argument("unknown generator kind");
}

// Rectangle: short side 2^-e (e in [2, 10]), long side short * (1 + j/16)
// capped by rho, random orientation, placed so that its lower-left corner sits
// a random grid offset below/left of a random anchor point.
Instance gen_uniform(const GenSpec& spec) {
    check_sizes(spec);
    Rng rng(spec.seed);
    Instance inst;
    inst.mode = Mode::rects;
    inst.meta = header(spec);
    inst.meta["short_side_exponents"] = {2, 10};
    inst.meta["aspect_step"] = 1.0 / 16.0;
    inst.points = distinct_grid_points(rng, spec.n);

    const auto max_step = static_cast<std::int64_t>(std::floor((spec.rho - 1.0) * 16.0));
    while (inst.rects.size() < spec.m) {
        const double s = std::ldexp(1.0, -static_cast<int>(rng.between(2, 10)));
        const double ratio = 1.0 + static_cast<double>(rng.between(0, max_step)) / 16.0;
        double w = s;
        double h = s * ratio;
        if (rng.below(2) == 1) std::swap(w, h);
        const Point anchor = inst.points[rng.below(inst.points.size())];
        const double dx = static_cast<double>(rng.below(static_cast<std::uint64_t>(w / kGrid) + 1)) * kGrid;
        const double dy = static_cast<double>(rng.below(static_cast<std::uint64_t>(h / kGrid) + 1)) * kGrid;
        const AxisRect r = AxisRect::make(anchor.x - dx, anchor.y - dy, anchor.x - dx + w, anchor.y - dy + h);
        if (!contains_any(r, inst.points) || aspect_ratio(r) > spec.rho) continue;
        inst.rects.push_back(r);
    }
    return inst;
}

// Target p = (1/2, 1/2). Ring k is the boundary of the square of half-side
// 3 * 2^-(k+4) around p, holding a power-of-two count of evenly spaced decoys.
// Square i has half-side 2^-(i+2); once below the innermost ring it stays at
// that size, so the nest is non-strict after K + 1 squares.
Instance gen_one_point_nest(const GenSpec& spec) {
    check_sizes(spec);
    Rng rng(spec.seed);
    Instance inst;
    inst.mode = Mode::rects;
    const Point p{0.5, 0.5};
    inst.points.push_back(p);

    const std::size_t decoys = spec.n - 1;
    const auto rings = static_cast<std::size_t>(
        std::clamp<std::size_t>(static_cast<std::size_t>(std::floor(std::log2(static_cast<double>(spec.n)))), 1, 40));
    std::size_t per_ring = 8;
    while (per_ring * rings < decoys) per_ring *= 2;
    inst.meta = header(spec);
    inst.meta["target"] = {p.x, p.y};
    inst.meta["rings"] = rings;
    inst.meta["ring_factor"] = 0.5;
    inst.meta["square_factor"] = 0.5;

    // Random start offset per ring so seeds differ; positions stay dyadic.
    for (std::size_t k = 0; k < rings && inst.points.size() < spec.n; ++k) {
        const double r = 3.0 * std::ldexp(1.0, -static_cast<int>(k) - 4);
        const double step = 8.0 * r / static_cast<double>(per_ring);
        const std::uint64_t shift = rng.below(per_ring);
        for (std::size_t j = 0; j < per_ring && inst.points.size() < spec.n; ++j) {
            const double t = static_cast<double>((j + shift) % per_ring) * step;  // arc length from (-r, -r)
            const double side = 2.0 * r;
            Point q;
            if (t < side) {
                q = {p.x - r + t, p.y - r};
            } else if (t < 2 * side) {
                q = {p.x + r, p.y - r + (t - side)};
            } else if (t < 3 * side) {
                q = {p.x + r - (t - 2 * side), p.y + r};
            } else {
                q = {p.x - r, p.y + r - (t - 3 * side)};
            }
            inst.points.push_back(q);
        }
    }

    for (std::size_t i = 0; i < spec.m; ++i) {
        const std::size_t level = std::min(i, rings);
        const double h = std::ldexp(1.0, -static_cast<int>(level) - 2);
        inst.rects.push_back(AxisRect::make(p.x - h, p.y - h, p.x + h, p.y + h));
    }
    return inst;
}

// k x k grid of cell centers (k = ceil(sqrt n), spacing 2^-ceil(log2 k)),
// first n in row-major order. Squares are blocks of 2^j x 2^j cells at random
// cell offsets, presented in decreasing size.
Instance gen_grid_khan(const GenSpec& spec) {
    check_sizes(spec);
    Rng rng(spec.seed);
    Instance inst;
    inst.mode = Mode::rects;
    std::size_t k = 1;
    while (k * k < spec.n) ++k;
    int bits = 0;
    while ((std::size_t{1} << bits) < k) ++bits;
    const double spacing = std::ldexp(1.0, -bits);
    inst.meta = header(spec);
    inst.meta["grid"] = k;
    inst.meta["spacing"] = spacing;
    for (std::size_t i = 0; i < spec.n; ++i) {
        inst.points.push_back({(static_cast<double>(i % k) + 0.5) * spacing, (static_cast<double>(i / k) + 0.5) * spacing});
    }
    const std::size_t rows = (spec.n + k - 1) / k;
    int max_j = 0;
    while ((std::size_t{2} << max_j) <= std::min(k, rows)) ++max_j;

    std::vector<std::pair<int, AxisRect>> squares;
    while (squares.size() < spec.m) {
        const int j = static_cast<int>(rng.between(0, max_j));
        const double side = std::ldexp(spacing, j);
        const std::size_t cx = rng.below(k);
        const std::size_t cy = rng.below(rows);
        const AxisRect r = AxisRect::make(static_cast<double>(cx) * spacing, static_cast<double>(cy) * spacing,
                                          static_cast<double>(cx) * spacing + side,
                                          static_cast<double>(cy) * spacing + side);
        if (!contains_any(r, inst.points)) continue;
        squares.emplace_back(j, r);
    }
    std::stable_sort(squares.begin(), squares.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [j, r] : squares) inst.rects.push_back(r);
    return inst;
}

// Scale a = s * 2^-8 with s uniform in [1, 2^11]. Translation b = q - a * z for
// a random point q of P and a random grid point z of the polygon.
Instance gen_homothet_random(const GenSpec& spec) {
    check_sizes(spec);
    Rng rng(spec.seed);
    Instance inst;
    inst.mode = Mode::homothets;
    inst.polygon = spec.polygon ? *spec.polygon : default_triangle();
    inst.meta = header(spec);
    inst.meta["scale_range"] = {std::ldexp(1.0, -8), 8.0};
    inst.points = distinct_grid_points(rng, spec.n);

    const AxisRect box = inst.polygon->bounding_box();
    while (inst.homothets.size() < spec.m) {
        const double a = static_cast<double>(rng.between(1, 1 << 11)) * std::ldexp(1.0, -8);
        const Point z{box.x_lo + rng.grid_unit() * box.width(), box.y_lo + rng.grid_unit() * box.height()};
        if (!inst.polygon->contains(z)) continue;
        const Point q = inst.points[rng.below(inst.points.size())];
        const Homothet h = Homothet::make(a, {q.x - a * z.x, q.y - a * z.y});
        const bool feasible = std::any_of(inst.points.begin(), inst.points.end(),
                                          [&](Point p) { return point_in_homothet_of_polygon(p, *inst.polygon, h); });
        if (!feasible) continue;
        inst.homothets.push_back(h);
    }
    return inst;
}

}  // namespace ohs
