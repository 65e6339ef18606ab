#pragma once

// Online hitting set for positive homothets of a simple polygon.
//
// The polygon is triangulated, each triangle is covered by three
// parallelograms (central medial subtriangle plus one corner subtriangle),
// and each parallelogram gets its own square hitter working in the
// coordinates of the affine map that sends it to the unit square.

#include <array>
#include <memory>
#include <span>
#include <vector>

#include "ohs/online_hitter.hpp"

namespace ohs {

struct Triangle {
    Point a;
    Point b;
    Point c;
};

/// Ear clipping; k - 2 triangles for k vertices, each counterclockwise.
std::vector<Triangle> triangulate(const SimplePolygon& poly);

/// Union of the central medial subtriangle with each corner subtriangle.
/// Parallelogram i has origin at the i-th corner (a, b, c).
std::array<Parallelogram, 3> triangle_to_parallelograms(const Triangle& t);

struct Decomposition {
    SimplePolygon polygon;
    std::vector<Triangle> triangles;
    std::vector<Parallelogram> parallelograms;
    std::vector<AffineMap> maps;
};

Decomposition decompose(const SimplePolygon& poly);

struct MultiHitterOptions {
    /// Use the polygon itself as the single piece when it is a parallelogram.
    bool direct_parallelogram = true;
};

struct HomothetRoundReport {
    std::size_t round = 0;  // 1-based
    Homothet object{};
    bool already_hit = false;
    std::vector<std::size_t> fed_pieces;
    std::vector<PointId> added_points;
    // The object was still unhit after the pieces ran (rounding in the
    // transformed coordinates); its smallest-index point was added.
    bool fallback_point_used = false;
};

class HomothetHitter {
public:
    struct Piece {
        Parallelogram shape;
        AffineMap map;
        std::shared_ptr<const BBDTree> tree;
        OnlineHitter hitter;
    };

    HomothetHitter(std::vector<Point> points, const SimplePolygon& polygon, MultiHitterOptions options = {});

    /// Throws InfeasibleObject when the homothet contains no point.
    const HomothetRoundReport& process(const Homothet& h);

    const Decomposition& decomposition() const { return decomposition_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    std::span<const Point> points() const { return points_; }
    std::span<const PointId> hitting_set() const { return hitting_set_; }
    bool in_hitting_set(PointId id) const { return in_set_[static_cast<std::size_t>(id)]; }
    const std::vector<HomothetRoundReport>& log() const { return log_; }

    bool hits(const Homothet& h) const;
    bool contains(const Homothet& h, PointId id) const;

    /// Axis-aligned square that piece j's map sends a*M_j + b to.
    AxisRect piece_square(std::size_t j, const Homothet& h) const;

    std::size_t max_points_per_round() const;
    std::vector<int> piece_depths() const;

private:
    std::vector<Point> points_;
    Decomposition decomposition_;
    std::vector<Piece> pieces_;
    std::vector<bool> in_set_;
    std::vector<PointId> hitting_set_;
    std::vector<HomothetRoundReport> log_;

    void add_point(PointId id, HomothetRoundReport& report);
};

}  // namespace ohs
