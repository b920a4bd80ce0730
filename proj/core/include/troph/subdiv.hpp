#pragma once

// Regular subdivisions of the degree-d simplex in the plane induced by a
// lifted height function (max convention: upper hull), the dual tropical
// curve with weights, and the perturbation witness for heights outside the
// everything-marked region.

#include <optional>
#include <string>
#include <vector>

#include "troph/tropical.hpp"

namespace troph {

// Lattice point (a0, a1) of the simplex a0 + a1 <= d; the third exponent
// a2 = d - a0 - a1 is implied.
struct LPoint {
    long x = 0, y = 0;
    bool operator==(const LPoint& o) const { return x == o.x && y == o.y; }
    bool operator<(const LPoint& o) const {
        return x != o.x ? x < o.x : y < o.y;
    }
};

// Heights over the full point configuration A of degree d.  The point order
// follows monomials_of_degree(3, d) with exponents (a0, a1) kept.
struct LiftedConfig {
    long d = 0;
    std::vector<LPoint> points;
    std::vector<Rat> heights;  // same indexing as points

    static LiftedConfig from_heights(long d, std::vector<Rat> heights);
    std::size_t index_of(const LPoint& p) const;
    // the tropical polynomial max(h_a + a0 w0 + a1 w1 + a2 w2), 3 variables
    TropPoly tropical_polynomial() const;
};

struct Cell {
    std::vector<std::size_t> marked;    // indices into cfg.points, on the face
    std::vector<std::size_t> vertices;  // corners of the cell polygon, ccw
};

struct Subdivision {
    LiftedConfig cfg;
    std::vector<Cell> cells;
};

Subdivision regular_subdivision(const LiftedConfig& cfg);

bool uses_all_points(const Subdivision& sub);
bool is_triangulation(const Subdivision& sub);
// both: the heights lie in the region where coefficients are recoverable
bool in_region_p(const Subdivision& sub);

struct CurveVertex {
    Rat x, y;         // chart x2 = 0
    std::size_t cell;  // dual 2-cell
};

struct CurveEdge {
    std::size_t from, to;  // dual vertices
    long weight;           // lattice length of the dual subdivision edge
    std::pair<long, long> dir;  // primitive direction from from to to
};

struct CurveRay {
    std::size_t vertex;
    std::pair<long, long> dir;  // primitive
    long weight;
};

struct DualCurve {
    std::vector<CurveVertex> vertices;
    std::vector<CurveEdge> edges;
    std::vector<CurveRay> rays;

    bool operator==(const DualCurve& o) const;
    std::string str() const;
};

DualCurve dual_curve(const LiftedConfig& cfg);

// A strictly different height function with the same weighted dual curve;
// nothing when every point of A is a vertex of the subdivision.
std::optional<LiftedConfig> perturbation_noninjectivity_witness(const LiftedConfig& cfg);

// plot of the subdivision and its dual curve
std::string subdivision_svg(const Subdivision& sub, const DualCurve& curve);

}  // namespace troph
