#include "troph/subdiv.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "troph/polyring.hpp"

namespace troph {

LiftedConfig LiftedConfig::from_heights(long d, std::vector<Rat> heights) {
    if (d < 1) throw invalid_input("subdivision needs degree >= 1");
    if (d > 4) throw invalid_input("plane subdivisions are supported up to degree 4");
    LiftedConfig cfg;
    cfg.d = d;
    for (const auto& e : monomials_of_degree(3, d))
        cfg.points.push_back({e[0], e[1]});
    if (heights.size() != cfg.points.size())
        throw dimension_mismatch("expected " + std::to_string(cfg.points.size()) +
                                 " heights, got " + std::to_string(heights.size()));
    cfg.heights = std::move(heights);
    return cfg;
}

std::size_t LiftedConfig::index_of(const LPoint& p) const {
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i] == p) return i;
    throw invalid_input("point not in configuration");
}

TropPoly LiftedConfig::tropical_polynomial() const {
    TropPoly phi(3);
    for (std::size_t i = 0; i < points.size(); ++i) {
        ExpVec e = {static_cast<int>(points[i].x), static_cast<int>(points[i].y),
                    static_cast<int>(d - points[i].x - points[i].y)};
        phi.set_term(e, TropVal(heights[i]));
    }
    return phi;
}

namespace {

long cross(const LPoint& o, const LPoint& a, const LPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// ccw convex hull of a point set given by indices; collinear points dropped
std::vector<std::size_t> hull2d(const std::vector<LPoint>& pts,
                                std::vector<std::size_t> idx) {
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return pts[a] < pts[b];
    });
    idx.erase(std::unique(idx.begin(), idx.end(),
                          [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
              idx.end());
    if (idx.size() < 3) return idx;
    std::vector<std::size_t> h(2 * idx.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {  // lower
        while (k >= 2 && cross(pts[h[k - 2]], pts[h[k - 1]], pts[idx[i]]) <= 0) --k;
        h[k++] = idx[i];
    }
    for (std::size_t i = idx.size() - 1, t = k + 1; i-- > 0;) {  // upper
        while (k >= t && cross(pts[h[k - 2]], pts[h[k - 1]], pts[idx[i]]) <= 0) --k;
        h[k++] = idx[i];
    }
    h.resize(k - 1);
    return h;
}

struct Plane {
    Rat a, b, c;  // z = a x + b y + c
};

// plane through three lifted points with affinely independent projections
std::optional<Plane> plane_through(const LiftedConfig& cfg, std::size_t i,
                                   std::size_t j, std::size_t k) {
    const LPoint &p = cfg.points[i], &q = cfg.points[j], &r = cfg.points[k];
    long det = cross(p, q, r);
    if (det == 0) return std::nullopt;
    // solve the 3x3 system exactly via Cramer on the 2x2 reduced system
    Rat dz1 = cfg.heights[j] - cfg.heights[i];
    Rat dz2 = cfg.heights[k] - cfg.heights[i];
    Rat dx1(q.x - p.x), dy1(q.y - p.y), dx2(r.x - p.x), dy2(r.y - p.y);
    Rat a = (dz1 * dy2 - dz2 * dy1) / det;
    Rat b = (dx1 * dz2 - dx2 * dz1) / det;
    Rat c = cfg.heights[i] - a * p.x - b * p.y;
    return Plane{a, b, c};
}

Plane cell_plane(const LiftedConfig& cfg, const Cell& cell) {
    for (std::size_t u = 0; u < cell.marked.size(); ++u)
        for (std::size_t v = u + 1; v < cell.marked.size(); ++v)
            for (std::size_t w = v + 1; w < cell.marked.size(); ++w)
                if (auto pl = plane_through(cfg, cell.marked[u], cell.marked[v],
                                            cell.marked[w]))
                    return *pl;
    throw internal_inconsistency("cell without a spanning triple");
}

std::pair<long, long> primitive(const Rat& dx, const Rat& dy) {
    Int a = dx.get_num() * dy.get_den();
    Int b = dy.get_num() * dx.get_den();
    Int g = gcd(abs(a), abs(b));
    if (g == 0) throw internal_inconsistency("zero direction");
    a /= g;
    b /= g;
    if (!a.fits_slong_p() || !b.fits_slong_p())
        throw internal_inconsistency("direction out of range");
    return {a.get_si(), b.get_si()};
}

}  // namespace

Subdivision regular_subdivision(const LiftedConfig& cfg) {
    std::size_t n = cfg.points.size();
    std::set<std::vector<std::size_t>> faces;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                auto pl = plane_through(cfg, i, j, k);
                if (!pl) continue;
                std::vector<std::size_t> on;
                bool support = true;
                for (std::size_t m = 0; m < n && support; ++m) {
                    Rat z = pl->a * cfg.points[m].x + pl->b * cfg.points[m].y + pl->c;
                    if (cfg.heights[m] > z) support = false;
                    else if (cfg.heights[m] == z) on.push_back(m);
                }
                if (support) faces.insert(std::move(on));
            }
    Subdivision sub;
    sub.cfg = cfg;
    for (const auto& f : faces) {
        Cell cell;
        cell.marked = f;
        cell.vertices = hull2d(cfg.points, f);
        sub.cells.push_back(std::move(cell));
    }
    return sub;
}

bool uses_all_points(const Subdivision& sub) {
    std::vector<bool> seen(sub.cfg.points.size(), false);
    for (const auto& cell : sub.cells)
        for (std::size_t v : cell.vertices) seen[v] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_triangulation(const Subdivision& sub) {
    for (const auto& cell : sub.cells)
        if (cell.vertices.size() != 3 || cell.marked.size() != 3) return false;
    return true;
}

bool in_region_p(const Subdivision& sub) {
    return uses_all_points(sub) && is_triangulation(sub);
}

DualCurve dual_curve(const LiftedConfig& cfg) {
    Subdivision sub = regular_subdivision(cfg);
    DualCurve curve;

    std::vector<Plane> planes;
    for (std::size_t ci = 0; ci < sub.cells.size(); ++ci) {
        Plane pl = cell_plane(cfg, sub.cells[ci]);
        planes.push_back(pl);
        curve.vertices.push_back({-pl.a, -pl.b, ci});
    }

    // subdivision edges, keyed by their endpoints
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> edge_cells;
    for (std::size_t ci = 0; ci < sub.cells.size(); ++ci) {
        const auto& vs = sub.cells[ci].vertices;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            std::size_t a = vs[i], b = vs[(i + 1) % vs.size()];
            edge_cells[{std::min(a, b), std::max(a, b)}].push_back(ci);
        }
    }

    for (const auto& [edge, cells] : edge_cells) {
        const LPoint &p = cfg.points[edge.first], &q = cfg.points[edge.second];
        long w = std::gcd(std::labs(q.x - p.x), std::labs(q.y - p.y));
        if (cells.size() == 2) {
            const CurveVertex &v1 = curve.vertices[cells[0]], &v2 = curve.vertices[cells[1]];
            auto dir = primitive(v2.x - v1.x, v2.y - v1.y);
            curve.edges.push_back({cells[0], cells[1], w, dir});
        } else if (cells.size() == 1) {
            // ray perpendicular to the boundary edge, leaving the cell
            long ex = q.x - p.x, ey = q.y - p.y;
            long g = std::gcd(std::labs(ex), std::labs(ey));
            std::pair<long, long> dir{ey / g, -ex / g};
            // orient away from a cell vertex off the edge line
            const Cell& cell = sub.cells[cells[0]];
            for (std::size_t v : cell.vertices) {
                long side = (cfg.points[v].x - p.x) * dir.first +
                            (cfg.points[v].y - p.y) * dir.second;
                if (side > 0) { dir = {-dir.first, -dir.second}; break; }
                if (side < 0) break;
            }
            curve.rays.push_back({cells[0], dir, w});
        } else {
            throw internal_inconsistency("subdivision edge shared by > 2 cells");
        }
    }
    return curve;
}

namespace {

struct CanonCurve {
    std::vector<std::pair<Rat, Rat>> verts;
    std::vector<std::tuple<std::pair<Rat, Rat>, std::pair<Rat, Rat>, long>> edges;
    std::vector<std::tuple<std::pair<Rat, Rat>, std::pair<long, long>, long>> rays;
};

CanonCurve canonical(const DualCurve& c) {
    CanonCurve out;
    for (const auto& v : c.vertices) out.verts.push_back({v.x, v.y});
    std::sort(out.verts.begin(), out.verts.end());
    out.verts.erase(std::unique(out.verts.begin(), out.verts.end()), out.verts.end());
    for (const auto& e : c.edges) {
        std::pair<Rat, Rat> a{c.vertices[e.from].x, c.vertices[e.from].y};
        std::pair<Rat, Rat> b{c.vertices[e.to].x, c.vertices[e.to].y};
        if (b < a) std::swap(a, b);
        out.edges.push_back({a, b, e.weight});
    }
    std::sort(out.edges.begin(), out.edges.end());
    for (const auto& r : c.rays) {
        out.rays.push_back({{c.vertices[r.vertex].x, c.vertices[r.vertex].y},
                            r.dir, r.weight});
    }
    std::sort(out.rays.begin(), out.rays.end());
    return out;
}

}  // namespace

bool DualCurve::operator==(const DualCurve& o) const {
    CanonCurve a = canonical(*this), b = canonical(o);
    return a.verts == b.verts && a.edges == b.edges && a.rays == b.rays;
}

std::string DualCurve::str() const {
    std::ostringstream os;
    os << vertices.size() << " vertices, " << edges.size() << " edges, "
       << rays.size() << " rays\n";
    for (const auto& v : vertices)
        os << "  vertex (" << v.x << ", " << v.y << ")\n";
    for (const auto& e : edges)
        os << "  edge " << e.from << "-" << e.to << " weight " << e.weight << "\n";
    for (const auto& r : rays)
        os << "  ray at " << r.vertex << " dir (" << r.dir.first << ","
           << r.dir.second << ") weight " << r.weight << "\n";
    return os.str();
}

std::optional<LiftedConfig> perturbation_noninjectivity_witness(const LiftedConfig& cfg) {
    Subdivision sub = regular_subdivision(cfg);
    std::vector<bool> is_vertex(cfg.points.size(), false);
    for (const auto& cell : sub.cells)
        for (std::size_t v : cell.vertices) is_vertex[v] = true;
    for (std::size_t i = 0; i < cfg.points.size(); ++i) {
        if (is_vertex[i]) continue;
        LiftedConfig other = cfg;
        other.heights[i] -= 1;  // drops strictly below the hull
        return other;
    }
    return std::nullopt;
}

std::string subdivision_svg(const Subdivision& sub, const DualCurve& curve) {
    const double s = 60.0, pad = 40.0, H = s * static_cast<double>(sub.cfg.d) + 2 * pad;
    auto X = [&](double x) { return pad + s * x; };
    auto Y = [&](double y) { return H - pad - s * y; };
    std::ostringstream os;
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << 2 * H << "' height='"
       << H << "'>\n";
    for (const auto& cell : sub.cells) {
        os << "<polygon points='";
        for (std::size_t v : cell.vertices) {
            os << X(static_cast<double>(sub.cfg.points[v].x)) << ","
               << Y(static_cast<double>(sub.cfg.points[v].y)) << " ";
        }
        os << "' fill='none' stroke='black'/>\n";
    }
    std::vector<bool> marked(sub.cfg.points.size(), false);
    for (const auto& cell : sub.cells)
        for (std::size_t m : cell.marked) marked[m] = true;
    for (std::size_t i = 0; i < sub.cfg.points.size(); ++i) {
        os << "<circle cx='" << X(static_cast<double>(sub.cfg.points[i].x)) << "' cy='"
           << Y(static_cast<double>(sub.cfg.points[i].y)) << "' r='4' fill='"
           << (marked[i] ? "black" : "white") << "' stroke='black'/>\n";
    }
    // dual curve drawn in its own pane on the right
    auto CX = [&](double x) { return H + pad + s * 0.5 * x + H / 2; };
    auto CY = [&](double y) { return H / 2 - s * 0.5 * y; };
    for (const auto& e : curve.edges) {
        os << "<line x1='" << CX(curve.vertices[e.from].x.get_d()) << "' y1='"
           << CY(curve.vertices[e.from].y.get_d()) << "' x2='"
           << CX(curve.vertices[e.to].x.get_d()) << "' y2='"
           << CY(curve.vertices[e.to].y.get_d()) << "' stroke='red' stroke-width='"
           << e.weight << "'/>\n";
    }
    for (const auto& r : curve.rays) {
        double x0 = curve.vertices[r.vertex].x.get_d();
        double y0 = curve.vertices[r.vertex].y.get_d();
        os << "<line x1='" << CX(x0) << "' y1='" << CY(y0) << "' x2='"
           << CX(x0 + 3.0 * static_cast<double>(r.dir.first)) << "' y2='"
           << CY(y0 + 3.0 * static_cast<double>(r.dir.second)) << "' stroke='red'"
           << " stroke-width='" << r.weight << "' stroke-dasharray='4'/>\n";
    }
    for (const auto& v : curve.vertices) {
        os << "<circle cx='" << CX(v.x.get_d()) << "' cy='" << CY(v.y.get_d())
           << "' r='3' fill='red'/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace troph
