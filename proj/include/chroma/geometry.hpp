#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "chroma/numeric.hpp"

namespace chroma {

// All polygon coordinates are exact integers on a grid that was doubled once
// at ingestion, so edge midpoints and 1-unit interior offsets stay integral.

struct Point {
    Coord x = 0, y = 0;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

struct Segment {
    Point a, b;
    friend bool operator==(const Segment&, const Segment&) = default;
};

enum class Axis { horizontal, vertical };
enum class AxisXY { x, y };

inline Coord cross(Point o, Point a, Point b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}
inline Coord dot(Point o, Point a, Point b) {
    return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y);
}
inline int sgn(Coord v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

inline bool on_segment(Point a, Point b, Point p) {
    if (cross(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

/// Any contact between closed segments ab and cd.
inline bool segments_touch(Point a, Point b, Point c, Point d) {
    Coord o1 = cross(a, b, c), o2 = cross(a, b, d);
    Coord o3 = cross(c, d, a), o4 = cross(c, d, b);
    if (sgn(o1) * sgn(o2) < 0 && sgn(o3) * sgn(o4) < 0) return true;
    return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

/// Transversal crossing at a point interior to both segments.
inline bool segments_cross_properly(Point a, Point b, Point c, Point d) {
    return sgn(cross(a, b, c)) * sgn(cross(a, b, d)) < 0 &&
           sgn(cross(c, d, a)) * sgn(cross(c, d, b)) < 0;
}

// ---------------------------------------------------------------------------
// Polygon
// ---------------------------------------------------------------------------

enum class PolyErrorCode {
    too_few_vertices,
    duplicate_vertex,
    zero_area,
    self_intersection,
    not_orthogonal,
    bad_input,
};

class PolygonError : public std::runtime_error {
  public:
    PolygonError(PolyErrorCode c, const std::string& what) : std::runtime_error(what), code(c) {}
    PolyErrorCode code;
};

struct Polygon {
    std::vector<Point> v;     // CCW, canonical start = lexicographically smallest
    bool orthogonal = false;

    size_t size() const { return v.size(); }
    Point vertex(size_t i) const { return v[i % v.size()]; }
    Segment edge(size_t i) const { return {v[i % v.size()], v[(i + 1) % v.size()]}; }

    Coord area2() const {
        Coord s = 0;
        for (size_t i = 0; i < v.size(); ++i) {
            Point a = v[i], b = v[(i + 1) % v.size()];
            s += a.x * b.y - b.x * a.y;
        }
        return s;
    }
    Coord min_x() const { Coord m = v[0].x; for (auto& p : v) m = std::min(m, p.x); return m; }
    Coord max_x() const { Coord m = v[0].x; for (auto& p : v) m = std::max(m, p.x); return m; }
    Coord min_y() const { Coord m = v[0].y; for (auto& p : v) m = std::min(m, p.y); return m; }
    Coord max_y() const { Coord m = v[0].y; for (auto& p : v) m = std::max(m, p.y); return m; }

    friend bool operator==(const Polygon&, const Polygon&) = default;
};

namespace detail {

inline void merge_collinear(std::vector<Point>& pts, bool strict) {
    bool changed = true;
    while (changed && pts.size() >= 3) {
        changed = false;
        for (size_t i = 0; i < pts.size();) {
            size_t n = pts.size();
            Point a = pts[(i + n - 1) % n], b = pts[i], c = pts[(i + 1) % n];
            if (cross(a, b, c) == 0) {
                if (dot(b, a, c) > 0 && strict)
                    throw PolygonError(PolyErrorCode::self_intersection,
                                       "degenerate spike at vertex");
                pts.erase(pts.begin() + (long)i);
                changed = true;
            } else {
                ++i;
            }
        }
    }
}

inline void canonical_rotate(std::vector<Point>& pts) {
    auto it = std::min_element(pts.begin(), pts.end());
    std::rotate(pts.begin(), it, pts.end());
}

inline Polygon finish_ring(std::vector<Point> pts, bool strict) {
    if (pts.size() < 3) throw PolygonError(PolyErrorCode::zero_area, "degenerate ring");
    if (strict) {
        size_t n = pts.size();
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) {
                bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
                if (adjacent) continue;
                Segment ei{pts[i], pts[(i + 1) % n]}, ej{pts[j], pts[(j + 1) % n]};
                if (segments_touch(ei.a, ei.b, ej.a, ej.b))
                    throw PolygonError(PolyErrorCode::self_intersection,
                                       "boundary self-intersects near vertex " + std::to_string(i));
            }
        }
    }
    Coord s = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        Point a = pts[i], b = pts[(i + 1) % pts.size()];
        s += a.x * b.y - b.x * a.y;
    }
    if (s == 0) throw PolygonError(PolyErrorCode::zero_area, "polygon has zero area");
    if (s < 0) std::reverse(pts.begin(), pts.end());
    canonical_rotate(pts);
    Polygon p;
    p.v = std::move(pts);
    p.orthogonal = true;
    for (size_t i = 0; i < p.v.size(); ++i) {
        Segment e = p.edge(i);
        if (e.a.x != e.b.x && e.a.y != e.b.y) { p.orthogonal = false; break; }
    }
    return p;
}

}  // namespace detail

/// Validate raw user-unit vertices. Coordinates are doubled here, once.
inline Polygon validate_polygon(std::span<const Point> user_vertices) {
    if (user_vertices.size() < 3)
        throw PolygonError(PolyErrorCode::too_few_vertices, "need at least 3 vertices");
    std::vector<Point> pts;
    pts.reserve(user_vertices.size());
    for (auto p : user_vertices) pts.push_back({p.x * 2, p.y * 2});
    for (size_t i = 0; i < pts.size(); ++i) {
        if (pts[i] == pts[(i + 1) % pts.size()])
            throw PolygonError(PolyErrorCode::duplicate_vertex,
                               "duplicate consecutive vertex at index " + std::to_string(i));
    }
    bool flat = true;
    for (size_t i = 2; i < pts.size() && flat; ++i)
        flat = cross(pts[0], pts[1], pts[i]) == 0;
    if (flat) throw PolygonError(PolyErrorCode::zero_area, "all vertices are collinear");
    detail::merge_collinear(pts, /*strict=*/true);
    return detail::finish_ring(std::move(pts), /*strict=*/true);
}

inline Polygon validate_polygon(std::initializer_list<Point> user_vertices) {
    std::vector<Point> tmp(user_vertices);
    return validate_polygon(std::span<const Point>(tmp));
}

/// Build a polygon from already-doubled internal coordinates (trusted source).
inline Polygon polygon_from_internal(std::vector<Point> pts) {
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    while (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
    detail::merge_collinear(pts, /*strict=*/false);
    return detail::finish_ring(std::move(pts), /*strict=*/false);
}

// ---------------------------------------------------------------------------
// Point / segment containment (closed polygon semantics)
// ---------------------------------------------------------------------------

enum class Side { inside, boundary, outside };

/// Classify the rational point (px/den, py/den) against P. Exact.
inline Side point_in_polygon_scaled(Coord px, Coord py, Coord den, const Polygon& P) {
    using I = __int128;
    size_t n = P.size();
    for (size_t i = 0; i < n; ++i) {
        Segment e = P.edge(i);
        I ax = I(e.a.x) * den, ay = I(e.a.y) * den;
        I bx = I(e.b.x) * den, by = I(e.b.y) * den;
        I cr = (bx - ax) * (I(py) - ay) - (by - ay) * (I(px) - ax);
        if (cr == 0 && std::min(ax, bx) <= px && px <= std::max(ax, bx) &&
            std::min(ay, by) <= py && py <= std::max(ay, by))
            return Side::boundary;
    }
    bool in = false;
    for (size_t i = 0; i < n; ++i) {
        Segment e = P.edge(i);
        I ax = I(e.a.x) * den, ay = I(e.a.y) * den;
        I bx = I(e.b.x) * den, by = I(e.b.y) * den;
        I cr = (bx - ax) * (I(py) - ay) - (by - ay) * (I(px) - ax);
        if (ay <= py && py < by) {
            if (cr > 0) in = !in;
        } else if (by <= py && py < ay) {
            if (cr < 0) in = !in;
        }
    }
    return in ? Side::inside : Side::outside;
}

inline Side point_in_polygon(Point p, const Polygon& P) {
    return point_in_polygon_scaled(p.x, p.y, 1, P);
}

/// Closed segment ab inside closed P. Exact.
inline bool segment_in_polygon(Point a, Point b, const Polygon& P) {
    if (a == b) return point_in_polygon(a, P) != Side::outside;
    if (point_in_polygon(a, P) == Side::outside) return false;
    if (point_in_polygon(b, P) == Side::outside) return false;
    size_t n = P.size();
    for (size_t i = 0; i < n; ++i) {
        Segment e = P.edge(i);
        if (segments_cross_properly(a, b, e.a, e.b)) return false;
    }
    // With no transversal crossing, every boundary contact happens at integer
    // points (polygon vertices or segment endpoints). Check the gaps between
    // consecutive contact points.
    std::vector<Point> events{a, b};
    for (size_t i = 0; i < n; ++i)
        if (on_segment(a, b, P.v[i])) events.push_back(P.v[i]);
    Point d{b.x - a.x, b.y - a.y};
    std::sort(events.begin(), events.end(), [&](Point p, Point q) {
        return (p.x - a.x) * d.x + (p.y - a.y) * d.y < (q.x - a.x) * d.x + (q.y - a.y) * d.y;
    });
    events.erase(std::unique(events.begin(), events.end()), events.end());
    for (size_t i = 0; i + 1 < events.size(); ++i) {
        Coord mx = events[i].x + events[i + 1].x, my = events[i].y + events[i + 1].y;
        if (point_in_polygon_scaled(mx, my, 2, P) == Side::outside) return false;
    }
    return true;
}

/// Per-vertex reflex flags (true = reflex) for a CCW polygon.
inline std::vector<bool> classify_vertices(const Polygon& P) {
    size_t n = P.size();
    std::vector<bool> reflex(n);
    for (size_t i = 0; i < n; ++i) {
        Point a = P.v[(i + n - 1) % n], b = P.v[i], c = P.v[(i + 1) % n];
        reflex[i] = cross(a, b, c) < 0;
    }
    return reflex;
}

// ---------------------------------------------------------------------------
// Cell decomposition (refined grid)
// ---------------------------------------------------------------------------

struct CellDecomposition {
    std::vector<Coord> xs, ys;
    std::vector<uint8_t> inside_;  // row-major: j * nx + i
    std::vector<int64_t> prefix_;  // (nx+1)*(ny+1) running counts of inside cells

    size_t nx() const { return xs.size() - 1; }
    size_t ny() const { return ys.size() - 1; }
    bool inside(size_t i, size_t j) const { return inside_[j * nx() + i] != 0; }

    void build_prefix() {
        size_t w = nx(), h = ny();
        prefix_.assign((w + 1) * (h + 1), 0);
        for (size_t j = 0; j < h; ++j)
            for (size_t i = 0; i < w; ++i)
                prefix_[(j + 1) * (w + 1) + (i + 1)] =
                    prefix_[j * (w + 1) + (i + 1)] + prefix_[(j + 1) * (w + 1) + i] -
                    prefix_[j * (w + 1) + i] + (inside(i, j) ? 1 : 0);
    }
    int64_t count_inside(size_t i0, size_t i1, size_t j0, size_t j1) const {  // half-open
        size_t w = nx();
        return prefix_[j1 * (w + 1) + i1] - prefix_[j0 * (w + 1) + i1] -
               prefix_[j1 * (w + 1) + i0] + prefix_[j0 * (w + 1) + i0];
    }
    bool box_all_inside(size_t i0, size_t i1, size_t j0, size_t j1) const {
        if (i0 >= i1 || j0 >= j1) return true;
        return count_inside(i0, i1, j0, j1) == int64_t(i1 - i0) * int64_t(j1 - j0);
    }

    // index of coordinate value (must be a grid line)
    size_t x_index(Coord c) const {
        auto it = std::lower_bound(xs.begin(), xs.end(), c);
        if (it == xs.end() || *it != c) throw std::logic_error("x not on grid");
        return size_t(it - xs.begin());
    }
    size_t y_index(Coord c) const {
        auto it = std::lower_bound(ys.begin(), ys.end(), c);
        if (it == ys.end() || *it != c) throw std::logic_error("y not on grid");
        return size_t(it - ys.begin());
    }
    // cell column containing x in (xs[i], xs[i+1]); x must not be a grid line
    size_t col_of(Coord x) const {
        auto it = std::upper_bound(xs.begin(), xs.end(), x);
        return size_t(it - xs.begin()) - 1;
    }
    size_t row_of(Coord y) const {
        auto it = std::upper_bound(ys.begin(), ys.end(), y);
        return size_t(it - ys.begin()) - 1;
    }

    /// Twice the cell area, matching Polygon::area2.
    Coord cell_area2(size_t i, size_t j) const {
        return 2 * (xs[i + 1] - xs[i]) * (ys[j + 1] - ys[j]);
    }
    Coord inside_area2() const {
        Coord s = 0;
        for (size_t j = 0; j < ny(); ++j)
            for (size_t i = 0; i < nx(); ++i)
                if (inside(i, j)) s += cell_area2(i, j);
        return s;
    }
};

inline CellDecomposition refined_grid(const Polygon& P, std::span<const Point> extra = {}) {
    if (!P.orthogonal)
        throw PolygonError(PolyErrorCode::not_orthogonal, "refined grid needs an orthogonal polygon");
    CellDecomposition g;
    for (auto& p : P.v) { g.xs.push_back(p.x); g.ys.push_back(p.y); }
    for (auto& p : extra) { g.xs.push_back(p.x); g.ys.push_back(p.y); }
    auto uniq = [](std::vector<Coord>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    uniq(g.xs);
    uniq(g.ys);
    g.inside_.assign(g.nx() * g.ny(), 0);
    for (size_t j = 0; j < g.ny(); ++j)
        for (size_t i = 0; i < g.nx(); ++i) {
            Coord cx = g.xs[i] + g.xs[i + 1], cy = g.ys[j] + g.ys[j + 1];
            g.inside_[j * g.nx() + i] =
                point_in_polygon_scaled(cx, cy, 2, P) == Side::inside ? 1 : 0;
        }
    g.build_prefix();
    return g;
}

/// Trace the boundary of a set of grid cells into a polygon (internal coords).
/// The cell set must be 4-connected and free of checkerboard pinch points.
template <class Pred>
inline Polygon polygon_from_cells(const CellDecomposition& g, Pred in_set) {
    auto at = [&](long i, long j) {
        if (i < 0 || j < 0 || i >= (long)g.nx() || j >= (long)g.ny()) return false;
        return bool(in_set(size_t(i), size_t(j)));
    };
    std::map<Point, std::vector<Point>> next;
    auto add = [&](Point a, Point b) { next[a].push_back(b); };
    for (long j = 0; j < (long)g.ny(); ++j)
        for (long i = 0; i < (long)g.nx(); ++i) {
            if (!at(i, j)) continue;
            Point bl{g.xs[i], g.ys[j]}, br{g.xs[i + 1], g.ys[j]};
            Point tr{g.xs[i + 1], g.ys[j + 1]}, tl{g.xs[i], g.ys[j + 1]};
            if (!at(i, j - 1)) add(bl, br);
            if (!at(i + 1, j)) add(br, tr);
            if (!at(i, j + 1)) add(tr, tl);
            if (!at(i - 1, j)) add(tl, bl);
        }
    if (next.empty()) throw std::logic_error("empty cell set");
    Point start = next.begin()->first;
    std::vector<Point> ring;
    Point cur = start;
    Point indir{0, 0};
    size_t guard = 0, budget = 8 * next.size() + 16;
    do {
        ring.push_back(cur);
        auto& outs = next[cur];
        if (outs.empty()) throw std::logic_error("open boundary chain in cell trace");
        size_t pick = 0;
        if (outs.size() > 1) {
            // pinch vertex: prefer the tightest left turn to keep the ring simple
            auto turn_rank = [&](Point to) {
                Point d{to.x - cur.x, to.y - cur.y};
                Coord cr = indir.x * d.y - indir.y * d.x;
                Coord dt = indir.x * d.x + indir.y * d.y;
                if (cr > 0) return 0;
                if (cr == 0 && dt > 0) return 1;
                if (cr == 0) return 3;
                return 2;
            };
            for (size_t k = 1; k < outs.size(); ++k)
                if (turn_rank(outs[k]) < turn_rank(outs[pick])) pick = k;
        }
        Point to = outs[pick];
        outs.erase(outs.begin() + (long)pick);
        indir = {to.x - cur.x, to.y - cur.y};
        cur = to;
        if (++guard > budget) throw std::logic_error("cell trace did not close");
    } while (cur != start);
    for (auto& [p, outs] : next)
        if (!outs.empty()) throw std::logic_error("cell set traces to multiple rings");
    return polygon_from_internal(std::move(ring));
}

// ---------------------------------------------------------------------------
// Cut edges and monotonicity
// ---------------------------------------------------------------------------

struct CutEdge {
    Segment edge;       // the boundary edge (endpoints in polygon order)
    Axis axis = Axis::horizontal;
    Segment extension;  // maximal chord through the edge, clipped to P
};

namespace detail {

/// Maximal run of in-polygon grid segments on the line y = ys[iy] containing
/// columns [k0, k1). A segment is in P iff a cell directly above or below it is.
inline std::pair<size_t, size_t> horizontal_run(const CellDecomposition& g, size_t iy,
                                                size_t k0, size_t k1) {
    auto seg_in = [&](size_t k) {
        bool below = iy > 0 && g.inside(k, iy - 1);
        bool above = iy < g.ny() && g.inside(k, iy);
        return below || above;
    };
    size_t lo = k0, hi = k1;
    while (lo > 0 && seg_in(lo - 1)) --lo;
    while (hi < g.nx() && seg_in(hi)) ++hi;
    return {lo, hi};
}

inline std::pair<size_t, size_t> vertical_run(const CellDecomposition& g, size_t ix,
                                              size_t k0, size_t k1) {
    auto seg_in = [&](size_t k) {
        bool left = ix > 0 && g.inside(ix - 1, k);
        bool right = ix < g.nx() && g.inside(ix, k);
        return left || right;
    };
    size_t lo = k0, hi = k1;
    while (lo > 0 && seg_in(lo - 1)) --lo;
    while (hi < g.ny() && seg_in(hi)) ++hi;
    return {lo, hi};
}

}  // namespace detail

inline std::vector<CutEdge> cut_edges(const Polygon& P, Axis axis,
                                      const CellDecomposition* grid = nullptr) {
    if (!P.orthogonal)
        throw PolygonError(PolyErrorCode::not_orthogonal, "cut edges need an orthogonal polygon");
    CellDecomposition local;
    if (!grid) { local = refined_grid(P); grid = &local; }
    auto reflex = classify_vertices(P);
    std::vector<CutEdge> out;
    size_t n = P.size();
    for (size_t i = 0; i < n; ++i) {
        Segment e = P.edge(i);
        bool horiz = e.a.y == e.b.y;
        if ((axis == Axis::horizontal) != horiz) continue;
        if (!reflex[i] || !reflex[(i + 1) % n]) continue;
        CutEdge ce;
        ce.edge = e;
        ce.axis = axis;
        if (horiz) {
            size_t iy = grid->y_index(e.a.y);
            size_t k0 = grid->x_index(std::min(e.a.x, e.b.x));
            size_t k1 = grid->x_index(std::max(e.a.x, e.b.x));
            auto [lo, hi] = detail::horizontal_run(*grid, iy, k0, k1);
            ce.extension = {{grid->xs[lo], e.a.y}, {grid->xs[hi], e.a.y}};
        } else {
            size_t ix = grid->x_index(e.a.x);
            size_t k0 = grid->y_index(std::min(e.a.y, e.b.y));
            size_t k1 = grid->y_index(std::max(e.a.y, e.b.y));
            auto [lo, hi] = detail::vertical_run(*grid, ix, k0, k1);
            ce.extension = {{e.a.x, grid->ys[lo]}, {e.a.x, grid->ys[hi]}};
        }
        out.push_back(ce);
    }
    return out;
}

/// x-monotone: every vertical line meets P in at most one segment (and
/// symmetrically for y). Exact via the refined grid.
inline bool is_monotone(const Polygon& P, AxisXY axis,
                        const CellDecomposition* grid = nullptr) {
    if (!P.orthogonal)
        throw PolygonError(PolyErrorCode::not_orthogonal, "monotonicity needs an orthogonal polygon");
    CellDecomposition local;
    if (!grid) { local = refined_grid(P); grid = &local; }
    const CellDecomposition& g = *grid;
    size_t outer = axis == AxisXY::x ? g.nx() : g.ny();
    size_t inner = axis == AxisXY::x ? g.ny() : g.nx();
    auto cell = [&](long o, size_t k) {
        if (o < 0 || o >= (long)outer) return false;
        return axis == AxisXY::x ? g.inside(size_t(o), k) : g.inside(k, size_t(o));
    };
    auto contiguous = [&](long o1, long o2) {
        int runs = 0;
        bool prev = false;
        for (size_t k = 0; k < inner; ++k) {
            bool cur = cell(o1, k) || cell(o2, k);
            if (cur && !prev) ++runs;
            prev = cur;
        }
        return runs <= 1;
    };
    for (long o = 0; o < (long)outer; ++o)
        if (!contiguous(o, o)) return false;
    for (long o = -1; o < (long)outer; ++o)
        if (!contiguous(o, o + 1)) return false;
    return true;
}

inline Point transpose(Point p) { return {p.y, p.x}; }

inline Polygon transpose(const Polygon& P) {
    std::vector<Point> pts;
    pts.reserve(P.size());
    for (auto& p : P.v) pts.push_back(transpose(p));
    std::reverse(pts.begin(), pts.end());  // reflection flips orientation
    return detail::finish_ring(std::move(pts), /*strict=*/false);
}

}  // namespace chroma
