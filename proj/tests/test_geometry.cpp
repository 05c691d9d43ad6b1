#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "chroma/generate.hpp"
#include "chroma/geometry.hpp"
#include "helpers.hpp"

using namespace chroma;
using fixtures::d;

TEST_CASE("validation normalizes orientation and start vertex") {
    Polygon cw = validate_polygon({{0, 0}, {0, 4}, {4, 4}, {4, 0}});
    Polygon ccw = fixtures::sq4();
    REQUIRE(cw == ccw);
    REQUIRE(cw.orthogonal);
    REQUIRE(cw.v.front() == d(0, 0));
    REQUIRE(cw.area2() > 0);
}

TEST_CASE("validation classifies and counts L6") {
    Polygon p = fixtures::l6();
    REQUIRE(p.orthogonal);
    REQUIRE(p.size() == 6);
    auto reflex = classify_vertices(p);
    int count = 0;
    for (size_t i = 0; i < p.size(); ++i)
        if (reflex[i]) {
            ++count;
            REQUIRE(p.v[i] == d(2, 2));
        }
    REQUIRE(count == 1);
}

TEST_CASE("validation diagnostics are distinct") {
    using Catch::Matchers::ContainsSubstring;
    std::vector<Point> bowtie{{0, 0}, {4, 0}, {0, 4}, {4, 4}};
    try {
        validate_polygon(std::span<const Point>(bowtie));
        FAIL("expected self-intersection");
    } catch (const PolygonError& e) {
        REQUIRE(e.code == PolyErrorCode::self_intersection);
    }
    std::vector<Point> two{{0, 0}, {1, 0}};
    try {
        validate_polygon(std::span<const Point>(two));
        FAIL("");
    } catch (const PolygonError& e) {
        REQUIRE(e.code == PolyErrorCode::too_few_vertices);
    }
    std::vector<Point> dup{{0, 0}, {0, 0}, {4, 0}, {4, 4}};
    try {
        validate_polygon(std::span<const Point>(dup));
        FAIL("");
    } catch (const PolygonError& e) {
        REQUIRE(e.code == PolyErrorCode::duplicate_vertex);
    }
    std::vector<Point> flat{{0, 0}, {2, 0}, {4, 0}};
    try {
        validate_polygon(std::span<const Point>(flat));
        FAIL("");
    } catch (const PolygonError& e) {
        REQUIRE(e.code == PolyErrorCode::zero_area);
    }
}

TEST_CASE("collinear vertices merge and normalization is idempotent") {
    Polygon p = validate_polygon({{0, 0}, {2, 0}, {4, 0}, {4, 4}, {0, 4}});
    REQUIRE(p.size() == 4);
    REQUIRE(p == fixtures::sq4());
    Polygon again = polygon_from_internal(p.v);
    REQUIRE(again == p);
}

TEST_CASE("point location on fixtures") {
    Polygon sq = fixtures::sq4(), l = fixtures::l6();
    REQUIRE(point_in_polygon(d(2, 2), sq) == Side::inside);
    REQUIRE(point_in_polygon(d(3, 3), l) == Side::outside);
    REQUIRE(point_in_polygon(d(2, 3), l) == Side::boundary);
    REQUIRE(point_in_polygon(d(0, 0), sq) == Side::boundary);
    REQUIRE(point_in_polygon(d(5, 5), sq) == Side::outside);
}

TEST_CASE("segment containment on fixtures") {
    Polygon sq = fixtures::sq4(), l = fixtures::l6();
    REQUIRE(segment_in_polygon(d(0, 0), d(4, 4), sq));
    // the diagonal through the reflex corner stays inside L6
    REQUIRE(segment_in_polygon(d(3, 1), d(1, 3), l));
    // a slightly steeper diagonal exits above the notch
    REQUIRE_FALSE(segment_in_polygon(d(3, 1), d(1, 4), l));
    REQUIRE(segment_in_polygon(d(0, 0), d(0, 4), l));
    // symmetry
    REQUIRE(segment_in_polygon(d(1, 4), d(3, 1), l) ==
            segment_in_polygon(d(3, 1), d(1, 4), l));
}

TEST_CASE("reflex sets of fixtures") {
    Polygon h = fixtures::h12();
    auto reflex = classify_vertices(h);
    std::set<std::pair<Coord, Coord>> got;
    for (size_t i = 0; i < h.size(); ++i)
        if (reflex[i]) got.insert({h.v[i].x, h.v[i].y});
    std::set<std::pair<Coord, Coord>> want{{4, 4}, {8, 4}, {8, 8}, {4, 8}};
    REQUIRE(got == want);
    for (bool r : classify_vertices(fixtures::sq4())) REQUIRE_FALSE(r);
}

TEST_CASE("cut edges with maximal extensions") {
    Polygon l = fixtures::l6(), h = fixtures::h12();
    REQUIRE(cut_edges(l, Axis::horizontal).empty());
    REQUIRE(cut_edges(l, Axis::vertical).empty());
    auto hh = cut_edges(h, Axis::horizontal);
    REQUIRE(hh.size() == 2);
    std::set<Coord> levels;
    for (auto& ce : hh) {
        levels.insert(ce.edge.a.y);
        REQUIRE(std::min(ce.extension.a.x, ce.extension.b.x) == 0);
        REQUIRE(std::max(ce.extension.a.x, ce.extension.b.x) == 12);
    }
    REQUIRE(levels == std::set<Coord>{4, 8});
    REQUIRE(cut_edges(h, Axis::vertical).empty());
}

TEST_CASE("monotonicity via sweeps") {
    REQUIRE(is_monotone(fixtures::sq4(), AxisXY::x));
    REQUIRE(is_monotone(fixtures::sq4(), AxisXY::y));
    REQUIRE(is_monotone(fixtures::h12(), AxisXY::x));
    REQUIRE_FALSE(is_monotone(fixtures::h12(), AxisXY::y));
    REQUIRE(is_monotone(fixtures::l6(), AxisXY::x));
    REQUIRE(is_monotone(fixtures::l6(), AxisXY::y));
    REQUIRE_FALSE(is_monotone(fixtures::m8(), AxisXY::y));
}

TEST_CASE("refined grid cell counts and exact area") {
    auto g1 = refined_grid(fixtures::sq4());
    REQUIRE(g1.nx() * g1.ny() == 1);
    REQUIRE(g1.inside_area2() == fixtures::sq4().area2());

    auto g2 = refined_grid(fixtures::l6());
    REQUIRE(g2.nx() * g2.ny() == 4);
    int in = 0;
    for (size_t j = 0; j < g2.ny(); ++j)
        for (size_t i = 0; i < g2.nx(); ++i) in += g2.inside(i, j);
    REQUIRE(in == 3);
    REQUIRE(g2.inside_area2() == fixtures::l6().area2());

    auto g3 = refined_grid(fixtures::h12());
    REQUIRE(g3.nx() == 3);
    REQUIRE(g3.ny() == 3);
    int in3 = 0;
    for (size_t j = 0; j < 3; ++j)
        for (size_t i = 0; i < 3; ++i) in3 += g3.inside(i, j);
    REQUIRE(in3 == 7);
    REQUIRE(g3.inside_area2() == fixtures::h12().area2());
}

TEST_CASE("cell tracing round-trips the polygon") {
    for (const Polygon& p : {fixtures::l6(), fixtures::h12(), fixtures::m8(), fixtures::plus12()}) {
        auto g = refined_grid(p);
        Polygon traced = polygon_from_cells(g, [&](size_t i, size_t j) { return g.inside(i, j); });
        REQUIRE(traced == p);
    }
}

TEST_CASE("generated orthogonal polygons satisfy the structural properties") {
    int checked = 0;
    for (uint64_t seed = 1; seed <= 250; ++seed) {
        auto raw = gen_random_ortho(12 + (long long)(seed % 30), seed);
        Polygon p = validate_polygon(std::span<const Point>(raw));
        REQUIRE(p.orthogonal);
        REQUIRE(p.size() % 2 == 0);
        auto g = refined_grid(p);
        REQUIRE(g.inside_area2() == p.area2());

        // cut-edge endpoints are reflex
        auto reflex = classify_vertices(p);
        std::set<Point> rset;
        for (size_t i = 0; i < p.size(); ++i)
            if (reflex[i]) rset.insert(p.v[i]);
        for (Axis ax : {Axis::horizontal, Axis::vertical})
            for (auto& ce : cut_edges(p, ax, &g)) {
                REQUIRE(rset.count(ce.edge.a) == 1);
                REQUIRE(rset.count(ce.edge.b) == 1);
            }

        // no h-cut edge implies y-monotone, no v-cut implies x-monotone
        if (cut_edges(p, Axis::horizontal, &g).empty())
            CHECK(is_monotone(p, AxisXY::y, &g));
        if (cut_edges(p, Axis::vertical, &g).empty())
            CHECK(is_monotone(p, AxisXY::x, &g));
        ++checked;
    }
    REQUIRE(checked == 250);
}

TEST_CASE("segment containment agrees with rasterized sampling") {
    // independent check: sample the segment densely with the exact scaled
    // point test; compare against the combinatorial implementation
    auto brute = [](Point a, Point b, const Polygon& P) {
        const Coord steps = 97;
        for (Coord k = 0; k <= steps; ++k) {
            Coord px = a.x * (steps - k) + b.x * k;
            Coord py = a.y * (steps - k) + b.y * k;
            if (point_in_polygon_scaled(px, py, steps, P) == Side::outside) return false;
        }
        return true;
    };
    for (const Polygon& p : {fixtures::l6(), fixtures::h12(), fixtures::m8(), fixtures::spiral10(),
                             fixtures::dart4()}) {
        Rng rng(42);
        Coord lo_x = p.min_x(), hi_x = p.max_x(), lo_y = p.min_y(), hi_y = p.max_y();
        for (int t = 0; t < 400; ++t) {
            Point a{rng.range(lo_x, hi_x), rng.range(lo_y, hi_y)};
            Point b{rng.range(lo_x, hi_x), rng.range(lo_y, hi_y)};
            bool exact = segment_in_polygon(a, b, p);
            bool approx = brute(a, b, p);
            if (exact) {
                CHECK(approx);  // exact true must never contradict samples
            } else if (!approx) {
                CHECK_FALSE(exact);
            }
        }
    }
}

TEST_CASE("staircase and comb generators match their contracts") {
    for (long long k : {1, 2, 5, 9}) {
        auto st = gen_staircase(k);
        Polygon p = validate_polygon(std::span<const Point>(st));
        REQUIRE(p.size() == size_t(2 * k + 2));
        REQUIRE(is_monotone(p, AxisXY::x));
        REQUIRE(is_monotone(p, AxisXY::y));
    }
    Polygon comb2 = validate_polygon(std::span<const Point>(gen_comb(2)));
    REQUIRE(comb2 == fixtures::m8());
    Polygon comb1 = validate_polygon(std::span<const Point>(gen_comb(1)));
    REQUIRE(comb1.size() == 4);
}
