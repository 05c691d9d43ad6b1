#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "chroma/geometry.hpp"

namespace chroma {

/// SplitMix64. Self-contained so generated corpora are stable across
/// platforms and standard-library versions.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }
    long long range(long long lo, long long hi) {  // inclusive
        return lo + (long long)below(uint64_t(hi - lo + 1));
    }
};

namespace detail {

inline std::vector<Point> trace_cell_ring(size_t m, const std::vector<uint8_t>& mask) {
    CellDecomposition g;
    for (size_t i = 0; i <= m; ++i) { g.xs.push_back((Coord)i); g.ys.push_back((Coord)i); }
    g.inside_ = mask;
    Polygon ring = polygon_from_cells(g, [&](size_t i, size_t j) { return mask[j * m + i] != 0; });
    return ring.v;
}

/// Walk the upper profile of a histogram right-to-left into vertices.
inline std::vector<Point> histogram_vertices(const std::vector<Coord>& heights, Coord col_w) {
    Coord w = col_w * (Coord)heights.size();
    std::vector<Point> v{{0, 0}, {w, 0}};
    for (size_t i = heights.size(); i-- > 0;) {
        Coord x1 = col_w * (Coord)(i + 1), x0 = col_w * (Coord)i;
        v.push_back({x1, heights[i]});
        v.push_back({x0, heights[i]});
    }
    return v;  // collinear joins merge during validation
}

}  // namespace detail

/// staircase(k): 2k+2 vertices, xy-monotone.
inline std::vector<Point> gen_staircase(long long k) {
    std::vector<Point> v{{0, 0}};
    for (long long i = 1; i <= k; ++i) {
        v.push_back({i, i - 1});
        v.push_back({i, i});
    }
    v.push_back({0, k});
    return v;
}

/// comb(k): k teeth of height 2 on a base strip; comb(2) is the M8 fixture.
inline std::vector<Point> gen_comb(long long k) {
    Coord w = 4 * k - 2;
    std::vector<Point> v{{0, 0}, {w, 0}, {w, 4}};
    for (long long i = 1; i < k; ++i) {
        Coord x = w - 4 * i;
        v.push_back({x + 2, 4});
        v.push_back({x + 2, 2});
        v.push_back({x, 2});
        v.push_back({x, 4});
    }
    v.push_back({0, 4});
    return v;
}

/// mount(k): histogram with k columns of seeded heights over a flat base.
inline std::vector<Point> gen_mount(long long k, uint64_t seed) {
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + 0xc0ffee);
    std::vector<Coord> h;
    for (long long i = 0; i < k; ++i) h.push_back(2 * rng.range(1, std::max<long long>(2, k)));
    return detail::histogram_vertices(h, 2);
}

/// Organ-pipe mount: column heights in bit-reversal order, nesting log-deep.
inline std::vector<Point> gen_organ_pipe(long long k) {
    int bits = 0;
    while ((1LL << bits) < k) ++bits;
    std::vector<Coord> h;
    for (long long i = 0; i < k; ++i) {
        long long r = 0;
        for (int b = 0; b < bits; ++b)
            if (i & (1LL << b)) r |= 1LL << (bits - 1 - b);
        h.push_back(2 * (Coord)(r + 1));
    }
    return detail::histogram_vertices(h, 2);
}

namespace detail {

inline std::vector<Point> strip_polygon(const std::vector<std::pair<Coord, Coord>>& iv, Coord col_w) {
    // columns i spans x in [i*w,(i+1)*w], y in [iv[i].first, iv[i].second]
    std::vector<Point> v;
    size_t m = iv.size();
    v.push_back({0, iv[0].first});
    for (size_t i = 0; i < m; ++i) {  // bottom profile, left to right
        v.push_back({(Coord)i * col_w, iv[i].first});
        v.push_back({(Coord)(i + 1) * col_w, iv[i].first});
    }
    v.push_back({(Coord)m * col_w, iv[m - 1].second});
    for (size_t i = m; i-- > 0;) {  // top profile, right to left
        v.push_back({(Coord)(i + 1) * col_w, iv[i].second});
        v.push_back({(Coord)i * col_w, iv[i].second});
    }
    return v;
}

}  // namespace detail

bool is_snake_candidate_ok(const Polygon& P);  // forward declared; defined in decomposition.hpp

/// snake(k): winding monotone strip passing the snake predicate; seeded
/// rejection over a random-walk profile family.
inline std::vector<Point> gen_snake(long long k, uint64_t seed);

/// random-ortho(k): hole-free union of about k grid cells grown from a
/// spanning tree, with holes filled and checkerboard pinches avoided.
inline std::vector<Point> gen_random_ortho(long long k, uint64_t seed) {
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + uint64_t(k) * 0x2545f4914f6cdd1dULL + 1);
    size_t m = 2;
    while ((long long)((m - 2) * (m - 2)) < 2 * k) ++m;
    std::vector<uint8_t> mask(m * m, 0);
    auto at = [&](long i, long j) -> bool {
        return i >= 0 && j >= 0 && i < (long)m && j < (long)m && mask[size_t(j) * m + i];
    };
    auto pinch_free = [&](long i, long j) {
        // adding (i,j) must not touch a set cell only diagonally
        const int dx[4] = {1, 1, -1, -1}, dy[4] = {1, -1, 1, -1};
        for (int d = 0; d < 4; ++d) {
            if (at(i + dx[d], j + dy[d]) && !at(i + dx[d], j) && !at(i, j + dy[d])) return false;
        }
        return true;
    };
    long ci = (long)m / 2, cj = (long)m / 2;
    mask[size_t(cj) * m + ci] = 1;
    std::vector<std::pair<long, long>> frontier{{ci, cj}};
    long long placed = 1;
    int stall = 0;
    while (placed < k && stall < 4000) {
        auto [fi, fj] = frontier[rng.below(frontier.size())];
        const int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
        int d = (int)rng.below(4);
        long ni = fi + dx[d], nj = fj + dy[d];
        if (ni <= 0 || nj <= 0 || ni >= (long)m - 1 || nj >= (long)m - 1 || at(ni, nj) ||
            !pinch_free(ni, nj)) {
            ++stall;
            continue;
        }
        mask[size_t(nj) * m + ni] = 1;
        frontier.push_back({ni, nj});
        ++placed;
        stall = 0;
    }
    // fill enclosed holes: flood the complement from the border
    std::vector<uint8_t> outside(m * m, 0);
    std::vector<std::pair<long, long>> stack;
    for (size_t i = 0; i < m; ++i) {
        stack.push_back({(long)i, 0});
        stack.push_back({(long)i, (long)m - 1});
        stack.push_back({0, (long)i});
        stack.push_back({(long)m - 1, (long)i});
    }
    while (!stack.empty()) {
        auto [i, j] = stack.back();
        stack.pop_back();
        if (i < 0 || j < 0 || i >= (long)m || j >= (long)m) continue;
        if (outside[size_t(j) * m + i] || mask[size_t(j) * m + i]) continue;
        outside[size_t(j) * m + i] = 1;
        stack.push_back({i + 1, j});
        stack.push_back({i - 1, j});
        stack.push_back({i, j + 1});
        stack.push_back({i, j - 1});
    }
    for (size_t idx = 0; idx < m * m; ++idx)
        if (!mask[idx] && !outside[idx]) mask[idx] = 1;
    return detail::trace_cell_ring(m, mask);
}

inline std::vector<Point> generate_polygon(const std::string& family, long long k, uint64_t seed) {
    if (k < 1) throw PolygonError(PolyErrorCode::bad_input, "size must be >= 1");
    if (family == "staircase") return gen_staircase(k);
    if (family == "comb") return gen_comb(k);
    if (family == "mount") return gen_mount(k, seed);
    if (family == "organ-pipe") return gen_organ_pipe(k);
    if (family == "snake") return gen_snake(k, seed);
    if (family == "random-ortho") return gen_random_ortho(k, seed);
    throw PolygonError(PolyErrorCode::bad_input, "unknown family: " + family);
}

}  // namespace chroma
