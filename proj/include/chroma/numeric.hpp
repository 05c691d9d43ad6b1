#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chroma {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

using Coord = long long;

inline double to_double(const BigRat& r) { return r.template convert_to<double>(); }

inline BigRat rat(Coord n) { return BigRat(n); }
inline BigRat rat(Coord n, Coord d) { return BigRat(n, d); }

/// Parse "n" or "n/d" into an exact rational.
inline BigRat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        auto dot = s.find('.');
        if (dot == std::string::npos) return BigRat(BigInt(s));
        // decimal string, exact
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        BigInt den = 1;
        for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        return BigRat(BigInt(digits), den);
    }
    return BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

inline std::string rat_to_string(const BigRat& r) {
    std::string n = numerator(r).str();
    if (denominator(r) == 1) return n;
    return n + "/" + denominator(r).str();
}

// ---------------------------------------------------------------------------
// Exact rational point with cached double approximation. The doubles drive a
// floating-point filter; any uncertain sign falls back to exact arithmetic.
// ---------------------------------------------------------------------------

struct RatPoint {
    BigRat x, y;
    double fx = 0.0, fy = 0.0;

    RatPoint() = default;
    RatPoint(BigRat px, BigRat py)
        : x(std::move(px)), y(std::move(py)), fx(to_double(x)), fy(to_double(y)) {}
    RatPoint(Coord px, Coord py) : x(px), y(py), fx(double(px)), fy(double(py)) {}

    bool operator==(const RatPoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const RatPoint& o) const { return !(*this == o); }
};

inline RatPoint rp_add(const RatPoint& a, const RatPoint& b) { return {a.x + b.x, a.y + b.y}; }
inline RatPoint rp_sub(const RatPoint& a, const RatPoint& b) { return {a.x - b.x, a.y - b.y}; }
inline RatPoint rp_scale(const RatPoint& a, const BigRat& s) { return {a.x * s, a.y * s}; }
inline RatPoint rp_mid(const RatPoint& a, const RatPoint& b) {
    return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

// Filter constant: generous bound for one fused expression of products of
// correctly rounded doubles.
inline constexpr double kOrientFilterEps = 8.0e-14;

inline int sign_of(const BigRat& v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

/// Orientation of c relative to the directed line a->b: +1 left, -1 right, 0 on.
inline int orient(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
    double t1 = (b.fx - a.fx) * (c.fy - a.fy);
    double t2 = (b.fy - a.fy) * (c.fx - a.fx);
    double det = t1 - t2;
    double mag = std::fabs(t1) + std::fabs(t2);
    if (std::fabs(det) > kOrientFilterEps * mag) return det > 0 ? 1 : -1;
    BigRat exact = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sign_of(exact);
}

inline int cmp_rat(const BigRat& a, const BigRat& b) {
    if (a < b) return -1;
    if (a > b) return 1;
    return 0;
}

// ---------------------------------------------------------------------------
// Exact directions (integer-free rational vectors used as rays).
// ---------------------------------------------------------------------------

struct RatVec {
    BigRat x, y;
    double fx = 0.0, fy = 0.0;
    RatVec() = default;
    RatVec(BigRat vx, BigRat vy)
        : x(std::move(vx)), y(std::move(vy)), fx(to_double(x)), fy(to_double(y)) {}
    RatVec(Coord vx, Coord vy) : x(vx), y(vy), fx(double(vx)), fy(double(vy)) {}
    bool is_zero() const { return x == 0 && y == 0; }
};

inline RatVec vec_between(const RatPoint& from, const RatPoint& to) {
    return {to.x - from.x, to.y - from.y};
}

inline int cross_sign(const RatVec& a, const RatVec& b) {
    double t1 = a.fx * b.fy, t2 = a.fy * b.fx;
    double det = t1 - t2;
    double mag = std::fabs(t1) + std::fabs(t2);
    if (std::fabs(det) > kOrientFilterEps * mag) return det > 0 ? 1 : -1;
    return sign_of(a.x * b.y - a.y * b.x);
}

inline int dot_sign(const RatVec& a, const RatVec& b) {
    double t1 = a.fx * b.fx, t2 = a.fy * b.fy;
    double s = t1 + t2;
    double mag = std::fabs(t1) + std::fabs(t2);
    if (std::fabs(s) > kOrientFilterEps * mag) return s > 0 ? 1 : -1;
    return sign_of(a.x * b.x + a.y * b.y);
}

/// Angular quadrant in [0,360): 0:[0,90) 1:[90,180) 2:[180,270) 3:[270,360).
inline int quadrant(const RatVec& v) {
    int sx = sign_of(v.x), sy = sign_of(v.y);
    if (sx > 0 && sy >= 0) return 0;
    if (sx <= 0 && sy > 0) return 1;
    if (sx < 0 && sy <= 0) return 2;
    return 3;  // sx >= 0 && sy < 0
}

inline bool same_direction(const RatVec& a, const RatVec& b) {
    return cross_sign(a, b) == 0 && dot_sign(a, b) > 0;
}

/// Strict CCW angular order over [0,360).
inline bool angle_less(const RatVec& a, const RatVec& b) {
    int qa = quadrant(a), qb = quadrant(b);
    if (qa != qb) return qa < qb;
    return cross_sign(a, b) > 0;
}

/// True iff v lies in the closed CCW cone from a to b (cone span <= 180 deg).
inline bool in_closed_cone(const RatVec& a, const RatVec& b, const RatVec& v) {
    return cross_sign(a, v) >= 0 && cross_sign(v, b) >= 0;
}

// ---------------------------------------------------------------------------
// Degrees <-> exact ray directions.
// ---------------------------------------------------------------------------

/// Exact direction for angles that are multiples of 45 degrees; null otherwise.
inline bool axis45_direction(long long deg_mod_360, RatVec& out) {
    static const int dirs[8][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
    if (deg_mod_360 % 45 != 0) return false;
    int idx = int((deg_mod_360 / 45) % 8);
    out = RatVec(dirs[idx][0], dirs[idx][1]);
    return true;
}

/// Best rational approximation p/q to t with q <= qmax (continued fractions).
inline std::pair<long long, long long> approx_fraction(double t, long long qmax) {
    bool neg = t < 0;
    if (neg) t = -t;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double x = t;
    for (int it = 0; it < 64; ++it) {
        double fa = std::floor(x);
        if (fa > 4e18) break;
        long long a = (long long)fa;
        if (q1 > 0 && (double)a * q1 + q0 > qmax) break;
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = x - fa;
        if (frac < 1e-15) break;
        x = 1.0 / frac;
    }
    if (q1 == 0) { p1 = 1; q1 = 1; }
    return {neg ? -p1 : p1, q1};
}

/// Exact-ish unit ray for an angle in degrees. Multiples of 45 are exact; other
/// angles are snapped to a nearby rational direction (error < 1e-10 rad). The
/// same BigRat angle always snaps to the same vector, so shared wedge borders
/// coincide exactly.
inline RatVec direction_for_degrees(const BigRat& deg) {
    BigRat d = deg;
    BigRat full(360);
    // normalize to [0, 360)
    BigInt k = BigInt(floor(to_double(d) / 360.0)) ;
    d -= BigRat(k) * full;
    while (d < 0) d += full;
    while (d >= full) d -= full;
    if (denominator(d) == 1) {
        RatVec v;
        if (axis45_direction((long long)numerator(d), v)) return v;
    }
    double rad = to_double(d) * 3.14159265358979323846 / 180.0;
    double c = std::cos(rad), s = std::sin(rad);
    if (std::fabs(c) < 1e-13) return RatVec(0, s > 0 ? 1 : -1);
    if (std::fabs(s) < 1e-13) return RatVec(c > 0 ? 1 : -1, 0);
    auto [p, q] = approx_fraction(s / c, 1000000);
    RatVec v((Coord)q, (Coord)p);
    if (c < 0) { v = RatVec(-q, -p); }
    return v;
}

inline double degrees_of(const RatVec& v) {
    double a = std::atan2(v.fy, v.fx) * 180.0 / 3.14159265358979323846;
    if (a < 0) a += 360.0;
    return a;
}

}  // namespace chroma
