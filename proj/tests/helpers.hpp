#pragma once

#include <vector>

#include "chroma/geometry.hpp"

namespace fixtures {

using chroma::Point;
using chroma::Polygon;

inline Polygon make(std::initializer_list<Point> user) { return chroma::validate_polygon(user); }

inline Polygon sq4() { return make({{0, 0}, {4, 0}, {4, 4}, {0, 4}}); }
inline Polygon l6() { return make({{0, 0}, {4, 0}, {4, 2}, {2, 2}, {2, 4}, {0, 4}}); }
inline Polygon h12() {
    return make({{0, 0}, {2, 0}, {2, 2}, {4, 2}, {4, 0}, {6, 0},
                 {6, 6}, {4, 6}, {4, 4}, {2, 4}, {2, 6}, {0, 6}});
}
inline Polygon m8() {
    return make({{0, 0}, {6, 0}, {6, 4}, {4, 4}, {4, 2}, {2, 2}, {2, 4}, {0, 4}});
}
inline Polygon plus12() {
    return make({{2, 0}, {4, 0}, {4, 2}, {6, 2}, {6, 4}, {4, 4},
                 {4, 6}, {2, 6}, {2, 4}, {0, 4}, {0, 2}, {2, 2}});
}
// C-shaped corridor: single reflex chain, a (degenerate) rectangular spiral.
inline Polygon spiral10() {
    return make({{0, 0}, {10, 0}, {10, 10}, {0, 10}, {0, 4},
                 {2, 4}, {2, 8}, {8, 8}, {8, 2}, {0, 2}});
}
inline Polygon staircase3() {
    return make({{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {0, 3}});
}
// Convex pentagon (non-orthogonal).
inline Polygon pent5() { return make({{0, 0}, {4, 0}, {6, 3}, {3, 6}, {-1, 3}}); }
// Non-orthogonal simple polygon with one reflex vertex.
inline Polygon dart4() { return make({{0, 0}, {6, 0}, {3, 2}, {3, 6}}); }

/// doubled-grid point from user units
inline Point d(chroma::Coord x, chroma::Coord y) { return {2 * x, 2 * y}; }

}  // namespace fixtures
