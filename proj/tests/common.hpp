#ifndef TESTS_COMMON_HPP
#define TESTS_COMMON_HPP

#include "pltop/geom.hpp"

namespace testutil {

using namespace pltop;

inline Rational Q(const char* s) { return parse_rational(s); }

inline VecQ pt(const char* x, const char* y) { return {Q(x), Q(y)}; }

inline SimplicialComplex unit_triangle() {
    return build_complex(2, {pt("0", "0"), pt("1", "0"), pt("0", "1")}, {{0, 1, 2}});
}

inline SimplicialComplex unit_square() {
    return build_complex(2, {pt("0", "0"), pt("1", "0"), pt("1", "1"), pt("0", "1")},
                         {{0, 1, 2}, {0, 2, 3}});
}

// Fan triangulation of the rational octagon inscribed in the unit circle.
inline SimplicialComplex octagon_disk() {
    std::vector<VecQ> v = {
        pt("0", "0"),      pt("1", "0"),    pt("3/5", "4/5"),  pt("0", "1"),
        pt("-3/5", "4/5"), pt("-1", "0"),   pt("-3/5", "-4/5"), pt("0", "-1"),
        pt("3/5", "-4/5"),
    };
    std::vector<std::vector<int>> tris;
    for (int i = 1; i <= 8; ++i) tris.push_back({0, i, i % 8 + 1});
    return build_complex(2, v, tris);
}

// Point at counterclockwise arclength u along the perimeter of the square
// [-1,1]^2, starting from the corner (1,-1); total length 8.
inline VecQ square_perimeter_point(const Rational& u0) {
    Rational u = u0;
    while (u < 0) u += 8;
    while (u >= 8) u -= 8;
    if (u < 2) return {Rational(1), Rational(-1) + u};
    if (u < 4) return {Rational(1) - (u - 2), Rational(1)};
    if (u < 6) return {Rational(-1), Rational(1) - (u - 4)};
    return {Rational(-1) + (u - 6), Rational(-1)};
}

// PL circle with n evenly spaced vertices on the square perimeter;
// n must be a multiple of 4 so the corners are vertices.
inline SimplicialComplex perimeter_circle(int n) {
    std::vector<VecQ> verts;
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i) {
        verts.push_back(square_perimeter_point(Rational(8 * i, n)));
        edges.push_back({i, (i + 1) % n});
    }
    return orient(build_complex(2, verts, edges));
}

}  // namespace testutil

#endif
