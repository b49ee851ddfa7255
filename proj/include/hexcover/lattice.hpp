#pragma once

#include <array>

#include "hexcover/eisenstein.hpp"

namespace hexcover {

// closed triangle with corners 0, omega, omega^2
struct FundamentalTriangle {
    std::array<cplx, 3> vertices{cplx(0.0, 0.0), OMEGA, OMEGA - 1.0};
};

// barycentric coordinates of u with respect to (0, omega, omega^2)
std::array<double, 3> triangle_barycentric(cplx u);

bool in_fundamental_triangle(cplx u, double tol);

// translate by -R to the Voronoi hexagon of the excised lattice, then rotate by
// a power of omega into the closed triangle; returns the triangle representative
struct TriangleReduction {
    cplx w;          // representative in the closed triangle
    int rot;         // power of omega applied after translation
    ExcisedPoint t;  // subtracted lattice point
};
TriangleReduction reduce_to_triangle(cplx z);

} // namespace hexcover
