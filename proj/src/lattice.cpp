#include "hexcover/lattice.hpp"

#include <cmath>

namespace hexcover {

std::array<double, 3> triangle_barycentric(cplx u) {
    // solve u = b1*omega + b2*omega^2, b0 = 1 - b1 - b2
    const cplx w1 = OMEGA;
    const cplx w2 = OMEGA - 1.0;
    double det = w1.real() * w2.imag() - w1.imag() * w2.real();
    double b1 = (u.real() * w2.imag() - u.imag() * w2.real()) / det;
    double b2 = (w1.real() * u.imag() - w1.imag() * u.real()) / det;
    return {1.0 - b1 - b2, b1, b2};
}

bool in_fundamental_triangle(cplx u, double tol) {
    auto b = triangle_barycentric(u);
    for (double x : b)
        if (x < -tol || x > 1.0 + tol)
            return false;
    return true;
}

TriangleReduction reduce_to_triangle(cplx z) {
    ExcisedPoint t = nearest_excised_point(z);
    cplx w = z - excised_embed(t);
    // rotate into the closed triangle; the hexagonal Voronoi cell is the union
    // of the six rotates of the triangle, so one of them always contains w
    int best = 0;
    double best_min = -1e300;
    for (int k = 0; k < 6; ++k) {
        cplx u = w * embed(unit_pow(k));
        auto b = triangle_barycentric(u);
        double m = std::min(b[0], std::min(b[1], b[2]));
        if (m > best_min) {
            best_min = m;
            best = k;
        }
    }
    return {w * embed(unit_pow(best)), best, t};
}

} // namespace hexcover
