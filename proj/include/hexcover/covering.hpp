#pragma once

#include <optional>
#include <vector>

#include "hexcover/elliptic.hpp"
#include "hexcover/gamma.hpp"
#include "hexcover/lattice.hpp"

namespace hexcover {

struct SeedEntry {
    cplx point; // in the closed fundamental triangle
    cplx value; // (wp'(point))^2
};

struct CoverContext {
    EllipticContext excised;
    cplx wp_prime_omega_sq; // (wp'(omega))^2, the alpha normalization constant
    std::vector<SeedEntry> seeds;
    int max_iterations = 50;
    double residual_target = 1e-11;
};

CoverContext make_cover_context();

// (z - 1) / wp_prime_omega_sq
cplx alpha(cplx z, const CoverContext& ctx);

struct PhiResult {
    cplx value;
    double residual = 0.0; // |(wp'(value))^2 - target|
    int iterations = 0;
};

// solve (wp'(w))^2 = v for w in the closed fundamental triangle by damped Newton;
// success threshold max(residual_target, 1e-13*|v|); throws ConvergenceError with
// the best residual if every seed fails
PhiResult invert_wp_prime_sq(cplx v, const CoverContext& ctx,
                             std::optional<cplx> seed = std::nullopt);

// the composite inversion of alpha(J(z)); z must lie in the closed fundamental
// domain of the modular group
PhiResult phi_on_F(cplx z, const CoverContext& ctx);

// equivariant extension to the upper half-plane via reduce_to_F
PhiResult phi(cplx z, const CoverContext& ctx);

// discrete Cauchy-integral derivative: 16-point trapezoid rule on a circle of
// radius 1e-3; rejects points too close to the real axis or to the corner orbits
cplx phi_prime(cplx z, const CoverContext& ctx);

// |phi(g z) - psi(g)(phi(z))|
double equivariance_residual(const GammaElt& g, cplx z, const CoverContext& ctx);

} // namespace hexcover
