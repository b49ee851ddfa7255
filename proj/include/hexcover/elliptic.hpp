#pragma once

#include <stdexcept>
#include <vector>

#include "hexcover/eisenstein.hpp"

namespace hexcover {

struct PoleProximityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// periods of the excised lattice R = Z(omega+1) + Z(omega^2 - 1)
inline const cplx EXCISED_W1 = OMEGA + 1.0;
inline const cplx EXCISED_W2 = OMEGA - 2.0; // omega^2 - 1

struct EllipticContext {
    cplx period1, period2; // Im(period2/period1) > 0
    cplx g2, g3;
    cplx e1, e2, e3;       // wp at period1/2, period2/2, (period1+period2)/2
    double tol = 1e-10;

    // reduced basis spanning the same lattice, with w2r/w1r in the standard
    // fundamental domain so the nome series and the Laurent tail both converge fast
    cplx w1r, w2r;
    double shortest = 0.0;      // |w1r|
    std::vector<cplx> laurent;  // c_k, k = 2..K, wp(w) = 1/w^2 + sum c_k w^(2k-2)
};

EllipticContext make_context(cplx period1, cplx period2);

struct WpPair {
    cplx p;  // wp(z)
    cplx dp; // wp'(z)
};

WpPair wp_pair(const EllipticContext& ctx, cplx z);
cplx wp(const EllipticContext& ctx, cplx z);
cplx wp_prime(const EllipticContext& ctx, cplx z);

// truncated double sum, square truncation 0 < max(|m|,|n|) <= cutoff
cplx wp_direct_oracle_serial(cplx w1, cplx w2, cplx z, int cutoff);
cplx wp_direct_oracle(cplx w1, cplx w2, cplx z, int cutoff); // parallel, bitwise equal to serial

struct ModularPoint {
    cplx tau;
    explicit ModularPoint(cplx t) : tau(t) {
        if (!(t.imag() > 0.0))
            throw std::domain_error("modular point must have positive imaginary part");
    }
};

cplx modular_lambda(ModularPoint tau);
cplx klein_j(ModularPoint tau);

} // namespace hexcover
