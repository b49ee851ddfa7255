#include "hexcover/eisenstein.hpp"

#include <array>
#include <cmath>

namespace hexcover {

EisensteinInt unit_pow(int k) {
    static const std::array<EisensteinInt, 6> units = {{
        {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1},
    }};
    int r = k % 6;
    if (r < 0) r += 6;
    return units[r];
}

bool is_unit(EisensteinInt x) {
    return eis_norm(x) == 1;
}

int unit_exponent(EisensteinInt x) {
    for (int k = 0; k < 6; ++k)
        if (unit_pow(k) == x) return k;
    throw std::domain_error("not a unit of Z[omega]");
}

cplx excised_embed(ExcisedPoint p) {
    // m(omega+1) + n(omega^2-1), with omega+1 = 1+omega and omega^2-1 = -2+omega
    EisensteinInt e{checked_sub(p.m, checked_mul(2, p.n)), checked_add(p.m, p.n)};
    return embed(e);
}

ExcisedPoint excised_rotate(ExcisedPoint p) {
    // omega*(omega+1) = omega^2+omega = (omega+1) + (omega^2-1)
    // omega*(omega^2-1) = omega^3-omega = -1-omega = -(omega+1)
    return {checked_sub(p.m, p.n), p.m};
}

EisensteinInt excised_to_eis(ExcisedPoint p) {
    return {checked_sub(p.m, checked_mul(2, p.n)), checked_add(p.m, p.n)};
}

bool in_excised_lattice(EisensteinInt x) {
    std::int64_t d = x.u % 3 - x.v % 3;
    return d % 3 == 0;
}

ExcisedPoint eis_to_excised(EisensteinInt x) {
    if (!in_excised_lattice(x)) throw std::domain_error("point is not in the excised lattice");
    // solve m - 2n = u, m + n = v
    std::int64_t n = checked_sub(x.v, x.u) / 3;
    std::int64_t m = checked_sub(x.v, n);
    return {m, n};
}

ExcisedPoint nearest_excised_point(cplx z) {
    // invert the real embedding, round, then scan the 5x5 integer neighborhood
    // basis: omega+1 = (1.5, s), omega^2-1 = (-1.5, s) with s = sqrt(3)/2
    const double s = OMEGA.imag();
    double m0 = (z.real() / 1.5 + z.imag() / s) / 2.0;
    double n0 = (z.imag() / s - z.real() / 1.5) / 2.0;
    std::int64_t mc = std::llround(m0), nc = std::llround(n0);
    ExcisedPoint best{};
    double best_d2 = 0;
    bool first = true;
    for (std::int64_t dm = -2; dm <= 2; ++dm) {
        for (std::int64_t dn = -2; dn <= 2; ++dn) {
            ExcisedPoint p{checked_add(mc, dm), checked_add(nc, dn)};
            cplx w = excised_embed(p) - z;
            double d2 = std::norm(w);
            bool better = first || d2 < best_d2 - 1e-12 * (1.0 + best_d2);
            bool tie = !first && std::abs(d2 - best_d2) <= 1e-12 * (1.0 + best_d2);
            if (tie && (p.m < best.m || (p.m == best.m && p.n < best.n))) better = true;
            if (better) {
                best = p;
                best_d2 = std::min(d2, first ? d2 : best_d2);
                first = false;
            }
        }
    }
    return best;
}

} // namespace hexcover
