#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>

namespace hexcover {

using cplx = std::complex<double>;

// omega = (1 + i*sqrt(3))/2, a primitive sixth root of unity
inline const cplx OMEGA{0.5, 0.8660254037844386467637231707529362};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Z[omega] arithmetic");
    return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Z[omega] arithmetic");
    return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Z[omega] arithmetic");
    return r;
}

// u + v*omega, reduction rule omega^2 = omega - 1
struct EisensteinInt {
    std::int64_t u = 0;
    std::int64_t v = 0;

    bool operator==(const EisensteinInt&) const = default;
};

inline EisensteinInt eis_add(EisensteinInt x, EisensteinInt y) {
    return {checked_add(x.u, y.u), checked_add(x.v, y.v)};
}
inline EisensteinInt eis_sub(EisensteinInt x, EisensteinInt y) {
    return {checked_sub(x.u, y.u), checked_sub(x.v, y.v)};
}
inline EisensteinInt eis_neg(EisensteinInt x) {
    return {checked_sub(0, x.u), checked_sub(0, x.v)};
}
inline EisensteinInt eis_mul(EisensteinInt x, EisensteinInt y) {
    // (u1 + v1 w)(u2 + v2 w) = u1 u2 - v1 v2 + (u1 v2 + v1 u2 + v1 v2) w
    std::int64_t uu = checked_mul(x.u, y.u);
    std::int64_t vv = checked_mul(x.v, y.v);
    std::int64_t cross = checked_add(checked_add(checked_mul(x.u, y.v), checked_mul(x.v, y.u)), vv);
    return {checked_sub(uu, vv), cross};
}

// field norm u^2 + uv + v^2 (= |z|^2)
inline std::int64_t eis_norm(EisensteinInt x) {
    return checked_add(checked_add(checked_mul(x.u, x.u), checked_mul(x.u, x.v)), checked_mul(x.v, x.v));
}

inline cplx embed(EisensteinInt x) {
    return cplx(double(x.u), 0.0) + cplx(double(x.v), 0.0) * OMEGA;
}

// omega^k for k in {0..5}
EisensteinInt unit_pow(int k);

bool is_unit(EisensteinInt x);

// exponent k with x = omega^k; throws if x is not a unit
int unit_exponent(EisensteinInt x);

// the lattice point m(omega+1) + n(omega^2-1)
struct ExcisedPoint {
    std::int64_t m = 0;
    std::int64_t n = 0;

    bool operator==(const ExcisedPoint&) const = default;
};

cplx excised_embed(ExcisedPoint p);

// multiplication by omega as a Z-linear map on (m, n)
ExcisedPoint excised_rotate(ExcisedPoint p);

EisensteinInt excised_to_eis(ExcisedPoint p);

// membership of u+vw in R = Z(omega+1) + Z(omega^2-1); holds iff u == v (mod 3)
bool in_excised_lattice(EisensteinInt x);

// inverse of excised_to_eis; throws std::domain_error when x is outside R
ExcisedPoint eis_to_excised(EisensteinInt x);

// (m,n) minimizing |z - embed(m,n)|, ties broken lexicographically on (m,n)
ExcisedPoint nearest_excised_point(cplx z);

} // namespace hexcover
