#include "hexcover/elliptic.hpp"

#include <cmath>
#include <numbers>

#include "hexcover/gamma.hpp"

namespace hexcover {

namespace {

constexpr double PI = std::numbers::pi;
constexpr int LAURENT_TERMS = 22;

// wp(w) and wp'(w) by the Laurent expansion around 0; needs |w| <~ 0.3*shortest
WpPair laurent_eval(const EllipticContext& ctx, cplx w) {
    cplx w2 = w * w;
    cplx p = 1.0 / w2;
    cplx dp = -2.0 / (w2 * w);
    cplx wp_pow = w2;       // w^(2k-2)
    for (int k = 2; k <= LAURENT_TERMS; ++k) {
        cplx ck = ctx.laurent[k];
        p += ck * wp_pow;
        dp += double(2 * k - 2) * ck * (wp_pow / w);
        wp_pow *= w2;
    }
    return {p, dp};
}

WpPair duplicate(const EllipticContext& ctx, const WpPair& v) {
    cplx s = (6.0 * v.p * v.p - 0.5 * ctx.g2) / v.dp;
    cplx x = 0.25 * s * s - 2.0 * v.p;
    cplx y = -(v.dp + s * (x - v.p));
    return {x, y};
}

} // namespace

EllipticContext make_context(cplx period1, cplx period2) {
    cplx ratio = period2 / period1;
    if (std::abs(ratio.imag()) < 1e-12)
        throw std::domain_error("degenerate periods: ratio is real");
    if (ratio.imag() < 0.0)
        throw std::domain_error("periods must be positively oriented");

    EllipticContext ctx;
    ctx.period1 = period1;
    ctx.period2 = period2;

    Reduction red = reduce_to_F(ratio);
    const GammaElt& g = red.g;
    ctx.w1r = double(g.c) * period2 + double(g.d) * period1;
    ctx.w2r = double(g.a) * period2 + double(g.b) * period1;
    ctx.shortest = std::abs(ctx.w1r);
    cplx taur = ctx.w2r / ctx.w1r;

    // Eisenstein series in the nome; |q| <= exp(-pi*sqrt(3)) after reduction
    cplx q = std::exp(cplx(0.0, 2.0 * PI) * taur);
    cplx e4{1.0}, e6{1.0};
    cplx qn{1.0};
    for (int n = 1; n <= 64; ++n) {
        qn *= q;
        cplx r = qn / (1.0 - qn);
        double n2 = double(n) * n;
        cplx t4 = (240.0 * n2 * n) * r;
        cplx t6 = (504.0 * n2 * n2 * n) * r;
        e4 += t4;
        e6 -= t6;
        if (std::abs(t4) + std::abs(t6) < 1e-18)
            break;
    }
    cplx f = 2.0 * PI / ctx.w1r;
    cplx f2 = f * f;
    cplx f4 = f2 * f2;
    ctx.g2 = f4 * e4 / 12.0;
    ctx.g3 = f4 * f2 * e6 / 216.0;

    ctx.laurent.assign(LAURENT_TERMS + 1, cplx{});
    ctx.laurent[2] = ctx.g2 / 20.0;
    ctx.laurent[3] = ctx.g3 / 28.0;
    for (int k = 4; k <= LAURENT_TERMS; ++k) {
        cplx acc{};
        for (int m = 2; m <= k - 2; ++m)
            acc += ctx.laurent[m] * ctx.laurent[k - m];
        ctx.laurent[k] = 3.0 / double((2 * k + 1) * (k - 3)) * acc;
    }

    ctx.e1 = wp(ctx, 0.5 * period1);
    ctx.e2 = wp(ctx, 0.5 * period2);
    ctx.e3 = wp(ctx, 0.5 * (period1 + period2));
    return ctx;
}

WpPair wp_pair(const EllipticContext& ctx, cplx z) {
    // nearest lattice point in the reduced basis
    double det = ctx.w1r.real() * ctx.w2r.imag() - ctx.w1r.imag() * ctx.w2r.real();
    double a = (z.real() * ctx.w2r.imag() - z.imag() * ctx.w2r.real()) / det;
    double b = (ctx.w1r.real() * z.imag() - ctx.w1r.imag() * z.real()) / det;
    cplx w = z - double(std::llround(a)) * ctx.w1r - double(std::llround(b)) * ctx.w2r;

    if (std::abs(w) < 1e-8)
        throw PoleProximityError("point within 1e-8 of a lattice point");

    int halvings = 0;
    while (std::abs(w) > 0.3 * ctx.shortest) {
        w *= 0.5;
        ++halvings;
        if (halvings > 60)
            throw ConvergenceError("argument reduction failed");
    }

    WpPair v = laurent_eval(ctx, w);
    for (int i = 0; i < halvings; ++i)
        v = duplicate(ctx, v);
    if (!std::isfinite(v.p.real()) || !std::isfinite(v.p.imag()) ||
        !std::isfinite(v.dp.real()) || !std::isfinite(v.dp.imag()))
        throw ConvergenceError("nonfinite value in duplication chain");
    return v;
}

cplx wp(const EllipticContext& ctx, cplx z) { return wp_pair(ctx, z).p; }
cplx wp_prime(const EllipticContext& ctx, cplx z) { return wp_pair(ctx, z).dp; }

namespace {

cplx oracle_row(cplx w1, cplx w2, cplx z, int cutoff, int m) {
    cplx row{};
    for (int n = -cutoff; n <= cutoff; ++n) {
        if (m == 0 && n == 0)
            continue;
        cplx w = double(m) * w1 + double(n) * w2;
        cplx d = z - w;
        row += 1.0 / (d * d) - 1.0 / (w * w);
    }
    return row;
}

} // namespace

cplx wp_direct_oracle_serial(cplx w1, cplx w2, cplx z, int cutoff) {
    cplx sum = 1.0 / (z * z);
    for (int m = -cutoff; m <= cutoff; ++m)
        sum += oracle_row(w1, w2, z, cutoff, m);
    return sum;
}

cplx wp_direct_oracle(cplx w1, cplx w2, cplx z, int cutoff) {
    int rows = 2 * cutoff + 1;
    std::vector<cplx> partial(rows);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < rows; ++i)
        partial[i] = oracle_row(w1, w2, z, cutoff, i - cutoff);
    cplx sum = 1.0 / (z * z);
    for (int i = 0; i < rows; ++i)
        sum += partial[i];
    return sum;
}

cplx modular_lambda(ModularPoint tau) {
    EllipticContext ctx = make_context(1.0, tau.tau);
    cplx den = ctx.e1 - ctx.e2;
    if (std::abs(den) < 1e-14)
        throw ConvergenceError("half-period values degenerate for this tau");
    return (ctx.e3 - ctx.e2) / den;
}

cplx klein_j(ModularPoint tau) {
    cplx lam = modular_lambda(tau);
    cplx num = 1.0 - lam + lam * lam;
    cplx den = lam * lam * (1.0 - lam) * (1.0 - lam);
    if (std::abs(den) == 0.0)
        throw ConvergenceError("lambda at 0 or 1: J pole");
    cplx j = (4.0 / 27.0) * num * num * num / den;
    if (!std::isfinite(j.real()) || !std::isfinite(j.imag()))
        throw ConvergenceError("J overflow for this tau");
    return j;
}

} // namespace hexcover
