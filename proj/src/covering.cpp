#include "hexcover/covering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hexcover {

namespace {

constexpr double PI = std::numbers::pi;

double success_threshold(const CoverContext& ctx, cplx v) {
    return std::max(ctx.residual_target, 1e-13 * std::abs(v));
}

cplx wp_prime_sq_at(const CoverContext& ctx, cplx w) {
    cplx dp = wp_prime(ctx.excised, w);
    return dp * dp;
}

struct NewtonOutcome {
    bool ok = false;
    cplx w;
    double residual = 1e300;
    int iterations = 0;
};

NewtonOutcome newton_from(const CoverContext& ctx, cplx v, cplx w0, double thr) {
    NewtonOutcome out;
    out.w = w0;
    cplx w = w0;
    for (int it = 0; it < ctx.max_iterations; ++it) {
        WpPair p;
        try {
            p = wp_pair(ctx.excised, w);
        } catch (const PoleProximityError&) {
            return out;
        }
        cplx f = p.dp * p.dp - v;
        double res = std::abs(f);
        out.iterations = it + 1;
        if (res < out.residual) {
            out.residual = res;
            out.w = w;
        }
        if (res <= thr) {
            out.ok = true;
            return out;
        }
        cplx ddp = 6.0 * p.p * p.p - 0.5 * ctx.excised.g2;
        cplx df = 2.0 * p.dp * ddp;
        if (std::abs(df) < 1e-280) {
            w += 1e-6 * cplx(0.7, 0.9); // step off an exact critical point
            continue;
        }
        cplx step = f / df;
        double t = 1.0;
        bool moved = false;
        while (t >= 1.0 / 1024.0) {
            cplx cand = w - t * step;
            double cres;
            try {
                WpPair q = wp_pair(ctx.excised, cand);
                cres = std::abs(q.dp * q.dp - v);
            } catch (const PoleProximityError&) {
                t *= 0.5;
                continue;
            }
            if (cres < res) {
                w = cand;
                moved = true;
                break;
            }
            t *= 0.5;
        }
        if (!moved)
            return out;
    }
    return out;
}

// scattered interior fallback seeds, barycentric in (omega, omega^2)
constexpr double FALLBACK_BARY[16][2] = {
    {0.33, 0.33}, {0.10, 0.10}, {0.10, 0.80}, {0.80, 0.10},
    {0.20, 0.50}, {0.50, 0.20}, {0.15, 0.30}, {0.30, 0.15},
    {0.45, 0.45}, {0.05, 0.45}, {0.45, 0.05}, {0.25, 0.70},
    {0.70, 0.25}, {0.06, 0.20}, {0.20, 0.06}, {0.40, 0.30},
};

} // namespace

CoverContext make_cover_context() {
    CoverContext ctx;
    ctx.excised = make_context(EXCISED_W1, EXCISED_W2);
    cplx dp = wp_prime(ctx.excised, OMEGA);
    ctx.wp_prime_omega_sq = dp * dp;

    const int grid = 63;
    const cplx v1 = OMEGA, v2 = OMEGA - 1.0;
    ctx.seeds.reserve((grid + 1) * (grid + 2) / 2);
    for (int i = 0; i <= grid; ++i) {
        for (int j = 0; i + j <= grid; ++j) {
            cplx p = (double(i) / grid) * v1 + (double(j) / grid) * v2;
            if (std::abs(p) < 1e-3)
                continue; // wp' pole at the origin corner
            ctx.seeds.push_back({p, wp_prime_sq_at(ctx, p)});
        }
    }
    return ctx;
}

cplx alpha(cplx z, const CoverContext& ctx) {
    return (z - 1.0) / ctx.wp_prime_omega_sq;
}

PhiResult invert_wp_prime_sq(cplx v, const CoverContext& ctx, std::optional<cplx> seed) {
    const double thr = success_threshold(ctx, v);

    std::vector<cplx> candidates;
    candidates.reserve(24);
    if (seed)
        candidates.push_back(*seed);
    if (!ctx.seeds.empty()) {
        const SeedEntry* best = &ctx.seeds.front();
        double bd = std::abs(best->value - v);
        for (const SeedEntry& s : ctx.seeds) {
            double d = std::abs(s.value - v);
            if (d < bd) {
                bd = d;
                best = &s;
            }
        }
        candidates.push_back(best->point);
    }
    if (std::abs(v) > 1e4) {
        // wp' ~ -2/w^3 at the origin, so w ~ (4/v)^(1/6) times a sixth root of unity;
        // pick the root whose argument lands in the triangle's sector
        cplx r = std::pow(4.0 / v, 1.0 / 6.0);
        for (int k = 0; k < 6; ++k) {
            cplx cand = r * embed(unit_pow(k));
            double a = std::arg(cand);
            if (a >= PI / 3.0 - 0.01 && a <= 2.0 * PI / 3.0 + 0.01) {
                candidates.push_back(cand);
                break;
            }
        }
    }
    candidates.push_back(0.5 * OMEGA);
    candidates.push_back(0.5 * (OMEGA - 1.0));
    candidates.push_back(cplx(0.0, OMEGA.imag())); // (omega + omega^2)/2
    for (const auto& bc : FALLBACK_BARY)
        candidates.push_back(bc[0] * OMEGA + bc[1] * (OMEGA - 1.0));

    double best_res = 1e300;
    int total_iterations = 0;
    for (cplx c : candidates) {
        NewtonOutcome out = newton_from(ctx, v, c, thr);
        total_iterations += out.iterations;
        best_res = std::min(best_res, out.residual);
        if (!out.ok)
            continue;
        cplx w = reduce_to_triangle(out.w).w;
        double res = std::abs(wp_prime_sq_at(ctx, w) - v);
        for (int polish = 0; polish < 4 && res > thr; ++polish) {
            WpPair p = wp_pair(ctx.excised, w);
            cplx f = p.dp * p.dp - v;
            cplx df = 2.0 * p.dp * (6.0 * p.p * p.p - 0.5 * ctx.excised.g2);
            if (std::abs(df) < 1e-280)
                break;
            w -= f / df;
            res = std::abs(wp_prime_sq_at(ctx, w) - v);
            ++total_iterations;
        }
        if (res > thr)
            continue;
        return PhiResult{w, res, total_iterations};
    }

    std::ostringstream msg;
    msg << "inversion did not converge; best residual " << best_res;
    throw ConvergenceError(msg.str());
}

PhiResult phi_on_F(cplx z, const CoverContext& ctx) {
    if (!(z.imag() > 0.0))
        throw std::domain_error("point must lie in the upper half-plane");
    if (std::abs(z.real()) > 0.5 + 1e-9 || std::norm(z) < 1.0 - 1e-9)
        throw std::domain_error("point must lie in the closed fundamental domain");
    cplx j = klein_j(ModularPoint(z));
    return invert_wp_prime_sq(alpha(j, ctx), ctx);
}

PhiResult phi(cplx z, const CoverContext& ctx) {
    Reduction red = reduce_to_F(z);
    PhiResult base = phi_on_F(red.w, ctx);
    base.value = affine_apply(affine_inverse(psi_matrix(red.g)), base.value);
    return base;
}

cplx phi_prime(cplx z, const CoverContext& ctx) {
    const double rho = 1e-3;
    if (!(z.imag() > rho))
        throw std::domain_error("derivative stencil would cross the real axis");
    Reduction red = reduce_to_F(z);
    const cplx corners[3] = {OMEGA, OMEGA - 1.0, cplx(0.0, 1.0)};
    for (cplx c : corners)
        if (std::abs(red.w - c) < 1e-3)
            throw std::domain_error("point too close to a corner orbit of the modular group");
    cplx sum{};
    for (int k = 0; k < 16; ++k) {
        double th = 2.0 * PI * double(k) / 16.0;
        cplx unit(std::cos(th), std::sin(th));
        sum += phi(z + rho * unit, ctx).value * std::conj(unit);
    }
    return sum / (16.0 * rho);
}

double equivariance_residual(const GammaElt& g, cplx z, const CoverContext& ctx) {
    cplx lhs = phi(gamma_apply(g, z), ctx).value;
    cplx rhs = affine_apply(psi_matrix(g), phi(z, ctx).value);
    return std::abs(lhs - rhs);
}

} // namespace hexcover
