#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "hexcover/elliptic.hpp"

using namespace hexcover;

namespace {

const cplx I{0.0, 1.0};

double rel_err(cplx got, cplx want) {
    return std::abs(got - want) / std::abs(want);
}

cplx cell_point(const EllipticContext& ctx, double a, double b) {
    return a * ctx.period1 + b * ctx.period2;
}

}  // namespace

// Reference values below were frozen from an independent direct-summation
// implementation (Eisenstein series over the lattice, cutoff 4000, compensated
// accumulation) cross-checked against the nome series at 30 digits.

TEST_CASE("lattice invariants of the rectangular lattice (1, 2i)") {
    EllipticContext ctx = make_context(1.0, cplx{0.0, 2.0});
    CHECK(rel_err(ctx.g2, cplx{129.9874950888482730, 0.0}) < 1e-12);
    CHECK(rel_err(ctx.g3, cplx{284.3553308765407990, 0.0}) < 1e-12);
}

TEST_CASE("wp and wp' on the rectangular lattice (1, 2i)") {
    EllipticContext ctx = make_context(1.0, cplx{0.0, 2.0});
    cplx z{0.3, 0.2};
    WpPair v = wp_pair(ctx, z);
    CHECK(rel_err(v.p, cplx{3.13483231004535637, -6.21581600172263929}) < 1e-12);
    CHECK(rel_err(v.dp, cplx{11.1751341038020419, 46.3349136777907099}) < 1e-12);
}

TEST_CASE("wp and wp' on the excised lattice") {
    EllipticContext ctx = make_context(EXCISED_W1, EXCISED_W2);
    WpPair a = wp_pair(ctx, cplx{0.3, 0.1});
    CHECK(rel_err(a.p, cplx{7.99695900527764492, -6.01042323618004172}) < 1e-12);
    CHECK(rel_err(a.dp, cplx{-36.0782015697141880, 51.8870893339425724}) < 1e-12);
    WpPair b = wp_pair(ctx, cplx{0.77, 0.31});
    CHECK(rel_err(b.p, cplx{1.01483075059468835, -1.52953331590298541}) < 1e-12);
    CHECK(rel_err(b.dp, cplx{-2.61901921265794250, 0.876216070276225429}) < 1e-12);
}

TEST_CASE("half-period values on the excised lattice") {
    EllipticContext ctx = make_context(EXCISED_W1, EXCISED_W2);
    CHECK(rel_err(ctx.e1, cplx{0.9830573282474616, -1.7027052392775188}) < 1e-10);
    CHECK(rel_err(ctx.e3, cplx{-1.9661146564949232, 0.0}) < 1e-10);
    CHECK(std::abs(ctx.e1 + ctx.e2 + ctx.e3) < 1e-10);
    CHECK(std::abs(ctx.g2) < 1e-10);
    CHECK(rel_err(wp_prime(ctx, OMEGA), cplx{5.5137015767105677551, 0.0}) < 1e-11);
}

TEST_CASE("wp satisfies parity, periodicity and the differential equation") {
    EllipticContext hexa = make_context(EXCISED_W1, EXCISED_W2);
    EllipticContext rect = make_context(1.0, cplx{0.0, 2.0});
    std::mt19937 rng(501);
    std::uniform_real_distribution<double> coord(0.15, 0.85);
    for (const EllipticContext* ctx : {&hexa, &rect}) {
        for (int trial = 0; trial < 100; ++trial) {
            cplx z = cell_point(*ctx, coord(rng), coord(rng));
            WpPair v = wp_pair(*ctx, z);
            CHECK(rel_err(wp(*ctx, -z), v.p) < 1e-10);
            CHECK(rel_err(wp_prime(*ctx, -z), -v.dp) < 1e-10);
            CHECK(rel_err(wp(*ctx, z + ctx->period1), v.p) < 1e-10);
            CHECK(rel_err(wp(*ctx, z + ctx->period2), v.p) < 1e-10);
            cplx ode = v.dp * v.dp - (4.0 * v.p * v.p * v.p - ctx->g2 * v.p - ctx->g3);
            CHECK(std::abs(ode) < 1e-8);
        }
    }
}

TEST_CASE("evaluation near a lattice point is refused") {
    EllipticContext ctx = make_context(EXCISED_W1, EXCISED_W2);
    CHECK_THROWS_AS(wp(ctx, cplx{1e-12, 1e-12}), PoleProximityError);
    CHECK_THROWS_AS(wp(ctx, EXCISED_W1 + cplx{1e-11, 0.0}), PoleProximityError);
}

TEST_CASE("context construction rejects degenerate bases") {
    CHECK_THROWS_AS(make_context(1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(make_context(1.0, cplx{0.0, -2.0}), std::domain_error);
}

TEST_CASE("direct summation oracle agrees and improves with the cutoff") {
    EllipticContext ctx = make_context(EXCISED_W1, EXCISED_W2);
    for (cplx z : {cplx{0.3, 0.1}, cplx{0.77, 0.31}, cplx{-0.4, 0.55}}) {
        cplx exact = wp(ctx, z);
        cplx s150 = wp_direct_oracle(EXCISED_W1, EXCISED_W2, z, 150);
        cplx s300 = wp_direct_oracle(EXCISED_W1, EXCISED_W2, z, 300);
        CHECK(std::abs(s150 - exact) < 1e-3);
        CHECK(std::abs(s300 - exact) < std::abs(s150 - exact));
    }
}

TEST_CASE("parallel oracle is bitwise identical to the serial one") {
    for (cplx z : {cplx{0.3, 0.1}, cplx{-0.2, 0.65}}) {
        cplx par = wp_direct_oracle(EXCISED_W1, EXCISED_W2, z, 120);
        cplx ser = wp_direct_oracle_serial(EXCISED_W1, EXCISED_W2, z, 120);
        CHECK(par.real() == ser.real());
        CHECK(par.imag() == ser.imag());
    }
}

TEST_CASE("modular lambda reference values") {
    CHECK(std::abs(modular_lambda(ModularPoint(I)) - 0.5) < 1e-12);
    CHECK(rel_err(modular_lambda(ModularPoint(2.0 * I)),
                  cplx{0.0294372515228594144, 0.0}) < 1e-11);
    CHECK(rel_err(modular_lambda(ModularPoint(cplx{0.3, 1.1})),
                  cplx{0.317633000758201356, 0.29558392855738659}) < 1e-11);
    CHECK(rel_err(modular_lambda(ModularPoint(OMEGA)),
                  cplx{0.5, 0.8660254037844386}) < 1e-11);
}

TEST_CASE("modular lambda functional equations") {
    std::mt19937 rng(502);
    std::uniform_real_distribution<double> re(-0.45, 0.45);
    std::uniform_real_distribution<double> im(0.9, 1.6);
    for (int trial = 0; trial < 10; ++trial) {
        cplx tau{re(rng), im(rng)};
        cplx l = modular_lambda(ModularPoint(tau));
        cplx lt = modular_lambda(ModularPoint(tau + 1.0));
        cplx ls = modular_lambda(ModularPoint(-1.0 / tau));
        CHECK(std::abs(lt - l / (l - 1.0)) < 1e-8);
        CHECK(std::abs(ls - (1.0 - l)) < 1e-8);
    }
}

TEST_CASE("klein j reference values") {
    CHECK(std::abs(klein_j(ModularPoint(I)) - 1.0) < 1e-9);
    CHECK(rel_err(klein_j(ModularPoint(2.0 * I)), cplx{166.375, 0.0}) < 1e-9);
    CHECK(rel_err(klein_j(ModularPoint(cplx{0.3, 1.1})),
                  cplx{0.206393467452970048, -0.452027669265077042}) < 1e-9);
    CHECK(std::abs(klein_j(ModularPoint(OMEGA))) < 1e-8);
}

TEST_CASE("klein j is invariant under the modular group") {
    std::mt19937 rng(503);
    std::uniform_real_distribution<double> re(-0.45, 0.45);
    std::uniform_real_distribution<double> im(0.9, 1.6);
    for (int trial = 0; trial < 50; ++trial) {
        cplx tau{re(rng), im(rng)};
        cplx j0 = klein_j(ModularPoint(tau));
        CHECK(std::abs(klein_j(ModularPoint(tau + 1.0)) - j0) < 1e-7 * (1.0 + std::abs(j0)));
        CHECK(std::abs(klein_j(ModularPoint(-1.0 / tau)) - j0) < 1e-7 * (1.0 + std::abs(j0)));
    }
}

TEST_CASE("modular point requires positive imaginary part") {
    CHECK_THROWS_AS(ModularPoint(cplx{0.3, -1.0}), std::domain_error);
    CHECK_THROWS_AS(ModularPoint(cplx{0.3, 0.0}), std::domain_error);
}
