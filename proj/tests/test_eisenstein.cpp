#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "hexcover/eisenstein.hpp"

using namespace hexcover;

namespace {

cplx omega_pow(int k) {
    cplx r{1.0, 0.0};
    for (int i = 0; i < k; ++i) r *= OMEGA;
    return r;
}

}  // namespace

TEST_CASE("powers of the sixth root follow the unit table") {
    CHECK(unit_pow(0) == EisensteinInt{1, 0});
    CHECK(unit_pow(1) == EisensteinInt{0, 1});
    CHECK(unit_pow(2) == EisensteinInt{-1, 1});
    CHECK(unit_pow(3) == EisensteinInt{-1, 0});
    CHECK(unit_pow(4) == EisensteinInt{0, -1});
    CHECK(unit_pow(5) == EisensteinInt{1, -1});
    CHECK(unit_pow(7) == unit_pow(1));
    CHECK(unit_pow(-1) == unit_pow(5));
    for (int k = 0; k < 6; ++k) {
        CHECK(std::abs(embed(unit_pow(k)) - omega_pow(k)) < 1e-12);
        CHECK(is_unit(unit_pow(k)));
        CHECK(unit_exponent(unit_pow(k)) == k);
    }
    CHECK_THROWS_AS(unit_exponent(EisensteinInt{2, 0}), std::domain_error);
    CHECK_FALSE(is_unit(EisensteinInt{1, 1}));
}

TEST_CASE("ring operations agree with the complex embedding") {
    for (std::int64_t u1 = -3; u1 <= 3; ++u1)
        for (std::int64_t v1 = -3; v1 <= 3; ++v1)
            for (std::int64_t u2 = -2; u2 <= 2; ++u2)
                for (std::int64_t v2 = -2; v2 <= 2; ++v2) {
                    EisensteinInt a{u1, v1};
                    EisensteinInt b{u2, v2};
                    CHECK(std::abs(embed(eis_add(a, b)) - (embed(a) + embed(b))) < 1e-12);
                    CHECK(std::abs(embed(eis_sub(a, b)) - (embed(a) - embed(b))) < 1e-12);
                    CHECK(std::abs(embed(eis_mul(a, b)) - embed(a) * embed(b)) < 1e-11);
                    CHECK(eis_norm(eis_mul(a, b)) == eis_norm(a) * eis_norm(b));
                }
}

TEST_CASE("norm values") {
    CHECK(eis_norm(EisensteinInt{1, 0}) == 1);
    CHECK(eis_norm(EisensteinInt{1, 1}) == 3);
    CHECK(eis_norm(EisensteinInt{2, -1}) == 3);
    CHECK(eis_norm(EisensteinInt{-1, 2}) == 3);
    for (std::int64_t u = -4; u <= 4; ++u)
        for (std::int64_t v = -4; v <= 4; ++v) {
            EisensteinInt x{u, v};
            double nrm = std::norm(embed(x));
            CHECK(std::abs(double(eis_norm(x)) - nrm) < 1e-9);
            CHECK(is_unit(x) == (eis_norm(x) == 1));
        }
}

TEST_CASE("multiplication overflow throws") {
    EisensteinInt big{3037000500, 0};
    CHECK_THROWS_AS(eis_mul(big, big), std::overflow_error);
    CHECK_THROWS_AS(eis_add(EisensteinInt{INT64_MAX, 0}, EisensteinInt{1, 0}),
                    std::overflow_error);
}

TEST_CASE("sublattice membership is the mod-3 congruence") {
    for (std::int64_t u = -6; u <= 6; ++u)
        for (std::int64_t v = -6; v <= 6; ++v) {
            bool cong = ((u - v) % 3 + 3) % 3 == 0;
            CHECK(in_excised_lattice(EisensteinInt{u, v}) == cong);
        }
}

TEST_CASE("sublattice coordinates round-trip") {
    for (std::int64_t m = -5; m <= 5; ++m)
        for (std::int64_t n = -5; n <= 5; ++n) {
            ExcisedPoint p{m, n};
            EisensteinInt x = excised_to_eis(p);
            CHECK(in_excised_lattice(x));
            CHECK(eis_to_excised(x) == p);
            CHECK(std::abs(excised_embed(p) - embed(x)) < 1e-12);
        }
    CHECK_THROWS_AS(eis_to_excised(EisensteinInt{1, 0}), std::domain_error);
}

TEST_CASE("sublattice rotation embeds as multiplication by the sixth root") {
    for (std::int64_t m = -4; m <= 4; ++m)
        for (std::int64_t n = -4; n <= 4; ++n) {
            ExcisedPoint p{m, n};
            CHECK(std::abs(excised_embed(excised_rotate(p)) - OMEGA * excised_embed(p)) < 1e-12);
        }
}

TEST_CASE("nearest lattice point recovers the center under small perturbation") {
    cplx bump = 0.3 * cplx{0.6, 0.3};
    for (std::int64_t m = -3; m <= 3; ++m)
        for (std::int64_t n = -3; n <= 3; ++n) {
            ExcisedPoint p{m, n};
            ExcisedPoint q = nearest_excised_point(excised_embed(p) + bump);
            CHECK(q == p);
        }
}
