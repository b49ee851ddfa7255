#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "hexcover/gamma.hpp"

using namespace hexcover;

namespace {

Word random_word(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> pick(0, 2);
    Word w;
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
        int r = pick(rng);
        w.push(r == 0 ? 0 : (r == 1 ? 1 : -1));
    }
    return w;
}

const cplx I{0.0, 1.0};

}  // namespace

TEST_CASE("matrix construction normalizes signs and rejects det != 1") {
    CHECK(make_gamma(-1, 0, 0, -1) == GammaElt{});
    CHECK(make_gamma(0, -1, 1, 0) == gamma_S());
    CHECK(make_gamma(0, 1, -1, 0) == gamma_S());
    CHECK(gamma_T_pow(-5) == make_gamma(1, -5, 0, 1));
    CHECK_THROWS_AS(make_gamma(1, 0, 0, 2), std::domain_error);
    CHECK_THROWS_AS(make_gamma(2, 0, 0, 2), std::domain_error);
}

TEST_CASE("group operations act as Moebius maps") {
    std::mt19937 rng(401);
    for (int trial = 0; trial < 200; ++trial) {
        GammaElt g = word_to_matrix(random_word(rng, 10));
        GammaElt h = word_to_matrix(random_word(rng, 10));
        cplx z{0.3, 1.7};
        CHECK(std::abs(gamma_apply(gamma_mul(g, h), z) - gamma_apply(g, gamma_apply(h, z))) < 1e-9);
        CHECK(gamma_mul(g, gamma_inv(g)) == GammaElt{});
    }
}

TEST_CASE("words round-trip through matrices") {
    std::mt19937 rng(402);
    for (int trial = 0; trial < 300; ++trial) {
        GammaElt g = word_to_matrix(random_word(rng, 12));
        Word w = matrix_to_word(g);
        CHECK(word_to_matrix(w) == g);
    }
    CHECK(word_to_string(Word{}) == "e");
    CHECK(word_to_matrix(word_from_string("TTSt")) ==
          gamma_mul(gamma_T_pow(2), gamma_mul(gamma_S(), gamma_T_pow(-1))));
    CHECK_THROWS_AS(word_from_string("SX"), std::invalid_argument);
}

TEST_CASE("adjacent inverse letters cancel on push") {
    Word w;
    w.push(1);
    w.push(-1);
    CHECK(w.letters.empty());
    w.push(-1);
    w.push(-1);
    w.push(1);
    CHECK(w.letters.size() == 1);
    CHECK(w.letters[0] == -1);
}

TEST_CASE("generator images under the lift") {
    CHECK(psi_S() == AffineMap{unit_pow(3), EisensteinInt{-1, 2}});
    CHECK(psi_T() == AffineMap{unit_pow(1), EisensteinInt{0, 0}});
    CHECK(std::abs(embed(EisensteinInt{-1, 2}) - cplx{0.0, std::sqrt(3.0)}) < 1e-12);
}

TEST_CASE("lift is a homomorphism on random words") {
    std::mt19937 rng(403);
    for (int trial = 0; trial < 200; ++trial) {
        Word w1 = random_word(rng, 8);
        Word w2 = random_word(rng, 8);
        Word cat = w1;
        for (int letter : w2.letters) cat.push(letter);
        CHECK(psi_word(cat) == affine_compose(psi_word(w1), psi_word(w2)));
        CHECK(psi_matrix(word_to_matrix(cat)) == psi_word(cat));
    }
}

TEST_CASE("normal form of generator images") {
    CHECK(normal_form(psi_word(word_from_string("S"))) == NormalForm{0, 1, 3});
    CHECK(normal_form(psi_word(word_from_string("TTTTTT"))) == NormalForm{0, 0, 0});
    CHECK(normal_form(psi_word(word_from_string("T"))) == NormalForm{0, 0, 1});
    CHECK_THROWS_AS(normal_form(AffineMap{unit_pow(0), EisensteinInt{1, 0}}),
                    std::domain_error);
}

TEST_CASE("normal form round-trips on random words") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 1000; ++trial) {
        AffineMap m = psi_word(random_word(rng, 20));
        NormalForm nf = normal_form(m);
        CHECK(affine_from_normal_form(nf) == m);
    }
}

TEST_CASE("T^2 S T^-2 maps to the first translation" * doctest::may_fail()) {
    AffineMap a = psi_word(word_from_string("TTStt"));
    CHECK(a == AffineMap{unit_pow(0), EisensteinInt{1, 1}});
}

TEST_CASE("T^-1 S T^-2 maps to the first translation") {
    AffineMap a = psi_word(word_from_string("tStt"));
    CHECK(a == AffineMap{unit_pow(0), EisensteinInt{1, 1}});
    CHECK(normal_form(a) == NormalForm{1, 0, 0});
    // for comparison, the image of T^2 S T^-2 is a point reflection
    CHECK(normal_form(psi_word(word_from_string("TTStt"))) == NormalForm{-1, 0, 3});
}

TEST_CASE("exponent character matches the lift and is a homomorphism") {
    CHECK(ell_character(gamma_S()) == 3);
    CHECK(ell_character(gamma_T()) == 1);
    std::mt19937 rng(405);
    for (int trial = 0; trial < 200; ++trial) {
        GammaElt g = word_to_matrix(random_word(rng, 10));
        GammaElt h = word_to_matrix(random_word(rng, 10));
        CHECK(ell_character(g) == unit_exponent(psi_matrix(g).linear));
        CHECK(ell_character(gamma_mul(g, h)) == (ell_character(g) + ell_character(h)) % 6);
    }
}

TEST_CASE("kernel membership") {
    GammaElt t6 = gamma_T_pow(6);
    CHECK(in_N(t6));
    CHECK_FALSE(in_N(gamma_S()));
    CHECK_FALSE(in_N(gamma_T()));
    CHECK_FALSE(in_N(gamma_mul(gamma_S(), gamma_T())));
    std::mt19937 rng(406);
    for (int trial = 0; trial < 200; ++trial) {
        GammaElt g = word_to_matrix(random_word(rng, 10));
        CHECK(in_N(gamma_mul(g, gamma_mul(t6, gamma_inv(g)))));
    }
}

TEST_CASE("kernel matrices from the parameter family") {
    for (std::int64_t x = -5; x <= 5; ++x)
        for (std::int64_t y = -5; y <= 5; ++y) {
            if (x == 0 && y == 0) continue;
            GammaElt g = n_matrix(x, y);
            CHECK(g == make_gamma(1 + 6 * x * y, -6 * x * x, 6 * y * y, 1 - 6 * x * y));
            CHECK(in_N(g));
        }
}

TEST_CASE("square-zero cores and their bracket") {
    std::mt19937 rng(407);
    std::uniform_int_distribution<std::int64_t> coeff(-50, 50);
    IMat2 zero{};
    for (int trial = 0; trial < 200; ++trial) {
        std::int64_t x = coeff(rng), y = coeff(rng);
        std::int64_t p = coeff(rng), q = coeff(rng);
        IMat2 a = square_zero_core(x, y);
        IMat2 b = square_zero_core(p, q);
        CHECK(imat_mul(a, a) == zero);
        CliffordBracket br = clifford_bracket(a, b);
        CHECK(br.is_scalar);
        std::int64_t cross = x * q - p * y;
        CHECK(br.scalar == -cross * cross);
    }
}

TEST_CASE("fundamental domain reduction on reference points") {
    Reduction r1 = reduce_to_F(I);
    CHECK(r1.g == GammaElt{});
    CHECK(std::abs(r1.w - I) < 1e-14);

    Reduction r2 = reduce_to_F(I + 5.0);
    CHECK(r2.g == make_gamma(1, -5, 0, 1));
    CHECK(std::abs(r2.w - I) < 1e-12);

    Reduction r3 = reduce_to_F(cplx{0.0, 0.1});
    CHECK(r3.g == gamma_S());
    CHECK(std::abs(r3.w - cplx{0.0, 10.0}) < 1e-12);

    Reduction r4 = reduce_to_F(OMEGA);
    CHECK(std::abs(r4.w - (OMEGA - 1.0)) < 1e-12);

    Reduction r5 = reduce_to_F(OMEGA - 1.0);
    CHECK(r5.g == GammaElt{});

    CHECK_THROWS_AS(reduce_to_F(cplx{0.3, -1.0}), std::domain_error);
    CHECK_THROWS_AS(reduce_to_F(cplx{0.3, 0.0}), std::domain_error);
}

TEST_CASE("fundamental domain reduction postconditions hold on random points") {
    std::mt19937 rng(408);
    std::uniform_real_distribution<double> re(-4.0, 4.0);
    std::uniform_real_distribution<double> im(0.05, 4.0);
    for (int trial = 0; trial < 300; ++trial) {
        cplx z{re(rng), im(rng)};
        Reduction r = reduce_to_F(z);
        CHECK(r.w.real() >= -0.5 - 1e-12);
        CHECK(r.w.real() <= 0.5 + 1e-12);
        CHECK(std::norm(r.w) >= 1.0 - 1e-12);
        CHECK(std::abs(gamma_apply(r.g, z) - r.w) < 1e-9);
    }
}
