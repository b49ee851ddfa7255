#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hexcover/eisenstein.hpp"

namespace hexcover {

// element of PSL2(Z): integer matrix with det 1, sign-normalized so the first
// nonzero entry of (a, b, c) is positive
struct GammaElt {
    std::int64_t a = 1, b = 0, c = 0, d = 1;
    bool operator==(const GammaElt&) const = default;
};

GammaElt make_gamma(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
GammaElt gamma_S();
GammaElt gamma_T();
GammaElt gamma_T_pow(std::int64_t n);
GammaElt gamma_mul(const GammaElt& g, const GammaElt& h);
GammaElt gamma_inv(const GammaElt& g);
cplx gamma_apply(const GammaElt& g, cplx z);

// word in the generators: 0 = S, +1 = T, -1 = T^{-1};
// adjacent T,T^{-1} pairs cancel on push
struct Word {
    std::vector<int> letters;
    void push(int letter);
};

Word word_from_string(const std::string& s); // e.g. "TTSt" with t = T^{-1}
std::string word_to_string(const Word& w);
GammaElt word_to_matrix(const Word& w);
Word matrix_to_word(const GammaElt& g);

// affine map z -> linear*z + trans with linear a unit of Z[omega]
struct AffineMap {
    EisensteinInt linear{1, 0};
    EisensteinInt trans{0, 0};
    bool operator==(const AffineMap&) const = default;
};

AffineMap affine_compose(const AffineMap& f, const AffineMap& g); // f after g
AffineMap affine_inverse(const AffineMap& f);
cplx affine_apply(const AffineMap& f, cplx z);
bool affine_is_identity(const AffineMap& f);

AffineMap psi_S();
AffineMap psi_T();
AffineMap psi_letter(int letter);
AffineMap psi_word(const Word& w);
AffineMap psi_matrix(const GammaElt& g);

// A^p B^q c^k with A: z+omega+1, B: z+omega+omega^2, c: omega*z
struct NormalForm {
    std::int64_t p = 0, q = 0;
    int k = 0;
    bool operator==(const NormalForm&) const = default;
};

NormalForm normal_form(const AffineMap& m); // throws if trans not in R
AffineMap affine_from_normal_form(const NormalForm& nf);

int ell_character(const GammaElt& g); // exponent of the linear part, in 0..5
bool in_N(const GammaElt& g);
GammaElt n_matrix(std::int64_t x, std::int64_t y); // 1 - 6A

// 2x2 integer matrix helpers for the square-zero generators A = [[-xy,x^2],[-y^2,xy]]
struct IMat2 {
    std::int64_t m00 = 0, m01 = 0, m10 = 0, m11 = 0;
    bool operator==(const IMat2&) const = default;
};

IMat2 imat_mul(const IMat2& a, const IMat2& b);
IMat2 imat_add(const IMat2& a, const IMat2& b);
IMat2 square_zero_core(std::int64_t x, std::int64_t y);

struct CliffordBracket {
    std::int64_t scalar = 0;
    bool is_scalar = false;
};

// AB + BA for two square-zero cores; reports whether the result is s*I
CliffordBracket clifford_bracket(const IMat2& a, const IMat2& b);

struct Reduction {
    GammaElt g;   // g maps the input into the fundamental domain
    cplx w;       // w = g(z), |Re| <= 1/2, |w| >= 1
};

// canonical representative: Re in [-1/2, 1/2); on the unit arc Re >= 0 except
// at the corner orbit, where the strip rule wins and omega^2 is the representative
Reduction reduce_to_F(cplx z);

} // namespace hexcover
