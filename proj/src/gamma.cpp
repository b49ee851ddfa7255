#include "hexcover/gamma.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace hexcover {

namespace {

GammaElt normalize(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    std::int64_t lead = (a != 0) ? a : (b != 0) ? b : c;
    if (lead < 0) {
        a = -a; b = -b; c = -c; d = -d;
    }
    return GammaElt{a, b, c, d};
}

} // namespace

GammaElt make_gamma(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    std::int64_t det = checked_sub(checked_mul(a, d), checked_mul(b, c));
    if (det != 1)
        throw std::domain_error("matrix determinant is not 1");
    return normalize(a, b, c, d);
}

GammaElt gamma_S() { return GammaElt{0, 1, -1, 0}; }
GammaElt gamma_T() { return GammaElt{1, 1, 0, 1}; }
GammaElt gamma_T_pow(std::int64_t n) { return GammaElt{1, n, 0, 1}; }

GammaElt gamma_mul(const GammaElt& g, const GammaElt& h) {
    std::int64_t a = checked_add(checked_mul(g.a, h.a), checked_mul(g.b, h.c));
    std::int64_t b = checked_add(checked_mul(g.a, h.b), checked_mul(g.b, h.d));
    std::int64_t c = checked_add(checked_mul(g.c, h.a), checked_mul(g.d, h.c));
    std::int64_t d = checked_add(checked_mul(g.c, h.b), checked_mul(g.d, h.d));
    return normalize(a, b, c, d);
}

GammaElt gamma_inv(const GammaElt& g) {
    return normalize(g.d, -g.b, -g.c, g.a);
}

cplx gamma_apply(const GammaElt& g, cplx z) {
    return (double(g.a) * z + double(g.b)) / (double(g.c) * z + double(g.d));
}

void Word::push(int letter) {
    if (letter != 0 && !letters.empty() && letters.back() == -letter)
        letters.pop_back();
    else
        letters.push_back(letter);
}

Word word_from_string(const std::string& s) {
    Word w;
    for (char ch : s) {
        switch (ch) {
        case 'S': case 's': w.push(0); break;
        case 'T': w.push(1); break;
        case 't': w.push(-1); break;
        case ' ': break;
        default:
            throw std::invalid_argument("word letters must be S, T or t");
        }
    }
    return w;
}

std::string word_to_string(const Word& w) {
    std::string s;
    for (int letter : w.letters)
        s += (letter == 0) ? 'S' : (letter > 0) ? 'T' : 't';
    return s.empty() ? "e" : s;
}

GammaElt word_to_matrix(const Word& w) {
    GammaElt g;
    for (int letter : w.letters)
        g = gamma_mul(g, letter == 0 ? gamma_S() : gamma_T_pow(letter));
    return g;
}

Word matrix_to_word(const GammaElt& g) {
    Word w;
    std::int64_t a = g.a, b = g.b, c = g.c, d = g.d;
    while (c != 0) {
        std::int64_t q = a / c;
        for (std::int64_t cand : {q - 1, q, q + 1})
            if (std::llabs(a - cand * c) < std::llabs(a - q * c))
                q = cand;
        // peel off T^q S on the left
        std::int64_t a1 = -c, b1 = -d;
        std::int64_t c1 = a - q * c, d1 = b - q * d;
        for (std::int64_t i = 0; i < std::llabs(q); ++i)
            w.push(q > 0 ? 1 : -1);
        w.push(0);
        a = a1; b = b1; c = c1; d = d1;
    }
    if (a < 0) { a = -a; b = -b; }
    // remaining matrix is T^b
    for (std::int64_t i = 0; i < std::llabs(b); ++i)
        w.push(b > 0 ? 1 : -1);
    (void)a; (void)d;
    return w;
}

AffineMap affine_compose(const AffineMap& f, const AffineMap& g) {
    return AffineMap{eis_mul(f.linear, g.linear),
                     eis_add(eis_mul(f.linear, g.trans), f.trans)};
}

AffineMap affine_inverse(const AffineMap& f) {
    int k = unit_exponent(f.linear);
    EisensteinInt inv = unit_pow((6 - k) % 6);
    return AffineMap{inv, eis_neg(eis_mul(inv, f.trans))};
}

cplx affine_apply(const AffineMap& f, cplx z) {
    return embed(f.linear) * z + embed(f.trans);
}

bool affine_is_identity(const AffineMap& f) {
    return f == AffineMap{};
}

AffineMap psi_S() { return AffineMap{unit_pow(3), EisensteinInt{-1, 2}}; }
AffineMap psi_T() { return AffineMap{unit_pow(1), EisensteinInt{0, 0}}; }

AffineMap psi_letter(int letter) {
    if (letter == 0)
        return psi_S();
    int k = ((letter % 6) + 6) % 6;
    return AffineMap{unit_pow(k), EisensteinInt{0, 0}};
}

AffineMap psi_word(const Word& w) {
    AffineMap m;
    for (int letter : w.letters)
        m = affine_compose(m, psi_letter(letter));
    return m;
}

AffineMap psi_matrix(const GammaElt& g) {
    return psi_word(matrix_to_word(g));
}

NormalForm normal_form(const AffineMap& m) {
    // trans = p*(omega+1) + q*(omega+omega^2) = (p-q, p+2q)
    std::int64_t u = m.trans.u, v = m.trans.v;
    std::int64_t diff = checked_sub(v, u);
    if (diff % 3 != 0)
        throw std::domain_error("not an element of Aut+(R): translation outside R");
    std::int64_t q = diff / 3;
    std::int64_t p = checked_add(u, q);
    return NormalForm{p, q, unit_exponent(m.linear)};
}

AffineMap affine_from_normal_form(const NormalForm& nf) {
    EisensteinInt trans{checked_sub(nf.p, nf.q),
                        checked_add(nf.p, checked_mul(2, nf.q))};
    return AffineMap{unit_pow(((nf.k % 6) + 6) % 6), trans};
}

int ell_character(const GammaElt& g) {
    return unit_exponent(psi_matrix(g).linear);
}

bool in_N(const GammaElt& g) {
    return affine_is_identity(psi_matrix(g));
}

GammaElt n_matrix(std::int64_t x, std::int64_t y) {
    std::int64_t xy = checked_mul(x, y);
    return make_gamma(checked_add(1, checked_mul(6, xy)),
                      checked_mul(-6, checked_mul(x, x)),
                      checked_mul(6, checked_mul(y, y)),
                      checked_sub(1, checked_mul(6, xy)));
}

IMat2 imat_mul(const IMat2& a, const IMat2& b) {
    return IMat2{checked_add(checked_mul(a.m00, b.m00), checked_mul(a.m01, b.m10)),
                 checked_add(checked_mul(a.m00, b.m01), checked_mul(a.m01, b.m11)),
                 checked_add(checked_mul(a.m10, b.m00), checked_mul(a.m11, b.m10)),
                 checked_add(checked_mul(a.m10, b.m01), checked_mul(a.m11, b.m11))};
}

IMat2 imat_add(const IMat2& a, const IMat2& b) {
    return IMat2{checked_add(a.m00, b.m00), checked_add(a.m01, b.m01),
                 checked_add(a.m10, b.m10), checked_add(a.m11, b.m11)};
}

IMat2 square_zero_core(std::int64_t x, std::int64_t y) {
    return IMat2{-checked_mul(x, y), checked_mul(x, x),
                 -checked_mul(y, y), checked_mul(x, y)};
}

CliffordBracket clifford_bracket(const IMat2& a, const IMat2& b) {
    IMat2 s = imat_add(imat_mul(a, b), imat_mul(b, a));
    bool scalar = (s.m01 == 0 && s.m10 == 0 && s.m00 == s.m11);
    return CliffordBracket{s.m00, scalar};
}

Reduction reduce_to_F(cplx z) {
    if (!(z.imag() > 0.0))
        throw std::domain_error("point must lie in the upper half-plane");
    GammaElt g;
    cplx w = z;
    const double eps = 1e-12;
    for (int iter = 0; iter < 256; ++iter) {
        double n = std::floor(w.real() + 0.5);
        if (n != 0.0) {
            w -= n;
            g = gamma_mul(gamma_T_pow(-(std::int64_t)n), g);
        }
        if (std::norm(w) < 1.0 - eps) {
            w = -1.0 / w;
            g = gamma_mul(gamma_S(), g);
            continue;
        }
        break;
    }
    if (w.real() >= 0.5 - eps) {
        w -= 1.0;
        g = gamma_mul(gamma_T_pow(-1), g);
    }
    bool on_arc = std::abs(std::norm(w) - 1.0) < eps;
    bool at_corner = std::abs(w.real() + 0.5) < eps;
    if (on_arc && w.real() < -eps && !at_corner) {
        w = -1.0 / w;
        g = gamma_mul(gamma_S(), g);
    }
    return Reduction{g, w};
}

} // namespace hexcover
