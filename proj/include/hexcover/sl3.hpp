#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hexcover/elliptic.hpp"

namespace hexcover {

// diagonal traceless element, evaluated on weights as complex numbers
struct CartanElt {
    cplx h1, h2, h3;
};

// (h1,h2,h3) = (w1/3 - w2/3, w1/3 + 2w2/3, -2w1/3 - w2/3)
CartanElt cartan_from_periods(cplx w1, cplx w2);

// (alpha1, alpha2) evaluated on H: (h1-h2, h2-h3)
std::pair<cplx, cplx> root_values(const CartanElt& H);

enum class ShiftTag { none, W1, W2, W3 };

// half-period shifts; the tag assignment puts the Wk family on the half-period
// class whose wp value is e_k for the matching period lattice (checked against
// modular_lambda rather than fixed by fiat)
cplx shift_value(ShiftTag tag, const CartanElt& H);

struct WeightPoint {
    std::int64_t n1 = 0, n2 = 0;
    ShiftTag tag = ShiftTag::none;
    bool operator==(const WeightPoint&) const = default;
};

// n1*(h1-h2) + n2*(h2-h3) + shift
cplx weight_value(const WeightPoint& w, const CartanElt& H);

// f_(a,b,c) = (e1/e2)^a (e2/e3)^b (e3/e1)^c with doubled-integer exponents
// (a = da/2, ...); at most one of the three may be a half-integer
struct Monomial {
    std::int64_t da = 0, db = 0, dc = 0;
    bool operator==(const Monomial&) const = default;
};

Monomial make_monomial_halves(std::int64_t da, std::int64_t db, std::int64_t dc);

// canonical weight of the monomial; f_(a,b,c) and f_(a+1,b+1,c+1) agree, so the
// common integer part is dropped into (n1, n2) and the leftover half becomes the tag
WeightPoint monomial_weight(const Monomial& m);

struct MonomialAction {
    std::int64_t coeff2 = 0; // doubled coefficient
    Monomial result;
};

// E_ij f = e_i d/de_j f on the Laurent monomial; i != j, indices in 1..3
MonomialAction rep_action(int i, int j, const Monomial& m);

// sum over |n1|,|n2| <= cutoff of [1/(mu - z)^2 - 1/mu^2], mu = n1*alpha1 + n2*alpha2,
// where the zero weight contributes 1/z^2 only
cplx wp_trace_sum(const CartanElt& H, cplx z, int cutoff);
cplx wp_trace_sum_serial(const CartanElt& H, cplx z, int cutoff);

// sum over the same square of [1/(mu + s_i)^2 - 1/(mu + s_j)^2]
cplx killing_diff(ShiftTag ti, ShiftTag tj, const CartanElt& H, int cutoff);
cplx killing_diff_serial(ShiftTag ti, ShiftTag tj, const CartanElt& H, int cutoff);

// killing_diff(W3,W2) / killing_diff(W1,W2) for H built from periods (1, tau)
cplx lambda_rep(cplx tau, int cutoff);

struct SymWeight {
    std::int64_t p = 0, q = 0, r = 0; // p + q + r = 3n
};

std::vector<SymWeight> sym_weights(std::int64_t n);

// sum over p+q+r = 3n of [1/(v - z)^2 - 1/v^2] with v = p*h1 + q*h2 + r*h3,
// excluding the 1/v^2 term at the zero weight (n,n,n); dual negates every v
cplx sym_trace_partial(std::int64_t n, const CartanElt& H, cplx z, bool dual);
cplx sym_trace_partial_serial(std::int64_t n, const CartanElt& H, cplx z, bool dual);

} // namespace hexcover
