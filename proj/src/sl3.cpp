#include "hexcover/sl3.hpp"

#include <cmath>
#include <stdexcept>

namespace hexcover {

CartanElt cartan_from_periods(cplx w1, cplx w2) {
    return CartanElt{(w1 - w2) / 3.0, (w1 + 2.0 * w2) / 3.0, (-2.0 * w1 - w2) / 3.0};
}

std::pair<cplx, cplx> root_values(const CartanElt& H) {
    return {H.h1 - H.h2, H.h2 - H.h3};
}

cplx shift_value(ShiftTag tag, const CartanElt& H) {
    switch (tag) {
    case ShiftTag::none: return cplx{};
    case ShiftTag::W1: return 0.5 * (H.h3 - H.h1);
    case ShiftTag::W2: return 0.5 * (H.h1 - H.h2);
    case ShiftTag::W3: return 0.5 * (H.h2 - H.h3);
    }
    return cplx{};
}

cplx weight_value(const WeightPoint& w, const CartanElt& H) {
    auto [a1, a2] = root_values(H);
    return double(w.n1) * a1 + double(w.n2) * a2 + shift_value(w.tag, H);
}

Monomial make_monomial_halves(std::int64_t da, std::int64_t db, std::int64_t dc) {
    int odd = int(da & 1) + int(db & 1) + int(dc & 1);
    if (odd > 1)
        throw std::invalid_argument("at most one exponent of f_(a,b,c) may be a half-integer");
    return Monomial{da, db, dc};
}

WeightPoint monomial_weight(const Monomial& m) {
    std::int64_t d1 = m.da - m.dc;
    std::int64_t d2 = m.db - m.dc;
    bool o1 = d1 & 1, o2 = d2 & 1;
    if (!o1 && !o2)
        return WeightPoint{d1 / 2, d2 / 2, ShiftTag::none};
    if (o1 && !o2)
        return WeightPoint{(d1 - 1) / 2, d2 / 2, ShiftTag::W2}; // a is the half
    if (!o1 && o2)
        return WeightPoint{d1 / 2, (d2 - 1) / 2, ShiftTag::W3}; // b is the half
    return WeightPoint{(d1 + 1) / 2, (d2 + 1) / 2, ShiftTag::W1}; // c is the half
}

MonomialAction rep_action(int i, int j, const Monomial& m) {
    if (i == j || i < 1 || i > 3 || j < 1 || j > 3)
        throw std::invalid_argument("rep_action needs distinct indices in 1..3");
    // exponents of f in (e1, e2, e3) are (a-c, b-a, c-b); e_i d/de_j multiplies by
    // the e_j exponent and moves one power from e_j to e_i
    Monomial r = m;
    std::int64_t coeff2 = 0;
    if (i == 1 && j == 2) { coeff2 = m.db - m.da; r.da += 2; }
    else if (i == 2 && j == 1) { coeff2 = m.da - m.dc; r.da -= 2; }
    else if (i == 2 && j == 3) { coeff2 = m.dc - m.db; r.db += 2; }
    else if (i == 3 && j == 2) { coeff2 = m.db - m.da; r.db -= 2; }
    else if (i == 3 && j == 1) { coeff2 = m.da - m.dc; r.dc += 2; }
    else { coeff2 = m.dc - m.db; r.dc -= 2; } // i == 1, j == 3
    return MonomialAction{coeff2, r};
}

namespace {

struct RowResult {
    cplx sum;
    bool pole = false;
};

RowResult wp_trace_row(cplx a1, cplx a2, cplx z, int cutoff, int n1) {
    RowResult r;
    for (int n2 = -cutoff; n2 <= cutoff; ++n2) {
        cplx mu = double(n1) * a1 + double(n2) * a2;
        cplx d = mu - z;
        if (std::abs(d) < 1e-8) {
            r.pole = true;
            return r;
        }
        if (n1 == 0 && n2 == 0)
            r.sum += 1.0 / (d * d);
        else
            r.sum += 1.0 / (d * d) - 1.0 / (mu * mu);
    }
    return r;
}

RowResult killing_row(cplx a1, cplx a2, cplx si, cplx sj, int cutoff, int n1) {
    RowResult r;
    for (int n2 = -cutoff; n2 <= cutoff; ++n2) {
        cplx mu = double(n1) * a1 + double(n2) * a2;
        cplx u = mu + si;
        cplx w = mu + sj;
        if (std::abs(u) < 1e-12 || std::abs(w) < 1e-12) {
            r.pole = true;
            return r;
        }
        r.sum += 1.0 / (u * u) - 1.0 / (w * w);
    }
    return r;
}

RowResult sym_row(const CartanElt& H, cplx z, std::int64_t n, bool dual, std::int64_t p) {
    RowResult r;
    std::int64_t total = 3 * n;
    for (std::int64_t q = 0; q <= total - p; ++q) {
        std::int64_t rr = total - p - q;
        cplx v = double(p) * H.h1 + double(q) * H.h2 + double(rr) * H.h3;
        if (dual)
            v = -v;
        cplx d = v - z;
        if (std::abs(d) < 1e-8) {
            r.pole = true;
            return r;
        }
        if (p == n && q == n) {
            r.sum += 1.0 / (d * d); // zero weight, regularized
        } else {
            if (std::abs(v) < 1e-12) {
                r.pole = true;
                return r;
            }
            r.sum += 1.0 / (d * d) - 1.0 / (v * v);
        }
    }
    return r;
}

void check_tags(ShiftTag ti, ShiftTag tj) {
    if (ti == ShiftTag::none || tj == ShiftTag::none)
        throw std::domain_error("killing_diff needs shifted weight families");
}

} // namespace

cplx wp_trace_sum_serial(const CartanElt& H, cplx z, int cutoff) {
    auto [a1, a2] = root_values(H);
    cplx total{};
    bool pole = false;
    for (int n1 = -cutoff; n1 <= cutoff; ++n1) {
        RowResult r = wp_trace_row(a1, a2, z, cutoff, n1);
        pole = pole || r.pole;
        total += r.sum;
    }
    if (pole)
        throw PoleProximityError("evaluation point within 1e-8 of a weight");
    return total;
}

cplx wp_trace_sum(const CartanElt& H, cplx z, int cutoff) {
    auto [a1, a2] = root_values(H);
    int rows = 2 * cutoff + 1;
    std::vector<RowResult> part(rows);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < rows; ++i)
        part[i] = wp_trace_row(a1, a2, z, cutoff, i - cutoff);
    cplx total{};
    bool pole = false;
    for (int i = 0; i < rows; ++i) {
        pole = pole || part[i].pole;
        total += part[i].sum;
    }
    if (pole)
        throw PoleProximityError("evaluation point within 1e-8 of a weight");
    return total;
}

cplx killing_diff_serial(ShiftTag ti, ShiftTag tj, const CartanElt& H, int cutoff) {
    check_tags(ti, tj);
    auto [a1, a2] = root_values(H);
    cplx si = shift_value(ti, H), sj = shift_value(tj, H);
    cplx total{};
    bool pole = false;
    for (int n1 = -cutoff; n1 <= cutoff; ++n1) {
        RowResult r = killing_row(a1, a2, si, sj, cutoff, n1);
        pole = pole || r.pole;
        total += r.sum;
    }
    if (pole)
        throw PoleProximityError("shifted weight too close to zero");
    return total;
}

cplx killing_diff(ShiftTag ti, ShiftTag tj, const CartanElt& H, int cutoff) {
    check_tags(ti, tj);
    auto [a1, a2] = root_values(H);
    cplx si = shift_value(ti, H), sj = shift_value(tj, H);
    int rows = 2 * cutoff + 1;
    std::vector<RowResult> part(rows);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < rows; ++i)
        part[i] = killing_row(a1, a2, si, sj, cutoff, i - cutoff);
    cplx total{};
    bool pole = false;
    for (int i = 0; i < rows; ++i) {
        pole = pole || part[i].pole;
        total += part[i].sum;
    }
    if (pole)
        throw PoleProximityError("shifted weight too close to zero");
    return total;
}

cplx lambda_rep(cplx tau, int cutoff) {
    if (!(tau.imag() > 0.0))
        throw std::domain_error("tau must lie in the upper half-plane");
    CartanElt H = cartan_from_periods(1.0, tau);
    cplx num = killing_diff(ShiftTag::W3, ShiftTag::W2, H, cutoff);
    cplx den = killing_diff(ShiftTag::W1, ShiftTag::W2, H, cutoff);
    if (std::abs(den) < 1e-12)
        throw ConvergenceError("killing_diff denominator vanished");
    return num / den;
}

std::vector<SymWeight> sym_weights(std::int64_t n) {
    std::vector<SymWeight> out;
    std::int64_t total = 3 * n;
    out.reserve(std::size_t((total + 1) * (total + 2) / 2));
    for (std::int64_t p = 0; p <= total; ++p)
        for (std::int64_t q = 0; q <= total - p; ++q)
            out.push_back(SymWeight{p, q, total - p - q});
    return out;
}

cplx sym_trace_partial_serial(std::int64_t n, const CartanElt& H, cplx z, bool dual) {
    if (n < 1)
        throw std::domain_error("partial sum needs n >= 1");
    cplx total{};
    bool pole = false;
    for (std::int64_t p = 0; p <= 3 * n; ++p) {
        RowResult r = sym_row(H, z, n, dual, p);
        pole = pole || r.pole;
        total += r.sum;
    }
    if (pole)
        throw PoleProximityError("evaluation point within 1e-8 of a weight");
    return total;
}

cplx sym_trace_partial(std::int64_t n, const CartanElt& H, cplx z, bool dual) {
    if (n < 1)
        throw std::domain_error("partial sum needs n >= 1");
    std::int64_t rows = 3 * n + 1;
    std::vector<RowResult> part(static_cast<std::size_t>(rows));
#pragma omp parallel for schedule(static)
    for (std::int64_t p = 0; p < rows; ++p)
        part[std::size_t(p)] = sym_row(H, z, n, dual, p);
    cplx total{};
    bool pole = false;
    for (std::int64_t p = 0; p < rows; ++p) {
        pole = pole || part[std::size_t(p)].pole;
        total += part[std::size_t(p)].sum;
    }
    if (pole)
        throw PoleProximityError("evaluation point within 1e-8 of a weight");
    return total;
}

} // namespace hexcover
