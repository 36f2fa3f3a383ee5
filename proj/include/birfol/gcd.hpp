#pragma once

#include <bit>
#include <vector>

#include "birfol/poly.hpp"

namespace birfol {

namespace detail {

inline Poly univariate_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline Monomial drop_variable(Monomial m, std::size_t v) {
    m.e[v] = 0;
    return m;
}

// Coefficients of p viewed in K[v][others], keyed by the monomial in the
// other variables, in decreasing grlex order of that key.
inline std::vector<std::pair<Monomial, Poly>> coefficients_over(const Poly& p, std::size_t v) {
    std::vector<std::pair<Monomial, std::vector<Term>>> groups;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (const auto& t : p.terms()) {
        Monomial key = drop_variable(t.m, v);
        auto [it, fresh] = index.emplace(key, groups.size());
        if (fresh) groups.push_back({key, {}});
        Monomial mv;
        mv.e[v] = t.m.e[v];
        groups[it->second].second.push_back({mv, t.c});
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return grlex_cmp(a.first, b.first) > 0; });
    std::vector<std::pair<Monomial, Poly>> out;
    out.reserve(groups.size());
    for (auto& [k, ts] : groups) out.push_back({k, Poly::from_terms(p.ring(), std::move(ts))});
    return out;
}

inline Poly content_over(const Poly& p, std::size_t v) {
    Poly c(p.ring());
    for (const auto& [k, coef] : coefficients_over(p, v)) {
        c = univariate_gcd(c, coef);
        if (c.is_constant()) break;
    }
    return c;
}

inline Scalar sample_point(const Field& f, int k) {
    // 0, 1, -1, 2, -2, ...
    int n = (k + 1) / 2;
    return Scalar(f, (k % 2 == 1) ? n : -n);
}

inline Poly gcd_impl(const Poly& a, const Poly& b) {
    const Ring& ring = a.ring();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly::constant(ring, Rational(1));
    unsigned mask = a.used_variables() | b.used_variables();
    if (std::popcount(mask) == 1) return univariate_gcd(a, b);
    const std::size_t v = std::bit_width(mask) - 1;

    Poly ca = content_over(a, v), cb = content_over(b, v);
    Poly c = univariate_gcd(ca, cb);
    Poly ap = exact_divide(a, ca), bp = exact_divide(b, cb);
    if (ap.is_constant() || bp.is_constant()) return c;
    if (ap.degree_in(v) == 0 && bp.degree_in(v) == 0) return (c * gcd_impl(ap, bp)).monic();

    const Poly lca = coefficients_over(ap, v).front().second;
    const Poly lcb = coefficients_over(bp, v).front().second;
    const Poly g = univariate_gcd(lca, lcb);
    const int bound = std::min(ap.degree_in(v), bp.degree_in(v)) + g.degree_in(v);
    const Poly tv = Poly::variable(ring, v);

    std::optional<Poly> h;
    Poly modulus(ring);
    Monomial lead;
    int count = 0;
    for (int k = 0;; ++k) {
        Scalar pt = sample_point(ring->field, k);
        if (lca.specialize(v, pt).is_zero() || lcb.specialize(v, pt).is_zero()) continue;
        Poly image = gcd_impl(ap.specialize(v, pt), bp.specialize(v, pt));
        if (image.is_constant()) return c;
        const Monomial lm = image.leading_monomial();
        if (!h || grlex_cmp(lm, lead) < 0) {
            h.reset();
            count = 0;
            lead = lm;
        } else if (grlex_cmp(lm, lead) > 0) {
            continue;
        }
        Scalar gval = g.specialize(v, pt).constant_term();
        Poly scaled = image.scaled(gval);
        bool stable = false;
        if (!h) {
            h = scaled;
            modulus = tv - Poly::constant(ring, pt);
        } else {
            Poly diff = scaled - h->specialize(v, pt);
            stable = diff.is_zero();
            if (!stable) {
                Scalar mval = modulus.specialize(v, pt).constant_term();
                *h += modulus * diff.scaled(mval.inverse());
            }
            modulus *= tv - Poly::constant(ring, pt);
        }
        ++count;
        if (count > bound || (stable && count >= 2)) {
            Poly candidate = exact_divide(*h, content_over(*h, v));
            if (divides(candidate, ap) && divides(candidate, bp)) return (c * candidate).monic();
        }
    }
}

}  // namespace detail

// Greatest common divisor, normalized to leading coefficient 1 in grlex.
inline Poly gcd(const Poly& a, const Poly& b) {
    require_compatible(a.ring(), b.ring());
    return detail::gcd_impl(a, b.with_ring(a.ring()));
}

inline Poly gcd(const std::vector<Poly>& ps) {
    if (ps.empty()) throw Error(ErrorCode::invalid_argument, "gcd of an empty list");
    Poly g(ps.front().ring());
    for (const auto& p : ps) {
        g = gcd(g, p);
        if (g.is_one()) break;
    }
    return g;
}

inline Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.ring());
    return exact_divide(a * b, gcd(a, b)).monic();
}

// Largest k with f^k | p (p nonzero, f nonconstant).
inline int multiplicity(const Poly& f, Poly p) {
    int k = 0;
    while (auto q = try_divide(p, f)) {
        p = std::move(*q);
        ++k;
    }
    return k;
}

}  // namespace birfol
