#pragma once

// Reference gcd by recursive primitive pseudo-remainder sequences. Slow, but
// shares nothing with the evaluation/interpolation gcd it is used to check.

#include <bit>
#include <vector>

#include "birfol/poly.hpp"

namespace birfol::oracle {

inline Poly coefficient_of_power(const Poly& p, std::size_t v, unsigned k) {
    std::vector<Term> out;
    for (const auto& t : p.terms())
        if (t.m.e[v] == k) {
            Term u = t;
            u.m.e[v] = 0;
            out.push_back(u);
        }
    return Poly::from_terms(p.ring(), std::move(out));
}

inline Poly prs_gcd(const Poly& a, const Poly& b);

inline Poly content_in(const Poly& p, std::size_t v) {
    Poly c(p.ring());
    int d = p.degree_in(v);
    for (int k = d; k >= 0; --k) {
        Poly coef = coefficient_of_power(p, v, unsigned(k));
        if (!coef.is_zero()) c = prs_gcd(c, coef);
    }
    return c;
}

inline Poly pseudo_remainder(Poly a, const Poly& b, std::size_t v) {
    const int db = b.degree_in(v);
    const Poly lcb = coefficient_of_power(b, v, unsigned(db));
    while (!a.is_zero() && a.degree_in(v) >= db) {
        int da = a.degree_in(v);
        Poly lca = coefficient_of_power(a, v, unsigned(da));
        Monomial shift;
        shift.e[v] = static_cast<std::uint16_t>(da - db);
        a = lcb * a - lca.shifted(shift) * b;
    }
    return a;
}

inline Poly prs_gcd(const Poly& a, const Poly& b) {
    const Ring& ring = a.ring();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly::constant(ring, Rational(1));
    const unsigned mask = a.used_variables() | b.used_variables();
    const std::size_t v = std::bit_width(mask) - 1;
    if (a.degree_in(v) == 0) return prs_gcd(a, content_in(b, v));
    if (b.degree_in(v) == 0) return prs_gcd(content_in(a, v), b);
    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly c = prs_gcd(ca, cb);
    Poly p = divide(a, ca).quotient, q = divide(b, cb).quotient;
    if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
    while (q.degree_in(v) > 0) {
        Poly r = pseudo_remainder(p, q, v);
        p = q;
        if (r.is_zero()) {
            q = Poly(ring);
            break;
        }
        q = divide(r, content_in(r, v)).quotient;
    }
    Poly g = q.is_zero() ? p : Poly::constant(ring, Rational(1));
    return (c * g).monic();
}

}  // namespace birfol::oracle
