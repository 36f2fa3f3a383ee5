#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "birfol/gcd.hpp"
#include "birfol/linalg.hpp"
#include "birfol/poly.hpp"

namespace birfol {

// sum_i c[i] dx_i on K^n; weights describe the (weighted) Euler field.
struct OneForm {
    std::vector<Poly> c;
    Weights w;

    OneForm(std::vector<Poly> coeffs, Weights weights) : c(std::move(coeffs)), w(std::move(weights)) {
        if (c.empty()) throw Error(ErrorCode::invalid_argument, "form without components");
        if (w.size() != c.size()) throw Error(ErrorCode::invalid_argument, "weights do not match the form");
        for (auto& p : c) p = p.with_ring(c.front().ring());
    }
    explicit OneForm(std::vector<Poly> coeffs) : OneForm(coeffs, Weights::standard(coeffs.size())) {}

    const Ring& ring() const { return c.front().ring(); }
    std::size_t size() const { return c.size(); }
    bool is_zero() const {
        for (const auto& p : c)
            if (!p.is_zero()) return false;
        return true;
    }
    OneForm scaled(const Scalar& s) const {
        OneForm r = *this;
        for (auto& p : r.c) p = p.scaled(s);
        return r;
    }
    OneForm times(const Poly& h) const {
        OneForm r = *this;
        for (auto& p : r.c) p = p * h;
        return r;
    }
    bool operator==(const OneForm& o) const { return c == o.c && w == o.w; }

    std::string to_string() const {
        std::string s;
        const auto& names = ring()->names;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i].is_zero()) continue;
            std::string k = c[i].to_string();
            bool neg = false;
            if (c[i].size() == 1 && k[0] == '-') {
                neg = true;
                k = k.substr(1);
            } else if (c[i].size() > 1) {
                k = "(" + k + ")";
            }
            std::string term = (k == "1" ? "" : k + "*") + "d" + names[i];
            if (s.empty()) s = neg ? "-" + term : term;
            else s += (neg ? " - " : " + ") + term;
        }
        return s.empty() ? "0" : s;
    }
};

// P dy^dz + Q dz^dx + R dx^dy
struct TwoForm {
    Poly P, Q, R;

    bool operator==(const TwoForm& o) const { return P == o.P && Q == o.Q && R == o.R; }
    std::string to_string() const {
        return "(" + P.to_string() + ")*dy^dz + (" + Q.to_string() + ")*dz^dx + (" + R.to_string() + ")*dx^dy";
    }
};

struct VectorField {
    std::vector<Poly> c;
};

template <class T>
struct Saturated {
    T value;
    Poly factor;
};

// Scalar k with a = k*b componentwise, when it exists (b not all zero).
inline std::optional<Scalar> proportionality(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    if (a.size() != b.size()) return std::nullopt;
    std::optional<Scalar> k;
    for (std::size_t i = 0; i < b.size() && !k; ++i) {
        if (b[i].is_zero()) continue;
        const Term& t = b[i].terms().front();
        Scalar ka = a[i].coefficient(t.m);
        if (ka.is_zero()) return std::nullopt;
        k = ka / b[i].scalar(t.c);
    }
    if (!k) return std::nullopt;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i].scaled(*k)) return std::nullopt;
    return k;
}

inline std::optional<Scalar> proportionality(const OneForm& a, const OneForm& b) {
    return proportionality(a.c, b.c);
}

inline Saturated<OneForm> saturate(const OneForm& w) {
    if (w.is_zero()) throw Error(ErrorCode::zero_result, "cannot saturate the zero form");
    Poly g = gcd(w.c);
    if (g.is_one()) return {w, g};
    OneForm r = w;
    for (auto& p : r.c) p = exact_divide(p, g);
    return {r, g};
}

// Weighted degree D such that component i has weighted degree D - w_i.
inline long form_weighted_degree(const OneForm& w) {
    std::optional<long> total;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w.c[i].is_zero()) continue;
        auto d = w.c[i].weighted_degree(w.w);
        if (!d) throw Error(ErrorCode::inhomogeneous, "coefficient of d" + w.ring()->names[i] + " is not homogeneous");
        long t = *d + w.w[i];
        if (total && *total != t)
            throw Error(ErrorCode::inhomogeneous, "coefficients have incompatible degrees");
        total = t;
    }
    if (!total) throw Error(ErrorCode::zero_result, "the zero form has no degree");
    return *total;
}

// sum w_i x_i c_i == 0
inline bool euler_check(const OneForm& w) {
    form_weighted_degree(w);
    PolyAccumulator acc(w.ring());
    for (std::size_t i = 0; i < w.size(); ++i)
        acc.add(Poly::variable(w.ring(), i) * w.c[i], QuadNumber{Rational(w.w[i]), 0});
    return acc.take().is_zero();
}

inline int foliation_degree(const OneForm& w) {
    if (!w.w.is_standard()) throw Error(ErrorCode::invalid_argument, "foliation degree needs standard weights");
    long d = form_weighted_degree(w);
    if (!euler_check(w)) throw Error(ErrorCode::not_euler, "form does not annihilate the Euler field");
    return int(d - 2);
}

// i_W i_L (dx^dy^dz) = L x W, saturated.
inline Saturated<OneForm> form_from_vfield(const VectorField& W, const VectorField& L,
                                           std::optional<Weights> weights = std::nullopt) {
    if (W.c.size() != 3 || L.c.size() != 3)
        throw Error(ErrorCode::invalid_argument, "vector fields must have three components");
    std::vector<Poly> c{
        L.c[1] * W.c[2] - L.c[2] * W.c[1],
        L.c[2] * W.c[0] - L.c[0] * W.c[2],
        L.c[0] * W.c[1] - L.c[1] * W.c[0],
    };
    OneForm raw(c, weights.value_or(Weights::standard(3)));
    if (raw.is_zero()) throw Error(ErrorCode::zero_result, "vector fields are everywhere proportional");
    return saturate(raw);
}

// dg ^ w for a form on K^3.
inline TwoForm wedge_differential(const Poly& g, const OneForm& w) {
    if (w.size() != 3) throw Error(ErrorCode::invalid_argument, "wedge needs a form on three variables");
    Poly gx = g.derivative(0), gy = g.derivative(1), gz = g.derivative(2);
    const Poly &A = w.c[0], &B = w.c[1], &C = w.c[2];
    return {gy * C - gz * B, gz * A - gx * C, gx * B - gy * A};
}

// Cofactor T with dg ^ w = g T, when g is invariant.
inline std::optional<TwoForm> invariant_curve(const OneForm& w, const Poly& g) {
    if (g.is_constant()) throw Error(ErrorCode::invalid_argument, "invariant curve needs a nonconstant polynomial");
    Poly gg = g.with_ring(w.ring());
    TwoForm t = wedge_differential(gg, w);
    auto p = try_divide(t.P, gg);
    if (!p) return std::nullopt;
    auto q = try_divide(t.Q, gg);
    if (!q) return std::nullopt;
    auto r = try_divide(t.R, gg);
    if (!r) return std::nullopt;
    return TwoForm{*p, *q, *r};
}

inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
    std::vector<Monomial> out;
    Monomial m;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == nvars) {
            m.e[i] = static_cast<std::uint16_t>(left);
            out.push_back(m);
            return;
        }
        for (int k = int(left); k >= 0; --k) {
            m.e[i] = static_cast<std::uint16_t>(k);
            rec(i + 1, left - unsigned(k));
        }
    };
    rec(0, d);
    return out;
}

// Basis of the degree-d foliation forms (coefficients of degree d+1) that
// satisfy the Euler condition and leave every curve invariant.
inline std::vector<OneForm> tangent_foliation_space(const Ring& ring, const std::vector<Poly>& curves, int d) {
    if (d < 0) throw Error(ErrorCode::invalid_argument, "negative foliation degree");
    if (ring->names.size() != 3) throw Error(ErrorCode::invalid_argument, "forms on the projective plane only");
    const Field& K = ring->field;
    const auto monos = monomials_of_degree(3, unsigned(d + 1));
    const std::size_t m = monos.size();
    const std::size_t unknowns = 3 * m;

    // Each constraint is a linear functional on the unknowns, keyed by
    // (equation family, monomial).
    std::map<std::pair<int, std::vector<std::uint16_t>>, std::vector<QuadNumber>> rows;
    auto row = [&](int family, const Monomial& mono) -> std::vector<QuadNumber>& {
        std::vector<std::uint16_t> key(mono.e.begin(), mono.e.end());
        auto& r = rows[{family, key}];
        if (r.empty()) r.resize(unknowns);
        return r;
    };
    const FieldSpec& f = *K;
    auto add_poly = [&](int family, const Poly& p, std::size_t col) {
        for (const auto& t : p.terms()) {
            auto& r = row(family, t.m);
            f.add(r[col], r[col], t.c);
        }
    };

    for (std::size_t comp = 0; comp < 3; ++comp)
        for (std::size_t k = 0; k < m; ++k) {
            Monomial e = monos[k];
            ++e.e[comp];
            auto& r = row(0, e);
            f.add(r[comp * m + k], r[comp * m + k], QuadNumber{1, 0});
        }

    int family = 1;
    for (const auto& g0 : curves) {
        Poly g = g0.with_ring(ring);
        if (!g.homogeneous_degree()) throw Error(ErrorCode::inhomogeneous, "curve " + g.to_string() + " is not homogeneous");
        Poly gx = g.derivative(0), gy = g.derivative(1), gz = g.derivative(2);
        for (std::size_t k = 0; k < m; ++k) {
            Poly mono = Poly::monomial(ring, monos[k], Scalar(K, 1));
            // unknown A: Q += gz*mono, R -= gy*mono
            // unknown B: P -= gz*mono, R += gx*mono
            // unknown C: P += gy*mono, Q -= gx*mono
            std::size_t a = k, b = m + k, c = 2 * m + k;
            add_poly(family + 1, remainder(gz * mono, g), a);
            add_poly(family + 2, remainder(-(gy * mono), g), a);
            add_poly(family + 0, remainder(-(gz * mono), g), b);
            add_poly(family + 2, remainder(gx * mono, g), b);
            add_poly(family + 0, remainder(gy * mono, g), c);
            add_poly(family + 1, remainder(-(gx * mono), g), c);
        }
        family += 3;
    }

    Matrix mat(K, rows.size(), unknowns);
    std::size_t i = 0;
    for (auto& [key, r] : rows) {
        for (std::size_t j = 0; j < unknowns; ++j) mat.raw(i, j) = r[j];
        ++i;
    }
    std::vector<OneForm> basis;
    for (const auto& v : mat.kernel()) {
        std::vector<Poly> c(3, Poly(ring));
        for (std::size_t comp = 0; comp < 3; ++comp) {
            std::vector<Term> ts;
            for (std::size_t k = 0; k < m; ++k)
                if (!v[comp * m + k].is_zero()) ts.push_back({monos[k], v[comp * m + k].value()});
            c[comp] = Poly::from_terms(ring, std::move(ts));
        }
        basis.emplace_back(c);
    }
    return basis;
}

}  // namespace birfol
