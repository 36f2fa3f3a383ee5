#pragma once

#include <optional>
#include <string>
#include <vector>

#include "birfol/derivation.hpp"
#include "birfol/exterior.hpp"
#include "birfol/gcd.hpp"
#include "birfol/linalg.hpp"

namespace birfol {

inline Poly squarefree_part(const Poly& s) {
    std::vector<Poly> parts{s};
    for (std::size_t i = 0; i < s.nvars(); ++i) parts.push_back(s.derivative(i));
    return exact_divide(s, gcd(parts)).monic();
}

// Removes the largest h with h^(w_i) | c_i for every i; h is returned as the
// factor. With unit weights this is division by the gcd.
inline Saturated<std::vector<Poly>> weighted_saturate(std::vector<Poly> c, const Weights& w) {
    const Ring& ring = c.at(0).ring();
    Poly h = Poly::constant(ring, Rational(1));
    std::vector<Poly> nonzero;
    for (const auto& p : c)
        if (!p.is_zero()) nonzero.push_back(p);
    if (nonzero.empty()) throw Error(ErrorCode::zero_result, "all components vanish identically");
    bool unit = true;
    for (std::size_t i = 0; i < c.size(); ++i) unit = unit && (c[i].is_zero() || w[i] == 1);
    if (unit) {
        Poly g = gcd(nonzero);
        if (!g.is_one())
            for (auto& p : c) p = exact_divide(p, g);
        return {c, g};
    }
    for (;;) {
        std::vector<Poly> nz;
        for (const auto& p : c)
            if (!p.is_zero()) nz.push_back(p);
        Poly g = gcd(nz);
        if (g.is_constant()) break;
        Poly q = squarefree_part(g);
        for (std::size_t i = 0; i < c.size() && !q.is_constant(); ++i) {
            if (c[i].is_zero() || w[i] == 1) continue;
            Poly r = c[i], t = q;
            for (int k = 0; k < w[i] && !t.is_constant(); ++k) {
                t = gcd(t, r);
                r = exact_divide(r, t);
            }
            q = t;
        }
        if (q.is_constant()) break;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!c[i].is_zero()) c[i] = exact_divide(c[i], q.pow(unsigned(w[i])));
        h *= q;
    }
    return {c, h};
}

// Map between (weighted) projective spaces given by a saturated lift.
class RationalMap {
public:
    RationalMap(std::vector<Poly> comps, Weights src, Weights dst, Ring dst_ring)
        : src_w_(std::move(src)), dst_w_(std::move(dst)), dst_ring_(std::move(dst_ring)),
          factor_(comps.at(0).ring()) {
        const Ring& r = comps.front().ring();
        for (auto& p : comps) p = p.with_ring(r);
        if (src_w_.size() != r->names.size()) throw Error(ErrorCode::invalid_argument, "source weights do not match variables");
        if (dst_w_.size() != comps.size()) throw Error(ErrorCode::invalid_argument, "target weights do not match components");
        if (!dst_ring_) dst_ring_ = r;
        if (dst_ring_->names.size() != comps.size()) throw Error(ErrorCode::invalid_argument, "target ring does not match components");
        auto sat = weighted_saturate(std::move(comps), dst_w_);
        comps_ = std::move(sat.value);
        factor_ = std::move(sat.factor);
        degree_ = check_degrees();
    }

    static RationalMap standard(std::vector<Poly> comps, Ring dst_ring = nullptr) {
        std::size_t n = comps.at(0).nvars(), m = comps.size();
        return RationalMap(std::move(comps), Weights::standard(n), Weights::standard(m), std::move(dst_ring));
    }

    static RationalMap identity(const Ring& r, std::optional<Weights> w = std::nullopt) {
        std::vector<Poly> c;
        for (std::size_t i = 0; i < r->names.size(); ++i) c.push_back(Poly::variable(r, i));
        Weights ww = w.value_or(Weights::standard(r->names.size()));
        return RationalMap(c, ww, ww, r);
    }

    const std::vector<Poly>& components() const { return comps_; }
    const Poly& operator[](std::size_t i) const { return comps_[i]; }
    std::size_t size() const { return comps_.size(); }
    const Ring& src_ring() const { return comps_.front().ring(); }
    const Ring& dst_ring() const { return dst_ring_; }
    const Weights& src_weights() const { return src_w_; }
    const Weights& dst_weights() const { return dst_w_; }
    long degree() const { return degree_; }
    // Factor removed by saturation when the map was built.
    const Poly& extracted() const { return factor_; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < comps_.size(); ++i) s += (i ? " : " : "") + comps_[i].to_string();
        return s + ")";
    }

private:
    long check_degrees() const {
        std::optional<long> d;
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (comps_[i].is_zero()) continue;
            auto di = comps_[i].weighted_degree(src_w_);
            if (!di) throw Error(ErrorCode::inhomogeneous, "component " + std::to_string(i + 1) + " is not homogeneous");
            if (*di % dst_w_[i] != 0)
                throw Error(ErrorCode::inhomogeneous, "component degrees are incompatible with the target weights");
            long e = *di / dst_w_[i];
            if (d && *d != e) throw Error(ErrorCode::inhomogeneous, "components have incompatible degrees");
            d = e;
        }
        return *d;
    }

    std::vector<Poly> comps_;
    Weights src_w_, dst_w_;
    Ring dst_ring_;
    Poly factor_;
    long degree_ = 0;
};

inline RationalMap compose(const RationalMap& f, const RationalMap& g) {
    if (f.src_ring()->names.size() != g.size()) throw Error(ErrorCode::invalid_argument, "maps cannot be composed: dimensions differ");
    if (!(f.src_weights() == g.dst_weights())) throw Error(ErrorCode::invalid_argument, "maps cannot be composed: weights differ");
    std::vector<Poly> c;
    for (const auto& p : f.components()) c.push_back(p.substitute(g.components()));
    bool zero = true;
    for (const auto& p : c) zero = zero && p.is_zero();
    if (zero) throw Error(ErrorCode::zero_result, "composition vanishes identically");
    return RationalMap(c, g.src_weights(), f.dst_weights(), f.dst_ring());
}

// Composition of a list, applied right to left: compose_all({f, g, h}) = f o g o h.
inline RationalMap compose_all(const std::vector<RationalMap>& maps) {
    RationalMap acc = maps.back();
    for (std::size_t i = maps.size() - 1; i-- > 0;) acc = compose(maps[i], acc);
    return acc;
}

struct Pullback {
    OneForm form;
    Poly factor;
};

// Substitutes the map into the form (chain rule on differentials) and saturates.
inline Pullback pullback_form(const RationalMap& f, const OneForm& w) {
    if (w.size() != f.size()) throw Error(ErrorCode::invalid_argument, "form does not live on the map's target");
    if (!(w.w == f.dst_weights())) throw Error(ErrorCode::invalid_argument, "form weights differ from the map's target weights");
    if (!euler_check(w)) throw Error(ErrorCode::not_euler, "form does not annihilate the Euler field of the target");
    const Ring& src = f.src_ring();
    const std::size_t n = src->names.size();
    std::vector<Poly> pulled;
    for (const auto& a : w.c) pulled.push_back(a.substitute(f.components()));
    std::vector<Poly> out;
    for (std::size_t j = 0; j < n; ++j) {
        PolyAccumulator acc(src);
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (pulled[i].is_zero()) continue;
            Poly df = f[i].derivative(j);
            if (!df.is_zero()) acc.add(pulled[i] * df);
        }
        out.push_back(acc.take());
    }
    OneForm raw(out, f.src_weights());
    if (raw.is_zero()) throw Error(ErrorCode::zero_result, "pullback vanishes identically");
    auto sat = saturate(raw);
    return {sat.value, sat.factor};
}

// Pullback of a weighted form along a map into a weighted plane such as P(1,2,3).
inline Pullback weighted_pullback(const RationalMap& f, const OneForm& w) {
    if (f.dst_weights().is_standard())
        throw Error(ErrorCode::invalid_argument, "weighted pullback expects a weighted target");
    return pullback_form(f, w);
}

inline Poly determinant(std::vector<std::vector<Poly>> m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Poly det(m[0][0].ring());
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Poly t = m[0][j] * determinant(std::move(minor));
        det = (j % 2 == 0) ? det + t : det - t;
    }
    return det;
}

inline Poly jacobian_det(const RationalMap& f) {
    const std::size_t n = f.src_ring()->names.size();
    if (f.size() != n) throw Error(ErrorCode::invalid_argument, "Jacobian needs as many components as variables");
    std::vector<std::vector<Poly>> m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i].push_back(f[i].derivative(j));
    return determinant(std::move(m));
}

// Per-component ratios k_i with f_i = k_i g_i, consistent with a single
// weighted scaling (k_i^(w_j) = k_j^(w_i)).
inline std::optional<std::vector<Scalar>> scale_between(const RationalMap& f, const RationalMap& g) {
    if (f.size() != g.size() || !(f.dst_weights() == g.dst_weights())) return std::nullopt;
    const Field& K = f.src_ring()->field;
    std::vector<Scalar> k(f.size(), Scalar(K));
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].is_zero() != g[i].is_zero()) return std::nullopt;
        if (f[i].is_zero()) continue;
        auto r = proportionality(std::vector<Poly>{f[i]}, std::vector<Poly>{g[i].with_ring(f.src_ring())});
        if (!r) return std::nullopt;
        k[i] = *r;
    }
    const Weights& w = f.dst_weights();
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (f[i].is_zero() || f[j].is_zero()) continue;
            if (k[i].pow(w[j]) != k[j].pow(w[i])) return std::nullopt;
        }
    return k;
}

inline bool equal_up_to_scale(const RationalMap& f, const RationalMap& g) { return scale_between(f, g).has_value(); }

inline std::optional<Scalar> projective_scalar(const RationalMap& f, const RationalMap& g) {
    if (!f.dst_weights().is_standard()) return std::nullopt;
    std::vector<Poly> gc;
    for (const auto& p : g.components()) gc.push_back(p.with_ring(f.src_ring()));
    return proportionality(f.components(), gc);
}

inline bool is_identity_up_to_scale(const RationalMap& f) {
    if (f.size() != f.src_ring()->names.size() || !(f.src_weights() == f.dst_weights())) return false;
    return equal_up_to_scale(f, RationalMap::identity(f.src_ring(), f.src_weights()));
}

inline std::optional<int> order_up_to_scale(const RationalMap& f, int nmax) {
    if (f.size() != f.src_ring()->names.size() || !(f.src_weights() == f.dst_weights()))
        throw Error(ErrorCode::invalid_argument, "order needs a self-map");
    RationalMap g = f;
    for (int n = 1; n <= nmax; ++n) {
        if (is_identity_up_to_scale(g)) return n;
        if (n < nmax) g = compose(f, g);
    }
    return std::nullopt;
}

// Each minor f_i x_j - f_j x_i is divisible by g.
inline bool fixed_locus_contains(const RationalMap& f, const Poly& g) {
    const Ring& r = f.src_ring();
    if (f.size() != 3 || r->names.size() != 3 || !f.dst_weights().is_standard())
        throw Error(ErrorCode::invalid_argument, "fixed curves are defined for self-maps of the plane");
    Poly gg = g.with_ring(r);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            Poly minor = f[i] * Poly::variable(r, j) - f[j] * Poly::variable(r, i);
            if (!divides(gg, minor)) return false;
        }
    return true;
}

struct PencilAction {
    Matrix M;
    Poly common;
};

// Coefficients (a, b) with h = a*l1 + b*l2, for a linear form h.
inline std::optional<std::pair<Scalar, Scalar>> in_span(const Poly& h, const Poly& l1, const Poly& l2) {
    const Field& K = h.field();
    const std::size_t n = h.nvars();
    if (!h.is_zero() && h.homogeneous_degree() != 1) return std::nullopt;
    Matrix m(K, n, 2);
    std::vector<Scalar> rhs;
    for (std::size_t i = 0; i < n; ++i) {
        Monomial e;
        e.e[i] = 1;
        m.set(i, 0, l1.coefficient(e));
        m.set(i, 1, l2.coefficient(e));
        rhs.push_back(h.coefficient(e));
    }
    auto s = m.solve(rhs);
    if (!s) return std::nullopt;
    return std::make_pair((*s)[0], (*s)[1]);
}

inline std::optional<PencilAction> preserves_pencil(const RationalMap& f, const Poly& l1, const Poly& l2) {
    const Ring& r = f.src_ring();
    if (f.size() != 3 || r->names.size() != 3) throw Error(ErrorCode::invalid_argument, "pencils live on the plane");
    Poly a = l1.with_ring(r), b = l2.with_ring(r);
    if (a.homogeneous_degree() != 1 || b.homogeneous_degree() != 1 || proportionality({a}, {b}))
        throw Error(ErrorCode::invalid_argument, "a pencil needs two independent linear forms");
    Poly pa = a.substitute(f.components()), pb = b.substitute(f.components());
    if (pa.is_zero() || pb.is_zero()) return std::nullopt;
    Poly c = gcd(pa, pb);
    auto s1 = in_span(exact_divide(pa, c), a, b);
    auto s2 = in_span(exact_divide(pb, c), a, b);
    if (!s1 || !s2) return std::nullopt;
    Matrix M(r->field, 2, 2);
    M.set(0, 0, s1->first);
    M.set(0, 1, s1->second);
    M.set(1, 0, s2->first);
    M.set(1, 1, s2->second);
    if (M.determinant().is_zero()) return std::nullopt;
    return PencilAction{M, c};
}

// Projective saturation of (x, y) -> (x^a y^b, x^c y^d) in the chart z = 1.
inline RationalMap monomial_map(const Ring& r, long a, long b, long c, long d) {
    if (r->names.size() != 3) throw Error(ErrorCode::invalid_argument, "monomial maps act on the plane");
    long det = a * d - b * c;
    if (det != 1 && det != -1)
        throw Error(ErrorCode::non_unimodular, "matrix has determinant " + std::to_string(det));
    long e[3][3] = {{a, b, -a - b}, {c, d, -c - d}, {0, 0, 0}};
    std::vector<Poly> comps;
    for (int i = 0; i < 3; ++i) {
        Monomial m;
        for (int j = 0; j < 3; ++j) {
            long lo = std::min({e[0][j], e[1][j], e[2][j]});
            m.e[j] = static_cast<std::uint16_t>(e[i][j] - lo);
        }
        comps.push_back(Poly::monomial(r, m, Scalar(r->field, 1)));
    }
    return RationalMap::standard(comps, r);
}

// g o f == 0
inline bool image_satisfies(const RationalMap& f, const Poly& g) {
    if (g.nvars() != f.size()) throw Error(ErrorCode::invalid_argument, "equation does not live on the map's target");
    return g.substitute(f.components()).is_zero();
}

inline RationalMap linear_inverse(const RationalMap& f) {
    const Ring& r = f.src_ring();
    const std::size_t n = r->names.size();
    if (f.degree() != 1 || f.size() != n || !f.src_weights().is_standard())
        throw Error(ErrorCode::invalid_argument, "only invertible linear maps have a linear inverse");
    Matrix m(r->field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Monomial e;
            e.e[j] = 1;
            m.set(i, j, f[i].coefficient(e));
        }
    auto inv = m.inverse();
    if (!inv) throw Error(ErrorCode::invalid_argument, "linear map is singular");
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < n; ++i) {
        Poly p(r);
        for (std::size_t j = 0; j < n; ++j) p += Poly::variable(r, j).scaled(inv->at(i, j));
        comps.push_back(p);
    }
    return RationalMap::standard(comps, r);
}

struct PushforwardLaw {
    bool holds;
    RationalFn u_rate, v_rate;      // X(u)/u, X(v)/v for X = t x d/dx + y d/dy
    RationalFn expected_u, expected_v;  // (c t + d)(A.t), c t + d
};

// For the monomial map (x, y) -> (x^a y^b, x^c y^d) checks
// A_* X_t = (c t + d) X_{A.t} with X_t = t x d/dx + y d/dy and A.t the Moebius action.
inline PushforwardLaw monomial_pushforward_law(const Field& K, long a, long b, long c, long d) {
    long det = a * d - b * c;
    if (det != 1 && det != -1) throw Error(ErrorCode::non_unimodular, "matrix has determinant " + std::to_string(det));
    Ring r = make_ring(K, {"x", "y", "t"});
    Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1), t = Poly::variable(r, 2);
    Poly one = Poly::constant(r, Rational(1));
    Derivation X(r, {RationalFn(t * x), RationalFn(y), RationalFn(Poly(r))});
    auto monomial = [&](long p, long q) {
        RationalFn m(one);
        m = m * RationalFn(x).pow(p) * RationalFn(y).pow(q);
        return m;
    };
    auto k = [&](long v) { return Poly::constant(r, Rational(v)); };
    RationalFn u = monomial(a, b), v = monomial(c, d);
    RationalFn ur = X.apply(u) / u, vr = X.apply(v) / v;
    RationalFn mobius(k(a) * t + k(b), k(c) * t + k(d));
    RationalFn factor(k(c) * t + k(d));
    RationalFn eu = factor * mobius, ev = factor;
    return {ur == eu && vr == ev, ur, vr, eu, ev};
}

}  // namespace birfol
