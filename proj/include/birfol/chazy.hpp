#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "birfol/derivation.hpp"
#include "birfol/rational_function.hpp"

namespace birfol {

enum class ChazyKind { IV, V, VI };

inline const char* chazy_name(ChazyKind k) {
    switch (k) {
    case ChazyKind::IV: return "IV";
    case ChazyKind::V: return "V";
    case ChazyKind::VI: return "VI";
    }
    return "?";
}

// x''' = a x x'' + b x'^2 - c x^2 x' with x, x', x'' read as the ring variables.
struct ChazyEquation {
    ChazyKind kind;
    Poly P;
    Derivation W;

    const Ring& ring() const { return W.ring(); }
};

inline Poly chazy_polynomial(const Ring& r, int a, int b, int c) {
    if (r->names.size() != 3) throw Error(ErrorCode::invalid_argument, "Chazy equations live on three variables");
    Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1), z = Poly::variable(r, 2);
    auto k = [&](int v) { return Poly::constant(r, Rational(v)); };
    return k(a) * x * z + k(b) * y * y - k(c) * x * x * y;
}

inline ChazyEquation chazy(const Ring& r, ChazyKind kind) {
    int a = 0, b = 0, c = 0;
    switch (kind) {
    case ChazyKind::IV: a = 3, b = 3, c = 3; break;
    case ChazyKind::V: a = 2, b = 4, c = 2; break;
    case ChazyKind::VI: a = 1, b = 5, c = 1; break;
    }
    Poly P = chazy_polynomial(r, a, b, c);
    Derivation W(r, {RationalFn(Poly::variable(r, 1)), RationalFn(Poly::variable(r, 2)), RationalFn(P)});
    return {kind, P, W};
}

struct Verification {
    bool ok;
    RationalFn residual;
};

// With u_i = D^i(u), the residual u_3 - P(u_0, u_1, u_2) of the target equation.
inline Verification verify_solution_map(const Derivation& D, const RationalFn& u, const ChazyEquation& target) {
    auto it = D.iterates(u.with_ring(D.ring()), 3);
    RationalFn residual = it[3] - substitute(target.P, {it[0], it[1], it[2]});
    return {residual.is_zero(), residual};
}

inline Verification verify_transport(const ChazyEquation& src, const RationalFn& u, const ChazyEquation& dst) {
    return verify_solution_map(src.W, u, dst);
}

inline Verification verify_ode_symmetry(const ChazyEquation& eq, const RationalFn& u) {
    return verify_solution_map(eq.W, u, eq);
}

inline bool verify_first_integral(const Derivation& D, const Poly& B) { return D.apply(B.with_ring(D.ring())).is_zero(); }

// Cofactor k with D(C) = k C, when C is an invariant surface.
inline std::optional<Poly> verify_invariant_surface(const Derivation& D, const Poly& C) {
    if (C.is_zero()) throw Error(ErrorCode::invalid_argument, "invariant surface of the zero polynomial");
    RationalFn dc = D.apply(C.with_ring(D.ring()));
    if (!dc.is_polynomial()) return std::nullopt;
    return try_divide(dc.as_poly(), C.with_ring(D.ring()));
}

// B(u, D u, D^2 u), constant when B is a first integral of the target equation.
inline RationalFn first_integral_level(const Derivation& D, const RationalFn& u, const Poly& B) {
    auto it = D.iterates(u.with_ring(D.ring()), 2);
    return substitute(B, {it[0], it[1], it[2]});
}

// Self-map of affine space given by rational functions.
class AffineMap {
public:
    AffineMap(Ring ring, std::vector<RationalFn> comps) : ring_(std::move(ring)), comps_(std::move(comps)) {
        if (comps_.size() != ring_->names.size())
            throw Error(ErrorCode::invalid_argument, "affine self-map needs one component per variable");
        for (auto& c : comps_) c = c.with_ring(ring_);
    }

    static AffineMap identity(const Ring& r) {
        std::vector<RationalFn> c;
        for (std::size_t i = 0; i < r->names.size(); ++i) c.emplace_back(Poly::variable(r, i));
        return AffineMap(r, c);
    }

    const Ring& ring() const { return ring_; }
    const std::vector<RationalFn>& components() const { return comps_; }
    bool is_identity() const { return *this == identity(ring_); }

    RationalFn apply(const RationalFn& u) const { return substitute(u.with_ring(ring_), comps_); }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < comps_.size(); ++i) s += (i ? ", " : "") + comps_[i].to_string();
        return s + ")";
    }

    friend bool operator==(const AffineMap& a, const AffineMap& b) { return a.comps_ == b.comps_; }
    friend bool operator!=(const AffineMap& a, const AffineMap& b) { return !(a == b); }

private:
    Ring ring_;
    std::vector<RationalFn> comps_;
};

// f o g
inline AffineMap compose(const AffineMap& f, const AffineMap& g) {
    require_compatible(f.ring(), g.ring());
    std::vector<RationalFn> c;
    for (const auto& fi : f.components()) c.push_back(substitute(fi, g.components()));
    return AffineMap(f.ring(), c);
}

inline AffineMap power(const AffineMap& f, int n) {
    AffineMap r = AffineMap::identity(f.ring());
    for (int i = 0; i < n; ++i) r = compose(f, r);
    return r;
}

inline std::optional<int> affine_order(const AffineMap& f, int nmax) {
    AffineMap g = f;
    for (int n = 1; n <= nmax; ++n) {
        if (g.is_identity()) return n;
        if (n < nmax) g = compose(f, g);
    }
    return std::nullopt;
}

// (u, D u, D^2 u) as a self-map of (x, x', x'').
inline AffineMap lift(const Derivation& D, const RationalFn& u) {
    auto it = D.iterates(u.with_ring(D.ring()), 2);
    return AffineMap(D.ring(), it);
}

struct GroupReport {
    bool flop_involution = false;
    bool tri_order_three = false;
    bool conjugation = false;  // flop o tri o flop == tri^-1
    std::vector<std::optional<std::string>> words;  // each extra substitution as a word in flop, tri

    bool holds() const {
        if (!flop_involution || !tri_order_three || !conjugation) return false;
        for (const auto& w : words)
            if (!w) return false;
        return true;
    }
};

// Checks the dihedral relations of the lifted flop and trivolution and
// expresses each further substitution as an element of the group they generate.
inline GroupReport group_relations(const Derivation& D, const RationalFn& flop, const RationalFn& tri,
                                   const std::vector<RationalFn>& others) {
    GroupReport rep;
    AffineMap f = lift(D, flop), t = lift(D, tri);
    AffineMap t2 = compose(t, t);
    rep.flop_involution = compose(f, f).is_identity();
    rep.tri_order_three = compose(t, t2).is_identity();
    rep.conjugation = compose(f, compose(t, f)) == t2;
    // The group has six elements; tri o flop equals flop o tri^2.
    std::vector<std::pair<std::string, AffineMap>> elements = {
        {"tri^2", t2},
        {"flop o tri", compose(f, t)},
        {"flop o tri^2", compose(f, t2)},
    };
    for (const auto& u : others) {
        AffineMap l = lift(D, u);
        std::optional<std::string> found;
        for (const auto& [name, g] : elements)
            if (g == l) {
                found = name;
                break;
            }
        rep.words.push_back(found);
    }
    return rep;
}

// Degree d with p(l^w1 x1, ..., l^wn xn) = l^d p, checked with a fresh variable l.
inline std::optional<long> homothety_degree(const Poly& p, const Weights& w) {
    if (p.is_zero()) throw Error(ErrorCode::invalid_argument, "zero polynomial has no weighted degree");
    const Ring& r = p.ring();
    std::vector<std::string> names = r->names;
    std::string fresh = "lambda";
    while (std::find(names.begin(), names.end(), fresh) != names.end()) fresh += "_";
    names.push_back(fresh);
    Ring big = make_ring(r->field, names);
    Poly lam = Poly::variable(big, names.size() - 1);
    std::vector<Poly> images, plain;
    for (std::size_t i = 0; i < r->names.size(); ++i) {
        plain.push_back(Poly::variable(big, i));
        images.push_back(lam.pow(unsigned(w.w[i])) * plain.back());
    }
    Poly scaled = p.substitute(images);
    Poly lifted = p.substitute(plain);
    long d = long(p.terms().front().m.weighted_degree(w.w));
    if (d < 0 || scaled != lam.pow(unsigned(d)) * lifted) return std::nullopt;
    return d;
}

}  // namespace birfol
