#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "birfol/birmap.hpp"
#include "birfol/exterior.hpp"
#include "birfol/gcd.hpp"

namespace birfol {

struct ProjectivePoint {
    std::vector<Scalar> x;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < x.size(); ++i) s += (i ? " : " : "") + x[i].to_string();
        return s + ")";
    }
};

// a du + b dv near the origin of a chart.
struct LocalFoliation {
    Poly a, b;

    const Ring& ring() const { return a.ring(); }
    std::string to_string() const {
        OneForm f({a, b});
        return f.to_string();
    }
};

inline LocalFoliation saturate_local(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::zero_result, "local form vanishes identically");
    Poly g = gcd(a, b);
    if (!g.is_constant()) {
        a = exact_divide(a, g);
        b = exact_divide(b, g);
    }
    return {a, b};
}

// Restricts to the chart of the first nonzero coordinate and moves p to the origin.
inline LocalFoliation localize(const OneForm& w, const ProjectivePoint& p) {
    const std::size_t n = w.size();
    if (n != 3 || p.x.size() != 3) throw Error(ErrorCode::invalid_argument, "localization works on planes");
    std::size_t k = 0;
    while (k < n && p.x[k].is_zero()) ++k;
    if (k == n) throw Error(ErrorCode::invalid_argument, "point has no nonzero coordinate");
    if (w.w[k] != 1)
        throw Error(ErrorCode::invalid_argument, "only charts of weight-one coordinates are smooth");
    const Field& K = w.ring()->field;
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < n; ++i)
        if (i != k) others.push_back(i);
    Ring local = make_ring(K, {w.ring()->names[others[0]], w.ring()->names[others[1]]});
    std::vector<Poly> images(n, Poly(local));
    images[k] = Poly::constant(local, Rational(1));
    for (std::size_t j = 0; j < 2; ++j) {
        std::size_t i = others[j];
        Scalar q = p.x[i] / p.x[k].pow(w.w[i]);
        images[i] = Poly::variable(local, j) + Poly::constant(local, q);
    }
    return saturate_local(w.c[others[0]].substitute(images), w.c[others[1]].substitute(images));
}

enum class Classification { regular, nondegenerate, radial, nilpotent, degenerate_other };

inline const char* classification_name(Classification c) {
    switch (c) {
    case Classification::regular: return "regular";
    case Classification::nondegenerate: return "nondegenerate";
    case Classification::radial: return "radial";
    case Classification::nilpotent: return "nilpotent";
    case Classification::degenerate_other: return "degenerate-other";
    }
    return "?";
}

// Ratio of the eigenvalues of the linear part: a pair when the eigenvalues
// lie in K, otherwise the minimal polynomial r^2 + c1 r + c0 of their ratio.
// The pair is unordered; rational pairs print as coprime integers with the
// smaller absolute value first and the second entry positive.
struct EigenRatio {
    enum class Kind { undefined, pair, minpoly } kind = Kind::undefined;
    std::array<Scalar, 2> pair;
    std::array<Scalar, 2> minpoly;  // c1, c0

    std::string to_string() const {
        switch (kind) {
        case Kind::undefined: return "undefined";
        case Kind::pair: return pair[0].to_string() + ":" + pair[1].to_string();
        case Kind::minpoly: {
            Field K = minpoly[0].field();
            Ring r = make_ring(K, {"r"});
            Poly rr = Poly::variable(r, 0);
            Poly m = rr * rr + rr.scaled(minpoly[0]) + Poly::constant(r, minpoly[1]);
            return "root of " + m.to_string();
        }
        }
        return "";
    }

    // Unordered match against (p : q) up to scale.
    bool matches(const Scalar& p, const Scalar& q) const {
        if (kind == Kind::pair)
            return p * pair[1] == q * pair[0] || p * pair[0] == q * pair[1];
        if (kind == Kind::minpoly) {
            if (q.is_zero()) return false;
            Scalar r = p / q;
            return (r * r + minpoly[0] * r + minpoly[1]).is_zero();
        }
        return false;
    }
};

struct SingularityReport {
    bool singular = false;
    int nu = 0;
    bool dicritical = false;
    int l = 0;
    Scalar trace, det;
    EigenRatio ratio;
    std::optional<long> milnor;  // empty means infinite
    Classification classification = Classification::regular;

    std::string milnor_string() const { return milnor ? std::to_string(*milnor) : "infinite"; }
};

inline EigenRatio eigen_ratio(const Scalar& trace, const Scalar& det) {
    const Field& K = trace.field();
    EigenRatio r;
    Scalar disc = trace * trace - Scalar(K, 4) * det;
    auto s = sqrt_in_field(disc);
    if (!s) {
        r.kind = EigenRatio::Kind::minpoly;
        // det r^2 - (trace^2 - 2 det) r + det, made monic
        r.minpoly = {-(trace * trace - Scalar(K, 2) * det) / det, Scalar(K, 1)};
        return r;
    }
    Scalar half(K, Rational(1, 2));
    Scalar l1 = (trace + *s) * half, l2 = (trace - *s) * half;
    if (l1.is_zero() && l2.is_zero()) return r;
    r.kind = EigenRatio::Kind::pair;
    if (l1 == l2) {
        r.pair = {Scalar(K, 1), Scalar(K, 1)};
        return r;
    }
    if (l1.is_rational() && l2.is_rational()) {
        Rational a = l1.a0(), b = l2.a0();
        Integer den;
        mpz_lcm(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
        Integer na = a.get_num() * (den / a.get_den()), nb = b.get_num() * (den / b.get_den());
        Integer g;
        mpz_gcd(g.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
        na /= g;
        nb /= g;
        if (abs(na) > abs(nb)) std::swap(na, nb);
        if (sgn(nb) < 0 || (sgn(nb) == 0 && sgn(na) < 0)) {
            na = -na;
            nb = -nb;
        }
        r.pair = {Scalar(K, Rational(na)), Scalar(K, Rational(nb))};
        return r;
    }
    if (l2.is_zero()) r.pair = {Scalar(K, 1), Scalar(K)};
    else r.pair = {l1 / l2, Scalar(K, 1)};
    return r;
}

// Intersection multiplicity at the origin of a = 0 and b = 0 (two variables),
// by Fulton's algorithm. Empty result means infinite.
inline std::optional<long> milnor_fulton(Poly F, Poly G) {
    if (F.nvars() != 2) throw Error(ErrorCode::invalid_argument, "intersection multiplicity needs two variables");
    G = G.with_ring(F.ring());
    const Field& K = F.field();
    auto vanishes = [](const Poly& p) { return p.constant_term().is_zero(); };
    if (F.is_zero() && G.is_zero()) return std::nullopt;
    if (F.is_zero()) return vanishes(G) ? std::nullopt : std::optional<long>(0);
    if (G.is_zero()) return vanishes(F) ? std::nullopt : std::optional<long>(0);
    if (!vanishes(F) || !vanishes(G)) return 0;
    Poly h = gcd(F, G);
    if (!h.is_constant()) {
        if (vanishes(h)) return std::nullopt;
        F = exact_divide(F, h);
        G = exact_divide(G, h);
    }
    const Poly v = Poly::variable(F.ring(), 1);
    const Scalar zero(K);
    long total = 0;
    for (;;) {
        if (!vanishes(F) || !vanishes(G)) return total;
        Poly f0 = F.specialize(1, zero), g0 = G.specialize(1, zero);
        if (f0.is_zero() && g0.is_zero()) return std::nullopt;
        if (f0.is_zero()) {
            total += g0.min_degree_in(0);
            F = exact_divide(F, v);
            continue;
        }
        if (g0.is_zero()) {
            total += f0.min_degree_in(0);
            G = exact_divide(G, v);
            continue;
        }
        int r = f0.degree_in(0), s = g0.degree_in(0);
        if (r > s) {
            std::swap(F, G);
            std::swap(f0, g0);
            std::swap(r, s);
        }
        Monomial shift;
        shift.e[0] = static_cast<std::uint16_t>(s - r);
        G = G.scaled(f0.leading_coefficient()) - F.shifted(shift).scaled(g0.leading_coefficient());
    }
}

inline SingularityReport analyze(const LocalFoliation& L) {
    SingularityReport rep;
    const Field& K = L.a.field();
    rep.trace = Scalar(K);
    rep.det = Scalar(K);
    const Scalar a0 = L.a.constant_term(), b0 = L.b.constant_term();
    if (!a0.is_zero() || !b0.is_zero()) {
        rep.milnor = 0;
        return rep;
    }
    rep.singular = true;
    int oa = L.a.is_zero() ? 1 << 20 : L.a.order();
    int ob = L.b.is_zero() ? 1 << 20 : L.b.order();
    rep.nu = std::min(oa, ob);
    const Ring& r = L.ring();
    Poly aj = L.a.homogeneous_part(unsigned(rep.nu)), bj = L.b.homogeneous_part(unsigned(rep.nu));
    rep.dicritical = (Poly::variable(r, 0) * aj + Poly::variable(r, 1) * bj).is_zero();
    rep.l = rep.nu + (rep.dicritical ? 1 : 0);

    auto lin = [&](const Poly& p, std::size_t i) {
        Monomial m;
        m.e[i] = 1;
        return p.coefficient(m);
    };
    // dual field b d/du - a d/dv
    Scalar bu = lin(L.b, 0), bv = lin(L.b, 1), au = lin(L.a, 0), av = lin(L.a, 1);
    rep.trace = bu - av;
    rep.det = bv * au - bu * av;
    rep.ratio = eigen_ratio(rep.trace, rep.det);
    rep.milnor = milnor_fulton(L.a, L.b);

    bool zero_linear = bu.is_zero() && bv.is_zero() && au.is_zero() && av.is_zero();
    bool scalar_linear = !zero_linear && bv.is_zero() && au.is_zero() && bu == -av;
    if (scalar_linear && rep.dicritical) rep.classification = Classification::radial;
    else if (!rep.det.is_zero()) rep.classification = Classification::nondegenerate;
    else if (!zero_linear && rep.trace.is_zero()) rep.classification = Classification::nilpotent;
    else rep.classification = Classification::degenerate_other;
    return rep;
}

// Roots in K of a univariate polynomial (variable index var), found by
// rational-root search and the quadratic formula. Factors that are left over
// are reported by degree.
struct RootSearch {
    std::vector<Scalar> roots;
    std::vector<int> unresolved_degrees;
};

namespace detail {

inline std::vector<Integer> divisors(Integer n, bool& ok) {
    n = abs(n);
    std::vector<Integer> out;
    ok = n < Integer("1000000000000");
    if (!ok || n == 0) return out;
    for (Integer d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    return out;
}

inline std::vector<Rational> rational_roots(const Poly& p, std::size_t var) {
    // p has rational coefficients; clear denominators.
    std::vector<Rational> coef(std::size_t(p.degree_in(var)) + 1);
    for (const auto& t : p.terms()) coef[t.m.e[var]] = t.c.a0;
    Integer l = 1;
    for (const auto& c : coef) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ic;
    for (const auto& c : coef) ic.push_back(c.get_num() * (l / c.get_den()));
    std::vector<Rational> out;
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) out.push_back(0);
    if (low + 1 >= ic.size()) return out;
    bool ok1, ok2;
    auto ps = divisors(ic[low], ok1), qs = divisors(ic.back(), ok2);
    if (!ok1 || !ok2) return out;
    for (const auto& a : ps)
        for (const auto& b : qs)
            for (int sign : {1, -1}) {
                Rational cand(sign * a, b);
                cand.canonicalize();
                if (std::find(out.begin(), out.end(), cand) != out.end()) continue;
                Rational acc = 0;
                for (std::size_t k = ic.size(); k-- > 0;) acc = acc * cand + Rational(ic[k]);
                if (acc == 0) out.push_back(cand);
            }
    return out;
}

}  // namespace detail

inline RootSearch roots_in_field(const Poly& p0, std::size_t var) {
    RootSearch res;
    if (p0.is_zero()) throw Error(ErrorCode::invalid_argument, "root search on the zero polynomial");
    const Field& K = p0.field();
    const Ring& ring = p0.ring();
    Poly p = p0.monic();
    if (p.degree_in(var) <= 0) return res;
    Poly s = exact_divide(p, gcd(p, p.derivative(var))).monic();
    // rational part: common factor of the coordinate polynomials
    std::vector<Term> t0, t1;
    for (const auto& t : s.terms()) {
        if (sgn(t.c.a0) != 0) t0.push_back({t.m, {t.c.a0, 0}});
        if (sgn(t.c.a1) != 0) t1.push_back({t.m, {t.c.a1, 0}});
    }
    Poly s0 = Poly::from_terms(ring, t0), s1 = Poly::from_terms(ring, t1);
    Poly h = gcd(s0, s1);
    const Poly x = Poly::variable(ring, var);
    if (h.degree_in(var) > 0) {
        for (const auto& r : detail::rational_roots(h, var)) {
            Scalar root(K, r);
            res.roots.push_back(root);
            s = exact_divide(s, x - Poly::constant(ring, root));
        }
    }
    int d = s.degree_in(var);
    auto coeff = [&](int k) {
        Monomial m;
        m.e[var] = static_cast<std::uint16_t>(k);
        return s.coefficient(m);
    };
    if (d == 1) {
        res.roots.push_back(-coeff(0) / coeff(1));
    } else if (d == 2) {
        Scalar a = coeff(2), b = coeff(1), c = coeff(0);
        auto sq = sqrt_in_field(b * b - Scalar(K, 4) * a * c);
        if (sq) {
            Scalar two_a = Scalar(K, 2) * a;
            res.roots.push_back((-b + *sq) / two_a);
            res.roots.push_back((-b - *sq) / two_a);
        } else {
            res.unresolved_degrees.push_back(2);
        }
    } else if (d > 2) {
        res.unresolved_degrees.push_back(d);
    }
    return res;
}

struct ExceptionalPoint {
    std::string where;   // "t = value" in the first chart or the second chart's origin
    LocalFoliation local;
    SingularityReport report;
};

struct BlowUp {
    LocalFoliation chart1, chart2;  // (u, t) with v = u t ; (s, v) with u = s v
    bool exceptional_invariant = false;
    std::vector<ExceptionalPoint> points;
    std::vector<int> unresolved_degrees;

    long milnor_sum() const {
        long s = 0;
        for (const auto& p : points) s += p.report.milnor.value_or(0);
        return s;
    }
    bool resolved() const {
        for (const auto& p : points)
            if (!p.report.milnor) return false;
        return unresolved_degrees.empty();
    }
};

namespace detail {

inline LocalFoliation divide_out(Poly a, Poly b, std::size_t var) {
    int k = std::min(a.is_zero() ? 1 << 20 : a.min_degree_in(var), b.is_zero() ? 1 << 20 : b.min_degree_in(var));
    if (k > 0) {
        Monomial m;
        m.e[var] = static_cast<std::uint16_t>(k);
        Poly mono = Poly::monomial(a.ring(), m, Scalar(a.field(), 1));
        a = exact_divide(a, mono);
        b = exact_divide(b, mono);
    }
    return saturate_local(a, b);
}

}  // namespace detail

inline BlowUp blow_up(const LocalFoliation& L) {
    const Ring& r = L.ring();
    const Field& K = r->field;
    const auto& names = r->names;
    auto fresh = [&](std::string n) {
        while (n == names[0] || n == names[1]) n += "'";
        return n;
    };
    const std::string tname = fresh("t");
    Ring c1 = make_ring(K, {names[0], tname});
    Ring c2 = make_ring(K, {fresh("s"), names[1]});
    auto chart1 = [&] {
        Poly u = Poly::variable(c1, 0), t = Poly::variable(c1, 1);
        Poly a = L.a.substitute({u, u * t}), b = L.b.substitute({u, u * t});
        // dv = t du + u dt
        return detail::divide_out(a + t * b, u * b, 0);
    };
    auto chart2 = [&] {
        Poly s = Poly::variable(c2, 0), v = Poly::variable(c2, 1);
        Poly a = L.a.substitute({s * v, v}), b = L.b.substitute({s * v, v});
        // du = v ds + s dv
        return detail::divide_out(v * a, s * a + b, 1);
    };
    BlowUp out{chart1(), chart2(), false, {}, {}};
    const Scalar zero(K);
    Poly a_e = out.chart1.a.specialize(0, zero), b_e = out.chart1.b.specialize(0, zero);
    out.exceptional_invariant = b_e.is_zero();
    Poly common = gcd(a_e, b_e);
    if (common.is_zero()) throw Error(ErrorCode::zero_result, "blown-up form vanishes on the exceptional line");
    auto roots = roots_in_field(common, 1);
    out.unresolved_degrees = roots.unresolved_degrees;
    for (const auto& root : roots.roots) {
        Poly u = Poly::variable(c1, 0), t = Poly::variable(c1, 1);
        Poly shifted = t + Poly::constant(c1, root);
        LocalFoliation at = saturate_local(out.chart1.a.substitute({u, shifted}), out.chart1.b.substitute({u, shifted}));
        out.points.push_back({tname + " = " + root.to_string(), at, analyze(at)});
    }
    SingularityReport at_infinity = analyze(out.chart2);
    if (at_infinity.singular) out.points.push_back({tname + " = infinity", out.chart2, at_infinity});
    return out;
}

struct MilnorBalance {
    long mu;        // directly computed
    long predicted; // l(l-1) - 1 + sum over the exceptional line
    bool resolved;
    bool balanced() const { return resolved && mu == predicted; }
};

inline MilnorBalance milnor_balance(const LocalFoliation& L) {
    SingularityReport rep = analyze(L);
    if (!rep.singular) throw Error(ErrorCode::non_singular_point, "blow-up formula needs a singular point");
    if (rep.dicritical) throw Error(ErrorCode::invalid_argument, "blow-up formula applies to non-dicritical points");
    BlowUp b = blow_up(L);
    long l = rep.l;
    return {rep.milnor.value_or(-1), l * (l - 1) - 1 + b.milnor_sum(), b.resolved() && rep.milnor.has_value()};
}

struct DarbouxReport {
    int degree;
    long expected;
    long sum;
    std::vector<SingularityReport> reports;
    bool complete() const { return sum == expected; }
};

inline DarbouxReport darboux_check(const OneForm& w, const std::vector<ProjectivePoint>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            std::vector<Poly> a, b;
            const Ring r = make_ring(w.ring()->field, {"p"});
            for (const auto& s : points[i].x) a.push_back(Poly::constant(r, s));
            for (const auto& s : points[j].x) b.push_back(Poly::constant(r, s));
            if (proportionality(a, b)) throw Error(ErrorCode::invalid_argument, "point " + points[i].to_string() + " is listed twice");
        }
    DarbouxReport rep;
    rep.degree = foliation_degree(w);
    rep.expected = long(rep.degree) * rep.degree + rep.degree + 1;
    rep.sum = 0;
    for (const auto& p : points) {
        SingularityReport s = analyze(localize(w, p));
        if (!s.singular) throw Error(ErrorCode::non_singular_point, p.to_string() + " is not a singular point");
        if (!s.milnor) throw Error(ErrorCode::invalid_argument, "infinite multiplicity at " + p.to_string());
        rep.sum += *s.milnor;
        rep.reports.push_back(std::move(s));
    }
    return rep;
}

struct CremonaPrediction {
    int degree;
    std::array<int, 3> l;
    bool operator==(const CremonaPrediction& o) const { return degree == o.degree && l == o.l; }
    std::string to_string() const {
        return "degree " + std::to_string(degree) + ", l = (" + std::to_string(l[0]) + ", " + std::to_string(l[1]) +
               ", " + std::to_string(l[2]) + ")";
    }
};

// Degree and vertex data after the standard quadratic Cremona map.
inline CremonaPrediction cremona_predict(int d, int l1, int l2, int l3) {
    return {2 * d + 2 - l1 - l2 - l3, {d + 2 - l2 - l3, d + 2 - l1 - l3, d + 2 - l1 - l2}};
}

inline std::array<int, 3> vertex_l(const OneForm& w) {
    const Field& K = w.ring()->field;
    std::array<int, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) {
        ProjectivePoint p{{Scalar(K), Scalar(K), Scalar(K)}};
        p.x[i] = Scalar(K, 1);
        SingularityReport s = analyze(localize(w, p));
        out[i] = s.singular ? s.l : 0;
    }
    return out;
}

struct CremonaStep {
    CremonaPrediction before;     // degree and l at the vertices
    CremonaPrediction predicted;
    CremonaPrediction measured;   // of the transformed foliation
    OneForm transformed;
    Poly factor;
    bool matches() const { return predicted == measured; }
};

// Transforms w by (YZ : ZX : XY) and compares degree and vertex data with the prediction.
inline CremonaStep cremona_step(const OneForm& w) {
    const Ring& r = w.ring();
    Poly X = Poly::variable(r, 0), Y = Poly::variable(r, 1), Z = Poly::variable(r, 2);
    RationalMap Q = RationalMap::standard({Y * Z, Z * X, X * Y}, r);
    int d = foliation_degree(w);
    auto l = vertex_l(w);
    Pullback pb = pullback_form(Q, w);
    CremonaPrediction before{d, l};
    CremonaPrediction predicted = cremona_predict(d, l[0], l[1], l[2]);
    CremonaPrediction measured{foliation_degree(pb.form), vertex_l(pb.form)};
    return {before, predicted, measured, pb.form, pb.factor};
}

}  // namespace birfol
