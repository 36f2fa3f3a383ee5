#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "birfol/error.hpp"
#include "birfol/scalar.hpp"

namespace birfol {

constexpr std::size_t kMaxVars = 6;

struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};

    unsigned degree() const {
        unsigned d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool is_one() const { return degree() == 0; }
    bool operator==(const Monomial& o) const { return e == o.e; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            unsigned s = unsigned(e[i]) + o.e[i];
            if (s > 0xFFFF) throw Error(ErrorCode::invalid_argument, "exponent overflow");
            r.e[i] = static_cast<std::uint16_t>(s);
        }
        return r;
    }
    bool divisible_by(const Monomial& o) const {
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (e[i] < o.e[i]) return false;
        return true;
    }
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
        return r;
    }
    long weighted_degree(const std::vector<int>& w) const {
        long d = 0;
        for (std::size_t i = 0; i < w.size(); ++i) d += long(w[i]) * e[i];
        return d;
    }
};

// Graded lexicographic comparison; variable 0 is the largest.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (auto x : m.e) {
            h ^= x;
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }
};

struct RingSpec {
    Field field;
    std::vector<std::string> names;
};

using Ring = std::shared_ptr<const RingSpec>;

inline Ring make_ring(Field f, std::vector<std::string> names) {
    if (names.size() > kMaxVars)
        throw Error(ErrorCode::invalid_argument, "too many variables");
    return std::make_shared<const RingSpec>(RingSpec{std::move(f), std::move(names)});
}

// Rings are interchangeable when they share the field and the number of
// variables; variables correspond by position.
inline bool compatible(const Ring& a, const Ring& b) {
    return a == b || (a->names.size() == b->names.size() && same_field(a->field, b->field));
}

inline void require_compatible(const Ring& a, const Ring& b) {
    if (!same_field(a->field, b->field))
        throw Error(ErrorCode::field_mismatch, "polynomials over " + a->field->name() + " and " +
                                                   b->field->name());
    if (a->names.size() != b->names.size())
        throw Error(ErrorCode::ring_mismatch, "polynomials in different numbers of variables");
}

struct Weights {
    std::vector<int> w;

    static Weights standard(std::size_t n) { return Weights{std::vector<int>(n, 1)}; }
    bool is_standard() const {
        return std::all_of(w.begin(), w.end(), [](int x) { return x == 1; });
    }
    std::size_t size() const { return w.size(); }
    int operator[](std::size_t i) const { return w[i]; }
    bool operator==(const Weights& o) const { return w == o.w; }
    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
        return s + ")";
    }
};

struct Term {
    Monomial m;
    QuadNumber c;
};

class Poly;
class NotDivisible;

class Poly {
public:
    explicit Poly(Ring r) : ring_(std::move(r)) {}

    static Poly constant(const Ring& r, const Scalar& s) {
        require_same_field(r->field, s.field());
        Poly p(r);
        if (!s.is_zero()) p.terms_.push_back({Monomial{}, s.value()});
        return p;
    }
    static Poly constant(const Ring& r, const Rational& q) {
        return constant(r, Scalar(r->field, q));
    }
    static Poly variable(const Ring& r, std::size_t i) {
        if (i >= r->names.size()) throw Error(ErrorCode::invalid_argument, "variable index out of range");
        Poly p(r);
        Monomial m;
        m.e[i] = 1;
        p.terms_.push_back({m, QuadNumber{1, 0}});
        return p;
    }
    static Poly monomial(const Ring& r, const Monomial& m, const Scalar& s) {
        Poly p(r);
        if (!s.is_zero()) p.terms_.push_back({m, s.value()});
        return p;
    }
    // Terms may be unsorted and contain duplicates.
    static Poly from_terms(const Ring& r, std::vector<Term> terms) {
        Poly p(r);
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    const Ring& ring() const { return ring_; }
    const Field& field() const { return ring_->field; }
    std::size_t nvars() const { return ring_->names.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    bool is_one() const { return is_constant() && !is_zero() && terms_[0].c.is_one(); }

    Scalar scalar(const QuadNumber& v) const { return Scalar(field(), v); }
    Scalar constant_term() const {
        if (!terms_.empty() && terms_.back().m.is_one()) return scalar(terms_.back().c);
        return Scalar(field());
    }
    Scalar leading_coefficient() const {
        if (terms_.empty()) return Scalar(field());
        return scalar(terms_.front().c);
    }
    const Monomial& leading_monomial() const { return terms_.front().m; }
    Scalar coefficient(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& k) {
            return grlex_cmp(t.m, k) > 0;
        });
        if (it != terms_.end() && it->m == m) return scalar(it->c);
        return Scalar(field());
    }

    int total_degree() const { return terms_.empty() ? -1 : int(terms_.front().m.degree()); }
    int order() const {
        if (terms_.empty()) return -1;
        unsigned d = terms_.front().m.degree();
        for (const auto& t : terms_) d = std::min(d, t.m.degree());
        return int(d);
    }
    int degree_in(std::size_t i) const {
        int d = terms_.empty() ? -1 : 0;
        for (const auto& t : terms_) d = std::max(d, int(t.m.e[i]));
        return d;
    }
    int min_degree_in(std::size_t i) const {
        if (terms_.empty()) return -1;
        int d = terms_.front().m.e[i];
        for (const auto& t : terms_) d = std::min(d, int(t.m.e[i]));
        return d;
    }
    unsigned used_variables() const {
        unsigned mask = 0;
        for (const auto& t : terms_)
            for (std::size_t i = 0; i < kMaxVars; ++i)
                if (t.m.e[i]) mask |= 1u << i;
        return mask;
    }
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return std::nullopt;
        unsigned d = terms_.front().m.degree();
        for (const auto& t : terms_)
            if (t.m.degree() != d) return std::nullopt;
        return int(d);
    }
    std::optional<long> weighted_degree(const Weights& w) const {
        if (terms_.empty()) return std::nullopt;
        long d = terms_.front().m.weighted_degree(w.w);
        for (const auto& t : terms_)
            if (t.m.weighted_degree(w.w) != d) return std::nullopt;
        return d;
    }
    Poly homogeneous_part(unsigned d) const {
        Poly r(ring_);
        for (const auto& t : terms_)
            if (t.m.degree() == d) r.terms_.push_back(t);
        return r;
    }

    Poly with_ring(const Ring& r) const {
        require_compatible(ring_, r);
        Poly p(r);
        p.terms_ = terms_;
        return p;
    }

    Poly operator-() const {
        Poly r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.m, {-t.c.a0, -t.c.a1}});
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = combine(*this, o, false); }
    Poly& operator-=(const Poly& o) { return *this = combine(*this, o, true); }
    Poly& operator*=(const Poly& o) { return *this = multiply(*this, o); }
    Poly& operator*=(const Scalar& s) { return *this = scaled(s); }

    friend Poly operator+(const Poly& a, const Poly& b) { return combine(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return combine(a, b, true); }
    friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }
    friend Poly operator*(const Poly& a, const Scalar& s) { return a.scaled(s); }
    friend Poly operator*(const Scalar& s, const Poly& a) { return a.scaled(s); }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (!compatible(a.ring_, b.ring_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].m == b.terms_[i].m) || !(a.terms_[i].c == b.terms_[i].c)) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const Scalar& s) const {
        require_same_field(field(), s.field());
        Poly r(ring_);
        if (s.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        const FieldSpec& f = *field();
        for (const auto& t : terms_) {
            Term u{t.m, {}};
            f.mul(u.c, t.c, s.value());
            r.terms_.push_back(std::move(u));
        }
        return r;
    }
    Poly shifted(const Monomial& m) const {
        Poly r = *this;
        for (auto& t : r.terms_) t.m = t.m * m;
        return r;
    }
    Poly monic() const {
        if (terms_.empty() || terms_.front().c.is_one()) return *this;
        return scaled(leading_coefficient().inverse());
    }

    Poly pow(unsigned e) const {
        Poly r = constant(ring_, Rational(1)), b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    Poly derivative(std::size_t i) const {
        std::vector<Term> out;
        const FieldSpec& f = *field();
        for (const auto& t : terms_) {
            if (t.m.e[i] == 0) continue;
            Term u{t.m, {}};
            QuadNumber k{Rational(t.m.e[i]), 0};
            f.mul(u.c, t.c, k);
            --u.m.e[i];
            out.push_back(std::move(u));
        }
        Poly r(ring_);
        r.terms_ = std::move(out);
        r.canonicalize();
        return r;
    }

    Scalar evaluate(const std::vector<Scalar>& point) const {
        if (point.size() != nvars()) throw Error(ErrorCode::invalid_argument, "point has wrong dimension");
        const FieldSpec& f = *field();
        std::vector<std::vector<QuadNumber>> powers(nvars());
        for (std::size_t i = 0; i < nvars(); ++i) {
            require_same_field(field(), point[i].field());
            int d = degree_in(i);
            powers[i].push_back(QuadNumber{1, 0});
            for (int k = 1; k <= d; ++k) {
                QuadNumber v;
                f.mul(v, powers[i].back(), point[i].value());
                powers[i].push_back(std::move(v));
            }
        }
        QuadNumber acc;
        for (const auto& t : terms_) {
            QuadNumber v = t.c;
            for (std::size_t i = 0; i < nvars(); ++i)
                if (t.m.e[i]) f.mul(v, v, powers[i][t.m.e[i]]);
            f.add(acc, acc, v);
        }
        return scalar(acc);
    }

    // Sets variable i to s; the result stays in the same ring.
    Poly specialize(std::size_t i, const Scalar& s) const {
        const FieldSpec& f = *field();
        int d = degree_in(i);
        std::vector<QuadNumber> powers{QuadNumber{1, 0}};
        for (int k = 1; k <= d; ++k) {
            QuadNumber v;
            f.mul(v, powers.back(), s.value());
            powers.push_back(std::move(v));
        }
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            Term u{t.m, {}};
            f.mul(u.c, t.c, powers[t.m.e[i]]);
            u.m.e[i] = 0;
            out.push_back(std::move(u));
        }
        return from_terms(ring_, std::move(out));
    }

    // Replaces variable i by images[i]; all images share a ring.
    Poly substitute(const std::vector<Poly>& images) const;

    std::string to_string() const;

    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return grlex_cmp(a.m, b.m) > 0; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        const FieldSpec& f = *field();
        for (auto& t : terms_) {
            if (!out.empty() && out.back().m == t.m)
                f.add(out.back().c, out.back().c, t.c);
            else {
                if (!out.empty() && out.back().c.is_zero()) out.pop_back();
                out.push_back(std::move(t));
            }
        }
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
        terms_ = std::move(out);
    }

private:
    static Poly combine(const Poly& a, const Poly& b, bool subtract) {
        require_compatible(a.ring_, b.ring_);
        const FieldSpec& f = *a.field();
        Poly r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            int c;
            if (i == a.terms_.size()) c = -1;
            else if (j == b.terms_.size()) c = 1;
            else c = grlex_cmp(a.terms_[i].m, b.terms_[j].m);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                Term t = b.terms_[j++];
                if (subtract) f.neg(t.c, t.c);
                r.terms_.push_back(std::move(t));
            } else {
                Term t{a.terms_[i].m, {}};
                if (subtract) f.sub(t.c, a.terms_[i].c, b.terms_[j].c);
                else f.add(t.c, a.terms_[i].c, b.terms_[j].c);
                ++i, ++j;
                if (!t.c.is_zero()) r.terms_.push_back(std::move(t));
            }
        }
        return r;
    }

    static Poly multiply(const Poly& a, const Poly& b) {
        require_compatible(a.ring_, b.ring_);
        Poly r(a.ring_);
        if (a.is_zero() || b.is_zero()) return r;
        const FieldSpec& f = *a.field();
        if (a.terms_.size() == 1 || b.terms_.size() == 1) {
            const Poly& one = a.terms_.size() == 1 ? a : b;
            const Poly& other = a.terms_.size() == 1 ? b : a;
            const Term& s = one.terms_[0];
            r.terms_.reserve(other.terms_.size());
            for (const auto& t : other.terms_) {
                Term u{t.m * s.m, {}};
                f.mul(u.c, t.c, s.c);
                r.terms_.push_back(std::move(u));
            }
            return r;
        }
        std::unordered_map<Monomial, QuadNumber, MonomialHash> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) f.addmul(acc[s.m * t.m], s.c, t.c);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return grlex_cmp(x.m, y.m) > 0; });
        return r;
    }

    Ring ring_;
    std::vector<Term> terms_;
};

// Sums of scaled polynomials without repeated merging.
class PolyAccumulator {
public:
    explicit PolyAccumulator(Ring r) : ring_(std::move(r)) {}

    void add(const Poly& p, const QuadNumber& c) {
        const FieldSpec& f = *ring_->field;
        for (const auto& t : p.terms()) f.addmul(acc_[t.m], t.c, c);
    }
    void add(const Poly& p) { add(p, QuadNumber{1, 0}); }

    Poly take() {
        std::vector<Term> out;
        out.reserve(acc_.size());
        for (auto& [m, c] : acc_)
            if (!c.is_zero()) out.push_back({m, std::move(c)});
        acc_.clear();
        return Poly::from_terms(ring_, std::move(out));
    }

private:
    Ring ring_;
    std::unordered_map<Monomial, QuadNumber, MonomialHash> acc_;
};

inline Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (images.size() != nvars())
        throw Error(ErrorCode::invalid_argument, "substitution must cover every variable");
    const Ring& target = images.at(0).ring();
    for (const auto& im : images) {
        require_compatible(target, im.ring());
        require_same_field(field(), im.field());
    }
    std::vector<std::vector<Poly>> powers(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
        powers[i].push_back(Poly::constant(target, Rational(1)));
        int d = degree_in(i);
        for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * images[i]);
    }
    PolyAccumulator acc(target);
    for (const auto& t : terms_) {
        const Poly* single = nullptr;
        Poly prod(target);
        bool have = false;
        for (std::size_t i = 0; i < nvars(); ++i) {
            if (!t.m.e[i]) continue;
            const Poly& p = powers[i][t.m.e[i]];
            if (!have) {
                single = &p;
                have = true;
            } else if (single) {
                prod = *single * p;
                single = nullptr;
            } else {
                prod *= p;
            }
        }
        if (!have) acc.add(powers[0][0], t.c);
        else if (single) acc.add(*single, t.c);
        else acc.add(prod, t.c);
    }
    return acc.take();
}

inline std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

inline std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    const FieldSpec& f = *field();
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const Term& t = terms_[k];
        std::string mono = monomial_to_string(t.m, ring_->names);
        bool negative;
        std::string coef;
        if (sgn(t.c.a1) == 0 || sgn(t.c.a0) == 0) {
            // a rational multiple of 1 or of the generator
            const Rational& r = sgn(t.c.a1) == 0 ? t.c.a0 : t.c.a1;
            negative = sgn(r) < 0;
            Rational m = abs(r);
            std::string g = sgn(t.c.a1) == 0 ? "" : f.generator();
            if (g.empty()) coef = (m == 1 && !mono.empty()) ? "" : m.get_str();
            else coef = (m == 1) ? g : m.get_str() + "*" + g;
        } else {
            negative = false;
            coef = "(" + quad_to_string(t.c, f) + ")";
        }
        std::string body;
        if (coef.empty()) body = mono;
        else if (mono.empty()) body = coef;
        else body = coef + "*" + mono;
        if (k == 0) s += negative ? "-" + body : body;
        else s += (negative ? " - " : " + ") + body;
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

class NotDivisible : public Error {
public:
    explicit NotDivisible(Poly remainder)
        : Error(ErrorCode::not_divisible, "nonzero remainder " + remainder.to_string()),
          remainder_(std::move(remainder)) {}
    const Poly& remainder() const { return remainder_; }

private:
    Poly remainder_;
};

struct DivisionResult {
    Poly quotient;
    Poly remainder;
};

// Multivariate division by a single polynomial in grlex order.
inline DivisionResult divide(const Poly& a, const Poly& b) {
    require_compatible(a.ring(), b.ring());
    if (b.is_zero()) throw Error(ErrorCode::division_by_zero, "polynomial division by zero");
    const FieldSpec& f = *a.field();
    const Monomial lm = b.leading_monomial();
    const QuadNumber lcinv = f.inverse(b.terms().front().c);
    std::vector<Term> quotient, remainder;
    Poly p = a;
    while (!p.is_zero()) {
        const Term& lt = p.terms().front();
        if (lt.m.divisible_by(lm)) {
            Term q{lt.m / lm, {}};
            f.mul(q.c, lt.c, lcinv);
            Poly step = Poly::monomial(a.ring(), q.m, Scalar(a.field(), q.c)) * b;
            quotient.push_back(std::move(q));
            p -= step;
        } else {
            remainder.push_back(lt);
            p -= Poly::monomial(a.ring(), lt.m, Scalar(a.field(), lt.c));
        }
    }
    return {Poly::from_terms(a.ring(), std::move(quotient)), Poly::from_terms(a.ring(), std::move(remainder))};
}

inline Poly remainder(const Poly& a, const Poly& b) { return divide(a, b).remainder; }

// Quotient a/b when b divides a.
inline std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
    if (a.is_zero()) return Poly(a.ring());
    if (b.is_zero()) return std::nullopt;
    if (b.is_constant()) return a.scaled(b.leading_coefficient().inverse());
    // cheap degree filters before the long division
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (b.degree_in(i) > a.degree_in(i) || b.min_degree_in(i) > a.min_degree_in(i)) return std::nullopt;
    auto r = divide(a, b);
    if (!r.remainder.is_zero()) return std::nullopt;
    return r.quotient;
}

inline Poly exact_divide(const Poly& a, const Poly& b) {
    auto r = divide(a, b);
    if (!r.remainder.is_zero()) throw NotDivisible(r.remainder);
    return r.quotient;
}

inline bool divides(const Poly& b, const Poly& a) { return try_divide(a, b).has_value(); }

// Common weighted degree of p, or nothing when the terms disagree.
inline std::optional<long> is_weighted_homogeneous(const Poly& p, const Weights& w) {
    if (p.is_zero()) throw Error(ErrorCode::invalid_argument, "zero polynomial has no weighted degree");
    if (w.size() != p.nvars()) throw Error(ErrorCode::invalid_argument, "weights do not match variables");
    return p.weighted_degree(w);
}

}  // namespace birfol
