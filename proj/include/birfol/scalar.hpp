#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "birfol/error.hpp"

namespace birfol {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Square root of a rational when it is a rational square.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (sgn(q) == 0) return Rational(0);
    const Integer& n = q.get_num();
    const Integer& d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

// Coordinates (a0, a1) of a0 + a1*theta. Arithmetic needs the field.
struct QuadNumber {
    Rational a0, a1;

    bool is_zero() const { return sgn(a0) == 0 && sgn(a1) == 0; }
    bool is_one() const { return a0 == 1 && sgn(a1) == 0; }
    bool operator==(const QuadNumber& o) const { return a0 == o.a0 && a1 == o.a1; }
};

// Q or Q(theta) with theta^2 + p*theta + q = 0.
class FieldSpec {
public:
    FieldSpec() : name_("Q"), generator_(), degree_(1) {}

    FieldSpec(std::string name, std::string generator, Rational p, Rational q)
        : name_(std::move(name)), generator_(std::move(generator)), degree_(2),
          p_(std::move(p)), q_(std::move(q)) {
        if (rational_sqrt(discriminant()))
            throw Error(ErrorCode::invalid_argument,
                        "minimal polynomial of " + generator_ + " is reducible over Q");
    }

    const std::string& name() const { return name_; }
    const std::string& generator() const { return generator_; }
    int degree() const { return degree_; }
    const Rational& p() const { return p_; }
    const Rational& q() const { return q_; }
    Rational discriminant() const { return p_ * p_ - 4 * q_; }

    bool same_as(const FieldSpec& o) const {
        return degree_ == o.degree_ && p_ == o.p_ && q_ == o.q_ && generator_ == o.generator_;
    }

    void add(QuadNumber& r, const QuadNumber& a, const QuadNumber& b) const {
        r.a0 = a.a0 + b.a0;
        if (degree_ == 2) r.a1 = a.a1 + b.a1;
    }
    void sub(QuadNumber& r, const QuadNumber& a, const QuadNumber& b) const {
        r.a0 = a.a0 - b.a0;
        if (degree_ == 2) r.a1 = a.a1 - b.a1;
    }
    void mul(QuadNumber& r, const QuadNumber& a, const QuadNumber& b) const {
        if (degree_ == 1 || (sgn(a.a1) == 0 && sgn(b.a1) == 0)) {
            r.a0 = a.a0 * b.a0;
            r.a1 = 0;
            return;
        }
        if (sgn(a.a1) == 0) {
            r.a1 = a.a0 * b.a1;
            r.a0 = a.a0 * b.a0;
            return;
        }
        if (sgn(b.a1) == 0) {
            r.a1 = a.a1 * b.a0;
            r.a0 = a.a0 * b.a0;
            return;
        }
        Rational t = a.a1 * b.a1;
        Rational c0 = a.a0 * b.a0 - q_ * t;
        Rational c1 = a.a0 * b.a1 + a.a1 * b.a0 - p_ * t;
        r.a0 = std::move(c0);
        r.a1 = std::move(c1);
    }
    // multiply-accumulate r += a*b
    void addmul(QuadNumber& r, const QuadNumber& a, const QuadNumber& b) const {
        if (degree_ == 1 || (sgn(a.a1) == 0 && sgn(b.a1) == 0)) {
            r.a0 += a.a0 * b.a0;
            return;
        }
        QuadNumber t;
        mul(t, a, b);
        r.a0 += t.a0;
        r.a1 += t.a1;
    }
    void neg(QuadNumber& r, const QuadNumber& a) const {
        r.a0 = -a.a0;
        r.a1 = -a.a1;
    }
    Rational norm(const QuadNumber& a) const {
        if (degree_ == 1) return a.a0 * a.a0;
        return a.a0 * a.a0 - p_ * a.a0 * a.a1 + q_ * a.a1 * a.a1;
    }
    // conjugate maps theta to -p - theta
    QuadNumber conjugate(const QuadNumber& a) const {
        if (degree_ == 1) return a;
        return {a.a0 - p_ * a.a1, -a.a1};
    }
    QuadNumber inverse(const QuadNumber& a) const {
        if (a.is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero");
        if (degree_ == 1 || sgn(a.a1) == 0) return {1 / a.a0, 0};
        Rational n = norm(a);
        QuadNumber c = conjugate(a);
        return {c.a0 / n, c.a1 / n};
    }

private:
    std::string name_;
    std::string generator_;
    int degree_;
    Rational p_{0}, q_{0};
};

using Field = std::shared_ptr<const FieldSpec>;

inline Field rational_field() {
    static const Field f = std::make_shared<const FieldSpec>();
    return f;
}

// Field Q(gen) with gen^2 + p*gen + q = 0.
inline Field quadratic_field(std::string name, std::string gen, Rational p, Rational q) {
    return std::make_shared<const FieldSpec>(std::move(name), std::move(gen), std::move(p),
                                             std::move(q));
}

inline bool same_field(const Field& a, const Field& b) {
    return a == b || a->same_as(*b);
}

inline void require_same_field(const Field& a, const Field& b) {
    if (!same_field(a, b))
        throw Error(ErrorCode::field_mismatch, "operands live in " + a->name() + " and " + b->name());
}

// Renders a0 + a1*gen, e.g. "-1 - w", "2*w", "1/2".
inline std::string quad_to_string(const QuadNumber& v, const FieldSpec& f) {
    if (sgn(v.a1) == 0) return v.a0.get_str();
    std::string g;
    Rational m = abs(v.a1);
    g = (m == 1) ? f.generator() : m.get_str() + "*" + f.generator();
    if (sgn(v.a0) == 0) return sgn(v.a1) < 0 ? "-" + g : g;
    return v.a0.get_str() + (sgn(v.a1) < 0 ? " - " : " + ") + g;
}

class Scalar {
public:
    explicit Scalar(Field f = rational_field()) : f_(std::move(f)) {}
    Scalar(Field f, Rational a0, Rational a1 = 0) : f_(std::move(f)), v_{std::move(a0), std::move(a1)} {
        v_.a0.canonicalize();
        v_.a1.canonicalize();
        if (f_->degree() == 1 && sgn(v_.a1) != 0)
            throw Error(ErrorCode::invalid_argument, "irrational coordinate in Q");
    }
    Scalar(Field f, QuadNumber v) : f_(std::move(f)), v_(std::move(v)) {}

    static Scalar generator(const Field& f) {
        if (f->degree() != 2) throw Error(ErrorCode::invalid_argument, "Q has no generator");
        return Scalar(f, 0, 1);
    }

    const Field& field() const { return f_; }
    const Rational& a0() const { return v_.a0; }
    const Rational& a1() const { return v_.a1; }
    const QuadNumber& value() const { return v_; }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_.is_one(); }
    bool is_rational() const { return sgn(v_.a1) == 0; }

    Scalar operator-() const {
        QuadNumber r;
        f_->neg(r, v_);
        return Scalar(f_, std::move(r));
    }
    Scalar& operator+=(const Scalar& o) {
        require_same_field(f_, o.f_);
        f_->add(v_, v_, o.v_);
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        require_same_field(f_, o.f_);
        f_->sub(v_, v_, o.v_);
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        require_same_field(f_, o.f_);
        f_->mul(v_, v_, o.v_);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        require_same_field(f_, o.f_);
        if (o.is_zero()) throw Error(ErrorCode::division_by_zero, "scalar division by zero");
        f_->mul(v_, v_, f_->inverse(o.v_));
        return *this;
    }
    Scalar inverse() const { return Scalar(f_, f_->inverse(v_)); }
    Rational norm() const { return f_->norm(v_); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return same_field(a.f_, b.f_) && a.v_ == b.v_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar r(f_, 1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const { return quad_to_string(v_, *f_); }
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    Field f_;
    QuadNumber v_;
};

// Square root inside the field, with the sign fixed so that the first nonzero
// coordinate is positive.
inline std::optional<Scalar> sqrt_in_field(const Scalar& s) {
    const Field& f = s.field();
    if (s.is_zero()) return s;
    if (f->degree() == 1) {
        auto r = rational_sqrt(s.a0());
        if (!r) return std::nullopt;
        return Scalar(f, *r);
    }
    // Work in the basis 1, sqrt(D): theta = (-p + sqrt(D)) / 2.
    const Rational D = f->discriminant();
    const Rational S0 = s.a0() - s.a1() * f->p() / 2;
    const Rational S1 = s.a1() / 2;
    auto from_basis = [&](const Rational& u, const Rational& v) {
        // u + v*sqrt(D) = u + v*(2*theta + p)
        Scalar r(f, u + v * f->p(), 2 * v);
        if (sgn(r.a0()) < 0 || (sgn(r.a0()) == 0 && sgn(r.a1()) < 0)) r = -r;
        return r;
    };
    if (sgn(S1) == 0) {
        if (auto u = rational_sqrt(S0)) return from_basis(*u, 0);
        if (auto v = rational_sqrt(S0 / D)) return from_basis(0, *v);
        return std::nullopt;
    }
    auto disc = rational_sqrt(S0 * S0 - D * S1 * S1);
    if (!disc) return std::nullopt;
    for (int sign : {1, -1}) {
        Rational v2 = (S0 + sign * *disc) / (2 * D);
        auto v = rational_sqrt(v2);
        if (!v || sgn(*v) == 0) continue;
        Rational u = S1 / (2 * *v);
        return from_basis(u, *v);
    }
    return std::nullopt;
}

}  // namespace birfol
