#pragma once

#include <string>
#include <vector>

#include "birfol/gcd.hpp"
#include "birfol/poly.hpp"

namespace birfol {

// num/den with gcd(num, den) = 1 and den monic in grlex.
class RationalFn {
public:
    explicit RationalFn(const Ring& r) : num_(r), den_(Poly::constant(r, Rational(1))) {}
    RationalFn(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.ring(), Rational(1))) {}
    RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        require_compatible(num_.ring(), den_.ring());
        den_ = den_.with_ring(num_.ring());
        if (den_.is_zero()) throw Error(ErrorCode::division_by_zero, "denominator is identically zero");
        reduce();
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const Ring& ring() const { return num_.ring(); }
    const Field& field() const { return num_.field(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Scalar constant_value() const { return num_.constant_term() / den_.constant_term(); }
    const Poly& as_poly() const {
        if (!is_polynomial()) throw Error(ErrorCode::invalid_argument, "expected a polynomial, got " + to_string());
        return num_;
    }

    RationalFn operator-() const { return raw(-num_, den_); }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ + b.num_, a.den_);
        if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
        return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ * b.num_, a.den_);
        // cross-cancel first to keep the operands small
        Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        Poly n = exact_divide(a.num_, g1) * exact_divide(b.num_, g2);
        Poly d = exact_divide(a.den_, g2) * exact_divide(b.den_, g1);
        return normalized(std::move(n), std::move(d));
    }
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.inverse(); }

    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
    RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }

    RationalFn inverse() const {
        if (num_.is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of the zero function");
        return normalized(den_, num_);
    }
    RationalFn scaled(const Scalar& s) const { return raw(num_.scaled(s), den_); }

    RationalFn pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        return raw(num_.pow(unsigned(e)), den_.pow(unsigned(e)));
    }

    friend bool operator==(const RationalFn& a, const RationalFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    RationalFn derivative(std::size_t i) const {
        if (den_.is_one()) return raw(num_.derivative(i), den_);
        return RationalFn(num_.derivative(i) * den_ - num_ * den_.derivative(i), den_ * den_);
    }

    RationalFn with_ring(const Ring& r) const { return raw(num_.with_ring(r), den_.with_ring(r)); }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        auto wrap = [](const Poly& p) {
            std::string s = p.to_string();
            return p.size() > 1 || s.find_first_of(" */") != std::string::npos ? "(" + s + ")" : s;
        };
        return wrap(num_) + "/" + wrap(den_);
    }

    // Already reduced parts, only the scalar normalization is applied.
    static RationalFn normalized(Poly n, Poly d) {
        RationalFn r(n.ring());
        if (d.is_zero()) throw Error(ErrorCode::division_by_zero, "denominator is identically zero");
        Scalar lc = d.leading_coefficient();
        r.num_ = n.scaled(lc.inverse());
        r.den_ = d.monic();
        if (r.num_.is_zero()) r.den_ = Poly::constant(n.ring(), Rational(1));
        return r;
    }

private:
    static RationalFn raw(Poly n, Poly d) {
        RationalFn r(n.ring());
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly::constant(num_.ring(), Rational(1));
            return;
        }
        if (!den_.is_constant()) {
            Poly g = gcd(num_, den_);
            if (!g.is_one()) {
                num_ = exact_divide(num_, g);
                den_ = exact_divide(den_, g);
            }
        }
        Scalar lc = den_.leading_coefficient();
        if (!lc.is_one()) {
            num_ = num_.scaled(lc.inverse());
            den_ = den_.monic();
        }
    }

    Poly num_, den_;
};

inline std::ostream& operator<<(std::ostream& os, const RationalFn& r) { return os << r.to_string(); }

// p(images) with a single common denominator, reduced once at the end.
inline RationalFn substitute(const Poly& p, const std::vector<RationalFn>& images) {
    if (images.size() != p.nvars())
        throw Error(ErrorCode::invalid_argument, "substitution must cover every variable");
    const Ring& target = images.at(0).ring();
    if (p.is_zero()) return RationalFn(target);
    bool polynomial = true;
    for (const auto& im : images) polynomial = polynomial && im.den().is_one();
    if (polynomial) {
        std::vector<Poly> nums;
        for (const auto& im : images) nums.push_back(im.num().with_ring(target));
        return RationalFn(p.substitute(nums));
    }
    // x_i -> n_i/d_i: multiply each term by prod d_i^(E_i - e_i), E_i = deg_i p
    const std::size_t n = p.nvars();
    std::vector<std::vector<Poly>> npow(n), dpow(n);
    Poly den = Poly::constant(target, Rational(1));
    for (std::size_t i = 0; i < n; ++i) {
        int d = p.degree_in(i);
        npow[i].push_back(Poly::constant(target, Rational(1)));
        dpow[i].push_back(Poly::constant(target, Rational(1)));
        for (int k = 1; k <= d; ++k) {
            npow[i].push_back(npow[i].back() * images[i].num().with_ring(target));
            dpow[i].push_back(dpow[i].back() * images[i].den().with_ring(target));
        }
        den *= dpow[i][d];
    }
    PolyAccumulator acc(target);
    for (const auto& t : p.terms()) {
        Poly prod = Poly::constant(target, Rational(1));
        for (std::size_t i = 0; i < n; ++i) {
            int d = p.degree_in(i);
            if (t.m.e[i]) prod *= npow[i][t.m.e[i]];
            if (d - t.m.e[i] > 0) prod *= dpow[i][d - t.m.e[i]];
        }
        acc.add(prod, t.c);
    }
    return RationalFn(acc.take(), den);
}

inline RationalFn substitute(const RationalFn& r, const std::vector<RationalFn>& images) {
    RationalFn n = substitute(r.num(), images);
    if (r.den().is_one()) return n;
    RationalFn d = substitute(r.den(), images);
    if (d.is_zero()) throw Error(ErrorCode::division_by_zero, "substituted denominator vanishes identically");
    return n / d;
}

}  // namespace birfol
