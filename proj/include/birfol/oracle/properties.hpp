#pragma once

// Randomized property checks shared by the unit tests, the acceptance binary
// and `verify --seed`.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "birfol/birmap.hpp"
#include "birfol/localfol.hpp"
#include "birfol/oracle/macaulay.hpp"
#include "birfol/oracle/prs_gcd.hpp"

namespace birfol::oracle {

struct PropertyResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0 && cases > 0; }
};

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Field field() {
        static const Field fields[] = {rational_field(), quadratic_field("Q(w)", "w", 1, 1),
                                       quadratic_field("Q(i)", "i", 0, 1)};
        return fields[integer(0, 2)];
    }

    Rational rational() { return Rational(integer(-9, 9), integer(1, 5)); }

    Scalar scalar(const Field& K) {
        return K->degree() == 2 ? Scalar(K, rational(), integer(0, 2) ? rational() : Rational(0)) : Scalar(K, rational());
    }

    Scalar nonzero_scalar(const Field& K) {
        for (;;) {
            Scalar s = scalar(K);
            if (!s.is_zero()) return s;
        }
    }

    Monomial monomial(std::size_t nvars, unsigned maxdeg) {
        Monomial m;
        unsigned left = unsigned(integer(0, maxdeg));
        for (std::size_t i = 0; i < nvars && left > 0; ++i) {
            unsigned e = i + 1 == nvars ? left : unsigned(integer(0, left));
            m.e[i] = std::uint16_t(e);
            left -= e;
        }
        return m;
    }

    Poly poly(const Ring& r, int terms, unsigned maxdeg, bool zero_constant = false) {
        Poly p(r);
        for (int k = 0; k < terms; ++k) {
            Monomial m = monomial(r->names.size(), maxdeg);
            if (zero_constant && m.is_one()) continue;
            p += Poly::monomial(r, m, nonzero_scalar(r->field));
        }
        return p;
    }

    Poly nonconstant_poly(const Ring& r, int terms, unsigned maxdeg) {
        for (;;) {
            Poly p = poly(r, terms, maxdeg);
            if (!p.is_constant()) return p;
        }
    }

    Poly linear_form(const Ring& r) {
        Poly p(r);
        for (std::size_t i = 0; i < r->names.size(); ++i)
            p += Poly::variable(r, i) * Poly::constant(r, Rational(integer(-2, 2)));
        return p;
    }

    RationalMap invertible_linear_map(const Ring& r) {
        for (;;) {
            std::vector<Poly> c;
            for (std::size_t i = 0; i < 3; ++i) c.push_back(linear_form(r));
            bool zero = false;
            for (const auto& p : c) zero = zero || p.is_zero();
            if (zero) continue;
            RationalMap m = RationalMap::standard(c, r);
            if (!jacobian_det(m).is_zero()) return m;
        }
    }

private:
    std::mt19937_64 rng_;
};

namespace detail {

inline PropertyResult run_property(const std::string& name, int cases,
                                   const std::function<std::string(Sampler&)>& body, Sampler& s) {
    PropertyResult r{name, 0, 0, ""};
    for (int k = 0; k < cases; ++k) {
        std::string failure;
        try {
            failure = body(s);
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        ++r.cases;
        if (!failure.empty()) {
            ++r.failures;
            if (r.first_failure.empty()) r.first_failure = "case " + std::to_string(k) + ": " + failure;
        }
    }
    return r;
}

}  // namespace detail

inline std::string check_field_axioms(Sampler& s) {
    Field K = s.field();
    Scalar a = s.scalar(K), b = s.scalar(K), c = s.scalar(K);
    if ((a + b) + c != a + (b + c)) return "addition is not associative";
    if ((a * b) * c != a * (b * c)) return "multiplication is not associative";
    if (a + b != b + a || a * b != b * a) return "not commutative";
    if (a * (b + c) != a * b + a * c) return "not distributive";
    if (a - a != Scalar(K)) return "a - a is not zero";
    if (!a.is_zero() && a * a.inverse() != Scalar(K, 1)) return "a * a^-1 is not one for a = " + a.to_string();
    auto r = sqrt_in_field(a * a);
    if (!r || *r * *r != a * a) return "no square root of the square of " + a.to_string();
    return "";
}

inline std::string check_gcd_roundtrip(Sampler& s) {
    Field K = s.integer(0, 3) == 0 ? s.field() : rational_field();
    Ring r = make_ring(K, {"x", "y", "z"});
    Poly a = s.nonconstant_poly(r, 3, 2), b = s.nonconstant_poly(r, 3, 2), c = s.nonconstant_poly(r, 3, 2);
    Poly ac = a * c, bc = b * c;
    if (exact_divide(ac, c) != a) return "exact_divide(a*c, c) != a for c = " + c.to_string();
    Poly g = gcd(ac, bc);
    if (!try_divide(g, c)) return "gcd(a*c, b*c) is not divisible by c = " + c.to_string();
    Poly h = prs_gcd(ac, bc);
    if (!proportionality(std::vector<Poly>{g}, std::vector<Poly>{h}))
        return "gcd " + g.to_string() + " disagrees with the reference " + h.to_string();
    if (!try_divide(ac, g) || !try_divide(bc, g)) return "gcd does not divide its inputs";
    return "";
}

inline std::string check_leibniz(Sampler& s) {
    Field K = s.field();
    Ring r = make_ring(K, {"x", "y", "z"});
    std::vector<RationalFn> images;
    for (int i = 0; i < 3; ++i) images.emplace_back(s.poly(r, 3, 2));
    Derivation D(r, images);
    Poly p = s.poly(r, 3, 3), q = s.nonconstant_poly(r, 3, 2);
    if (D.apply(p * q) != RationalFn(p) * D.apply(q) + RationalFn(q) * D.apply(p)) return "D(pq) != p D(q) + q D(p)";
    RationalFn u = RationalFn(p) / RationalFn(q);
    RationalFn expected = (D.apply(p) * RationalFn(q) - RationalFn(p) * D.apply(q)) / RationalFn(q * q);
    if (D.apply(u) != expected) return "quotient rule fails";
    return "";
}

inline std::string check_pullback_functoriality(Sampler& s) {
    Ring r = make_ring(rational_field(), {"x", "y", "z"});
    Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1), z = Poly::variable(r, 2);
    auto pick = [&] {
        if (s.integer(0, 2) == 0) return RationalMap::standard({y * z, z * x, x * y}, r);
        return s.invertible_linear_map(r);
    };
    VectorField E{{x, y, z}};
    VectorField W{{s.linear_form(r), s.linear_form(r), s.linear_form(r)}};
    OneForm w = [&] {
        for (;;) {
            try {
                return form_from_vfield(W, E).value;
            } catch (const Error&) {
                W = VectorField{{s.linear_form(r), s.linear_form(r), s.linear_form(r)}};
            }
        }
    }();
    RationalMap f = pick(), g = pick();
    OneForm direct = pullback_form(compose(f, g), w).form;
    OneForm stepwise = pullback_form(g, pullback_form(f, w).form).form;
    if (!proportionality(direct, stepwise)) return "(f o g)^* w is not proportional to g^* f^* w for w = " + w.to_string();
    return "";
}

inline std::string check_fulton_vs_truncation(Sampler& s) {
    Field K = s.integer(0, 3) == 0 ? s.field() : rational_field();
    Ring r = make_ring(K, {"u", "v"});
    Poly F = s.poly(r, 4, 4, true), G = s.poly(r, 4, 4, true);
    if (F.is_zero() || G.is_zero()) return "";
    auto mu = milnor_fulton(F, G);
    Poly g = gcd(F, G);
    bool common_branch = !g.is_constant() && g.constant_term().is_zero();
    if (common_branch) return mu ? "finite multiplicity for a common branch" : "";
    if (!mu) return "infinite multiplicity without a common branch";
    auto ref = milnor_truncated(F, G);
    if (ref != mu)
        return "Fulton gives " + std::to_string(*mu) + ", truncation gives " +
               (ref ? std::to_string(*ref) : std::string("no answer")) + " for F = " + F.to_string() +
               ", G = " + G.to_string();
    return "";
}

inline std::vector<PropertyResult> run_properties(std::uint64_t seed, int cases = 1000) {
    Sampler s(seed);
    return {
        detail::run_property("field axioms", cases, check_field_axioms, s),
        detail::run_property("gcd and division round trips", cases, check_gcd_roundtrip, s),
        detail::run_property("Leibniz rule", cases, check_leibniz, s),
        detail::run_property("pullback functoriality", cases, check_pullback_functoriality, s),
        detail::run_property("Fulton against truncated quotient", cases, check_fulton_vs_truncation, s),
    };
}

}  // namespace birfol::oracle
