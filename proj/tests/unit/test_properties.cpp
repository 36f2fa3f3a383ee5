#include <gtest/gtest.h>

#include "birfol/oracle/properties.hpp"
#include "support.hpp"

using namespace birfol;
using namespace birfol::oracle;

namespace {

void expect_property(const std::function<std::string(Sampler&)>& body, std::uint64_t seed, int cases) {
    Sampler s(seed);
    for (int k = 0; k < cases; ++k) {
        std::string failure = body(s);
        ASSERT_TRUE(failure.empty()) << "seed " << seed << ", case " << k << ": " << failure;
    }
}

}  // namespace

TEST(Properties, FieldAxioms) { expect_property(check_field_axioms, 11, 300); }

TEST(Properties, GcdRoundTrip) { expect_property(check_gcd_roundtrip, 12, 200); }

TEST(Properties, LeibnizRule) { expect_property(check_leibniz, 13, 200); }

TEST(Properties, PullbackFunctoriality) { expect_property(check_pullback_functoriality, 14, 100); }

TEST(Properties, FultonAgreesWithTruncatedQuotient) { expect_property(check_fulton_vs_truncation, 15, 300); }

TEST(Properties, RunnerCountsCases) {
    auto results = run_properties(3, 20);
    ASSERT_EQ(results.size(), 5u);
    for (const auto& r : results) {
        EXPECT_EQ(r.cases, 20) << r.name;
        EXPECT_TRUE(r.ok()) << r.name << ": " << r.first_failure;
    }
}

TEST(Properties, SameSeedSameSamples) {
    Sampler a(42), b(42);
    Ring r = support::xyz(support::eisenstein());
    for (int k = 0; k < 20; ++k) EXPECT_EQ(a.poly(r, 4, 3), b.poly(r, 4, 3));
}

TEST(Properties, OracleGcdMatchesOnKnownFactor) {
    Ring r = support::xyz();
    Poly c = support::P(r, "x^2 - y*z + 3");
    Poly a = support::P(r, "x - 2*y") * c, b = support::P(r, "y^2 + z") * c;
    EXPECT_TRUE(proportionality(std::vector<Poly>{prs_gcd(a, b)}, std::vector<Poly>{c}).has_value());
}

TEST(Properties, TruncatedQuotientOnKnownPairs) {
    Ring r = make_ring(rational_field(), {"u", "v"});
    EXPECT_EQ(milnor_truncated(support::P(r, "u"), support::P(r, "v")), 1);
    EXPECT_EQ(milnor_truncated(support::P(r, "v - u^2"), support::P(r, "v")), 2);
    EXPECT_EQ(milnor_truncated(support::P(r, "u^2"), support::P(r, "v^3")), 6);
}

TEST(Properties, FultonSymmetricAndInvariantUnderLinearChange) {
    Sampler s(16);
    Ring r = make_ring(rational_field(), {"u", "v"});
    Poly u = Poly::variable(r, 0), v = Poly::variable(r, 1);
    const long changes[][4] = {{0, 1, 1, 0}, {1, 1, 0, 1}, {2, 1, 1, 1}, {1, 0, -3, 1}};
    for (int k = 0; k < 200; ++k) {
        Poly a = s.poly(r, 4, 4, true), b = s.poly(r, 4, 4, true);
        if (a.is_zero() || b.is_zero()) continue;
        auto mu = milnor_fulton(a, b);
        EXPECT_EQ(milnor_fulton(b, a), mu) << a.to_string() << ", " << b.to_string();
        for (const auto& m : changes) {
            auto lin = [&](long p, long q) {
                return u * Poly::constant(r, Rational(p)) + v * Poly::constant(r, Rational(q));
            };
            std::vector<Poly> sub = {lin(m[0], m[1]), lin(m[2], m[3])};
            Poly a2 = a.substitute(sub), b2 = b.substitute(sub);
            EXPECT_EQ(milnor_fulton(a2, b2), mu) << a.to_string() << ", " << b.to_string();
            if (mu) {
                EXPECT_EQ(milnor_truncated(a2, b2), mu);
            }
        }
    }
}
