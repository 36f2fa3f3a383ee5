#include <gtest/gtest.h>

#include "birfol/oracle/macaulay.hpp"
#include "support.hpp"

using namespace birfol;
using namespace support;

namespace {

Ring uv(Field f = rational_field()) { return make_ring(std::move(f), {"u", "v"}); }

LocalFoliation local(const Ring& r, const std::string& a, const std::string& b) { return {P(r, a), P(r, b)}; }

OneForm h3(const Ring& r) {
    return form(r, {"3*x*y^2-3*x*y*z+x*z^2-3*y^3+y^2*z", "x*(3*y^2-3*y*z-3*x*y+3*x*z)", "x*(2*y^2-x*z)"});
}

OneForm h4(const Ring& r) {
    return form(r, {"2*x*y^2-2*x*y*z+x*z^2-4*y^3+y^2*z", "x*(4*y^2-3*y*z-2*x*y+2*x*z)", "x*(2*y^2-x*z)"});
}

OneForm jprime(const Ring& r) {
    return form(r, {"y*z*(2*x*y-y*z+z^2+y^2-x*z)", "-x*z*(z+y)*(x+z)", "-x*y*(y-2*z)*(x+y)"});
}

}  // namespace

TEST(Localfol, RegularPoint) {
    Ring r = xyz();
    SingularityReport s = analyze(localize(omega(r), point(r->field, {"1", "2", "3"})));
    EXPECT_FALSE(s.singular);
    EXPECT_EQ(s.classification, Classification::regular);
    EXPECT_EQ(s.milnor, 0);
}

TEST(Localfol, RadialPoint) {
    Ring r = uv();
    SingularityReport s = analyze(local(r, "v", "-u"));
    EXPECT_EQ(s.classification, Classification::radial);
    EXPECT_EQ(s.nu, 1);
    EXPECT_TRUE(s.dicritical);
    EXPECT_EQ(s.l, 2);
    EXPECT_EQ(s.milnor, 1);
    EXPECT_FALSE(blow_up(local(r, "v", "-u")).exceptional_invariant);
}

TEST(Localfol, SaddleAfterBlowUp) {
    Ring r = uv();
    for (int n = 2; n <= 5; ++n) {
        BlowUp b = blow_up(local(r, std::to_string(n) + "*v", "-u"));
        EXPECT_TRUE(b.exceptional_invariant);
        ASSERT_EQ(b.points.size(), 2u);
        Field K = r->field;
        EXPECT_TRUE(b.points[0].report.ratio.matches(Scalar(K, n - 1), Scalar(K, 1)));
        EXPECT_TRUE(b.points[1].report.ratio.matches(Scalar(K, n), Scalar(K, 1 - n)));
        EXPECT_TRUE(milnor_balance(local(r, std::to_string(n) + "*v", "-u")).balanced());
    }
}

TEST(Localfol, SaddleOnInvariantLine) {
    Ring r = xyz();
    SingularityReport s = analyze(localize(h4(r), point(r->field, {"0", "1", "4"})));
    EXPECT_EQ(s.classification, Classification::nondegenerate);
    EXPECT_TRUE(s.ratio.matches(Scalar(r->field, -1), Scalar(r->field, 2)));
    EXPECT_EQ(s.ratio.to_string(), "-1:2");
}

TEST(Localfol, NilpotentCorner) {
    Ring r = xyz();
    SingularityReport s = analyze(localize(h3(r), point(r->field, {"0", "0", "1"})));
    EXPECT_EQ(s.classification, Classification::nilpotent);
    EXPECT_EQ(s.nu, 1);
    EXPECT_EQ(s.milnor, 3);
    EXPECT_EQ(s.ratio.kind, EigenRatio::Kind::undefined);
}

TEST(Localfol, EisensteinEigenvalues) {
    Ring q = xyz();
    SingularityReport overq = analyze(localize(omega(q), point(q->field, {"1", "1", "1"})));
    EXPECT_EQ(overq.ratio.kind, EigenRatio::Kind::minpoly);
    EXPECT_EQ(overq.ratio.to_string(), "root of r^2 - r + 1");

    Ring r = xyz(eisenstein());
    SingularityReport s = analyze(localize(omega(r), point(r->field, {"1", "1", "1"})));
    Scalar w = Scalar::generator(r->field);
    EXPECT_EQ(s.ratio.kind, EigenRatio::Kind::pair);
    EXPECT_TRUE(s.ratio.matches(-w, Scalar(r->field, 1)));
    EXPECT_FALSE(s.ratio.matches(w, Scalar(r->field, 1)));
}

TEST(Localfol, FultonExamples) {
    Ring r = uv();
    EXPECT_EQ(milnor_fulton(P(r, "u"), P(r, "v")), 1);
    EXPECT_EQ(milnor_fulton(P(r, "v - u^2"), P(r, "v")), 2);
    EXPECT_EQ(milnor_fulton(P(r, "u + 1"), P(r, "v")), 0);
    EXPECT_EQ(milnor_fulton(P(r, "u*v"), P(r, "u*(v - u)")), std::nullopt);
    EXPECT_EQ(milnor_fulton(P(r, "(u - 1)*v"), P(r, "(u - 1)*(v - u^3)")), 3);
    EXPECT_EQ(milnor_fulton(P(r, "v^2 - u^3"), P(r, "v^2 - u^3 + u^5")), 10);
}

TEST(Localfol, FultonAgreesWithTruncation) {
    Ring r = uv();
    const char* pairs[][2] = {
        {"v - u^2", "v"},       {"v^2 - u^3", "u^2 - v^3"}, {"u^3 + v^4", "u*v"},
        {"v^2 - u^3", "v^2 - u^3 + u^5"}, {"u^2 + v^2", "u*v + v^3"}, {"u - v^2 + u*v", "v^3 - u^2"},
    };
    for (auto& p : pairs) {
        Poly a = P(r, p[0]), b = P(r, p[1]);
        EXPECT_EQ(milnor_fulton(a, b), oracle::milnor_truncated(a, b)) << p[0] << ", " << p[1];
    }
}

TEST(Localfol, DarbouxBudgets) {
    Ring r = xyz();
    DarbouxReport a = darboux_check(h3(r), {point(r->field, {"1", "0", "0"}), point(r->field, {"1", "1", "2"}),
                                           point(r->field, {"2", "1", "1"}), point(r->field, {"0", "1", "3"}),
                                           point(r->field, {"0", "0", "1"})});
    EXPECT_EQ(a.sum, 7);
    EXPECT_TRUE(a.complete());
    EXPECT_THROW(darboux_check(h3(r), {point(r->field, {"1", "2", "3"})}), Error);
}

TEST(Localfol, FirstCremonaStep) {
    Field K = eisenstein();
    Ring r = xyz(K);
    std::vector<ProjectivePoint> pts;
    for (auto p : std::vector<std::vector<std::string>>{{"-1", "2", "1"}, {"-1", "1", "1"}, {"-1", "1", "0"},
                                                       {"1", "-1", "1"}, {"-1", "0", "1"}, {"1", "0", "0"},
                                                       {"0", "1", "0"}, {"0", "1", "-w"}, {"0", "1", "-w^2"},
                                                       {"0", "0", "1"}})
        pts.push_back(point(K, p));
    DarbouxReport d = darboux_check(jprime(r), pts);
    EXPECT_EQ(d.degree, 3);
    EXPECT_EQ(d.sum, 13);
    EXPECT_EQ(d.reports[5].milnor, 4);
    EXPECT_EQ(d.reports[5].l, 2);

    LocalFoliation q = localize(jprime(r), point(K, {"1", "0", "0"}));
    BlowUp b = blow_up(q);
    EXPECT_TRUE(b.resolved());
    EXPECT_EQ(b.points.size(), 3u);
    for (const auto& p : b.points) EXPECT_EQ(p.report.milnor, 1);
    MilnorBalance m = milnor_balance(q);
    EXPECT_EQ(m.mu, 4);
    EXPECT_EQ(m.predicted, 4);

    CremonaStep step = cremona_step(pullback_form(map(r, {"x", "x+y", "x+z"}), omega(r)).form);
    EXPECT_TRUE(step.matches());
    EXPECT_EQ(step.predicted.to_string(), "degree 3, l = (2, 2, 2)");
    EXPECT_TRUE(proportionality(step.transformed, jprime(r)).has_value());
}

TEST(Localfol, CremonaPredictions) {
    EXPECT_EQ(cremona_predict(2, 1, 1, 1).to_string(), "degree 3, l = (2, 2, 2)");
    EXPECT_EQ(cremona_predict(1, 1, 1, 1).to_string(), "degree 1, l = (1, 1, 1)");
    EXPECT_EQ(cremona_predict(0, 0, 0, 0).to_string(), "degree 2, l = (2, 2, 2)");
}

TEST(Localfol, RootSearch) {
    Ring r = make_ring(eisenstein(), {"u", "t"});
    auto res = roots_in_field(P(r, "(t - 1/2)*(t^2 + t + 1)*(t^3 - 2)"), 1);
    EXPECT_EQ(res.roots.size(), 1u);
    ASSERT_EQ(res.unresolved_degrees.size(), 1u);
    EXPECT_EQ(res.unresolved_degrees[0], 5);
    auto res2 = roots_in_field(P(r, "(t - 1/2)^2*(t^2 + t + 1)"), 1);
    EXPECT_EQ(res2.roots.size(), 3u);
    EXPECT_TRUE(res2.unresolved_degrees.empty());
}
