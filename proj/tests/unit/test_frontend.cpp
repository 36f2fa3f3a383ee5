#include <gtest/gtest.h>

#include "birfol/frontend/report.hpp"
#include "support.hpp"

using namespace birfol;
using namespace birfol::frontend;

namespace {

Location parse_error_at(const std::string& text) {
    try {
        parse_scenario(text);
    } catch (const ParseError& e) {
        return e.where();
    }
    ADD_FAILURE() << "no parse error for:\n" << text;
    return {};
}

std::string parse_error_text(const std::string& text) {
    try {
        parse_scenario(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

const std::string kOmega =
    "form Omega = y*z*(x + y - 2*z)*dx + x*z*(y + z - 2*x)*dy + x*y*(z + x - 2*y)*dz\n";

}  // namespace

TEST(Frontend, PolyDefinitionHasThreeTerms) {
    Scenario sc = parse_scenario("vars x, y, z\npoly B = x^3 - 3*x*y + z\nassert equal(B, B)\n");
    ASSERT_EQ(sc.assertions.size(), 1u);
    const Poly& B = sc.assertions[0].args[0].poly();
    EXPECT_EQ(B.terms().size(), 3u);
    EXPECT_EQ(B.to_string(), "x^3 - 3*x*y + z");
}

TEST(Frontend, GeneratorReducedByMinimalPolynomial) {
    Scenario sc = parse_scenario(
        "field K = Q(w) minpoly w^2 + w + 1\nvars X, Y, Z\npoly p = w^2*Y*Z\nassert equal(p, p)\n");
    const Poly& p = sc.assertions[0].args[0].poly();
    ASSERT_EQ(p.terms().size(), 1u);
    EXPECT_EQ(p, support::P(p.ring(), "(-1 - w)*Y*Z"));
    Report rep = run(parse_scenario(
        "field K = Q(w) minpoly w^2 + w + 1\nvars X, Y, Z\npoly p = w^2*Y*Z\nassert equal(p, (-1 - w)*Y*Z)\n"));
    EXPECT_TRUE(rep.ok());
}

TEST(Frontend, InvariantCurveAssertionParses) {
    Scenario sc = parse_scenario(
        "field K = Q(i) minpoly i^2 + 1\nvars x, y, z\n"
        "form H4 = (2*x*y^2 - 2*x*y*z + x*z^2 - 4*y^3 + y^2*z)*dx + x*(4*y^2 - 3*y*z - 2*x*y + 2*x*z)*dy + "
        "x*(2*y^2 - x*z)*dz\n"
        "poly conic = 2*y^2 - x*z\n"
        "assert invariant_curve(H4, conic)\n");
    ASSERT_EQ(sc.assertions.size(), 1u);
    EXPECT_EQ(sc.assertions[0].op->name, "invariant_curve");
    EXPECT_EQ(sc.assertions[0].at.line, 5);
}

TEST(Frontend, ErrorLocations) {
    Location a = parse_error_at("vars x, y, z\nmap Q = (y*z : x*z  x*y)\n");
    EXPECT_EQ(a.line, 2);
    EXPECT_EQ(a.column, 21);
    Location b = parse_error_at("vars x, y, z\n\npoly p = x + q\n");
    EXPECT_EQ(b.line, 3);
    EXPECT_EQ(b.column, 14);
    EXPECT_NE(parse_error_text("vars x, y, z\n\npoly p = x + q\n").find("unknown identifier 'q'"), std::string::npos);
}

TEST(Frontend, LexicalError) {
    Location a = parse_error_at("vars x, y, z\npoly p = x $ y\n");
    EXPECT_EQ(a.line, 2);
    EXPECT_EQ(a.column, 12);
}

TEST(Frontend, KindMismatchIsParseError) {
    Location a = parse_error_at("vars x, y, z\n" + kOmega + "assert foliation_degree(x + y)\n");
    EXPECT_EQ(a.line, 3);
    parse_error_at("vars x, y, z\npoly p = x\nassert jacobian_det(p)\n");
}

TEST(Frontend, ArityMismatchIsParseError) {
    Location a = parse_error_at("vars x, y, z\n" + kOmega + "assert invariant_curve(Omega)\n");
    EXPECT_EQ(a.line, 3);
}

TEST(Frontend, NonUnimodularMonomialIsParseError) {
    Location a = parse_error_at("vars x, y, z\nmap m = monomial(2, 0, 0, 1)\n");
    EXPECT_EQ(a.line, 2);
    EXPECT_NE(parse_error_text("vars x, y, z\nmap m = monomial(2, 0, 0, 1)\n").find("determinant"), std::string::npos);
}

TEST(Frontend, DuplicateNameIsParseError) {
    Location a = parse_error_at("vars x, y, z\npoly p = x\npoly p = y\n");
    EXPECT_EQ(a.line, 3);
}

TEST(Frontend, StatementsSeparatedBySemicolons) {
    Scenario sc = parse_scenario("vars x, y, z; poly p = x*y; assert equal(p, y*x)\n");
    ASSERT_EQ(sc.assertions.size(), 1u);
    EXPECT_TRUE(run(sc).ok());
}

TEST(Frontend, FailingAssertionDoesNotAbortRun) {
    Report rep = run(parse_scenario("vars x, y, z\n" + kOmega +
                                    "assert invariant_curve(Omega, x - y) is true\n"
                                    "assert invariant_curve(Omega, x*y*z) is true\n"));
    ASSERT_EQ(rep.results.size(), 2u);
    EXPECT_EQ(rep.results[0].status, Status::fail);
    EXPECT_EQ(rep.results[1].status, Status::pass);
    EXPECT_FALSE(rep.ok());
}

TEST(Frontend, WrongSignReportsResidual) {
    Report rep = run(parse_scenario("vars x, y, z\nlet IV = chazy(IV)\n"
                                    "assert verify_ode_symmetry(IV, (2*x*y + z)/y) is true\n"));
    ASSERT_EQ(rep.results.size(), 1u);
    EXPECT_EQ(rep.results[0].status, Status::fail);
    ASSERT_FALSE(rep.results[0].certificates.empty());
    EXPECT_EQ(rep.results[0].certificates[0].first, "residual");
    EXPECT_NE(rep.results[0].certificates[0].second, "0");
}

TEST(Frontend, DomainErrorIsFailureNotError) {
    Report rep = run(parse_scenario("vars x, y, z\nform bad = x*dx + dy\nassert euler_check(bad)\n"));
    ASSERT_EQ(rep.results.size(), 1u);
    EXPECT_EQ(rep.results[0].status, Status::fail);
    Report expected = run(parse_scenario("vars x, y, z\nform bad = x*dx + dy\nassert euler_check(bad) fails inhomogeneous\n"));
    EXPECT_EQ(expected.results[0].status, Status::pass);
}

TEST(Frontend, ReportsAreDeterministic) {
    std::string text = "field K = Q(w) minpoly w^2 + w + 1\nvars x, y, z\n" + kOmega +
                       "map J4 = (y*(y - z)*(z - x)^2 : x*(x - y)*(y - z)^2 : z*(z - x)*(x - y)^2)\n"
                       "assert pullback_form(J4, Omega) ~ Omega\n"
                       "assert analyze(Omega, (1 : 1 : 1)) ratio (-w : 1)\n";
    std::string a = format_text(run(parse_scenario(text, "d")));
    std::string b = format_text(run(parse_scenario(text, "d")));
    EXPECT_EQ(a, b);
    EXPECT_EQ(to_json(run(parse_scenario(text, "d"))).dump(), to_json(run(parse_scenario(text, "d"))).dump());
}

TEST(Frontend, JsonReportShape) {
    Report rep = run(parse_scenario("vars x, y, z\n" + kOmega + "assert foliation_degree(Omega) == 2 origin published\n", "s"));
    auto j = to_json(rep);
    EXPECT_EQ(j["suite"], "s");
    ASSERT_EQ(j["assertions"].size(), 1u);
    EXPECT_EQ(j["assertions"][0]["status"], "pass");
    EXPECT_EQ(j["assertions"][0]["origin"], "published");
    EXPECT_EQ(j["summary"]["pass"], 1);
    EXPECT_FALSE(j["assertions"][0].contains("time_ms"));
}

TEST(Frontend, PolyPrintRoundTrip) {
    Ring r = support::xyz(support::eisenstein());
    for (const char* s : {"x^3 - 3*x*y + z", "w*x^2*y - (1 + w)*z^3 + 1/2", "(x - y)^3*(y - z)^3*(x - z)^3",
                          "-x*y*z + 7/3*w*y^2"}) {
        Poly p = support::P(r, s);
        EXPECT_EQ(support::P(r, p.to_string()), p) << s;
    }
}

TEST(Frontend, SampleBlockExpandsPerValue) {
    Scenario sc = parse_scenario("vars x, y, z\nsample t in (2, 3, 5) degree 1 {\n"
                                 "  form w = t*y*z*dx - x*z*dy + (1 - t)*x*y*dz\n"
                                 "  assert euler_check(w)\n}\n");
    ASSERT_EQ(sc.assertions.size(), 3u);
    EXPECT_NE(sc.assertions[2].text.find("[t = 5]"), std::string::npos);
    EXPECT_TRUE(run(sc).ok());
    parse_error_at("vars x, y, z\nsample t in (2, 3) degree 2 {\n}\n");
}

TEST(Frontend, BindingFromAnotherRingKeepsItsRing) {
    Report rep = run(parse_scenario(
        "field K = Q(w) minpoly w^2 + w + 1\nring A = (X, Y)\n"
        "derivation D3 = {X -> (w - 1)*X, Y -> (w - 1)*(-w)*Y}\n"
        "rational f = -(w + 1)*(w^2*Y + w*X + 1)/(w^2*Y + X + w)\n"
        "ring R = (x, y, z)\npoly B = x^3 - 3*x*y + z\nuse A\n"
        "assert constant(D3, f, B) == 1\n"));
    EXPECT_TRUE(rep.ok());
}
