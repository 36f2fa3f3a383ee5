#include <gtest/gtest.h>

#include "birfol/chazy.hpp"
#include "support.hpp"

using namespace birfol;
using namespace support;

namespace {

RationalFn R(const Ring& r, const std::string& s) { return parse_rational(s, r); }

const char* kFlop = "(2*x*y - z)/y";
const char* kTri = "(x^2 - y)/x";
const char* kOthers[] = {"(x^3 - 3*x*y + z)/(x^2 - y)", "-y*(x^3 - 3*x*y + z)/(x^2*y + y^2 - x*z)",
                         "(x^2*y - x*z + y^2)/(2*x*y - z)"};

}  // namespace

TEST(Chazy, DerivationBasics) {
    Ring r = xyz();
    ChazyEquation iv = chazy(r, ChazyKind::IV);
    EXPECT_EQ(iv.W.apply(P(r, "x")), R(r, "y"));
    EXPECT_TRUE(verify_first_integral(iv.W, P(r, "x^3 - 3*x*y + z")));
    EXPECT_FALSE(verify_first_integral(iv.W, P(r, "x")));
}

TEST(Chazy, SymmetriesOfFourthEquation) {
    Ring r = xyz();
    ChazyEquation iv = chazy(r, ChazyKind::IV);
    EXPECT_TRUE(verify_ode_symmetry(iv, R(r, kFlop)).ok);
    EXPECT_TRUE(verify_ode_symmetry(iv, R(r, kTri)).ok);
    for (auto s : kOthers) EXPECT_TRUE(verify_ode_symmetry(iv, R(r, s)).ok) << s;
    Verification bad = verify_ode_symmetry(iv, R(r, "2*x"));
    EXPECT_FALSE(bad.ok);
    EXPECT_FALSE(bad.residual.is_zero());
}

TEST(Chazy, GroupRelations) {
    Ring r = xyz();
    ChazyEquation iv = chazy(r, ChazyKind::IV);
    std::vector<RationalFn> others;
    for (auto s : kOthers) others.push_back(R(r, s));
    GroupReport g = group_relations(iv.W, R(r, kFlop), R(r, kTri), others);
    EXPECT_TRUE(g.flop_involution);
    EXPECT_TRUE(g.tri_order_three);
    EXPECT_TRUE(g.conjugation);
    EXPECT_TRUE(g.holds());
}

TEST(Chazy, FifthEquationInvolution) {
    Ring r = xyz();
    ChazyEquation v = chazy(r, ChazyKind::V);
    RationalFn u = R(r, "(x^3 - 3*x*y + z)/(x^2 - y)");
    EXPECT_TRUE(verify_ode_symmetry(v, u).ok);
    EXPECT_EQ(affine_order(lift(v.W, u), 4), 2);
}

TEST(Chazy, TransportToSixth) {
    Ring r = xyz();
    ChazyEquation iv = chazy(r, ChazyKind::IV), vi = chazy(r, ChazyKind::VI);
    RationalFn t = R(r, "(x*z - 2*y^2)/(z - x*y)");
    EXPECT_TRUE(verify_transport(iv, t, vi).ok);
    EXPECT_TRUE(verify_transport(iv, R(r, "x"), iv).ok);
    EXPECT_FALSE(verify_transport(iv, R(r, "x"), vi).ok);
    // the flop does not change the transported solution
    EXPECT_EQ(lift(iv.W, R(r, kFlop)).apply(t), t);
}

TEST(Chazy, InvariantSurfaces) {
    Ring r = xyz();
    auto iv = chazy(r, ChazyKind::IV), v = chazy(r, ChazyKind::V), vi = chazy(r, ChazyKind::VI);
    EXPECT_EQ(verify_invariant_surface(iv.W, P(r, "3*y^2*x^2 - y^3 - 3*x*y*z + z^2")), P(r, "3*x"));
    EXPECT_EQ(verify_invariant_surface(v.W, P(r, "2*y^2*x^2 - 2*x*y*z + z^2 - 2*y^3")), P(r, "2*x"));
    EXPECT_EQ(verify_invariant_surface(vi.W, P(r, "y^2*x^2 - x*y*z + z^2 - 3*y^3")), P(r, "x"));
    EXPECT_FALSE(verify_invariant_surface(iv.W, P(r, "x")).has_value());
}

TEST(Chazy, FirstIntegrals) {
    Ring r = xyz();
    EXPECT_TRUE(verify_first_integral(chazy(r, ChazyKind::V).W, P(r, "x^4 - 4*x^2*y + 2*z*x - y^2")));
    EXPECT_TRUE(verify_first_integral(chazy(r, ChazyKind::VI).W,
                                      P(r, "x^6 - 6*x^4*y + 6*z*x^3 - 15*x^2*y^2 + 6*x*y*z + 8*y^3 - 3*z^2")));
}

TEST(Chazy, SolutionMaps) {
    Field K = eisenstein();
    Ring xy = make_ring(K, {"X", "Y"});
    Ring r = xyz(K);
    Derivation d3(xy, {R(xy, "(w - 1)*X"), R(xy, "(w - 1)*(-w)*Y")});
    RationalFn f = R(xy, "-(w + 1)*(w^2*Y + w*X + 1)/(w^2*Y + X + w)");
    EXPECT_TRUE(verify_solution_map(d3, f, chazy(r, ChazyKind::IV)).ok);
    EXPECT_TRUE(verify_solution_map(d3, RationalFn(xy), chazy(r, ChazyKind::IV)).ok);
    RationalFn level = first_integral_level(d3, f, P(r, "x^3 - 3*x*y + z"));
    EXPECT_TRUE(level.is_constant());
    EXPECT_EQ(level.constant_value(), Scalar(K, 1));

    Field G = gaussian();
    Ring xg = make_ring(G, {"X", "Y"});
    Derivation d4(xg, {R(xg, "(i - 1)*i*X"), R(xg, "(i - 1)*Y")});
    RationalFn f4 = R(xg, "(X - 1)*(Y - 1)/(X*Y + i*X - i*Y - 1)");
    EXPECT_TRUE(verify_solution_map(d4, f4, chazy(xyz(G), ChazyKind::V)).ok);
}

TEST(Chazy, Homothety) {
    Ring r = xyz();
    Weights w{{1, 2, 3}};
    EXPECT_EQ(homothety_degree(chazy(r, ChazyKind::IV).P, w), 4);
    EXPECT_EQ(homothety_degree(P(r, "x^3 - 3*x*y + z"), w), 3);
    EXPECT_EQ(homothety_degree(P(r, "x^6 - 6*x^4*y + 6*z*x^3 - 15*x^2*y^2 + 6*x*y*z + 8*y^3 - 3*z^2"), w), 6);
    EXPECT_EQ(homothety_degree(P(r, "x + y"), w), std::nullopt);
}

TEST(Chazy, AffineInvolutionsOfTheTorus) {
    Ring r = make_ring(rational_field(), {"X", "Y"});
    AffineMap J(r, {R(r, "-X"), R(r, "-Y")});
    AffineMap T4(r, {R(r, "Y"), R(r, "1/X")});
    EXPECT_EQ(compose(J, T4), compose(T4, J));
    EXPECT_EQ(affine_order(T4, 8), 4);
    EXPECT_EQ(affine_order(J, 8), 2);
}
