// One pass/fail line per acceptance criterion. Exit status 1 if any fails.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "birfol/birmap.hpp"
#include "birfol/chazy.hpp"
#include "birfol/expr.hpp"
#include "birfol/localfol.hpp"
#include "birfol/frontend/report.hpp"
#include "birfol/oracle/properties.hpp"

namespace {

using namespace birfol;
using namespace birfol::frontend;

struct Outcome {
    bool ok = true;
    std::vector<std::string> why;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            why.push_back(what);
        }
    }
};

// Runs a scenario; every assertion must pass.
void scenario(Outcome& o, const std::string& text) {
    Report rep;
    try {
        rep = run(parse_scenario(text, "acceptance"));
    } catch (const ParseError& e) {
        o.require(false, "scenario does not parse at " + e.where().to_string() + ": " + e.what());
        return;
    }
    for (const auto& r : rep.results) {
        if (r.status == Status::pass) continue;
        std::string d = r.text;
        if (!r.details.empty()) d += " (" + r.details.front() + ")";
        o.require(false, d);
    }
}

Ring plane(const Field& K) { return make_ring(K, {"x", "y", "z"}); }
Field eisenstein() { return quadratic_field("Q(w)", "w", 1, 1); }

Poly P(const Ring& r, const std::string& s) { return parse_poly(s, r); }

OneForm form(const Ring& r, const std::string& a, const std::string& b, const std::string& c) {
    return OneForm({P(r, a), P(r, b), P(r, c)});
}

RationalMap map3(const Ring& r, const std::string& a, const std::string& b, const std::string& c) {
    return RationalMap::standard({P(r, a), P(r, b), P(r, c)});
}

ProjectivePoint point(const Ring& r, std::initializer_list<const char*> c) {
    ProjectivePoint p;
    for (const char* s : c) p.x.push_back(P(r, s).constant_term());
    return p;
}

const char* kOmega[] = {"y*z*(x + y - 2*z)", "x*z*(y + z - 2*x)", "x*y*(z + x - 2*y)"};
const char* kCubic = "x*y^2 + y*z^2 + x^2*z - 3*x*y*z";

OneForm omega(const Ring& r) { return form(r, kOmega[0], kOmega[1], kOmega[2]); }

RationalMap j4(const Ring& r) {
    return map3(r, "y*(y - z)*(z - x)^2", "x*(x - y)*(y - z)^2", "z*(z - x)*(x - y)^2");
}

Outcome flop_certificate() {
    Outcome o;
    Ring r = plane(rational_field());
    Pullback pb = pullback_form(j4(r), omega(r));
    o.require(pb.form == omega(r), "J4 pulls Omega back to " + pb.form.to_string());
    Poly expected = P(r, std::string("(x - y)^3*(y - z)^3*(x - z)^3*(") + kCubic + ")");
    o.require(pb.factor == expected, "factor is " + pb.factor.to_string());
    o.require(order_up_to_scale(j4(r), 4) == 2, "J4 is not an involution up to scale");
    return o;
}

Outcome factorization_replay() {
    Outcome o;
    Ring r = plane(eisenstein());
    RationalMap Q = map3(r, "y*z", "x*z", "x*y");
    RationalMap L1 = map3(r, "x", "x + y", "x + z");
    RationalMap L2 = map3(r, "x - y + z", "y - z", "-z");
    RationalMap L3 = map3(r, "x + z", "z + y", "y");
    RationalMap L4 = map3(r, "x", "x - z", "y - x");
    RationalMap composite =
        compose_all({linear_inverse(L4), Q, linear_inverse(L3), Q, linear_inverse(L2), Q, linear_inverse(L1)});
    o.require(equal_up_to_scale(composite, j4(r)), "the seven maps compose to " + composite.to_string());

    OneForm w1 = pullback_form(compose(L1, Q), omega(r)).form;
    OneForm w2 = pullback_form(compose(L2, Q), w1).form;
    OneForm w3 = pullback_form(compose(L3, Q), w2).form;
    OneForm expected1 = form(r, "y*z*(2*x*y - y*z + z^2 + y^2 - x*z)", "-x*z*(z + y)*(x + z)", "-x*y*(y - 2*z)*(x + y)");
    OneForm expected2 = form(r, "z*(z - y)*(2*y*z - y^2 - x*z + 2*x*y)", "x*z*(2*y*z - z^2 - 2*x*z + x*y)",
                            "x*(y^2 - y*z + z^2)*(x - y)");
    o.require(proportionality(w1, expected1).has_value(), "first strict transform differs from the expected form");
    o.require(proportionality(w2, expected2).has_value(), "second strict transform differs from the expected form");
    o.require(proportionality(pullback_form(L4, w3).form, omega(r)).has_value(), "L4 does not carry the last form to Omega");
    o.require(foliation_degree(w1) == 3 && foliation_degree(w2) == 3 && foliation_degree(w3) == 2,
              "degrees are " + std::to_string(foliation_degree(w1)) + ", " + std::to_string(foliation_degree(w2)) +
                  ", " + std::to_string(foliation_degree(w3)));

    auto sum = [&](const OneForm& w, std::initializer_list<std::initializer_list<const char*>> pts) {
        std::vector<ProjectivePoint> ps;
        for (auto p : pts) ps.push_back(point(r, p));
        return darboux_check(w, ps).sum;
    };
    long s1 = sum(w1, {{"0", "0", "1"}, {"0", "1", "0"}, {"-1", "1", "0"}, {"0", "1", "-w"}, {"0", "1", "-w^2"},
                       {"-1", "0", "1"}, {"1", "-1", "1"}, {"-1", "2", "1"}, {"-1", "1", "1"}, {"1", "0", "0"}});
    long s2 = sum(w2, {{"0", "0", "1"}, {"0", "1", "0"}, {"0", "1", "1"}, {"0", "2", "1"}, {"1", "-w", "w^2"},
                       {"1", "-w^2", "w"}, {"1", "0", "0"}, {"1", "1", "-1"}, {"1", "1", "0"}, {"1", "1", "1"}});
    long s3 = sum(w3, {{"0", "1", "0"}, {"0", "0", "1"}, {"1", "1", "-1"}, {"1", "0", "0"}, {"0", "1", "-2"},
                       {"2", "2", "-1"}, {"1", "-1", "-1"}});
    o.require(s1 == 13 && s2 == 13 && s3 == 7,
              "Darboux sums are " + std::to_string(s1) + ", " + std::to_string(s2) + ", " + std::to_string(s3));
    return o;
}

Outcome pereira_bridge() {
    Outcome o;
    Ring r = plane(rational_field());
    OneForm xi = form(r, "z*(2*x*y - z*x - y^2)", "-3*x*z*(x - y)", "x*(z*x + x*y - 2*y^2)");
    OneForm h3 = form(r, "3*x*y^2 - 3*x*y*z + x*z^2 - 3*y^3 + y^2*z", "x*(3*y^2 - 3*y*z - 3*x*y + 3*x*z)",
                      "x*(2*y^2 - x*z)");
    RationalMap Q2 = map3(r, "x^2", "x*y", "z*y");
    Pullback pb = pullback_form(Q2, xi);
    o.require(pb.form == omega(r), "Q2 pulls Xi back to " + pb.form.to_string());
    o.require(pb.factor == P(r, "x^3*y"), "factor is " + pb.factor.to_string());
    RationalMap M = map3(r, "x", "x - y", "2*x - 3*y + z");
    o.require(proportionality(pullback_form(M, h3).form, xi).has_value(), "the linear change does not carry H3 to Xi");
    return o;
}

const std::string kChazy = R"(vars x, y, z
let IV = chazy(IV)
let V = chazy(V)
let VI = chazy(VI)
)";

Outcome chazy_suite() {
    Outcome o;
    scenario(o, kChazy + R"(
rational flop = (2*x*y - z)/y
rational tri = (x^2 - y)/x
rational third = (x^3 - 3*x*y + z)/(x^2 - y)
rational fourth = -y*(x^3 - 3*x*y + z)/(x^2*y + y^2 - x*z)
rational fifth = (x^2*y - x*z + y^2)/(2*x*y - z)
rational u = (x^3 - 3*x*y + z)/(x^2 - y)
rational t = (x*z - 2*y^2)/(z - x*y)
assert verify_ode_symmetry(IV, flop)
assert verify_ode_symmetry(IV, tri)
assert verify_ode_symmetry(IV, third)
assert verify_ode_symmetry(IV, fourth)
assert verify_ode_symmetry(IV, fifth)
assert verify_ode_symmetry(V, u)
assert verify_transport(IV, t, VI)
assert group_relations(IV, flop, tri, third, fourth, fifth) is true
assert compose_affine(lift(V, u), lift(V, u)) == identity
)");
    // Zero residuals, checked directly.
    Ring r = plane(rational_field());
    ChazyEquation iv = chazy(r, ChazyKind::IV), v = chazy(r, ChazyKind::V), vi = chazy(r, ChazyKind::VI);
    for (const char* s : {"(2*x*y - z)/y", "(x^2 - y)/x", "(x^3 - 3*x*y + z)/(x^2 - y)",
                          "-y*(x^3 - 3*x*y + z)/(x^2*y + y^2 - x*z)", "(x^2*y - x*z + y^2)/(2*x*y - z)"})
        o.require(verify_ode_symmetry(iv, parse_rational(s, r)).residual.is_zero(), std::string("residual for ") + s);
    o.require(verify_ode_symmetry(v, parse_rational("(x^3 - 3*x*y + z)/(x^2 - y)", r)).residual.is_zero(),
              "residual for the V involution");
    o.require(verify_transport(iv, parse_rational("(x*z - 2*y^2)/(z - x*y)", r), vi).residual.is_zero(),
              "residual for the transport");
    GroupReport g = group_relations(iv.W, parse_rational("(2*x*y - z)/y", r), parse_rational("(x^2 - y)/x", r), {});
    o.require(g.flop_involution && g.tri_order_three && g.conjugation, "dihedral relations fail");
    return o;
}

Outcome omitted_calculation() {
    Outcome o;
    scenario(o, R"(field K = Q(w) minpoly w^2 + w + 1
ring A = (X, Y)
derivation D3 = {X -> (w - 1)*X, Y -> (w - 1)*(-w)*Y}
rational f = -(w + 1)*(w^2*Y + w*X + 1)/(w^2*Y + X + w)
ring R = (x, y, z)
let IV = chazy(IV)
use A
assert verify_solution_map(D3, f, IV) is true
)");
    scenario(o, R"(field K = Q(i) minpoly i^2 + 1
ring A = (X, Y)
derivation D4 = {X -> (i - 1)*i*X, Y -> (i - 1)*Y}
rational f = (X - 1)*(Y - 1)/(X*Y + i*X - i*Y - 1)
ring R = (x, y, z)
let V = chazy(V)
use A
assert verify_solution_map(D4, f, V) is true
)");
    return o;
}

Outcome first_integrals() {
    Outcome o;
    scenario(o, kChazy + R"(
weights W = (1, 2, 3)
poly B4 = x^3 - 3*x*y + z
poly C4 = 3*y^2*x^2 - y^3 - 3*x*y*z + z^2
poly B5 = x^4 - 4*x^2*y + 2*z*x - y^2
poly C5 = 2*y^2*x^2 - 2*x*y*z + z^2 - 2*y^3
poly B6 = x^6 - 6*x^4*y + 6*z*x^3 - 15*x^2*y^2 + 6*x*y*z + 8*y^3 - 3*z^2
poly C6 = y^2*x^2 - x*y*z + z^2 - 3*y^3
assert verify_first_integral(IV, B4) is true
assert verify_first_integral(V, B5) is true
assert verify_first_integral(VI, B6) is true
assert verify_invariant_surface(IV, C4) is true
assert verify_invariant_surface(V, C5) is true
assert verify_invariant_surface(VI, C6) is true
assert is_weighted_homogeneous(B4, W) degree 3
assert is_weighted_homogeneous(C4, W) degree 6
assert is_weighted_homogeneous(B5, W) degree 4
assert is_weighted_homogeneous(C5, W) degree 6
assert is_weighted_homogeneous(B6, W) degree 6
assert is_weighted_homogeneous(C6, W) degree 6
)");
    return o;
}

Outcome planar_uniqueness() {
    Outcome o;
    scenario(o, R"(field K = Q(w) minpoly w^2 + w + 1
vars x, y, z
form H3 = (3*x*y^2 - 3*x*y*z + x*z^2 - 3*y^3 + y^2*z)*dx + x*(3*y^2 - 3*y*z - 3*x*y + 3*x*z)*dy + x*(2*y^2 - x*z)*dz
form H6 = (x*y^2 - x*y*z + x*z^2 - 5*y^3 + y^2*z)*dx + x*(5*y^2 - 3*y*z - x*y + x*z)*dy + x*(2*y^2 - x*z)*dz
form Omega = y*z*(x + y - 2*z)*dx + x*z*(y + z - 2*x)*dy + x*y*(z + x - 2*y)*dz
assert tangent_foliation_space(2, 3*x*y^2 - y^3 - 3*x*y*z + x*z^2, x, x - 3*y + z) dim 2 spans H3
assert tangent_foliation_space(2, 3*y^3 - x*y^2 + x*y*z - x*z^2, 8*y^3 - 15*x*y^2 + 6*x*y*z - 3*x*z^2 - 6*x^2*y + 6*x^2*z + x^3) dim 1 spans H6
assert tangent_foliation_space(2, x*y^2 + y*z^2 + z*x^2 - 3*x*y*z, x, y, z) dim 1 spans Omega
)");
    scenario(o, R"(field K = Q(i) minpoly i^2 + 1
vars x, y, z
form H4 = (2*x*y^2 - 2*x*y*z + x*z^2 - 4*y^3 + y^2*z)*dx + x*(4*y^2 - 3*y*z - 2*x*y + 2*x*z)*dy + x*(2*y^2 - x*z)*dz
assert tangent_foliation_space(2, 2*y^3 - 2*x*y^2 + 2*x*y*z - x*z^2, y^2 + 4*x*y - 2*x*z - x^2, x) dim 1 spans H4
)");
    return o;
}

Outcome weighted_bridge() {
    Outcome o;
    scenario(o, R"(vars x, y, z
vfield E = (x, 2*y, 3*z)
form GIV = vfield_form((y, z, 3*x*z + 3*y^2 - 3*x^2*y), E, (1, 2, 3))
form GV = vfield_form((y, z, 2*x*z + 4*y^2 - 2*x^2*y), E, (1, 2, 3))
form GVI = vfield_form((y, z, x*z + 5*y^2 - x^2*y), E, (1, 2, 3))
form H3 = (3*x*y^2 - 3*x*y*z + x*z^2 - 3*y^3 + y^2*z)*dx + x*(3*y^2 - 3*y*z - 3*x*y + 3*x*z)*dy + x*(2*y^2 - x*z)*dz
form H4 = (2*x*y^2 - 2*x*y*z + x*z^2 - 4*y^3 + y^2*z)*dx + x*(4*y^2 - 3*y*z - 2*x*y + 2*x*z)*dy + x*(2*y^2 - x*z)*dz
form H6 = (x*y^2 - x*y*z + x*z^2 - 5*y^3 + y^2*z)*dx + x*(5*y^2 - 3*y*z - x*y + x*z)*dy + x*(2*y^2 - x*z)*dz
map j = (x^3 : x*y : z) from (1, 2, 3)
map jinv = (x : x*y : x^2*z) to (1, 2, 3)
assert weighted_pullback(jinv, GIV) ~ H3
assert weighted_pullback(jinv, GV) ~ H4
assert weighted_pullback(jinv, GVI) ~ H6
assert pullback_form(j, H3) ~ GIV
assert pullback_form(j, H4) ~ GV
assert pullback_form(j, H6) ~ GVI
)");
    return o;
}

Outcome singularity_atlas() {
    Outcome o;
    scenario(o, R"(field K = Q(w) minpoly w^2 + w + 1
vars x, y, z
form H3 = (3*x*y^2 - 3*x*y*z + x*z^2 - 3*y^3 + y^2*z)*dx + x*(3*y^2 - 3*y*z - 3*x*y + 3*x*z)*dy + x*(2*y^2 - x*z)*dz
form H6 = (x*y^2 - x*y*z + x*z^2 - 5*y^3 + y^2*z)*dx + x*(5*y^2 - 3*y*z - x*y + x*z)*dy + x*(2*y^2 - x*z)*dz
form Omega = y*z*(x + y - 2*z)*dx + x*z*(y + z - 2*x)*dy + x*y*(z + x - 2*y)*dz
form Omega1 = y*z*(2*x*y - y*z + z^2 + y^2 - x*z)*dx - x*z*(z + y)*(x + z)*dy - x*y*(y - 2*z)*(x + y)*dz
assert analyze(H3, (1 : 0 : 0)) ratio (-w : 1) mu 1 balanced
assert analyze(H3, (1 : 1 : 2)) ratio (1 : 3) mu 1 balanced
assert analyze(H3, (2 : 1 : 1)) ratio (-3 : 2) mu 1 balanced
assert analyze(H3, (0 : 1 : 3)) ratio (-1 : 2) mu 1 balanced
assert analyze(H3, (0 : 0 : 1)) class nilpotent mu 3 balanced
assert analyze(H6, (1 : 0 : 0)) ratio (w : 1) mu 1 balanced
assert analyze(H6, (1 : 1 : 2)) ratio (1 : 5) mu 1 balanced
assert analyze(H6, (18 : 3 : 1)) ratio (-5 : 6) mu 1 balanced
assert analyze(H6, (0 : 1 : 5)) ratio (-1 : 2) mu 1 balanced
assert analyze(H6, (0 : 0 : 1)) class nilpotent mu 3 balanced
assert analyze(Omega, (0 : 0 : 1)) ratio (1 : 2) mu 1 balanced
assert analyze(Omega, (1 : 1 : 1)) ratio (-w : 1) mu 1 balanced
assert analyze(Omega, (0 : 2 : 1)) ratio (-3 : 2) mu 1 balanced
assert analyze(Omega1, (1 : 0 : 0)) nu 2 l 2 mu 4 balanced
assert blow_up(Omega1, (1 : 0 : 0)) exceptional invariant points 3 sum 3 balanced
)");
    scenario(o, R"(field K = Q(i) minpoly i^2 + 1
vars x, y, z
form H4 = (2*x*y^2 - 2*x*y*z + x*z^2 - 4*y^3 + y^2*z)*dx + x*(4*y^2 - 3*y*z - 2*x*y + 2*x*z)*dy + x*(2*y^2 - x*z)*dz
assert analyze(H4, (1 : 0 : 0)) ratio (i : 1) mu 1 balanced
assert analyze(H4, (1 : 1 : 2)) ratio (1 : 4) mu 1 balanced
assert analyze(H4, (9 : 3 : 2)) ratio (-4 : 3) mu 1 balanced
assert analyze(H4, (0 : 1 : 4)) ratio (-1 : 2) mu 1 balanced
assert analyze(H4, (0 : 0 : 1)) class nilpotent mu 3 balanced
)");
    scenario(o, R"(vars x, y, z
sample lambda in (2, 3, 5, 7, 11) degree 2 {
  form G = y*z*(y + z)*((lambda + 1)*x + y + lambda*z)*dx - x*z*(x + z)*((lambda - 1)*x + (2*lambda - 1)*y + lambda*z)*dy + x*y*(x + y)*((lambda - 1)*x - y + (lambda - 2)*z)*dz
  assert analyze(G, (0 : lambda : -1)) ratio (-2 : 1) mu 1 balanced
  assert analyze(G, (lambda : 0 : 1 - lambda)) ratio (-2 : 1) mu 1 balanced
  assert analyze(G, (1 : lambda - 1 : 0)) ratio (-2 : 1) mu 1 balanced
  assert analyze(G, (lambda - 1 : 1 : -lambda)) ratio (-2 : 1) mu 1 balanced
}
)");
    return o;
}

Outcome cremona_predictions() {
    Outcome o;
    Ring r = plane(rational_field());
    RationalMap L1 = map3(r, "x", "x + y", "x + z");
    RationalMap L2 = map3(r, "x - y + z", "y - z", "-z");
    RationalMap L3 = map3(r, "x + z", "z + y", "y");
    OneForm w = omega(r);
    for (const auto& L : {L1, L2, L3}) {
        CremonaStep s = cremona_step(pullback_form(L, w).form);
        o.require(s.matches(), "predicted " + s.predicted.to_string() + ", measured " + s.measured.to_string());
        w = s.transformed;
    }
    o.require(cremona_predict(2, 1, 1, 1) == CremonaPrediction{3, {2, 2, 2}}, "prediction for the first step");
    for (int lambda : {2, 3, 5, 7, 11}) {
        OneForm wl({P(r, std::to_string(lambda) + "*y*z"), P(r, "-x*z"), P(r, std::to_string(1 - lambda) + "*x*y")});
        CremonaStep s = cremona_step(wl);
        o.require(s.matches() && s.measured.degree == 1 && proportionality(s.transformed, wl).has_value(),
                  "Q on w_lambda at lambda = " + std::to_string(lambda));
    }
    return o;
}

Outcome cayley_chain() {
    Outcome o;
    scenario(o, R"(ring R = (x, y, z)
ring S = (xi, eta, zeta, theta)
poly image = theta*(xi^2 + eta^2 + zeta^2) - 2*xi*eta*zeta - theta^3
poly cayley = xi*eta*zeta + xi*eta*theta + xi*zeta*theta + eta*zeta*theta
map L = (theta + xi - eta - zeta : theta - xi + eta - zeta : theta - xi - eta + zeta : theta + xi + eta + zeta)
use R
map pi = (x*(y^2 + z^2) : y*(x^2 + z^2) : z*(x^2 + y^2) : 2*x*y*z) -> S
assert image_satisfies(pi, image) is true
assert image_satisfies(compose(L, pi), cayley) is true
)");
    Ring r = plane(rational_field());
    RationalMap Pi = map3(r, "(z + y)*(z + x)*(y - x)", "(z + y)*(x - z)*(x + y)", "(z - y)*(z + x)*(x + y)");
    Poly jac = jacobian_det(Pi);
    Poly reference = P(r, "-12*(y - x)*(y + x)*(z - y)*(z + y)*(z + x)*(z - x)");
    o.require(jac == reference, "jacobian_det(Pi) = " + jac.to_string() + " is " +
                                  (jac == -reference ? "-1 times" : "not") + " the reference expression");
    scenario(o, R"(vars x, y, z
map Pi = ((z + y)*(z + x)*(y - x) : (z + y)*(x - z)*(x + y) : (z - y)*(z + x)*(x + y))
sample lambda in (2, 3, 5, 7, 11) degree 2 {
  form w = lambda*y*z*dx - x*z*dy + (1 - lambda)*x*y*dz
  form G = y*z*(y + z)*((lambda + 1)*x + y + lambda*z)*dx - x*z*(x + z)*((lambda - 1)*x + (2*lambda - 1)*y + lambda*z)*dy + x*y*(x + y)*((lambda - 1)*x - y + (lambda - 2)*z)*dz
  assert pullback_form(Pi, G) ~ w
  assert invariant_curve(G, x) is true
  assert invariant_curve(G, y) is true
  assert invariant_curve(G, z) is true
  assert invariant_curve(G, x + y + z) is true
  assert invariant_curve(G, x + y) is true
  assert invariant_curve(G, x + z) is true
  assert invariant_curve(G, y + z) is true
}
)");
    return o;
}

Outcome symmetry_bookkeeping() {
    Outcome o;
    scenario(o, R"(field K = Q(w) minpoly w^2 + w + 1
vars X, Y, Z
map T3 = (Z : X : Y)
map Q = (Y*Z : Z*X : X*Y)
map S = (X : w*Y : w^2*Z)
map Sinv = (X : w^2*Y : w*Z)
assert compose(Q, S, Q) ~ Sinv
assert order_up_to_scale(compose(T3, Q), 8) order 6
ring A = (U, V)
amap J = (-U, -V)
amap T4 = (V, 1/U)
assert commute(J, T4) is true
)");
    scenario(o, R"(vars x, y, z
poly C = 3*y^2*x^2 - y^3 - 3*x*y*z + z^2
map inv = (2*x*y - z : C : (3*x*y - 2*z)*C) from (1, 2, 3) to (1, 2, 3)
map tri = (x^2 - y : x^2*y - x*z + y^2 : 3*x^4*y - 2*x^3*z - 3*x^2*y^2 + 3*x*y*z - 2*y^3) from (1, 2, 3) to (1, 2, 3)
map id = (x : y : z) from (1, 2, 3) to (1, 2, 3)
assert compose(inv, inv) ~ id
assert compose(tri, tri, tri) ~ id
assert proportional(inv, id) is false
assert proportional(tri, id) is false
)");
    return o;
}

Outcome sign_probe() {
    Outcome o;
    Ring r = plane(rational_field());
    bool plus = invariant_curve(omega(r), P(r, "x*y^2 + y*z^2 + z*x^2 - 3*x*y*z")).has_value();
    bool minus = invariant_curve(omega(r), P(r, "x*y^2 - y*z^2 + z*x^2 - 3*x*y*z")).has_value();
    o.require(plus != minus, "both or neither sign variant is invariant");
    o.notes.push_back(std::string("invariant variant: ") +
                      (plus ? "x*y^2 + y*z^2 + z*x^2 - 3*x*y*z" : "x*y^2 - y*z^2 + z*x^2 - 3*x*y*z"));
    return o;
}

Outcome property_suites() {
    Outcome o;
    for (const auto& p : oracle::run_properties(20240601, 1000))
        o.require(p.ok() && p.cases == 1000, p.name + ": " + std::to_string(p.failures) + " failures; " + p.first_failure);
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> check;
    };
    const std::vector<Criterion> criteria = {
        {"flop certificate", flop_certificate},
        {"factorization replay", factorization_replay},
        {"Pereira bridge", pereira_bridge},
        {"Chazy substitutions and group relations", chazy_suite},
        {"solution maps from the plane", omitted_calculation},
        {"first integrals and invariant surfaces", first_integrals},
        {"planar model uniqueness", planar_uniqueness},
        {"weighted bridge", weighted_bridge},
        {"singularity atlas", singularity_atlas},
        {"Cremona degree predictions", cremona_predictions},
        {"Cayley chain", cayley_chain},
        {"symmetry bookkeeping", symmetry_bookkeeping},
        {"cubic sign probe", sign_probe},
        {"property suites", property_suites},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].check();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        std::printf("%s %2zu %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name);
        for (const auto& w : o.why) std::printf("   %s\n", w.c_str());
        for (const auto& n : o.notes) std::printf("   %s\n", n.c_str());
        std::fflush(stdout);
        failed += !o.ok;
    }
    std::printf("%d of %zu criteria pass\n", int(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
