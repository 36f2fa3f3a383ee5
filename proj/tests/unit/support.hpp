#pragma once

#include <string>
#include <vector>

#include "birfol/birmap.hpp"
#include "birfol/expr.hpp"
#include "birfol/localfol.hpp"

namespace support {

using namespace birfol;

inline Field eisenstein() {
    static Field f = quadratic_field("K", "w", 1, 1);
    return f;
}

inline Field gaussian() {
    static Field f = quadratic_field("K", "i", 0, 1);
    return f;
}

inline Ring xyz(Field f = rational_field()) { return make_ring(std::move(f), {"x", "y", "z"}); }

inline Poly P(const Ring& r, const std::string& s) { return parse_poly(s, r); }

inline OneForm form(const Ring& r, const std::vector<std::string>& c, std::vector<int> w = {}) {
    std::vector<Poly> ps;
    for (const auto& s : c) ps.push_back(P(r, s));
    if (w.empty()) return OneForm(ps);
    return OneForm(ps, Weights{w});
}

inline RationalMap map(const Ring& r, const std::vector<std::string>& c) {
    std::vector<Poly> ps;
    for (const auto& s : c) ps.push_back(P(r, s));
    return RationalMap::standard(ps);
}

inline ProjectivePoint point(const Field& f, const std::vector<std::string>& c) {
    Ring r = make_ring(f, {"_"});
    ProjectivePoint p;
    for (const auto& s : c) p.x.push_back(P(r, s).constant_term());
    return p;
}

// The degree-two foliation with the flop symmetry, in the plane.
inline OneForm omega(const Ring& r) {
    return form(r, {"y*z*(x+y-2*z)", "x*z*(y+z-2*x)", "x*y*(z+x-2*y)"});
}

inline RationalMap j4(const Ring& r) {
    return map(r, {"y*(y-z)*(z-x)^2", "x*(x-y)*(y-z)^2", "z*(z-x)*(x-y)^2"});
}

}  // namespace support
