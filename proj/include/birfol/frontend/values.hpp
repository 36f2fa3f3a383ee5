#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "birfol/birmap.hpp"
#include "birfol/chazy.hpp"
#include "birfol/exterior.hpp"
#include "birfol/localfol.hpp"

namespace birfol::frontend {

enum class Kind { integer, scalar, poly, rational, form, vfield, map, amap, derivation, chazy, point, weights, name };

inline const char* kind_name(Kind k) {
    switch (k) {
    case Kind::integer: return "integer";
    case Kind::scalar: return "scalar";
    case Kind::poly: return "poly";
    case Kind::rational: return "rational";
    case Kind::form: return "form";
    case Kind::vfield: return "vfield";
    case Kind::map: return "map";
    case Kind::amap: return "amap";
    case Kind::derivation: return "derivation";
    case Kind::chazy: return "chazy derivation";
    case Kind::point: return "point";
    case Kind::weights: return "weights";
    case Kind::name: return "name";
    }
    return "?";
}

struct DerivationValue {
    Derivation D;
    std::optional<ChazyEquation> eq;
};

using Payload = std::variant<long, Scalar, Poly, RationalFn, OneForm, VectorField, RationalMap, AffineMap,
                             DerivationValue, ProjectivePoint, Weights, std::string>;

struct Value {
    Kind kind;
    Payload v;
    std::string label;  // the name or source text it came from

    long integer() const { return std::get<long>(v); }
    const Scalar& scalar() const { return std::get<Scalar>(v); }
    const Poly& poly() const { return std::get<Poly>(v); }
    const RationalFn& rational() const { return std::get<RationalFn>(v); }
    const OneForm& form() const { return std::get<OneForm>(v); }
    const VectorField& vfield() const { return std::get<VectorField>(v); }
    const RationalMap& map() const { return std::get<RationalMap>(v); }
    const AffineMap& amap() const { return std::get<AffineMap>(v); }
    const DerivationValue& derivation() const { return std::get<DerivationValue>(v); }
    const ChazyEquation& chazy() const { return *std::get<DerivationValue>(v).eq; }
    const ProjectivePoint& point() const { return std::get<ProjectivePoint>(v); }
    const Weights& weights() const { return std::get<Weights>(v); }
    const std::string& name() const { return std::get<std::string>(v); }

    // Polys, scalars and integers read as rational functions.
    RationalFn as_rational(const Ring& r) const {
        switch (kind) {
        case Kind::rational: return rational();
        case Kind::poly: return RationalFn(poly());
        case Kind::scalar: return RationalFn(Poly::constant(r, scalar()));
        case Kind::integer: return RationalFn(Poly::constant(r, Rational(integer())));
        default: throw Error(ErrorCode::invalid_argument, label + " is not an expression");
        }
    }

    std::string to_string() const {
        switch (kind) {
        case Kind::integer: return std::to_string(integer());
        case Kind::scalar: return scalar().to_string();
        case Kind::poly: return poly().to_string();
        case Kind::rational: return rational().to_string();
        case Kind::form: return form().to_string();
        case Kind::vfield: {
            std::string s = "(";
            for (std::size_t i = 0; i < vfield().c.size(); ++i) s += (i ? ", " : "") + vfield().c[i].to_string();
            return s + ")";
        }
        case Kind::map: return map().to_string();
        case Kind::amap: return amap().to_string();
        case Kind::derivation:
        case Kind::chazy: {
            const auto& d = derivation();
            if (d.eq) return std::string("chazy(") + chazy_name(d.eq->kind) + ")";
            return label;
        }
        case Kind::point: return point().to_string();
        case Kind::weights: {
            std::string s = "(";
            for (std::size_t i = 0; i < weights().w.size(); ++i) s += (i ? ", " : "") + std::to_string(weights().w[i]);
            return s + ")";
        }
        case Kind::name: return name();
        }
        return "";
    }
};

}  // namespace birfol::frontend
