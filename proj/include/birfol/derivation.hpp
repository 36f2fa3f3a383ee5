#pragma once

#include <vector>

#include "birfol/rational_function.hpp"

namespace birfol {

// A derivation of K(x_1..x_n) fixed by the images of the generators.
class Derivation {
public:
    Derivation(Ring ring, std::vector<RationalFn> images) : ring_(std::move(ring)), images_(std::move(images)) {
        if (images_.size() != ring_->names.size())
            throw Error(ErrorCode::invalid_argument, "derivation needs one image per variable");
        polynomial_ = true;
        for (auto& im : images_) {
            im = im.with_ring(ring_);
            polynomial_ = polynomial_ && im.is_polynomial();
        }
    }

    const Ring& ring() const { return ring_; }
    const std::vector<RationalFn>& images() const { return images_; }

    RationalFn apply(const Poly& p) const {
        if (polynomial_) return RationalFn(apply_poly(p));
        RationalFn acc(ring_);
        for (std::size_t i = 0; i < images_.size(); ++i) {
            Poly dp = p.derivative(i);
            if (!dp.is_zero()) acc += images_[i] * RationalFn(dp.with_ring(ring_));
        }
        return acc;
    }

    RationalFn apply(const RationalFn& u) const {
        if (u.is_polynomial()) return apply(u.num());
        if (polynomial_) {
            Poly dn = apply_poly(u.num()), dd = apply_poly(u.den());
            return RationalFn(dn * u.den() - u.num() * dd, u.den() * u.den());
        }
        RationalFn dn = apply(u.num()), dd = apply(u.den());
        RationalFn n(u.num()), d(u.den());
        return (dn * d - n * dd) / (d * d);
    }

    // u, D u, ..., D^k u
    std::vector<RationalFn> iterates(const RationalFn& u, int k) const {
        std::vector<RationalFn> out{u};
        for (int i = 0; i < k; ++i) out.push_back(apply(out.back()));
        return out;
    }

private:
    Poly apply_poly(const Poly& p) const {
        PolyAccumulator acc(ring_);
        for (std::size_t i = 0; i < images_.size(); ++i) {
            Poly dp = p.derivative(i);
            if (!dp.is_zero()) acc.add((images_[i].num() * dp.with_ring(ring_)));
        }
        return acc.take();
    }

    Ring ring_;
    std::vector<RationalFn> images_;
    bool polynomial_ = true;
};

}  // namespace birfol
