#pragma once

#include <cctype>
#include <functional>
#include <optional>
#include <string>

#include "birfol/rational_function.hpp"

namespace birfol {

// Failure while reading an expression; offset is a byte position in the text.
class ExprError : public std::runtime_error {
public:
    ExprError(std::size_t offset, const std::string& what) : std::runtime_error(what), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

using ExprLookup = std::function<std::optional<RationalFn>(const std::string& name, std::size_t offset)>;

namespace detail {

class ExprReader {
public:
    ExprReader(const std::string& text, const Ring& ring, const ExprLookup& lookup)
        : s_(text), ring_(ring), lookup_(lookup) {}

    RationalFn read() {
        RationalFn r = sum();
        skip();
        if (i_ < s_.size()) throw ExprError(i_, std::string("unexpected '") + s_[i_] + "'");
        return r;
    }

private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    RationalFn sum() {
        RationalFn acc = product();
        for (;;) {
            if (eat('+')) acc += product();
            else if (eat('-')) acc -= product();
            else return acc;
        }
    }

    RationalFn product() {
        RationalFn acc = unary();
        for (;;) {
            if (eat('*')) {
                acc *= unary();
            } else if (eat('/')) {
                std::size_t at = i_;
                RationalFn d = unary();
                if (d.is_zero()) throw ExprError(at, "division by zero");
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    RationalFn unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    RationalFn power() {
        std::size_t at = i_;
        RationalFn base = atom();
        if (!eat('^')) return base;
        skip();
        bool neg = eat('-');
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) throw ExprError(i_, "expected an integer exponent");
        long e = std::stol(s_.substr(start, i_ - start));
        if (e > 1000) throw ExprError(start, "exponent too large");
        if (neg && base.is_zero()) throw ExprError(at, "division by zero");
        return base.pow(neg ? -e : e);
    }

    RationalFn atom() {
        skip();
        if (i_ >= s_.size()) throw ExprError(i_, "unexpected end of expression");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            RationalFn r = sum();
            if (!eat(')')) throw ExprError(i_, "expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return RationalFn(Poly::constant(ring_, Rational(s_.substr(start, i_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            std::string name = s_.substr(start, i_ - start);
            const auto& names = ring_->names;
            for (std::size_t k = 0; k < names.size(); ++k)
                if (names[k] == name) return RationalFn(Poly::variable(ring_, k));
            const Field& K = ring_->field;
            if (K->degree() == 2 && K->generator() == name)
                return RationalFn(Poly::constant(ring_, Scalar::generator(K)));
            if (lookup_) {
                if (auto v = lookup_(name, start)) return v->with_ring(ring_);
            }
            throw ExprError(start, "unknown identifier '" + name + "'");
        }
        throw ExprError(i_, std::string("unexpected '") + c + "'");
    }

    const std::string& s_;
    const Ring& ring_;
    const ExprLookup& lookup_;
    std::size_t i_ = 0;
};

}  // namespace detail

inline RationalFn parse_rational(const std::string& text, const Ring& ring, const ExprLookup& lookup = {}) {
    return detail::ExprReader(text, ring, lookup).read();
}

inline Poly parse_poly(const std::string& text, const Ring& ring, const ExprLookup& lookup = {}) {
    RationalFn r = parse_rational(text, ring, lookup);
    if (!r.is_polynomial()) throw ExprError(0, "expected a polynomial, got " + r.to_string());
    return r.as_poly();
}

}  // namespace birfol
