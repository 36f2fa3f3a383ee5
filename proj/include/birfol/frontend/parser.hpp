#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "birfol/frontend/lexer.hpp"
#include "birfol/frontend/ops.hpp"
#include "birfol/frontend/values.hpp"
#include "birfol/gcd.hpp"

namespace birfol::frontend {

struct Clause {
    enum class Type { is, compare, integer, mu, order, word, ratio, spans, balanced } type = Type::is;
    Location at;
    std::string text;  // source text, for messages
    std::string fact;
    bool flag = false;  // expected truth for `is`; proportional comparison for `~`
    std::optional<Value> value;
    std::optional<long> number;  // empty for `mu infinite` / `order none`
    std::string word;
    std::optional<std::pair<Scalar, Scalar>> ratio;
};

struct Assertion {
    Location at;
    std::string text;
    const OpSpec* op = nullptr;
    std::vector<Value> args;
    Ring ring;
    std::vector<Clause> clauses;
    bool expect_failure = false;
    std::string failure_code;  // empty accepts any domain error
    std::string origin;
    std::vector<std::string> notes;
};

struct Scenario {
    std::string name;
    std::vector<Assertion> assertions;
};

class Parser {
public:
    explicit Parser(std::string text) : src_(std::move(text)), toks_(tokenize(src_)) {}

    Scenario parse(std::string name) {
        Scenario sc{std::move(name), {}};
        while (peek().kind != Tok::end) {
            if (peek().kind == Tok::newline || is_punct(";")) {
                ++pos_;
                continue;
            }
            statement(sc);
        }
        return sc;
    }

private:
    struct Binding {
        Value value;
        Location at;
    };

    // ---- tokens ----

    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool is_punct(const char* p, std::size_t k = 0) const {
        return peek(k).kind == Tok::punct && peek(k).text == p;
    }
    bool is_word(const char* w, std::size_t k = 0) const { return peek(k).kind == Tok::ident && peek(k).text == w; }
    bool accept(const char* p) {
        if (!is_punct(p)) return false;
        ++pos_;
        return true;
    }
    void expect(const char* p) {
        if (!accept(p)) fail(peek().at, std::string("expected '") + p + "', found " + describe(peek()));
    }
    std::string ident(const char* what) {
        if (peek().kind != Tok::ident) fail(peek().at, std::string("expected ") + what + ", found " + describe(peek()));
        return next().text;
    }
    static std::string describe(const Token& t) {
        switch (t.kind) {
        case Tok::newline: return "end of line";
        case Tok::end: return "end of input";
        case Tok::string: return "a string";
        default: return "'" + t.text + "'";
        }
    }
    [[noreturn]] static void fail(Location at, const std::string& msg) { throw ParseError(at, msg); }

    bool at_statement_end() const {
        return peek().kind == Tok::newline || peek().kind == Tok::end || is_punct(";") || is_punct("}");
    }
    void end_statement() {
        if (!at_statement_end()) fail(peek().at, "unexpected " + describe(peek()) + " after statement");
        if (is_punct(";") || peek().kind == Tok::newline) ++pos_;
    }
    std::string source(std::size_t from_tok, std::size_t to_tok) const {
        if (to_tok <= from_tok) return "";
        const Token& last = toks_[to_tok - 1];
        std::size_t end = last.offset + last.text.size() + (last.kind == Tok::string ? 2 : 0);
        std::string raw = src_.substr(toks_[from_tok].offset, end - toks_[from_tok].offset);
        std::string out;
        bool space = false;
        for (char c : raw) {
            if (c == '\n' || c == '\t' || c == ' ' || c == '\r') {
                space = !out.empty();
                continue;
            }
            if (space) out += ' ';
            space = false;
            out += c;
        }
        return out;
    }

    // ---- environment ----

    const Ring& ring() {
        if (!ring_) {
            ring_ = make_ring(field_, {"x", "y", "z"});
            field_used_ = true;
        }
        return ring_;
    }
    Ring scalar_ring() {
        field_used_ = true;
        return make_ring(field_, {});
    }

    void define(const std::string& name, Location at, Value v) {
        if (auto it = names_.find(name); it != names_.end())
            fail(at, "'" + name + "' is already defined at line " + std::to_string(it->second.at.line));
        if (rings_.count(name)) fail(at, "'" + name + "' is already a ring");
        if (ring_)
            for (const auto& n : ring_->names)
                if (n == name) fail(at, "'" + name + "' is a variable of the current ring");
        if (field_->degree() == 2 && field_->generator() == name) fail(at, "'" + name + "' is the field generator");
        v.label = name;
        names_.emplace(name, Binding{std::move(v), at});
    }

    const Binding* lookup(const std::string& name) const {
        auto it = names_.find(name);
        return it == names_.end() ? nullptr : &it->second;
    }

    // Moves f into `target`: constants go anywhere, otherwise the variable names of f's ring must be a prefix.
    static std::optional<RationalFn> convert(const RationalFn& f, const Ring& target) {
        if (!same_field(f.field(), target->field)) return std::nullopt;
        if (f.ring()->names == target->names) return f.with_ring(target);
        if (f.is_constant()) return RationalFn(Poly::constant(target, f.constant_value()));
        const auto& src = f.ring()->names;
        if (src.size() > target->names.size()) return std::nullopt;
        std::vector<Poly> images;
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (src[i] != target->names[i]) return std::nullopt;
            images.push_back(Poly::variable(target, i));
        }
        return RationalFn(f.num().substitute(images), f.den().substitute(images));
    }

    // ---- expressions ----

    RationalFn sum(const Ring& R) {
        RationalFn acc = product(R);
        for (;;) {
            if (accept("+")) acc += product(R);
            else if (accept("-")) acc -= product(R);
            else return acc;
        }
    }

    RationalFn product(const Ring& R) {
        RationalFn acc = unary(R);
        for (;;) {
            if (accept("*")) {
                acc *= unary(R);
            } else if (is_punct("/")) {
                Location at = next().at;
                RationalFn d = unary(R);
                if (d.is_zero()) fail(at, "division by zero");
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    RationalFn unary(const Ring& R) {
        if (accept("-")) return -unary(R);
        if (accept("+")) return unary(R);
        return power(R);
    }

    RationalFn power(const Ring& R) {
        Location at = peek().at;
        RationalFn base = atom(R);
        if (!accept("^")) return base;
        bool neg = accept("-");
        if (peek().kind != Tok::number) fail(peek().at, "expected an integer exponent");
        Location eat = peek().at;
        std::string digits = next().text;
        if (digits.size() > 4 || std::stol(digits) > 1000) fail(eat, "exponent too large");
        long e = std::stol(digits);
        if (neg && base.is_zero()) fail(at, "division by zero");
        return base.pow(neg ? -e : e);
    }

    RationalFn atom(const Ring& R) {
        const Token& t = peek();
        if (accept("(")) {
            RationalFn r = sum(R);
            expect(")");
            return r;
        }
        if (t.kind == Tok::number) {
            ++pos_;
            return RationalFn(Poly::constant(R, Rational(t.text)));
        }
        if (t.kind == Tok::ident) {
            ++pos_;
            const auto& names = R->names;
            for (std::size_t k = 0; k < names.size(); ++k)
                if (names[k] == t.text) return RationalFn(Poly::variable(R, k));
            if (field_->degree() == 2 && field_->generator() == t.text)
                return RationalFn(Poly::constant(R, Scalar::generator(field_)));
            const Binding* b = lookup(t.text);
            if (!b) {
                if (ring_ && R != ring_)
                    for (const auto& n : ring_->names)
                        if (n == t.text) fail(t.at, "variable '" + t.text + "' does not belong to this ring");
                fail(t.at, "unknown identifier '" + t.text + "'");
            }
            const Value& v = b->value;
            switch (v.kind) {
            case Kind::integer:
            case Kind::scalar:
            case Kind::poly:
            case Kind::rational: {
                auto c = convert(v.as_rational(R), R);
                if (!c) fail(t.at, "'" + t.text + "' lives in a different ring");
                return *c;
            }
            default: fail(t.at, "'" + t.text + "' is a " + kind_name(v.kind) + ", not an expression");
            }
        }
        fail(t.at, "expected an expression, found " + describe(t));
    }

    Scalar scalar_expr() {
        Location at = peek().at;
        RationalFn r = sum(scalar_ring());
        if (!r.is_constant()) fail(at, "expected a constant");
        return r.constant_value();
    }

    long integer_literal() {
        bool neg = accept("-");
        if (peek().kind != Tok::number) fail(peek().at, "expected an integer, found " + describe(peek()));
        const Token& t = next();
        if (t.text.size() > 9) fail(t.at, "integer too large");
        long v = std::stol(t.text);
        return neg ? -v : v;
    }

    Weights weights_literal() {
        if (peek().kind == Tok::ident) {
            Location at = peek().at;
            std::string n = next().text;
            const Binding* b = lookup(n);
            if (!b) fail(at, "unknown identifier '" + n + "'");
            if (b->value.kind != Kind::weights) fail(at, "'" + n + "' is a " + kind_name(b->value.kind) + ", not weights");
            return b->value.weights();
        }
        expect("(");
        std::vector<int> w;
        do {
            Location at = peek().at;
            long v = integer_literal();
            if (v <= 0) fail(at, "weights must be positive");
            w.push_back(int(v));
        } while (accept(","));
        expect(")");
        return Weights{w};
    }

    // Splits an expression linear in the differentials dx_i into form coefficients.
    OneForm form_expr(std::optional<Weights> w) {
        const Ring& R = ring();
        std::vector<std::string> names = R->names;
        const std::size_t n = names.size();
        for (std::size_t i = 0; i < n; ++i) names.push_back("d" + R->names[i]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (names[n + i] == R->names[j]) fail(peek().at, "differential d" + R->names[i] + " clashes with a variable");
        if (names.size() > kMaxVars) fail(peek().at, "forms are limited to three variables");
        Ring big = make_ring(field_, names);
        Location at = peek().at;
        RationalFn e = sum(big);
        if (!e.is_polynomial()) fail(at, "form coefficients must be polynomials");
        Poly p = e.as_poly().scaled(Scalar(field_, 1) / e.den().constant_term());
        std::vector<std::vector<Term>> parts(n);
        for (const auto& t : p.terms()) {
            int dcount = 0;
            std::size_t which = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (t.m.e[n + i]) {
                    dcount += t.m.e[n + i];
                    which = i;
                }
            if (dcount != 1) fail(at, "every term of a form needs exactly one differential");
            Monomial m = t.m;
            m.e[n + which] = 0;
            parts[which].push_back({m, t.c});
        }
        std::vector<Poly> c;
        for (auto& ts : parts) c.push_back(Poly::from_terms(R, std::move(ts)));
        Weights ww = w.value_or(Weights::standard(n));
        if (ww.size() != n) fail(at, "weights do not match the number of variables");
        return OneForm(std::move(c), ww);
    }

    // Top-level separator inside the parenthesis at the cursor: ':' or ',' (or none).
    char literal_separator() const {
        int depth = 0;
        for (std::size_t k = pos_; k < toks_.size(); ++k) {
            const Token& t = toks_[k];
            if (t.kind != Tok::punct) {
                if (t.kind == Tok::end) break;
                continue;
            }
            if (t.text == "(" || t.text == "[") ++depth;
            else if (t.text == ")" || t.text == "]") {
                if (--depth == 0) return 0;
            } else if (depth == 1 && (t.text == ":" || t.text == ",")) {
                return t.text[0];
            }
        }
        return 0;
    }

    std::vector<RationalFn> tuple_of_rationals(const char* sep) {
        expect("(");
        std::vector<RationalFn> out;
        do out.push_back(sum(ring()));
        while (accept(sep));
        expect(")");
        return out;
    }

    RationalMap map_literal() {
        Location at = peek().at;
        auto comps = tuple_of_rationals(":");
        // clear denominators
        Poly den = Poly::constant(ring(), Rational(1));
        for (const auto& c : comps) den = lcm(den, c.den());
        std::vector<Poly> polys;
        for (const auto& c : comps) polys.push_back(exact_divide(c.num() * den, c.den()));
        std::optional<Weights> src, dst;
        Ring target;
        for (;;) {
            if (is_word("from")) {
                ++pos_;
                src = weights_literal();
            } else if (is_word("to")) {
                ++pos_;
                dst = weights_literal();
            } else if (accept("->")) {
                Location rat = peek().at;
                std::string rn = ident("a ring name");
                auto it = rings_.find(rn);
                if (it == rings_.end()) fail(rat, "unknown ring '" + rn + "'");
                target = it->second;
            } else {
                break;
            }
        }
        return evaluate(at, [&] {
            return RationalMap(polys, src.value_or(Weights::standard(ring()->names.size())),
                               dst.value_or(Weights::standard(polys.size())), target);
        });
    }

    template <class F>
    auto evaluate(Location at, F&& f) -> decltype(f()) {
        try {
            return f();
        } catch (const Error& e) {
            fail(at, e.what());
        }
    }

    static bool accepts(const std::vector<Kind>& allowed, Kind k) {
        for (Kind a : allowed) {
            if (a == k) return true;
            if (a == Kind::derivation && k == Kind::chazy) return true;
        }
        return false;
    }

    static std::string kinds_text(const std::vector<Kind>& allowed) {
        std::string s;
        for (std::size_t i = 0; i < allowed.size(); ++i)
            s += std::string(i == 0 ? "" : (i + 1 == allowed.size() ? " or " : ", ")) + kind_name(allowed[i]);
        return s;
    }

    Value value(const std::vector<Kind>& allowed) {
        std::size_t start = pos_;
        Location at = peek().at;
        Value v = value_inner(allowed);
        if (!accepts(allowed, v.kind)) fail(at, std::string("expected ") + kinds_text(allowed) + ", got " + kind_name(v.kind));
        if (v.label.empty()) v.label = source(start, pos_);
        return v;
    }

    bool has(const std::vector<Kind>& allowed, Kind k) const { return accepts(allowed, k); }

    Value value_inner(const std::vector<Kind>& allowed) {
        const Token& t = peek();
        Location at = t.at;
        if (t.kind == Tok::ident && is_punct("(", 1) && is_function(t.text)) return function_call();
        if (t.kind == Tok::ident && t.text == "identity" && !lookup("identity")) {
            ++pos_;
            if (has(allowed, Kind::map)) return Value{Kind::map, RationalMap::identity(ring()), "identity"};
            if (has(allowed, Kind::amap)) return Value{Kind::amap, AffineMap::identity(ring()), "identity"};
            fail(at, "identity is a map");
        }
        if (t.kind == Tok::ident) {
            const Binding* b = lookup(t.text);
            bool expression_kind = b && (b->value.kind == Kind::poly || b->value.kind == Kind::rational ||
                                         b->value.kind == Kind::scalar || b->value.kind == Kind::integer);
            if (b && !expression_kind) {
                ++pos_;
                if (has(allowed, Kind::name)) return Value{Kind::name, t.text, t.text};
                return b->value;
            }
            // A bare name bound in another ring keeps its ring.
            if (b && (b->value.kind == Kind::poly || b->value.kind == Kind::rational)) {
                const Ring& own = b->value.kind == Kind::poly ? b->value.poly().ring() : b->value.rational().ring();
                std::size_t save = pos_++;
                bool bare = at_value_end();
                pos_ = save;
                if (bare && own != ring() && !convert(b->value.as_rational(own), ring())) {
                    ++pos_;
                    if (b->value.kind == Kind::poly && !has(allowed, Kind::poly) && has(allowed, Kind::rational))
                        return Value{Kind::rational, RationalFn(b->value.poly()), ""};
                    return b->value;
                }
            }
            if (has(allowed, Kind::name) && !has(allowed, Kind::form)) {
                ++pos_;
                if (!b) fail(at, "unknown identifier '" + t.text + "'");
                return Value{Kind::name, t.text, t.text};
            }
            if (!b && !has(allowed, Kind::form) && !has(allowed, Kind::poly) && !has(allowed, Kind::rational) &&
                !has(allowed, Kind::scalar)) {
                bool var = ring_ && std::find(ring_->names.begin(), ring_->names.end(), t.text) != ring_->names.end();
                if (!var) fail(at, "unknown identifier '" + t.text + "'");
            }
        }
        if (is_punct("(")) {
            char sep = literal_separator();
            if (sep == ':') {
                if (has(allowed, Kind::map)) return Value{Kind::map, map_literal(), ""};
                if (has(allowed, Kind::point)) return Value{Kind::point, point_literal(), ""};
            } else if (sep == ',') {
                if (has(allowed, Kind::amap)) {
                    auto c = tuple_of_rationals(",");
                    return Value{Kind::amap, evaluate(at, [&] { return AffineMap(ring(), c); }), ""};
                }
                if (has(allowed, Kind::vfield)) return Value{Kind::vfield, vfield_literal(), ""};
                if (has(allowed, Kind::weights)) return Value{Kind::weights, weights_literal(), ""};
                if (has(allowed, Kind::derivation)) {
                    auto c = tuple_of_rationals(",");
                    return Value{Kind::derivation, DerivationValue{evaluate(at, [&] { return Derivation(ring(), c); }), {}}, ""};
                }
            }
        }
        if (has(allowed, Kind::weights) && is_punct("(")) return Value{Kind::weights, weights_literal(), ""};
        if (has(allowed, Kind::integer) && (peek().kind == Tok::number || (is_punct("-") && peek(1).kind == Tok::number))) {
            std::size_t save = pos_;
            long n = integer_literal();
            if (at_value_end()) return Value{Kind::integer, n, ""};
            pos_ = save;
        }
        bool expression = has(allowed, Kind::poly) || has(allowed, Kind::rational) || has(allowed, Kind::scalar);
        if (has(allowed, Kind::form) && (!expression || has_differential()))
            return Value{Kind::form, form_expr(std::nullopt), ""};
        if (has(allowed, Kind::scalar) && !has(allowed, Kind::poly) && !has(allowed, Kind::rational))
            return Value{Kind::scalar, scalar_expr(), ""};
        if (has(allowed, Kind::poly) || has(allowed, Kind::rational) || has(allowed, Kind::scalar)) {
            RationalFn r = sum(ring());
            if (has(allowed, Kind::poly) && r.is_polynomial()) return Value{Kind::poly, r.as_poly(), ""};
            if (has(allowed, Kind::rational)) return Value{Kind::rational, r, ""};
            if (has(allowed, Kind::scalar) && r.is_constant()) return Value{Kind::scalar, r.constant_value(), ""};
            fail(at, "expected a polynomial, got " + r.to_string());
        }
        fail(at, std::string("expected ") + kinds_text(allowed) + ", found " + describe(peek()));
    }

    // Whether the expression at the cursor mentions a differential dx_i.
    bool has_differential() const {
        if (!ring_) return false;
        int depth = 0;
        for (std::size_t k = pos_; k < toks_.size(); ++k) {
            const Token& t = toks_[k];
            if (t.kind == Tok::end || t.kind == Tok::newline) break;
            if (t.kind == Tok::punct) {
                if (t.text == "(") ++depth;
                else if (t.text == ")" && --depth < 0) break;
                else if (depth == 0 && (t.text == "," || t.text == ";")) break;
            }
            if (t.kind == Tok::ident)
                for (const auto& n : ring_->names)
                    if (t.text == "d" + n) return true;
        }
        return false;
    }

    bool at_value_end() const {
        return at_statement_end() || is_punct(",") || is_punct(")") || peek().kind == Tok::ident;
    }

    ProjectivePoint point_literal() {
        expect("(");
        ProjectivePoint p;
        do p.x.push_back(scalar_expr());
        while (accept(":"));
        expect(")");
        bool nonzero = false;
        for (const auto& s : p.x) nonzero = nonzero || !s.is_zero();
        if (!nonzero) fail(peek().at, "a projective point needs a nonzero coordinate");
        return p;
    }

    VectorField vfield_literal() {
        Location at = peek().at;
        auto c = tuple_of_rationals(",");
        VectorField v;
        for (const auto& r : c) {
            if (!r.is_polynomial()) fail(at, "vector field components must be polynomials");
            v.c.push_back(r.as_poly());
        }
        return v;
    }

    static bool is_function(const std::string& n) {
        static const char* fns[] = {"compose", "inverse", "monomial", "pullback", "jacobian", "lift",
                                    "vfield_form", "chazy", "cremona", "power"};
        for (auto f : fns)
            if (n == f) return true;
        return false;
    }

    Value function_call() {
        Location at = peek().at;
        std::string fn = next().text;
        expect("(");
        Value out{Kind::integer, 0L, ""};
        if (fn == "compose") {
            std::vector<Value> args{value({Kind::map, Kind::amap})};
            while (accept(",")) args.push_back(value({args.front().kind}));
            if (args.front().kind == Kind::map) {
                std::vector<RationalMap> maps;
                for (auto& a : args) maps.push_back(a.map());
                out = Value{Kind::map, evaluate(at, [&] { return compose_all(maps); }), ""};
            } else {
                AffineMap c = args.back().amap();
                for (std::size_t i = args.size() - 1; i-- > 0;) c = evaluate(at, [&] { return compose(args[i].amap(), c); });
                out = Value{Kind::amap, c, ""};
            }
        } else if (fn == "power") {
            Value f = value({Kind::map, Kind::amap});
            expect(",");
            Location nat = peek().at;
            long n = integer_literal();
            if (n < 0 || n > 64) fail(nat, "power must be between 0 and 64");
            if (f.kind == Kind::map) {
                RationalMap acc = RationalMap::identity(f.map().src_ring(), f.map().src_weights());
                for (long i = 0; i < n; ++i) acc = evaluate(at, [&] { return compose(f.map(), acc); });
                out = Value{Kind::map, acc, ""};
            } else {
                out = Value{Kind::amap, evaluate(at, [&] { return birfol::power(f.amap(), int(n)); }), ""};
            }
        } else if (fn == "inverse") {
            Value f = value({Kind::map});
            out = Value{Kind::map, evaluate(at, [&] { return linear_inverse(f.map()); }), ""};
        } else if (fn == "monomial") {
            long e[4];
            for (int i = 0; i < 4; ++i) {
                if (i) expect(",");
                e[i] = integer_literal();
            }
            out = Value{Kind::map, evaluate(at, [&] { return monomial_map(ring(), e[0], e[1], e[2], e[3]); }), ""};
        } else if (fn == "pullback") {
            Value f = value({Kind::map});
            expect(",");
            Value w = value({Kind::form});
            out = Value{Kind::form, evaluate(at, [&] { return pullback_form(f.map(), w.form()).form; }), ""};
        } else if (fn == "jacobian") {
            Value f = value({Kind::map});
            out = Value{Kind::poly, evaluate(at, [&] { return jacobian_det(f.map()); }), ""};
        } else if (fn == "lift") {
            Value d = value({Kind::derivation});
            expect(",");
            Value u = value({Kind::rational});
            out = Value{Kind::amap, evaluate(at, [&] { return lift(d.derivation().D, u.rational()); }), ""};
        } else if (fn == "vfield_form") {
            Value a = value({Kind::vfield});
            expect(",");
            Value b = value({Kind::vfield});
            std::optional<Weights> w;
            if (accept(",")) w = weights_literal();
            out = Value{Kind::form, evaluate(at, [&] { return form_from_vfield(a.vfield(), b.vfield(), w).value; }), ""};
        } else if (fn == "chazy") {
            Location kat = peek().at;
            std::string k = ident("IV, V or VI");
            ChazyKind kind;
            if (k == "IV") kind = ChazyKind::IV;
            else if (k == "V") kind = ChazyKind::V;
            else if (k == "VI") kind = ChazyKind::VI;
            else fail(kat, "unknown Chazy equation '" + k + "'");
            ChazyEquation eq = evaluate(at, [&] { return chazy(ring(), kind); });
            out = Value{Kind::chazy, DerivationValue{eq.W, eq}, ""};
        } else if (fn == "cremona") {
            Value w = value({Kind::form});
            out = Value{Kind::form, evaluate(at, [&] { return cremona_step(w.form()).transformed; }), ""};
        }
        expect(")");
        return out;
    }

    // ---- statements ----

    void statement(Scenario& sc) {
        const Token& t = peek();
        if (t.kind != Tok::ident) fail(t.at, "expected a statement, found " + describe(t));
        const std::string kw = t.text;
        if (kw == "field") return field_decl();
        if (kw == "ring") return ring_decl();
        if (kw == "vars") return vars_decl();
        if (kw == "use") return use_decl();
        if (kw == "sample") return sample_block(sc);
        if (kw == "assert") return assertion(sc);
        if (kw == "let") return let_decl();
        static const std::pair<const char*, Kind> kinds[] = {
            {"poly", Kind::poly},     {"rational", Kind::rational},     {"scalar", Kind::scalar},
            {"form", Kind::form},     {"vfield", Kind::vfield},         {"map", Kind::map},
            {"amap", Kind::amap},     {"derivation", Kind::derivation}, {"point", Kind::point},
            {"weights", Kind::weights}, {"integer", Kind::integer},
        };
        for (const auto& [name, kind] : kinds)
            if (kw == name) return definition(kind);
        fail(t.at, "unknown statement '" + kw + "'");
    }

    void field_decl() {
        Location at = next().at;
        if (field_used_) fail(at, "the field must be declared before any ring or definition");
        ident("a field name");
        expect("=");
        Location qat = peek().at;
        if (ident("Q") != "Q") fail(qat, "fields are Q or Q(g)");
        if (!accept("(")) {
            field_ = rational_field();
            end_statement();
            return;
        }
        std::string gen = ident("a generator name");
        expect(")");
        Location mat = peek().at;
        if (ident("minpoly") != "minpoly") fail(mat, "expected 'minpoly'");
        Ring r = make_ring(rational_field(), {gen});
        Location pat = peek().at;
        RationalFn m = sum(r);
        if (!m.is_polynomial()) fail(pat, "minimal polynomial must be a polynomial");
        Poly p = m.as_poly();
        if (p.degree_in(0) != 2) fail(pat, "minimal polynomial must be quadratic");
        Monomial e2, e1;
        e2.e[0] = 2;
        e1.e[0] = 1;
        Scalar lead = p.coefficient(e2);
        Rational b = (p.coefficient(e1) / lead).a0(), c = (p.constant_term() / lead).a0();
        if (rational_sqrt(b * b - 4 * c)) fail(pat, "minimal polynomial is reducible over Q");
        field_ = quadratic_field("Q(" + gen + ")", gen, b, c);
        end_statement();
    }

    void ring_decl() {
        next();
        Location at = peek().at;
        std::string name = ident("a ring name");
        if (rings_.count(name) || names_.count(name)) fail(at, "'" + name + "' is already defined");
        expect("=");
        ring_ = variables(true);
        rings_[name] = ring_;
        field_used_ = true;
        end_statement();
    }

    void vars_decl() {
        next();
        ring_ = variables(false);
        field_used_ = true;
        end_statement();
    }

    Ring variables(bool parenthesized) {
        Location at = peek().at;
        if (parenthesized) expect("(");
        std::vector<std::string> names;
        do {
            Location vat = peek().at;
            std::string v = ident("a variable name");
            if (std::find(names.begin(), names.end(), v) != names.end()) fail(vat, "variable '" + v + "' repeated");
            if (names_.count(v)) fail(vat, "'" + v + "' is already defined");
            if (field_->degree() == 2 && field_->generator() == v) fail(vat, "'" + v + "' is the field generator");
            names.push_back(v);
        } while (accept(","));
        if (parenthesized) expect(")");
        if (names.size() > kMaxVars) fail(at, "too many variables");
        return make_ring(field_, names);
    }

    void use_decl() {
        next();
        Location at = peek().at;
        std::string name = ident("a ring name");
        auto it = rings_.find(name);
        if (it == rings_.end()) fail(at, "unknown ring '" + name + "'");
        ring_ = it->second;
        end_statement();
    }

    void definition(Kind kind) {
        next();
        Location at = peek().at;
        std::string name = ident("a name");
        expect("=");
        Value v{Kind::integer, 0L, ""};
        if (kind == Kind::form) {
            v = value({Kind::form});
            if (is_word("weights")) {
                ++pos_;
                Location wat = peek().at;
                Weights w = weights_literal();
                OneForm f = v.form();
                if (w.size() != f.size()) fail(wat, "weights do not match the form");
                v.v = evaluate(wat, [&] { return OneForm(f.c, w); });
            }
        } else if (kind == Kind::derivation && is_punct("{")) {
            v = Value{Kind::derivation, DerivationValue{derivation_braces(), {}}, ""};
        } else {
            v = value({kind});
            if (kind == Kind::rational && v.kind == Kind::poly) v = Value{Kind::rational, RationalFn(v.poly()), ""};
        }
        define(name, at, std::move(v));
        end_statement();
    }

    Derivation derivation_braces() {
        Location at = peek().at;
        expect("{");
        const Ring& R = ring();
        std::vector<std::optional<RationalFn>> images(R->names.size());
        auto skip_newlines = [&] {
            while (peek().kind == Tok::newline) ++pos_;
        };
        skip_newlines();
        while (!is_punct("}")) {
            Location vat = peek().at;
            std::string v = ident("a variable");
            auto it = std::find(R->names.begin(), R->names.end(), v);
            if (it == R->names.end()) fail(vat, "'" + v + "' is not a variable of the current ring");
            std::size_t k = std::size_t(it - R->names.begin());
            if (images[k]) fail(vat, "image of '" + v + "' given twice");
            expect("->");
            images[k] = sum(R);
            skip_newlines();
            if (!accept(",")) break;
            skip_newlines();
        }
        expect("}");
        std::vector<RationalFn> out;
        for (std::size_t k = 0; k < images.size(); ++k) {
            if (!images[k]) fail(at, "missing image of '" + R->names[k] + "'");
            out.push_back(*images[k]);
        }
        return Derivation(R, out);
    }

    void let_decl() {
        next();
        Location at = peek().at;
        std::string name = ident("a name");
        expect("=");
        if (!(peek().kind == Tok::ident && is_function(peek().text) && is_punct("(", 1)))
            fail(peek().at, "let expects a function call such as compose(...) or pullback(...)");
        Value v = function_call();
        define(name, at, std::move(v));
        end_statement();
    }

    void sample_block(Scenario& sc) {
        next();
        Location at = peek().at;
        std::string var = ident("a sample variable");
        if (ident("'in'") != "in") fail(at, "expected 'in'");
        expect("(");
        std::vector<std::pair<Scalar, std::string>> values;
        do {
            std::size_t s = pos_;
            Scalar v = scalar_expr();
            values.emplace_back(v, source(s, pos_));
        } while (accept(","));
        expect(")");
        std::optional<long> degree;
        if (is_word("degree")) {
            ++pos_;
            Location dat = peek().at;
            degree = integer_literal();
            if (long(values.size()) <= *degree)
                fail(dat, "need more samples than the degree bound (" + std::to_string(values.size()) + " <= " +
                              std::to_string(*degree) + ")");
        }
        while (peek().kind == Tok::newline) ++pos_;
        expect("{");
        std::size_t body = pos_;
        int depth = 1;
        std::size_t close = pos_;
        for (; close < toks_.size(); ++close) {
            if (toks_[close].kind == Tok::end) fail(at, "unterminated sample block");
            if (toks_[close].kind != Tok::punct) continue;
            if (toks_[close].text == "{") ++depth;
            if (toks_[close].text == "}" && --depth == 0) break;
        }
        std::string list;
        for (const auto& [v, s] : values) list += (list.empty() ? "" : ", ") + s;
        auto saved_names = names_;
        Ring saved_ring = ring_;
        auto saved_suffix = sample_suffix_;
        auto saved_notes = sample_notes_;
        for (const auto& [v, text] : values) {
            define(var, at, Value{Kind::scalar, v, ""});
            sample_suffix_ = saved_suffix + " [" + var + " = " + text + "]";
            sample_notes_ = saved_notes;
            std::string note = "sampled at " + var + " in {" + list + "}";
            if (degree)
                note += "; degree bound " + std::to_string(*degree) + " in " + var + ", so " +
                        std::to_string(values.size()) + " samples determine the identity";
            sample_notes_.push_back(note);
            pos_ = body;
            while (pos_ < close) {
                if (peek().kind == Tok::newline || is_punct(";")) {
                    ++pos_;
                    continue;
                }
                statement(sc);
            }
            names_ = saved_names;
            ring_ = saved_ring;
        }
        sample_suffix_ = saved_suffix;
        sample_notes_ = saved_notes;
        pos_ = close + 1;
        end_statement();
    }

    void assertion(Scenario& sc) {
        std::size_t start = pos_;
        Assertion a;
        a.at = next().at;
        Location oat = peek().at;
        std::string opname = ident("an operation name");
        a.op = find_op(opname);
        if (!a.op) fail(oat, "unknown operation '" + opname + "'");
        a.ring = ring();
        expect("(");
        const auto& specs = a.op->args;
        for (std::size_t i = 0; i < specs.size(); ++i) {
            if (i > 0) {
                if (is_punct(")"))
                    fail(peek().at, opname + " expects " + arity_text(*a.op) + " arguments");
                expect(",");
            }
            a.args.push_back(value(specs[i].kinds));
            if (specs[i].variadic)
                while (accept(",")) a.args.push_back(value(specs[i].kinds));
        }
        if (is_punct(",")) fail(peek().at, opname + " expects " + arity_text(*a.op) + " arguments");
        expect(")");
        if (a.op->same_kind)
            for (std::size_t i = 1; i < a.args.size(); ++i)
                if (a.args[i].kind != a.args[0].kind)
                    fail(oat, opname + " compares a " + kind_name(a.args[0].kind) + " with a " + kind_name(a.args[i].kind));
        clauses(a);
        a.text = source(start + 1, pos_) + sample_suffix_;
        for (const auto& n : sample_notes_) a.notes.insert(a.notes.begin(), n);
        if (!a.expect_failure && a.clauses.empty() && !a.op->fact("holds"))
            fail(a.at, opname + " needs an expected outcome (for example '== ...')");
        end_statement();
        sc.assertions.push_back(std::move(a));
    }

    static std::string arity_text(const OpSpec& op) {
        std::size_t n = op.args.size();
        bool variadic = !op.args.empty() && op.args.back().variadic;
        return (variadic ? "at least " : "") + std::to_string(n);
    }

    void need_fact(const Assertion& a, const std::string& fact, Location at, const std::string& clause) {
        if (!a.op->fact(fact)) fail(at, "'" + clause + "' does not apply to " + a.op->name);
    }

    void clauses(Assertion& a) {
        while (!at_statement_end()) {
            std::size_t start = pos_;
            Location at = peek().at;
            Clause c;
            c.type = Clause::Type::is;
            c.at = at;
            if (accept("==") || is_punct("~")) {
                bool prop = pos_ == start && accept("~");
                need_fact(a, "value", at, prop ? "~" : "==");
                FactKind fk = *a.op->fact("value");
                if (prop && fk != FactKind::poly && fk != FactKind::rational && fk != FactKind::form && fk != FactKind::map)
                    fail(at, "'~' compares polynomials, forms or maps up to a scalar");
                c.type = Clause::Type::compare;
                c.fact = "value";
                c.flag = prop;
                c.value = expected_value(fk);
            } else {
                std::string w = ident("a clause");
                if (w == "is") {
                    Location wat = peek().at;
                    std::string what = ident("true, false, present or absent");
                    if (what != "true" && what != "false" && what != "present" && what != "absent")
                        fail(wat, "expected true, false, present or absent");
                    need_fact(a, "holds", at, "is");
                    c.type = Clause::Type::is;
                    c.fact = "holds";
                    c.flag = what == "true" || what == "present";
                    c.word = what;
                } else if (w == "factor" || w == "cofactor") {
                    need_fact(a, w, at, w);
                    c.type = Clause::Type::compare;
                    c.fact = w;
                    c.flag = accept("~");
                    c.value = expected_value(FactKind::poly);
                } else if (w == "dim" || w == "points" || w == "sum" || w == "nu" || w == "l" || w == "degree") {
                    need_fact(a, w, at, w);
                    c.type = Clause::Type::integer;
                    c.fact = w;
                    c.number = integer_literal();
                } else if (w == "mu" || w == "order") {
                    need_fact(a, w, at, w);
                    c.type = w == "mu" ? Clause::Type::mu : Clause::Type::order;
                    c.fact = w;
                    const char* none = w == "mu" ? "infinite" : "none";
                    if (is_word(none)) ++pos_;
                    else c.number = integer_literal();
                } else if (w == "class") {
                    need_fact(a, "class", at, w);
                    c.type = Clause::Type::word;
                    c.fact = "class";
                    c.word = ident("a class name");
                    while (accept("-")) c.word += "-" + ident("a class name");
                    static const char* known[] = {"regular", "nondegenerate", "radial", "nilpotent", "degenerate-other"};
                    if (std::find_if(std::begin(known), std::end(known), [&](const char* k) { return c.word == k; }) ==
                        std::end(known))
                        fail(at, "unknown class '" + c.word + "'");
                } else if (w == "dicritical") {
                    need_fact(a, "dicritical", at, w);
                    c.type = Clause::Type::is;
                    c.fact = "dicritical";
                    std::string b = ident("true or false");
                    if (b != "true" && b != "false") fail(at, "expected true or false");
                    c.flag = b == "true";
                    c.word = b;
                } else if (w == "exceptional") {
                    need_fact(a, "exceptional", at, w);
                    c.type = Clause::Type::is;
                    c.fact = "exceptional";
                    std::string b = ident("invariant or dicritical");
                    if (b != "invariant" && b != "dicritical") fail(at, "expected invariant or dicritical");
                    c.flag = b == "invariant";
                    c.word = b;
                } else if (w == "ratio") {
                    need_fact(a, "ratio", at, w);
                    c.type = Clause::Type::ratio;
                    c.fact = "ratio";
                    expect("(");
                    Scalar p = scalar_expr();
                    expect(":");
                    Scalar q = scalar_expr();
                    expect(")");
                    c.ratio = std::make_pair(p, q);
                } else if (w == "spans") {
                    need_fact(a, "basis", at, w);
                    c.type = Clause::Type::spans;
                    c.fact = "basis";
                    c.value = value({Kind::form});
                } else if (w == "scalar") {
                    need_fact(a, "scalar", at, w);
                    c.type = Clause::Type::compare;
                    c.fact = "scalar";
                    c.value = Value{Kind::scalar, scalar_expr(), ""};
                } else if (w == "balanced") {
                    need_fact(a, "balanced", at, w);
                    c.type = Clause::Type::balanced;
                    c.fact = "balanced";
                } else if (w == "fails") {
                    a.expect_failure = true;
                    if (peek().kind == Tok::ident && !is_clause_word(peek().text)) {
                        a.failure_code = ident("an error code");
                        while (accept("-")) a.failure_code += "-" + ident("an error code");
                    }
                    continue;
                } else if (w == "origin") {
                    Location oat = peek().at;
                    a.origin = ident("published, computed or trivial");
                    if (a.origin != "published" && a.origin != "computed" && a.origin != "trivial")
                        fail(oat, "origin is published, computed or trivial");
                    continue;
                } else if (w == "note") {
                    if (peek().kind != Tok::string) fail(peek().at, "note expects a quoted string");
                    a.notes.push_back(next().text);
                    continue;
                } else {
                    fail(at, "unknown clause '" + w + "'");
                }
            }
            c.text = source(start, pos_);
            a.clauses.push_back(std::move(c));
        }
    }

    static bool is_clause_word(const std::string& w) {
        static const char* words[] = {"is", "factor", "cofactor", "dim", "points", "sum", "nu", "l", "degree",
                                      "mu", "order", "class", "dicritical", "exceptional", "ratio", "spans",
                                      "scalar", "balanced", "fails", "origin", "note"};
        for (auto x : words)
            if (w == x) return true;
        return false;
    }

    Value expected_value(FactKind fk) {
        switch (fk) {
        case FactKind::poly: return value({Kind::poly});
        case FactKind::rational: return value({Kind::rational});
        case FactKind::form: return value({Kind::form});
        case FactKind::map: return value({Kind::map});
        case FactKind::amap: return value({Kind::amap});
        case FactKind::scalar: return Value{Kind::scalar, scalar_expr(), ""};
        case FactKind::integer: return Value{Kind::integer, integer_literal(), ""};
        case FactKind::text: {
            std::string n = ident("a name");
            return Value{Kind::name, n, n};
        }
        case FactKind::tuple: {
            expect("(");
            std::vector<int> v;
            do v.push_back(int(integer_literal()));
            while (accept(","));
            expect(")");
            return Value{Kind::weights, Weights{v}, ""};
        }
        default: fail(peek().at, "this result cannot be compared");
        }
    }

    std::string src_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    Field field_ = rational_field();
    bool field_used_ = false;
    std::map<std::string, Ring> rings_;
    Ring ring_;
    std::map<std::string, Binding> names_;
    std::string sample_suffix_;
    std::vector<std::string> sample_notes_;
};

inline Scenario parse_scenario(const std::string& text, const std::string& name = "scenario") {
    return Parser(text).parse(name);
}

}  // namespace birfol::frontend
