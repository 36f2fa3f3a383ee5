#pragma once

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"

#include "birfol/frontend/parser.hpp"

namespace birfol::frontend {

enum class Status { pass, fail, unresolved, error };

inline const char* status_name(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::unresolved: return "unresolved";
    case Status::error: return "error";
    }
    return "?";
}

struct AssertionResult {
    Location at;
    std::string text;
    std::string op;
    Status status = Status::pass;
    std::vector<std::string> details;
    std::vector<std::pair<std::string, std::string>> certificates;
    std::string origin;
    std::vector<std::string> notes;
    double millis = 0;
};

struct Report {
    std::string suite;
    std::vector<AssertionResult> results;

    std::size_t count(Status s) const {
        std::size_t n = 0;
        for (const auto& r : results) n += r.status == s;
        return n;
    }
    bool ok() const { return count(Status::pass) == results.size(); }
};

namespace detail {

struct Verdict {
    Status status;
    std::string detail;
};

inline Verdict pass() { return {Status::pass, ""}; }
inline Verdict mismatch(const std::string& what, const std::string& expected, const std::string& got) {
    return {Status::fail, what + ": expected " + expected + ", got " + got};
}

inline bool same_poly(const Poly& a, const Poly& b, bool proportional) {
    if (!compatible(a.ring(), b.ring())) return false;
    Poly bb = b.with_ring(a.ring());
    if (!proportional) return a == bb;
    if (a.is_zero() || bb.is_zero()) return a.is_zero() && bb.is_zero();
    return proportionality(std::vector<Poly>{a}, std::vector<Poly>{bb}).has_value();
}

inline bool same_form(const OneForm& a, const OneForm& b, bool proportional) {
    if (a.size() != b.size() || !compatible(a.ring(), b.ring()) || !(a.w == b.w)) return false;
    std::vector<Poly> bc;
    for (const auto& p : b.c) bc.push_back(p.with_ring(a.ring()));
    if (!proportional) return a.c == bc;
    return proportionality(a.c, bc).has_value();
}

inline bool same_map(const RationalMap& a, const RationalMap& b, bool proportional) {
    if (a.size() != b.size() || !compatible(a.src_ring(), b.src_ring()) || !(a.dst_weights() == b.dst_weights()))
        return false;
    if (proportional) return equal_up_to_scale(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i].with_ring(a.src_ring())) return false;
    return true;
}

inline Verdict compare(const Clause& c, const Fact& f) {
    const Value& e = *c.value;
    bool ok = false;
    switch (f.kind) {
    case FactKind::poly: ok = same_poly(std::get<Poly>(f.v), e.poly(), c.flag); break;
    case FactKind::rational: {
        const RationalFn& a = std::get<RationalFn>(f.v);
        RationalFn b = e.as_rational(a.ring());
        if (compatible(a.ring(), b.ring())) {
            b = b.with_ring(a.ring());
            ok = c.flag ? ratio_constant(a, b).has_value() : a == b;
        }
        break;
    }
    case FactKind::form: ok = same_form(std::get<OneForm>(f.v), e.form(), c.flag); break;
    case FactKind::map: ok = same_map(std::get<RationalMap>(f.v), e.map(), c.flag); break;
    case FactKind::amap: {
        const AffineMap& a = std::get<AffineMap>(f.v);
        const AffineMap& b = e.amap();
        ok = compatible(a.ring(), b.ring()) && a.components().size() == b.components().size();
        for (std::size_t i = 0; ok && i < a.components().size(); ++i)
            ok = a.components()[i] == b.components()[i].with_ring(a.ring());
        break;
    }
    case FactKind::scalar: ok = std::get<Scalar>(f.v) == e.scalar(); break;
    case FactKind::integer: ok = std::get<long>(f.v) == e.integer(); break;
    case FactKind::text: ok = std::get<std::string>(f.v) == e.name(); break;
    case FactKind::tuple: {
        const auto& t = std::get<std::vector<long>>(f.v);
        const auto& w = e.weights().w;
        ok = t.size() == w.size() && std::equal(t.begin(), t.end(), w.begin());
        break;
    }
    default: return {Status::error, "cannot compare " + c.fact};
    }
    if (ok) return pass();
    std::string expected = (c.flag ? "a multiple of " : "") + e.to_string();
    return mismatch(c.fact, expected, f.to_string());
}

inline Verdict check(const Clause& c, const Facts& facts) {
    const Fact* f = facts.find(c.fact);
    if (!f) return {Status::fail, c.text + ": no " + c.fact + " was reported"};
    switch (c.type) {
    case Clause::Type::is: {
        bool got = std::get<bool>(f->v);
        if (got == c.flag) return pass();
        std::string neg = c.word == "true" ? "false" : c.word == "false" ? "true" : c.word == "present" ? "absent"
                          : c.word == "absent" ? "present" : c.word == "invariant" ? "dicritical"
                          : c.word == "dicritical" ? "invariant" : (got ? "true" : "false");
        return mismatch(c.fact == "holds" ? "result" : c.fact, c.word, neg);
    }
    case Clause::Type::compare: return compare(c, *f);
    case Clause::Type::integer: {
        long got = std::get<long>(f->v);
        if (got == *c.number) return pass();
        return mismatch(c.fact, std::to_string(*c.number), std::to_string(got));
    }
    case Clause::Type::mu:
    case Clause::Type::order: {
        auto got = std::get<std::optional<long>>(f->v);
        if (got == c.number) return pass();
        const char* none = c.type == Clause::Type::mu ? "infinite" : "none";
        return mismatch(c.fact, c.number ? std::to_string(*c.number) : none, f->to_string());
    }
    case Clause::Type::word: {
        const auto& got = std::get<std::string>(f->v);
        if (got == c.word) return pass();
        return mismatch(c.fact, c.word, got);
    }
    case Clause::Type::ratio: {
        const auto& r = std::get<EigenRatio>(f->v);
        if (r.matches(c.ratio->first, c.ratio->second)) return pass();
        return mismatch("ratio", c.ratio->first.to_string() + ":" + c.ratio->second.to_string(), r.to_string());
    }
    case Clause::Type::spans: {
        const auto& basis = std::get<std::vector<OneForm>>(f->v);
        if (in_span(basis, c.value->form())) return pass();
        return {Status::fail, c.value->label + " is not in the span of the " + std::to_string(basis.size()) + " basis forms"};
    }
    case Clause::Type::balanced: {
        auto b = std::get<std::optional<bool>>(f->v);
        if (!b) return {Status::unresolved, "blow-up balance: points on the exceptional line are unresolved"};
        if (*b) return pass();
        return {Status::fail, "blow-up balance does not hold"};
    }
    }
    return {Status::error, "unknown clause"};
}

inline int severity(Status s) {
    switch (s) {
    case Status::pass: return 0;
    case Status::unresolved: return 1;
    case Status::fail: return 2;
    case Status::error: return 3;
    }
    return 3;
}

inline Status worse(Status a, Status b) { return severity(a) >= severity(b) ? a : b; }

}  // namespace detail

inline AssertionResult run_assertion(const Assertion& a) {
    AssertionResult r;
    r.at = a.at;
    r.text = a.text;
    r.op = a.op->name;
    r.origin = a.origin;
    r.notes = a.notes;
    auto t0 = std::chrono::steady_clock::now();
    try {
        Facts facts = a.op->run(a.args, a.ring);
        r.certificates = facts.certificates;
        if (a.expect_failure) {
            r.status = Status::fail;
            r.details.push_back("expected a failure, but the operation succeeded");
        } else if (a.clauses.empty()) {
            const Fact* h = facts.find("holds");
            if (!std::get<bool>(h->v)) {
                r.status = Status::fail;
                r.details.push_back("result: expected true, got false");
            }
        } else {
            for (const auto& c : a.clauses) {
                detail::Verdict v = detail::check(c, facts);
                r.status = detail::worse(r.status, v.status);
                if (!v.detail.empty()) r.details.push_back(v.detail);
            }
        }
    } catch (const Error& e) {
        std::string code = error_code_name(e.code());
        if (a.expect_failure && (a.failure_code.empty() || a.failure_code == code)) {
            r.status = Status::pass;
            r.certificates.emplace_back("failed as expected", e.what());
        } else {
            r.status = Status::fail;
            r.details.push_back(std::string("domain error: ") + e.what());
            if (a.expect_failure) r.details.push_back("expected error code " + a.failure_code);
        }
    } catch (const std::exception& e) {
        r.status = Status::error;
        r.details.push_back(std::string("internal error: ") + e.what());
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline Report run(const Scenario& sc) {
    Report rep{sc.name, {}};
    for (const auto& a : sc.assertions) rep.results.push_back(run_assertion(a));
    return rep;
}

struct OutputOptions {
    bool timing = false;
    std::size_t max_width = 160;  // longer certificates are abbreviated in text output
};

inline std::string abbreviate(const std::string& s, std::size_t width) {
    if (s.size() <= width) return s;
    return s.substr(0, width - 40) + " ... [" + std::to_string(s.size()) + " chars]";
}

inline std::string summary_line(const Report& r) {
    return std::to_string(r.results.size()) + " assertions: " + std::to_string(r.count(Status::pass)) + " pass, " +
           std::to_string(r.count(Status::fail)) + " fail, " + std::to_string(r.count(Status::unresolved)) +
           " unresolved, " + std::to_string(r.count(Status::error)) + " error";
}

inline std::string format_text(const Report& r, const OutputOptions& opt = {}) {
    std::string out = "suite " + r.suite + "\n";
    for (const auto& a : r.results) {
        std::string tag = a.status == Status::pass ? "pass" : a.status == Status::fail ? "FAIL"
                          : a.status == Status::unresolved ? "UNRESOLVED" : "ERROR";
        out += "  " + tag + std::string(tag.size() < 10 ? 11 - tag.size() : 1, ' ');
        if (a.at.line > 0) out += "line " + std::to_string(a.at.line) + ": ";
        out += a.text;
        if (opt.timing) {
            char buf[32];
            std::snprintf(buf, sizeof buf, " (%.1f ms)", a.millis);
            out += buf;
        }
        out += "\n";
        for (const auto& d : a.details) out += "             " + abbreviate(d, opt.max_width) + "\n";
        for (const auto& [k, v] : a.certificates) out += "             " + k + ": " + abbreviate(v, opt.max_width) + "\n";
        if (!a.origin.empty()) out += "             origin: " + a.origin + "\n";
        for (const auto& n : a.notes) out += "             note: " + n + "\n";
    }
    out += summary_line(r) + "\n";
    return out;
}

inline nlohmann::ordered_json to_json(const Report& r, const OutputOptions& opt = {}) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["assertions"] = nlohmann::ordered_json::array();
    for (const auto& a : r.results) {
        nlohmann::ordered_json x;
        if (a.at.line > 0) {
            x["line"] = a.at.line;
            x["column"] = a.at.column;
        }
        x["op"] = a.op;
        x["text"] = a.text;
        x["status"] = status_name(a.status);
        x["details"] = a.details;
        nlohmann::ordered_json certs = nlohmann::ordered_json::array();
        for (const auto& [k, v] : a.certificates) certs.push_back({{"name", k}, {"value", v}});
        x["certificates"] = certs;
        if (!a.origin.empty()) x["origin"] = a.origin;
        if (!a.notes.empty()) x["notes"] = a.notes;
        if (opt.timing) x["time_ms"] = a.millis;
        j["assertions"].push_back(std::move(x));
    }
    j["summary"] = {{"total", r.results.size()},
                    {"pass", r.count(Status::pass)},
                    {"fail", r.count(Status::fail)},
                    {"unresolved", r.count(Status::unresolved)},
                    {"error", r.count(Status::error)}};
    return j;
}

}  // namespace birfol::frontend
