#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "birfol/frontend/lexer.hpp"
#include "birfol/frontend/values.hpp"

namespace birfol::frontend {

// What an operation reports, by fact name. Clauses compare against these.
enum class FactKind { boolean, tri, integer, mu, order, text, poly, rational, form, map, amap, scalar, ratio, tuple, basis };

struct Fact {
    FactKind kind;
    std::variant<bool, std::optional<bool>, long, std::optional<long>, std::string, Poly, RationalFn, OneForm,
                 RationalMap, AffineMap, Scalar, EigenRatio, std::vector<long>, std::vector<OneForm>>
        v;

    std::string to_string() const {
        switch (kind) {
        case FactKind::boolean: return std::get<bool>(v) ? "true" : "false";
        case FactKind::tri: {
            auto b = std::get<std::optional<bool>>(v);
            return b ? (*b ? "true" : "false") : "unresolved";
        }
        case FactKind::integer: return std::to_string(std::get<long>(v));
        case FactKind::mu: {
            auto m = std::get<std::optional<long>>(v);
            return m ? std::to_string(*m) : "infinite";
        }
        case FactKind::order: {
            auto m = std::get<std::optional<long>>(v);
            return m ? std::to_string(*m) : "none";
        }
        case FactKind::text: return std::get<std::string>(v);
        case FactKind::poly: return std::get<Poly>(v).to_string();
        case FactKind::rational: return std::get<RationalFn>(v).to_string();
        case FactKind::form: return std::get<OneForm>(v).to_string();
        case FactKind::map: return std::get<RationalMap>(v).to_string();
        case FactKind::amap: return std::get<AffineMap>(v).to_string();
        case FactKind::scalar: return std::get<Scalar>(v).to_string();
        case FactKind::ratio: return std::get<EigenRatio>(v).to_string();
        case FactKind::tuple: {
            const auto& t = std::get<std::vector<long>>(v);
            std::string s = "(";
            for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + std::to_string(t[i]);
            return s + ")";
        }
        case FactKind::basis: return std::to_string(std::get<std::vector<OneForm>>(v).size()) + " forms";
        }
        return "";
    }
};

struct Facts {
    std::map<std::string, Fact> values;
    std::vector<std::pair<std::string, std::string>> certificates;

    template <class T>
    void set(const std::string& name, FactKind k, T value) {
        values.insert_or_assign(name, Fact{k, std::move(value)});
    }
    void cert(const std::string& key, const std::string& value) { certificates.emplace_back(key, value); }
    const Fact* find(const std::string& name) const {
        auto it = values.find(name);
        return it == values.end() ? nullptr : &it->second;
    }
};

struct ArgSpec {
    std::vector<Kind> kinds;
    bool variadic = false;  // one or more
};

struct OpSpec {
    std::string name;
    std::vector<ArgSpec> args;
    std::vector<std::pair<std::string, FactKind>> facts;
    std::function<Facts(const std::vector<Value>&, const Ring&)> run;
    bool same_kind = false;  // all arguments must share one kind

    std::optional<FactKind> fact(const std::string& n) const {
        for (const auto& [k, v] : facts)
            if (k == n) return v;
        return std::nullopt;
    }
};

namespace detail {

inline Facts holds(bool b) {
    Facts f;
    f.set("holds", FactKind::boolean, b);
    return f;
}

inline std::vector<Poly> polys(const std::vector<Value>& a, std::size_t from) {
    std::vector<Poly> out;
    for (std::size_t i = from; i < a.size(); ++i) out.push_back(a[i].poly());
    return out;
}

inline const Derivation& derivation_of(const Value& v) { return v.derivation().D; }

inline std::string residual_text(const Verification& v) { return v.ok ? "0" : v.residual.to_string(); }

// Coordinates of the form's coefficients on the monomial basis, as a row.
inline std::vector<std::pair<std::pair<std::size_t, std::vector<std::uint16_t>>, Scalar>> coords(const OneForm& w) {
    std::vector<std::pair<std::pair<std::size_t, std::vector<std::uint16_t>>, Scalar>> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (const auto& t : w.c[i].terms())
            out.push_back({{i, std::vector<std::uint16_t>(t.m.e.begin(), t.m.e.end())}, w.c[i].scalar(t.c)});
    return out;
}

inline bool in_span(const std::vector<OneForm>& basis, const OneForm& x) {
    std::map<std::pair<std::size_t, std::vector<std::uint16_t>>, std::size_t> index;
    std::vector<std::vector<std::pair<std::pair<std::size_t, std::vector<std::uint16_t>>, Scalar>>> rows;
    for (const auto& b : basis) rows.push_back(coords(b));
    rows.push_back(coords(x));
    for (const auto& r : rows)
        for (const auto& [k, s] : r) index.emplace(k, index.size());
    const Field& K = x.ring()->field;
    auto rank_of = [&](std::size_t n) {
        Matrix m(K, n, std::max<std::size_t>(index.size(), 1));
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& [k, s] : rows[i]) m.set(i, index[k], s);
        return m.rank();
    };
    return rank_of(basis.size()) == rank_of(basis.size() + 1);
}

inline std::optional<Scalar> ratio_constant(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) return std::nullopt;
    RationalFn q = a / b.with_ring(a.ring());
    if (!q.is_constant() || q.is_zero()) return std::nullopt;
    return q.constant_value();
}

}  // namespace detail

inline const std::vector<OpSpec>& op_table() {
    using K = Kind;
    using F = FactKind;
    static const std::vector<OpSpec> table = [] {
        std::vector<OpSpec> t;
        auto add = [&](std::string name, std::vector<ArgSpec> args, std::vector<std::pair<std::string, FactKind>> facts,
                       std::function<Facts(const std::vector<Value>&, const Ring&)> run, bool same = false) {
            t.push_back({std::move(name), std::move(args), std::move(facts), std::move(run), same});
        };

        add("invariant_curve", {{{K::form}}, {{K::poly}}}, {{"holds", F::boolean}}, [](const auto& a, const Ring&) {
            auto c = invariant_curve(a[0].form(), a[1].poly());
            Facts f = detail::holds(c.has_value());
            if (c) f.cert("cofactor", c->to_string());
            else f.cert("witness", "dg ^ w is not divisible by g");
            return f;
        });

        add("euler_check", {{{K::form}}}, {{"holds", F::boolean}},
            [](const auto& a, const Ring&) { return detail::holds(euler_check(a[0].form())); });

        add("foliation_degree", {{{K::form}}}, {{"value", F::integer}}, [](const auto& a, const Ring&) {
            Facts f;
            f.set("value", F::integer, long(foliation_degree(a[0].form())));
            return f;
        });

        add("tangent_foliation_space", {{{K::integer}}, {{K::poly}, true}}, {{"dim", F::integer}, {"basis", F::basis}},
            [](const auto& a, const Ring&) {
                auto curves = detail::polys(a, 1);
                auto basis = tangent_foliation_space(curves.front().ring(), curves, int(a[0].integer()));
                Facts f;
                f.set("dim", F::integer, long(basis.size()));
                for (std::size_t i = 0; i < basis.size() && i < 3; ++i)
                    f.cert("basis " + std::to_string(i + 1), basis[i].to_string());
                f.set("basis", F::basis, std::move(basis));
                return f;
            });

        auto pullback = [](bool weighted) {
            return [weighted](const std::vector<Value>& a, const Ring&) {
                Pullback pb = weighted ? weighted_pullback(a[0].map(), a[1].form()) : pullback_form(a[0].map(), a[1].form());
                Facts f;
                f.cert("factor", pb.factor.to_string());
                f.cert("form", pb.form.to_string());
                f.set("value", F::form, pb.form);
                f.set("factor", F::poly, pb.factor);
                return f;
            };
        };
        add("pullback_form", {{{K::map}}, {{K::form}}}, {{"value", F::form}, {"factor", F::poly}}, pullback(false));
        add("weighted_pullback", {{{K::map}}, {{K::form}}}, {{"value", F::form}, {"factor", F::poly}}, pullback(true));

        add("compose", {{{K::map}, true}}, {{"value", F::map}, {"factor", F::poly}}, [](const auto& a, const Ring&) {
            std::vector<RationalMap> maps;
            for (const auto& v : a) maps.push_back(v.map());
            RationalMap c = compose_all(maps);
            Facts f;
            f.cert("map", c.to_string());
            f.cert("factor", c.extracted().to_string());
            f.set("value", F::map, c);
            f.set("factor", F::poly, c.extracted());
            return f;
        });

        add("compose_affine", {{{K::amap}, true}}, {{"value", F::amap}}, [](const auto& a, const Ring&) {
            AffineMap c = a.back().amap();
            for (std::size_t i = a.size() - 1; i-- > 0;) c = compose(a[i].amap(), c);
            Facts f;
            f.cert("map", c.to_string());
            f.set("value", F::amap, c);
            return f;
        });

        add("jacobian_det", {{{K::map}}}, {{"value", F::poly}}, [](const auto& a, const Ring&) {
            Facts f;
            Poly j = jacobian_det(a[0].map());
            f.cert("jacobian", j.to_string());
            f.set("value", F::poly, j);
            return f;
        });

        add("order_up_to_scale", {{{K::map}}, {{K::integer}}}, {{"order", F::order}}, [](const auto& a, const Ring&) {
            Facts f;
            auto o = order_up_to_scale(a[0].map(), int(a[1].integer()));
            f.set("order", F::order, o ? std::optional<long>(*o) : std::nullopt);
            return f;
        });

        add("affine_order", {{{K::amap}}, {{K::integer}}}, {{"order", F::order}}, [](const auto& a, const Ring&) {
            Facts f;
            auto o = affine_order(a[0].amap(), int(a[1].integer()));
            f.set("order", F::order, o ? std::optional<long>(*o) : std::nullopt);
            return f;
        });

        add("fixed_locus_contains", {{{K::map}}, {{K::poly}}}, {{"holds", F::boolean}}, [](const auto& a, const Ring&) {
            return detail::holds(fixed_locus_contains(a[0].map(), a[1].poly()));
        });

        add("preserves_pencil", {{{K::map}}, {{K::poly}}, {{K::poly}}}, {{"holds", F::boolean}, {"factor", F::poly}},
            [](const auto& a, const Ring&) {
                auto p = preserves_pencil(a[0].map(), a[1].poly(), a[2].poly());
                Facts f = detail::holds(p.has_value());
                if (p) {
                    f.cert("common factor", p->common.to_string());
                    f.cert("action", "[[" + p->M.at(0, 0).to_string() + ", " + p->M.at(0, 1).to_string() + "], [" +
                                         p->M.at(1, 0).to_string() + ", " + p->M.at(1, 1).to_string() + "]]");
                    f.set("factor", F::poly, p->common);
                }
                return f;
            });

        add("monomial_map", {{{K::integer}}, {{K::integer}}, {{K::integer}}, {{K::integer}}}, {{"value", F::map}},
            [](const auto& a, const Ring& r) {
                RationalMap m = monomial_map(r, a[0].integer(), a[1].integer(), a[2].integer(), a[3].integer());
                Facts f;
                f.cert("map", m.to_string());
                f.set("value", F::map, m);
                return f;
            });

        add("image_satisfies", {{{K::map}}, {{K::poly}}}, {{"holds", F::boolean}},
            [](const auto& a, const Ring&) { return detail::holds(image_satisfies(a[0].map(), a[1].poly())); });

        add("analyze", {{{K::form}}, {{K::point}}},
            {{"holds", F::boolean}, {"nu", F::integer}, {"l", F::integer}, {"mu", F::mu}, {"class", F::text},
             {"ratio", F::ratio}, {"dicritical", F::boolean}, {"balanced", F::tri}},
            [](const auto& a, const Ring&) {
                LocalFoliation L = localize(a[0].form(), a[1].point());
                SingularityReport s = analyze(L);
                Facts f = detail::holds(s.singular);
                f.set("nu", F::integer, long(s.nu));
                f.set("l", F::integer, long(s.l));
                f.set("mu", F::mu, s.milnor);
                f.set("class", F::text, std::string(classification_name(s.classification)));
                f.set("ratio", F::ratio, s.ratio);
                f.set("dicritical", F::boolean, s.dicritical);
                f.cert("local form", L.to_string());
                f.cert("class", classification_name(s.classification));
                if (s.singular) {
                    f.cert("nu", std::to_string(s.nu));
                    f.cert("l", std::to_string(s.l));
                    f.cert("mu", s.milnor_string());
                    f.cert("ratio", s.ratio.to_string());
                }
                if (s.singular && !s.dicritical) {
                    MilnorBalance m = milnor_balance(L);
                    f.set("balanced", F::tri, m.resolved ? std::optional<bool>(m.balanced()) : std::nullopt);
                    f.cert("blow-up balance", (m.mu < 0 ? std::string("infinite") : std::to_string(m.mu)) +
                                                  " vs l(l-1) - 1 + sum on E = " + std::to_string(m.predicted) +
                                                  (m.resolved ? "" : " (unresolved)"));
                }
                return f;
            });

        add("milnor_fulton", {{{K::poly}}, {{K::poly}}}, {{"mu", F::mu}}, [](const auto& a, const Ring&) {
            Facts f;
            auto m = milnor_fulton(a[0].poly(), a[1].poly());
            f.set("mu", F::mu, m);
            f.cert("mu", m ? std::to_string(*m) : "infinite");
            return f;
        });

        add("blow_up", {{{K::form}}, {{K::point}}},
            {{"points", F::integer}, {"exceptional", F::boolean}, {"balanced", F::tri}, {"sum", F::integer}},
            [](const auto& a, const Ring&) {
                LocalFoliation L = localize(a[0].form(), a[1].point());
                BlowUp b = blow_up(L);
                Facts f;
                f.set("points", F::integer, long(b.points.size()));
                f.set("exceptional", F::boolean, b.exceptional_invariant);
                f.set("sum", F::integer, b.milnor_sum());
                f.cert("exceptional line", b.exceptional_invariant ? "invariant" : "dicritical");
                for (const auto& p : b.points)
                    f.cert(p.where, std::string(classification_name(p.report.classification)) + ", mu = " +
                                        p.report.milnor_string() + ", ratio " + p.report.ratio.to_string());
                for (int d : b.unresolved_degrees) f.cert("unresolved factor", "degree " + std::to_string(d));
                SingularityReport s = analyze(L);
                if (s.singular && !s.dicritical) {
                    MilnorBalance m = milnor_balance(L);
                    f.set("balanced", F::tri, m.resolved ? std::optional<bool>(m.balanced()) : std::nullopt);
                    f.cert("blow-up balance", (m.mu < 0 ? std::string("infinite") : std::to_string(m.mu)) +
                                                  " vs l(l-1) - 1 + sum on E = " + std::to_string(m.predicted));
                }
                return f;
            });

        add("darboux_check", {{{K::form}}, {{K::point}, true}},
            {{"holds", F::boolean}, {"sum", F::integer}, {"degree", F::integer}}, [](const auto& a, const Ring&) {
                std::vector<ProjectivePoint> pts;
                for (std::size_t i = 1; i < a.size(); ++i) pts.push_back(a[i].point());
                DarbouxReport d = darboux_check(a[0].form(), pts);
                Facts f = detail::holds(d.complete());
                f.set("sum", F::integer, d.sum);
                f.set("degree", F::integer, long(d.degree));
                f.cert("sum of mu", std::to_string(d.sum));
                f.cert("d^2 + d + 1", std::to_string(d.expected));
                return f;
            });

        add("cremona_predict", {{{K::integer}}, {{K::integer}}, {{K::integer}}, {{K::integer}}}, {{"value", F::tuple}},
            [](const auto& a, const Ring&) {
                CremonaPrediction p =
                    cremona_predict(int(a[0].integer()), int(a[1].integer()), int(a[2].integer()), int(a[3].integer()));
                Facts f;
                f.cert("prediction", p.to_string());
                f.set("value", F::tuple, std::vector<long>{p.degree, p.l[0], p.l[1], p.l[2]});
                return f;
            });

        add("cremona_step", {{{K::form}}}, {{"holds", F::boolean}, {"value", F::form}, {"degree", F::integer}},
            [](const auto& a, const Ring&) {
                CremonaStep s = cremona_step(a[0].form());
                Facts f = detail::holds(s.matches());
                f.set("value", F::form, s.transformed);
                f.set("degree", F::integer, long(s.measured.degree));
                f.cert("before", s.before.to_string());
                f.cert("predicted", s.predicted.to_string());
                f.cert("measured", s.measured.to_string());
                f.cert("factor", s.factor.to_string());
                return f;
            });

        auto verification = [](const Verification& v) {
            Facts f = detail::holds(v.ok);
            f.cert("residual", detail::residual_text(v));
            return f;
        };
        add("verify_ode_symmetry", {{{K::chazy}}, {{K::rational}}}, {{"holds", F::boolean}},
            [verification](const auto& a, const Ring&) {
                return verification(verify_ode_symmetry(a[0].chazy(), a[1].rational()));
            });
        add("verify_transport", {{{K::chazy}}, {{K::rational}}, {{K::chazy}}}, {{"holds", F::boolean}},
            [verification](const auto& a, const Ring&) {
                return verification(verify_transport(a[0].chazy(), a[1].rational(), a[2].chazy()));
            });
        add("verify_solution_map", {{{K::derivation}}, {{K::rational}}, {{K::chazy}}}, {{"holds", F::boolean}},
            [verification](const auto& a, const Ring&) {
                return verification(verify_solution_map(detail::derivation_of(a[0]), a[1].rational(), a[2].chazy()));
            });

        add("verify_first_integral", {{{K::derivation}}, {{K::poly}}}, {{"holds", F::boolean}},
            [](const auto& a, const Ring&) {
                const Derivation& D = detail::derivation_of(a[0]);
                RationalFn r = D.apply(a[1].poly().with_ring(D.ring()));
                Facts f = detail::holds(r.is_zero());
                f.cert("derivative", r.to_string());
                return f;
            });

        add("verify_invariant_surface", {{{K::derivation}}, {{K::poly}}}, {{"holds", F::boolean}, {"cofactor", F::poly}},
            [](const auto& a, const Ring&) {
                auto c = verify_invariant_surface(detail::derivation_of(a[0]), a[1].poly());
                Facts f = detail::holds(c.has_value());
                if (c) {
                    f.cert("cofactor", c->to_string());
                    f.set("cofactor", F::poly, *c);
                }
                return f;
            });

        add("group_relations", {{{K::chazy}}, {{K::rational}}, {{K::rational}}, {{K::rational}, true}},
            {{"holds", F::boolean}}, [](const auto& a, const Ring&) {
                std::vector<RationalFn> others;
                for (std::size_t i = 3; i < a.size(); ++i) others.push_back(a[i].rational());
                GroupReport g = group_relations(a[0].chazy().W, a[1].rational(), a[2].rational(), others);
                Facts f = detail::holds(g.holds());
                f.cert("flop^2 = id", g.flop_involution ? "yes" : "no");
                f.cert("tri^3 = id", g.tri_order_three ? "yes" : "no");
                f.cert("flop o tri o flop = tri^-1", g.conjugation ? "yes" : "no");
                for (std::size_t i = 0; i < g.words.size(); ++i)
                    f.cert(a[3 + i].label, g.words[i] ? *g.words[i] : "not in the group");
                return f;
            });

        add("is_weighted_homogeneous", {{{K::poly}}, {{K::weights}}}, {{"holds", F::boolean}, {"degree", F::integer}},
            [](const auto& a, const Ring&) {
                auto d = a[0].poly().weighted_degree(a[1].weights());
                Facts f = detail::holds(d.has_value());
                if (d) f.set("degree", F::integer, long(*d));
                return f;
            });

        add("homothety", {{{K::poly}}, {{K::weights}}}, {{"holds", F::boolean}, {"degree", F::integer}},
            [](const auto& a, const Ring&) {
                auto d = homothety_degree(a[0].poly(), a[1].weights());
                Facts f = detail::holds(d.has_value());
                if (d) {
                    f.set("degree", F::integer, *d);
                    f.cert("scaling", "lambda^" + std::to_string(*d));
                }
                return f;
            });

        add("sqrt_in_field", {{{K::scalar}}}, {{"holds", F::boolean}, {"value", F::scalar}}, [](const auto& a, const Ring&) {
            auto s = sqrt_in_field(a[0].scalar());
            Facts f = detail::holds(s.has_value());
            if (s) {
                f.set("value", F::scalar, *s);
                f.cert("root", s->to_string());
            }
            return f;
        });

        const std::vector<Kind> comparable = {K::poly, K::rational, K::form, K::map, K::amap, K::scalar, K::point};
        add("proportional", {{comparable}, {comparable}}, {{"holds", F::boolean}, {"scalar", F::scalar}},
            [](const auto& a, const Ring&) {
                std::optional<Scalar> k;
                switch (a[0].kind) {
                case K::form: k = proportionality(a[0].form(), a[1].form()); break;
                case K::poly: k = proportionality(std::vector<Poly>{a[0].poly()}, {a[1].poly()}); break;
                case K::map: {
                    const RationalMap &f = a[0].map(), &g = a[1].map();
                    if (f.dst_weights().is_standard()) {
                        k = projective_scalar(f, g);
                    } else if (equal_up_to_scale(f, g)) {
                        Facts r = detail::holds(true);
                        r.cert("scaling", "weighted");
                        return r;
                    }
                    break;
                }
                case K::rational: k = detail::ratio_constant(a[0].rational(), a[1].rational()); break;
                case K::point: {
                    const Ring r = make_ring(a[0].point().x.front().field(), {"p"});
                    std::vector<Poly> p, q;
                    for (const auto& s : a[0].point().x) p.push_back(Poly::constant(r, s));
                    for (const auto& s : a[1].point().x) q.push_back(Poly::constant(r, s));
                    k = proportionality(p, q);
                    break;
                }
                default: throw Error(ErrorCode::invalid_argument, std::string("proportionality of ") + kind_name(a[0].kind));
                }
                Facts f = detail::holds(k.has_value());
                if (k) {
                    f.set("scalar", F::scalar, *k);
                    f.cert("scalar", k->to_string());
                }
                return f;
            },
            true);

        add("equal", {{comparable}, {comparable}}, {{"holds", F::boolean}},
            [](const auto& a, const Ring&) {
                bool eq = false;
                switch (a[0].kind) {
                case K::form: eq = a[0].form() == a[1].form(); break;
                case K::poly: eq = a[0].poly() == a[1].poly().with_ring(a[0].poly().ring()); break;
                case K::rational: eq = a[0].rational() == a[1].rational().with_ring(a[0].rational().ring()); break;
                case K::map:
                    eq = a[0].map().components() == a[1].map().components() &&
                         a[0].map().dst_weights() == a[1].map().dst_weights();
                    break;
                case K::amap: eq = a[0].amap() == a[1].amap(); break;
                case K::scalar: eq = a[0].scalar() == a[1].scalar(); break;
                default: throw Error(ErrorCode::invalid_argument, std::string("equality of ") + kind_name(a[0].kind));
                }
                return detail::holds(eq);
            },
            true);

        add("commute", {{{K::map, K::amap}}, {{K::map, K::amap}}}, {{"holds", F::boolean}},
            [](const auto& a, const Ring&) {
                if (a[0].kind == K::amap)
                    return detail::holds(compose(a[0].amap(), a[1].amap()) == compose(a[1].amap(), a[0].amap()));
                return detail::holds(
                    equal_up_to_scale(compose(a[0].map(), a[1].map()), compose(a[1].map(), a[0].map())));
            },
            true);

        add("inverse_pair", {{{K::map}}, {{K::map}}}, {{"holds", F::boolean}}, [](const auto& a, const Ring&) {
            return detail::holds(is_identity_up_to_scale(compose(a[0].map(), a[1].map())) &&
                                 is_identity_up_to_scale(compose(a[1].map(), a[0].map())));
        });

        add("probe", {{{K::form}}, {{K::poly}, true}}, {{"holds", F::boolean}, {"value", F::text}},
            [](const auto& a, const Ring&) {
                Facts f;
                std::vector<std::string> passing;
                for (std::size_t i = 1; i < a.size(); ++i) {
                    bool ok = invariant_curve(a[0].form(), a[i].poly()).has_value();
                    f.cert(a[i].label, ok ? "invariant" : "not invariant");
                    if (ok) passing.push_back(a[i].label);
                }
                f.set("holds", F::boolean, passing.size() == 1);
                std::string names;
                for (const auto& p : passing) names += (names.empty() ? "" : ", ") + p;
                f.set("value", F::text, names.empty() ? std::string("none") : names);
                return f;
            });

        add("pushforward_law", {{{K::integer}}, {{K::integer}}, {{K::integer}}, {{K::integer}}}, {{"holds", F::boolean}},
            [](const auto& a, const Ring& r) {
                PushforwardLaw p =
                    monomial_pushforward_law(r->field, a[0].integer(), a[1].integer(), a[2].integer(), a[3].integer());
                Facts f = detail::holds(p.holds);
                f.cert("X(u)/u", p.u_rate.to_string());
                f.cert("X(v)/v", p.v_rate.to_string());
                return f;
            });

        add("constant", {{{K::derivation, K::chazy}}, {{K::rational}}, {{K::poly}}},
            {{"holds", F::boolean}, {"value", F::scalar}}, [](const auto& a, const Ring&) {
                RationalFn level = first_integral_level(detail::derivation_of(a[0]), a[1].rational(), a[2].poly());
                Facts f = detail::holds(level.is_constant());
                f.cert("level", level.to_string());
                if (level.is_constant()) f.set("value", F::scalar, level.constant_value());
                return f;
            });

        return t;
    }();
    return table;
}

inline const OpSpec* find_op(const std::string& name) {
    for (const auto& op : op_table())
        if (op.name == name) return &op;
    return nullptr;
}

}  // namespace birfol::frontend
