#pragma once

#include <optional>
#include <unordered_map>

#include "birfol/exterior.hpp"
#include "birfol/linalg.hpp"

namespace birfol::oracle {

// Local intersection multiplicity at the origin as dim K[u,v]/((F,G) + m^N),
// grown until two consecutive truncations agree (then m^N lies in the local
// ideal by Nakayama). Empty result when the cap is reached.
inline std::optional<long> milnor_truncated(const Poly& F, const Poly& G, unsigned cap = 40) {
    const Ring& r = F.ring();
    const Field& K = r->field;
    auto dimension = [&](unsigned N) -> long {
        std::vector<Monomial> basis;
        for (unsigned d = 0; d < N; ++d)
            for (const auto& m : monomials_of_degree(2, d)) basis.push_back(m);
        std::unordered_map<Monomial, long, MonomialHash> where;
        for (std::size_t i = 0; i < basis.size(); ++i) where[basis[i]] = long(i);
        auto index = [&](const Monomial& m) -> long {
            auto it = where.find(m);
            return it == where.end() ? -1 : it->second;
        };
        std::vector<Poly> gens;
        for (const auto& m : basis) {
            Poly mono = Poly::monomial(r, m, Scalar(K, 1));
            gens.push_back(mono * F);
            gens.push_back(mono * G.with_ring(r));
        }
        Matrix mat(K, gens.size(), basis.size());
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (const auto& t : gens[i].terms()) {
                long j = index(t.m);
                if (j >= 0) mat.raw(i, std::size_t(j)) = t.c;
            }
        return long(basis.size()) - long(mat.rank());
    };
    long prev = dimension(1);
    for (unsigned N = 2; N <= cap; ++N) {
        long cur = dimension(N);
        if (cur == prev) return cur;
        prev = cur;
    }
    return std::nullopt;
}

}  // namespace birfol::oracle
