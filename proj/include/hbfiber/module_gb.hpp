#ifndef HBFIBER_MODULE_GB_HPP
#define HBFIBER_MODULE_GB_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "groebner.hpp"

namespace hbf {

// Element of a free module R^rank, position-over-term order on top of the ring
// order: earlier positions dominate.
template <class K>
struct FreeModuleElement {
    std::vector<Polynomial<K>> comps;

    bool is_zero() const {
        for (const auto& c : comps)
            if (!c.is_zero()) return false;
        return true;
    }
    std::size_t rank() const { return comps.size(); }

    // position of the first nonzero component
    std::size_t leading_position() const {
        for (std::size_t p = 0; p < comps.size(); ++p)
            if (!comps[p].is_zero()) return p;
        fail("ZeroElement", "leading position of zero module element");
    }
    const Term<K>& leading_term() const { return comps[leading_position()].leading(); }

    friend FreeModuleElement operator+(const FreeModuleElement& a, const FreeModuleElement& b) {
        FreeModuleElement r;
        r.comps.reserve(a.comps.size());
        for (std::size_t i = 0; i < a.comps.size(); ++i) r.comps.push_back(a.comps[i] + b.comps[i]);
        return r;
    }
    friend FreeModuleElement operator-(const FreeModuleElement& a, const FreeModuleElement& b) {
        FreeModuleElement r;
        r.comps.reserve(a.comps.size());
        for (std::size_t i = 0; i < a.comps.size(); ++i) r.comps.push_back(a.comps[i] - b.comps[i]);
        return r;
    }
    FreeModuleElement mul_term(const K& c, const Monomial& m) const {
        FreeModuleElement r;
        r.comps.reserve(comps.size());
        for (const auto& f : comps) r.comps.push_back(f.mul_term(c, m));
        return r;
    }
    FreeModuleElement monic(const RingPtr<K>& ring) const {
        K inv = ring->one() / leading_term().coeff;
        return mul_term(inv, Monomial(ring->nvars()));
    }
    friend bool operator==(const FreeModuleElement& a, const FreeModuleElement& b) {
        return a.comps == b.comps;
    }
};

template <class K>
FreeModuleElement<K> module_zero(const RingPtr<K>& ring, std::size_t rank) {
    FreeModuleElement<K> z;
    z.comps.assign(rank, Polynomial<K>(ring));
    return z;
}

namespace detail {

// POT comparison of leading module terms: (p1,m1) beats (p2,m2) iff p1 < p2,
// or same position and m1 beats m2.
template <class K>
bool mod_lead_greater(const FreeModuleElement<K>& a, const FreeModuleElement<K>& b,
                      const MonomialOrder& ord) {
    std::size_t pa = a.leading_position(), pb = b.leading_position();
    if (pa != pb) return pa < pb;
    return mono_greater(a.comps[pa].leading_monomial(), b.comps[pb].leading_monomial(), ord);
}

}  // namespace detail

// Full normal form of v modulo G (module version of reduce).
template <class K>
FreeModuleElement<K> module_reduce(const FreeModuleElement<K>& v,
                                   const std::vector<FreeModuleElement<K>>& G,
                                   const RingPtr<K>& ring) {
    FreeModuleElement<K> rem = v;
    FreeModuleElement<K> out = module_zero<K>(ring, v.rank());
    while (!rem.is_zero()) {
        std::size_t pos = rem.leading_position();
        const Term<K>& lt = rem.comps[pos].leading();
        bool reduced = false;
        for (const auto& g : G) {
            if (g.leading_position() != pos) continue;
            const Term<K>& glt = g.comps[pos].leading();
            if (!glt.mono.divides(lt.mono)) continue;
            K c = lt.coeff / glt.coeff;
            Monomial m = glt.mono.divide_into(lt.mono);
            rem = rem - g.mul_term(c, m);
            reduced = true;
            break;
        }
        if (!reduced) {
            Polynomial<K> t = Polynomial<K>::term(ring, lt.coeff, lt.mono);
            out.comps[pos] = out.comps[pos] + t;
            rem.comps[pos] = rem.comps[pos] - t;
        }
    }
    return out;
}

template <class K>
struct ModuleGB {
    RingPtr<K> ring;
    std::size_t rank = 0;
    std::vector<FreeModuleElement<K>> elements;
};

// Buchberger over a free module with position-over-term order. S-pairs only
// between elements sharing a leading position; the coprimality criterion does
// not apply to modules and is not used.
template <class K>
ModuleGB<K> module_buchberger(const std::vector<FreeModuleElement<K>>& gens,
                              const RingPtr<K>& ring) {
    ModuleGB<K> out{ring, gens.empty() ? 0 : gens[0].rank(), {}};
    std::vector<FreeModuleElement<K>> G;
    for (const auto& v : gens)
        if (!v.is_zero()) G.push_back(v.monic(ring));
    if (G.empty()) return out;

    std::vector<std::pair<std::size_t, std::size_t>> queue;
    auto push_pairs = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i)
            if (G[i].leading_position() == G[k].leading_position()) queue.push_back({i, k});
    };
    for (std::size_t k = 1; k < G.size(); ++k) push_pairs(k);

    while (!queue.empty()) {
        auto [i, j] = queue.front();
        queue.erase(queue.begin());
        std::size_t p = G[i].leading_position();
        const Monomial& li = G[i].comps[p].leading_monomial();
        const Monomial& lj = G[j].comps[p].leading_monomial();
        const Monomial l = lcm(li, lj);
        K one = ring->one();
        FreeModuleElement<K> s =
            G[i].mul_term(one / G[i].comps[p].leading().coeff, li.divide_into(l)) -
            G[j].mul_term(one / G[j].comps[p].leading().coeff, lj.divide_into(l));
        FreeModuleElement<K> r = module_reduce(s, G, ring);
        if (!r.is_zero()) {
            G.push_back(r.monic(ring));
            push_pairs(G.size() - 1);
        }
    }

    // inter-reduce to the canonical reduced module basis
    std::vector<FreeModuleElement<K>> kept;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        std::size_t pi = G[i].leading_position();
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            if (G[j].leading_position() != pi) continue;
            const Monomial& mi = G[i].comps[pi].leading_monomial();
            const Monomial& mj = G[j].comps[pi].leading_monomial();
            if (mj.divides(mi) && !(mi == mj && i < j)) redundant = true;
        }
        if (!redundant) kept.push_back(G[i]);
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<FreeModuleElement<K>> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        kept[i] = module_reduce(kept[i], others, ring).monic(ring);
    }
    std::sort(kept.begin(), kept.end(), [&](const auto& a, const auto& b) {
        return detail::mod_lead_greater(b, a, ring->order);
    });
    out.elements = std::move(kept);
    return out;
}

template <class K>
bool module_member(const FreeModuleElement<K>& v, const ModuleGB<K>& G) {
    return module_reduce(v, G.elements, G.ring).is_zero();
}

}  // namespace hbf

#endif
