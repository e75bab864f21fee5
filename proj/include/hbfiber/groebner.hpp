#ifndef HBFIBER_GROEBNER_HPP
#define HBFIBER_GROEBNER_HPP

#include <algorithm>
#include <deque>
#include <set>
#include <utility>
#include <vector>

#include "ideal.hpp"

namespace hbf {

// Reduced Groebner basis: monic elements, pairwise inter-reduced, sorted by
// ascending leading monomial. Uniquely determined by (ideal, order).
template <class K>
struct GroebnerBasis {
    RingPtr<K> ring;
    std::vector<Polynomial<K>> elements;

    bool contains_one() const {
        return elements.size() == 1 && elements[0].leading_monomial().is_one();
    }
    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
        return a.elements == b.elements;
    }
};

// Full normal form of f modulo G: no term of the result divisible by any
// leading monomial of G.
template <class K>
Polynomial<K> reduce(const Polynomial<K>& f, const std::vector<Polynomial<K>>& G) {
    Polynomial<K> rem = f;
    Polynomial<K> out(f.ring());
    while (!rem.is_zero()) {
        bool reduced = false;
        const auto& lt = rem.leading();
        for (const auto& g : G) {
            if (g.leading_monomial().divides(lt.mono)) {
                K c = lt.coeff / g.leading().coeff;
                Monomial m = g.leading_monomial().divide_into(lt.mono);
                rem = rem - g.mul_term(c, m);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            // move the irreducible leading term to the output
            out = out + Polynomial<K>::term(f.ring(), lt.coeff, lt.mono);
            rem = rem - Polynomial<K>::term(f.ring(), lt.coeff, lt.mono);
        }
    }
    return out;
}

template <class K>
Polynomial<K> reduce(const Polynomial<K>& f, const GroebnerBasis<K>& G) {
    return reduce(f, G.elements);
}

template <class K>
Polynomial<K> spoly(const Polynomial<K>& f, const Polynomial<K>& g) {
    const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    K one = f.ring()->one();
    Polynomial<K> a = f.mul_term(one / f.leading().coeff, f.leading_monomial().divide_into(l));
    Polynomial<K> b = g.mul_term(one / g.leading().coeff, g.leading_monomial().divide_into(l));
    return a - b;
}

namespace detail {

template <class K>
void interreduce(std::vector<Polynomial<K>>& G, const MonomialOrder& ord) {
    // drop elements whose leading monomial is divisible by another's
    std::vector<Polynomial<K>> kept;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            if (G[j].leading_monomial().divides(G[i].leading_monomial())) {
                if (G[i].leading_monomial() == G[j].leading_monomial() && i < j) continue;
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(G[i]);
    }
    // tail-reduce each against the others
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Polynomial<K>> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        kept[i] = reduce(kept[i], others).monic();
    }
    std::sort(kept.begin(), kept.end(), [&](const auto& a, const auto& b) {
        return mono_greater(b.leading_monomial(), a.leading_monomial(), ord);
    });
    G = std::move(kept);
}

}  // namespace detail

// Buchberger with the normal selection strategy and the coprimality and chain
// criteria, followed by inter-reduction to the canonical reduced basis.
template <class K>
GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>& gens, const RingPtr<K>& ring) {
    std::vector<Polynomial<K>> G;
    for (const auto& f : gens)
        if (!f.is_zero()) G.push_back(f.monic());
    GroebnerBasis<K> out{ring, {}};
    if (G.empty()) return out;

    const auto& ord = ring->order;
    struct Pair { int deg; std::size_t i, j; };
    auto pair_less = [](const Pair& a, const Pair& b) {
        return a.deg != b.deg ? a.deg < b.deg : (a.i != b.i ? a.i < b.i : a.j < b.j);
    };
    std::vector<Pair> queue;
    std::set<std::pair<std::size_t, std::size_t>> handled;
    auto push_pairs = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i)
            queue.push_back({lcm(G[i].leading_monomial(), G[k].leading_monomial()).total_degree(), i, k});
        std::sort(queue.begin(), queue.end(), pair_less);
    };
    for (std::size_t k = 1; k < G.size(); ++k) push_pairs(k);

    while (!queue.empty()) {
        Pair p = queue.front();
        queue.erase(queue.begin());
        handled.insert({p.i, p.j});
        const Monomial& li = G[p.i].leading_monomial();
        const Monomial& lj = G[p.j].leading_monomial();
        if (coprime(li, lj)) continue;  // first criterion
        // chain criterion
        const Monomial l = lcm(li, lj);
        bool skip = false;
        for (std::size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!G[k].leading_monomial().divides(l)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (handled.count(key(p.i, k)) && handled.count(key(p.j, k))) skip = true;
        }
        if (skip) continue;
        Polynomial<K> r = reduce(spoly(G[p.i], G[p.j]), G);
        if (!r.is_zero()) {
            G.push_back(r.monic());
            push_pairs(G.size() - 1);
        }
    }
    detail::interreduce(G, ord);
    out.elements = std::move(G);
    return out;
}

template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& I) {
    return buchberger(I.gens, I.ring);
}

template <class K>
bool ideal_member(const Polynomial<K>& f, const GroebnerBasis<K>& G) {
    return reduce(f, G).is_zero();
}

// ----- ring transport helpers ------------------------------------------------

// Map a polynomial into a ring with extra variables appended/prepended.
// var_map[i] = index of source variable i in the target ring.
template <class K>
Polynomial<K> transport(const Polynomial<K>& f, const RingPtr<K>& target,
                        const std::vector<std::size_t>& var_map) {
    std::vector<Term<K>> terms;
    for (const auto& t : f.terms()) {
        std::vector<int> exps(target->nvars(), 0);
        for (std::size_t i = 0; i < var_map.size(); ++i) exps[var_map[i]] = t.mono[i];
        terms.push_back({t.coeff, Monomial(std::move(exps))});
    }
    return Polynomial<K>(target, std::move(terms));
}

// ----- ideal-theoretic operations --------------------------------------------

// I cap J via the auxiliary variable t: eliminate t from t*I + (1-t)*J.
template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J) {
    const auto& R = I.ring;
    std::vector<std::string> vars;
    vars.push_back("@t");
    vars.insert(vars.end(), R->vars.begin(), R->vars.end());
    auto ext = make_ring<K>(R->field, std::move(vars), MonomialOrder::block(1));
    std::vector<std::size_t> vmap(R->nvars());
    for (std::size_t i = 0; i < vmap.size(); ++i) vmap[i] = i + 1;

    Polynomial<K> t = Polynomial<K>::variable(ext, 0);
    Polynomial<K> one_minus_t = Polynomial<K>::constant(ext, ext->one()) - t;
    std::vector<Polynomial<K>> gens;
    for (const auto& f : I.gens) gens.push_back(t * transport(f, ext, vmap));
    for (const auto& g : J.gens) gens.push_back(one_minus_t * transport(g, ext, vmap));
    GroebnerBasis<K> G = buchberger(gens, ext);

    std::vector<Polynomial<K>> out;
    for (const auto& g : G.elements) {
        bool free_of_t = true;
        for (const auto& term : g.terms())
            if (term.mono[0] != 0) { free_of_t = false; break; }
        if (!free_of_t) continue;
        std::vector<Term<K>> terms;
        for (const auto& term : g.terms()) {
            std::vector<int> exps(R->nvars());
            for (std::size_t i = 0; i < R->nvars(); ++i) exps[i] = term.mono[i + 1];
            terms.push_back({term.coeff, Monomial(std::move(exps))});
        }
        out.push_back(Polynomial<K>(R, std::move(terms)));
    }
    return Ideal<K>(R, std::move(out));
}

// (I : g) for a single nonzero g, through I cap (g).
template <class K>
Ideal<K> quotient_single(const Ideal<K>& I, const Polynomial<K>& g) {
    if (g.is_zero()) fail("ZeroPolynomial", "colon by zero");
    Ideal<K> inter = intersect(I, Ideal<K>(I.ring, {g}));
    std::vector<Polynomial<K>> out;
    for (const auto& h : inter.gens) out.push_back(exact_divide(h, g));
    return Ideal<K>(I.ring, std::move(out));
}

// (I : J) = cap over generators g of J of (I : g).
template <class K>
Ideal<K> quotient(const Ideal<K>& I, const Ideal<K>& J) {
    if (J.gens.empty()) fail("ZeroIdeal", "colon by the zero ideal");
    Ideal<K> acc = quotient_single(I, J.gens[0]);
    for (std::size_t k = 1; k < J.gens.size(); ++k)
        acc = intersect(acc, quotient_single(I, J.gens[k]));
    return acc;
}

// (I : J^infty): iterate the colon until the reduced basis stabilizes.
template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Ideal<K>& J) {
    Ideal<K> cur = I;
    GroebnerBasis<K> gb = buchberger(cur);
    cur = Ideal<K>(I.ring, gb.elements);
    for (;;) {
        Ideal<K> next = quotient(cur, J);
        GroebnerBasis<K> gb_next = buchberger(next);
        if (gb_next == gb) return Ideal<K>(I.ring, gb.elements);
        gb = std::move(gb_next);
        cur = Ideal<K>(I.ring, gb.elements);
    }
}

// Generators of I cap k[x_k, ..., x_{n-1}], from a block-order basis.
// The result lives in the original ring but is free of the first k variables.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, std::size_t k) {
    const auto& R = I.ring;
    if (k == 0 || k >= R->nvars()) fail("BadBlock", "eliminate: k out of range");
    auto blk = make_ring<K>(R->field, R->vars, MonomialOrder::block(k));
    std::vector<std::size_t> idmap(R->nvars());
    for (std::size_t i = 0; i < idmap.size(); ++i) idmap[i] = i;
    std::vector<Polynomial<K>> gens;
    for (const auto& f : I.gens) gens.push_back(transport(f, blk, idmap));
    GroebnerBasis<K> G = buchberger(gens, blk);
    std::vector<Polynomial<K>> out;
    for (const auto& g : G.elements) {
        bool free_of_block = true;
        for (const auto& term : g.terms())
            for (std::size_t i = 0; i < k && free_of_block; ++i)
                if (term.mono[i] != 0) free_of_block = false;
        if (free_of_block) out.push_back(transport(g, R, idmap));
    }
    return Ideal<K>(R, std::move(out));
}

}  // namespace hbf

#endif
