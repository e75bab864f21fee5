#ifndef HBFIBER_IDEAL_HPP
#define HBFIBER_IDEAL_HPP

#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace hbf {

template <class K>
struct Ideal {
    RingPtr<K> ring;
    std::vector<Polynomial<K>> gens;  // nonzero

    Ideal() = default;
    Ideal(RingPtr<K> r, std::vector<Polynomial<K>> g) : ring(std::move(r)) {
        for (auto& f : g)
            if (!f.is_zero()) gens.push_back(std::move(f));
    }

    bool is_zero_ideal() const { return gens.empty(); }

    bool is_homogeneous() const {
        for (const auto& f : gens)
            if (!homogeneous_degree(f)) return false;
        return true;
    }

    static Ideal unit(const RingPtr<K>& r) {
        return Ideal(r, {Polynomial<K>::constant(r, r->one())});
    }
};

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
    std::vector<Polynomial<K>> g = a.gens;
    g.insert(g.end(), b.gens.begin(), b.gens.end());
    return Ideal<K>(a.ring, std::move(g));
}

template <class K>
Ideal<K> ideal_product(const Ideal<K>& a, const Ideal<K>& b) {
    std::vector<Polynomial<K>> g;
    for (const auto& f : a.gens)
        for (const auto& h : b.gens) g.push_back(f * h);
    return Ideal<K>(a.ring, std::move(g));
}

// I^n generated by the degree-n monomials in the generators (one per multiset,
// not the g^n-fold repeated product).
template <class K>
Ideal<K> ideal_power(const Ideal<K>& a, int n) {
    if (n < 0) fail("NegativePower", "ideal power with negative exponent");
    if (n == 0) return Ideal<K>::unit(a.ring);
    std::vector<Polynomial<K>> out;
    auto rec = [&](auto&& self, std::size_t from, int left, const Polynomial<K>& acc) -> void {
        if (left == 0) { out.push_back(acc); return; }
        for (std::size_t i = from; i < a.gens.size(); ++i)
            self(self, i, left - 1, acc * a.gens[i]);
    };
    rec(rec, 0, n, Polynomial<K>::constant(a.ring, a.ring->one()));
    return Ideal<K>(a.ring, std::move(out));
}

}  // namespace hbf

#endif
