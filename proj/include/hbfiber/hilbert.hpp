#ifndef HBFIBER_HILBERT_HPP
#define HBFIBER_HILBERT_HPP

#include <algorithm>
#include <vector>

#include "groebner.hpp"

namespace hbf {

// Integer polynomial in one variable T, dense coefficients, index = exponent.
struct ZPoly {
    std::vector<Int> c;

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    Int at_one() const {
        Int s = 0;
        for (const auto& x : c) s += x;
        return s;
    }
    Int coeff(std::size_t i) const { return i < c.size() ? c[i] : Int(0); }

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
        ZPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), 0);
        for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b) {
        ZPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), 0);
        for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
        r.trim();
        return r;
    }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        ZPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, 0);
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    static ZPoly one() { return ZPoly{{Int(1)}}; }
    static ZPoly monomial(std::size_t e, Int coeff = Int(1)) {
        ZPoly r;
        r.c.assign(e + 1, 0);
        r.c[e] = coeff;
        return r;
    }
    // divide exactly by (1 - T); caller must ensure at_one() == 0
    ZPoly divide_one_minus_t() const {
        // if p = (1-T) q then q_k = sum_{i<=k} p_i
        ZPoly q;
        if (c.empty()) return q;
        q.c.assign(c.size() - 1, 0);
        Int acc = 0;
        for (std::size_t k = 0; k + 1 < c.size(); ++k) {
            acc += c[k];
            q.c[k] = acc;
        }
        q.trim();
        return q;
    }
};

// Hilbert series numerator/(1-T)^denom_exp, kept in the reduced form with
// numerator(1) != 0 (unless the series is identically zero).
struct HilbertSeries {
    ZPoly numerator;
    int denom_exp = 0;

    void reduce_form() {
        while (!numerator.is_zero() && numerator.at_one() == 0 && denom_exp > 0) {
            numerator = numerator.divide_one_minus_t();
            --denom_exp;
        }
    }

    // Krull dimension of the graded quotient the series came from
    int dimension() const { return denom_exp; }
    Int degree() const { return numerator.at_one(); }

    // coefficient of T^e in the series expansion
    Int coefficient(int e) const {
        if (e < 0) return 0;
        Int s = 0;
        for (std::size_t k = 0; k < numerator.c.size() && int(k) <= e; ++k) {
            // [T^{e-k}] (1-T)^{-n} = binom(e-k+n-1, n-1)
            int m = e - int(k);
            Int b = 1;
            for (int i = 1; i <= denom_exp - 1; ++i) { b *= m + i; b /= i; }
            if (denom_exp == 0) b = (m == 0) ? 1 : 0;
            s += numerator.c[k] * b;
        }
        return s;
    }
};

namespace detail {

inline bool mono_divides_any(const Monomial& m, const std::vector<Monomial>& gens) {
    for (const auto& g : gens)
        if (g.divides(m)) return true;
    return false;
}

inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (gens[j].divides(gens[i]) && !(gens[i] == gens[j] && i < j)) redundant = true;
        }
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

// Numerator of HS_{R/I} for a monomial ideal, by the pivot recursion
//   N(I) = N(I + (x)) + T * N(I : x)
// with x the variable occurring in the most generators.
inline ZPoly monomial_numerator(std::vector<Monomial> gens, std::size_t nvars) {
    gens = minimalize_monomials(std::move(gens));
    if (gens.empty()) return ZPoly::one();
    for (const auto& g : gens)
        if (g.is_one()) return ZPoly{};

    // pairwise coprime: numerator is the product of (1 - T^deg)
    bool all_coprime = true;
    for (std::size_t i = 0; i < gens.size() && all_coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size() && all_coprime; ++j)
            if (!coprime(gens[i], gens[j])) all_coprime = false;
    if (all_coprime) {
        ZPoly n = ZPoly::one();
        for (const auto& g : gens)
            n = n * (ZPoly::one() - ZPoly::monomial(g.total_degree()));
        return n;
    }

    // most frequent variable among generators of degree >= 2 support
    std::vector<int> freq(nvars, 0);
    for (const auto& g : gens)
        for (std::size_t v = 0; v < nvars; ++v)
            if (g[v] > 0) ++freq[v];
    std::size_t x = std::max_element(freq.begin(), freq.end()) - freq.begin();

    // I + (x)
    std::vector<Monomial> plus;
    {
        std::vector<int> e(nvars, 0);
        e[x] = 1;
        plus.emplace_back(std::move(e));
        for (const auto& g : gens)
            if (g[x] == 0) plus.push_back(g);
    }
    // I : x
    std::vector<Monomial> colon;
    for (const auto& g : gens) {
        if (g[x] > 0) {
            std::vector<int> e = g.exponents();
            --e[x];
            colon.emplace_back(std::move(e));
        } else {
            colon.push_back(g);
        }
    }
    return monomial_numerator(std::move(plus), nvars) +
           ZPoly::monomial(1) * monomial_numerator(std::move(colon), nvars);
}

}  // namespace detail

// Hilbert series of R/I for homogeneous I, through the leading-term ideal.
template <class K>
HilbertSeries hilbert_series(const GroebnerBasis<K>& gb, std::size_t nvars) {
    std::vector<Monomial> lts;
    for (const auto& g : gb.elements) lts.push_back(g.leading_monomial());
    HilbertSeries hs;
    hs.numerator = detail::monomial_numerator(std::move(lts), nvars);
    hs.denom_exp = static_cast<int>(nvars);
    hs.reduce_form();
    return hs;
}

template <class K>
HilbertSeries hilbert_series(const Ideal<K>& I) {
    return hilbert_series(buchberger(I), I.ring->nvars());
}

// dim_k [R/I]_e
template <class K>
Int hilbert_function(const Ideal<K>& I, int e) {
    if (e < 0) fail("NegativeDegree", "hilbert_function: e < 0");
    return hilbert_series(I).coefficient(e);
}

constexpr int kHeightInfinity = -1;  // sentinel for the unit ideal

// (Krull dim of R/I, height of I). Throws UnitIdeal when 1 is in I.
template <class K>
std::pair<int, int> dimension_and_height(const Ideal<K>& I) {
    GroebnerBasis<K> gb = buchberger(I);
    if (gb.contains_one()) fail("UnitIdeal", "dimension of the unit ideal");
    HilbertSeries hs = hilbert_series(gb, I.ring->nvars());
    int dim = hs.dimension();
    return {dim, static_cast<int>(I.ring->nvars()) - dim};
}

// Height with the unit ideal mapped to the +infinity sentinel.
template <class K>
int height_with_sentinel(const Ideal<K>& I) {
    GroebnerBasis<K> gb = buchberger(I);
    if (gb.contains_one()) return kHeightInfinity;
    HilbertSeries hs = hilbert_series(gb, I.ring->nvars());
    return static_cast<int>(I.ring->nvars()) - hs.dimension();
}

}  // namespace hbf

#endif
