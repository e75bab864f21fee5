#ifndef HBFIBER_ORACLES_HPP
#define HBFIBER_ORACLES_HPP

#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "multiplicity.hpp"
#include "resolution.hpp"

namespace hbf {

// successive finite differences; row 0 is the input sequence
struct DifferenceTable {
    std::vector<std::vector<Int>> rows;

    static DifferenceTable of(const std::vector<Int>& seq, int depth) {
        DifferenceTable t;
        t.rows.push_back(seq);
        for (int k = 0; k < depth; ++k) {
            const auto& prev = t.rows.back();
            if (prev.size() < 2) break;
            std::vector<Int> next;
            for (std::size_t i = 0; i + 1 < prev.size(); ++i)
                next.push_back(prev[i + 1] - prev[i]);
            t.rows.push_back(std::move(next));
        }
        return t;
    }

    // value of the depth-th difference once its last two entries agree
    std::optional<Int> stabilized(int depth) const {
        if (depth >= static_cast<int>(rows.size())) return std::nullopt;
        const auto& row = rows[depth];
        if (row.size() < 2) return std::nullopt;
        if (row[row.size() - 1] != row[row.size() - 2]) return std::nullopt;
        return row.back();
    }
};

template <class K>
Ideal<K> irrelevant_ideal(const RingPtr<K>& ring) {
    std::vector<Polynomial<K>> gens;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        gens.push_back(Polynomial<K>::variable(ring, i));
    return Ideal<K>(ring, std::move(gens));
}

struct SaturatedFiberSample {
    int d = 0;
    std::vector<std::pair<int, Int>> samples;  // (n, dim_k [(I^n : m^inf)]_{nd})
    DifferenceTable differences;
    std::optional<Int> inferred_multiplicity;
};

// dim_k [(I^n : m^inf)]_{nd} for n = 0..N; the r-th finite difference of the
// sequence recovers the multiplicity of the saturated fiber algebra.
template <class K>
SaturatedFiberSample saturated_fiber_sample(const Ideal<K>& I, int d, int N) {
    const RingPtr<K>& R = I.ring;
    const int r = static_cast<int>(R->nvars()) - 1;
    Ideal<K> m = irrelevant_ideal(R);
    SaturatedFiberSample out;
    out.d = d;
    std::vector<Int> dims;
    for (int n = 0; n <= N; ++n) {
        Ideal<K> Jn = saturate(ideal_power(I, n), m);
        Int dim = binom(static_cast<long long>(n) * d + r, r) -
                  hilbert_function(Jn, n * d);
        out.samples.push_back({n, dim});
        dims.push_back(std::move(dim));
    }
    out.differences = DifferenceTable::of(dims, r);
    out.inferred_multiplicity = out.differences.stabilized(r);
    return out;
}

struct JMultSample {
    std::vector<std::pair<int, Int>> samples;  // (n, length of H^0_m(I^n / I^{n+1}))
    DifferenceTable differences;
    std::optional<Int> inferred_j;
};

namespace detail {

// numerator of HS_{R/I} over the full (1-T)^nvars denominator
template <class K>
ZPoly unreduced_numerator(const Ideal<K>& I) {
    HilbertSeries hs = hilbert_series(I);
    ZPoly n = hs.numerator;
    ZPoly one_minus_t = ZPoly::one() - ZPoly::monomial(1);
    for (int i = hs.denom_exp; i < static_cast<int>(I.ring->nvars()); ++i) n = n * one_minus_t;
    return n;
}

}  // namespace detail

// Exact lengths of H^0_m(I^n / I^{n+1}) via Hilbert-series subtraction:
// with K_n = (I^{n+1} : m^inf) cap I^n, the difference of the series of
// R/I^{n+1} and R/K_n is a polynomial whose value at 1 is the length.
template <class K>
JMultSample j_mult_sample(const Ideal<K>& I, int N) {
    const RingPtr<K>& R = I.ring;
    const int r = static_cast<int>(R->nvars()) - 1;
    const int nvars = static_cast<int>(R->nvars());
    Ideal<K> m = irrelevant_ideal(R);
    JMultSample out;
    std::vector<Int> lengths;
    for (int n = 0; n <= N; ++n) {
        Ideal<K> In = ideal_power(I, n);
        Ideal<K> In1 = ideal_power(I, n + 1);
        Ideal<K> Kn = intersect(saturate(In1, m), In);
        ZPoly diff = detail::unreduced_numerator(In1) - detail::unreduced_numerator(Kn);
        for (int i = 0; i < nvars; ++i) {
            if (diff.at_one() != 0)
                fail("NonFiniteLength", "series difference is not a polynomial");
            diff = diff.divide_one_minus_t();
        }
        lengths.push_back(diff.at_one());
        out.samples.push_back({n, lengths.back()});
    }
    out.differences = DifferenceTable::of(lengths, r);
    out.inferred_j = out.differences.stabilized(r);
    return out;
}

// Defining ideal of the closed image in P^s: eliminate the x-variables from
// (y_0 - f_0, ..., y_s - f_s). Result lives in k[y_0..y_s], grevlex.
template <class K>
Ideal<K> image_ideal(const std::vector<Polynomial<K>>& f) {
    if (f.empty()) fail("EmptyInput", "image_ideal: no forms");
    const RingPtr<K>& R = f[0].ring();
    const std::size_t nx = R->nvars();
    const std::size_t m = f.size();

    std::vector<std::string> vars = R->vars;
    for (std::size_t j = 0; j < m; ++j) vars.push_back("y" + std::to_string(j));
    auto A = make_ring<K>(R->field, std::move(vars), MonomialOrder::block(nx));
    std::vector<std::size_t> vmap(nx);
    for (std::size_t i = 0; i < nx; ++i) vmap[i] = i;

    std::vector<Polynomial<K>> gens;
    for (std::size_t j = 0; j < m; ++j)
        gens.push_back(Polynomial<K>::variable(A, nx + j) - transport(f[j], A, vmap));
    GroebnerBasis<K> G = buchberger(gens, A);

    std::vector<std::string> yvars;
    for (std::size_t j = 0; j < m; ++j) yvars.push_back("y" + std::to_string(j));
    auto S = make_ring<K>(R->field, std::move(yvars), MonomialOrder::grevlex());

    std::vector<Polynomial<K>> out;
    for (const auto& g : G.elements) {
        bool x_free = true;
        for (const auto& t : g.terms())
            for (std::size_t i = 0; i < nx && x_free; ++i)
                if (t.mono[i] != 0) x_free = false;
        if (!x_free) continue;
        std::vector<Term<K>> terms;
        for (const auto& t : g.terms()) {
            std::vector<int> exps(m, 0);
            for (std::size_t j = 0; j < m; ++j) exps[j] = t.mono[nx + j];
            terms.push_back({t.coeff, Monomial(std::move(exps))});
        }
        out.push_back(Polynomial<K>(S, std::move(terms)));
    }
    return Ideal<K>(S, std::move(out));
}

template <class K>
struct RationalMapReport {
    int dimY = 0;
    Int degY;
    Int e_r;
    Int degF;
    bool birational = false;
    bool hypothesis_violated = false;
    std::vector<Polynomial<K>> kernel_gens;
};

// Degree bookkeeping for the rational map: deg(F) * deg(Y) = e_r(mu).
template <class K>
RationalMapReport<K> map_degree_report(const std::vector<Polynomial<K>>& f,
                                       const HilbertBurchData<K>& hb,
                                       bool g_condition_passed = true) {
    RationalMapReport<K> rep;
    rep.hypothesis_violated = !g_condition_passed;
    Ideal<K> ker = image_ideal(f);
    rep.kernel_gens = ker.gens;
    HilbertSeries hs = hilbert_series(ker);
    int dim_quotient = hs.dimension();  // = dim Y + 1
    if (dim_quotient != hb.r + 1)
        fail("DimensionAnomaly", "dim k[y]/ker = " + std::to_string(dim_quotient) +
                                     ", expected r+1 = " + std::to_string(hb.r + 1));
    rep.dimY = dim_quotient - 1;
    rep.degY = hs.degree();
    rep.e_r = elementary_symmetric(hb.r, hb.mu);
    if (rep.degY == 0 || rep.e_r % rep.degY != 0)
        fail("NonIntegralDegree", "deg(Y) does not divide e_r");
    rep.degF = rep.e_r / rep.degY;
    rep.birational = (rep.degY == rep.e_r);
    return rep;
}

// HEURISTIC: counts the fiber over a random rational point of the image, by
// saturating the 2x2 minors of [f ; f(p)] by I. Majority over all successful
// trials; never used as a pass/fail criterion.
inline int generic_fiber_degree(const std::vector<Polynomial<Fp>>& f, int trials,
                                std::uint64_t seed) {
    if (f.empty()) fail("EmptyInput", "generic_fiber_degree: no forms");
    if (trials < 3) fail("BadParams", "generic_fiber_degree: need trials >= 3");
    const RingPtr<Fp>& R = f[0].ring();
    const std::uint32_t q = R->field.p;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, q - 1);
    Ideal<Fp> I(R, f);

    std::map<long long, int> votes;
    for (int t = 0; t < trials; ++t) {
        // random point off the base locus
        std::vector<Fp> p;
        std::vector<Fp> vals;
        bool found = false;
        for (int attempt = 0; attempt < 200 && !found; ++attempt) {
            p.clear();
            for (std::size_t i = 0; i < R->nvars(); ++i) p.emplace_back(dist(rng), q);
            vals.clear();
            for (const auto& g : f) vals.push_back(evaluate(g, p));
            for (const auto& v : vals)
                if (!v.is_zero()) { found = true; break; }
        }
        if (!found) continue;

        std::vector<Polynomial<Fp>> gens;
        Monomial one(R->nvars());
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j)
                gens.push_back(f[i].mul_term(vals[j], one) - f[j].mul_term(vals[i], one));
        Ideal<Fp> fiber = saturate(Ideal<Fp>(R, std::move(gens)), I);
        GroebnerBasis<Fp> gb = buchberger(fiber);
        if (gb.contains_one()) continue;
        HilbertSeries hs = hilbert_series(gb, R->nvars());
        if (hs.dimension() != 1) continue;  // not a finite projective fiber
        ++votes[hs.degree().convert_to<long long>()];
    }
    if (votes.empty()) fail("AllTrialsDegenerate", "no trial produced a finite fiber");
    long long best = 0;
    int best_count = -1;
    for (const auto& [deg, count] : votes)
        if (count > best_count) { best = deg; best_count = count; }
    return static_cast<int>(best);
}

}  // namespace hbf

#endif
