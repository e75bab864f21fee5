#ifndef HBFIBER_RESOLUTION_HPP
#define HBFIBER_RESOLUTION_HPP

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "hilbert.hpp"
#include "module_gb.hpp"

namespace hbf {

// (s+1) x s matrix of first syzygies among equigenerated forms; column j is
// homogeneous with entries of degree mu[j].
template <class K>
struct SyzygyMatrix {
    RingPtr<K> ring;
    std::vector<std::vector<Polynomial<K>>> entries;  // rows x cols
    std::vector<int> column_degrees;                  // ascending

    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const { return entries.empty() ? 0 : entries[0].size(); }
};

template <class K>
struct HilbertBurchData {
    int r = 0;  // vars = r + 1
    int s = 0;  // number of syzygies
    int d = 0;  // common generator degree
    std::vector<int> mu;
    SyzygyMatrix<K> phi;
    std::vector<Polynomial<K>> gens;
};

struct GCondRow {
    int i = 0;          // condition index, 1..r
    int t = 0;          // minor size r + 1 - i
    int height = 0;     // kHeightInfinity for the unit ideal
    int threshold = 0;  // must exceed i strictly
    bool pass = false;
};

struct GCondReport {
    std::vector<GCondRow> rows;
    bool pass = false;
};

// Minimal homogeneous generating set of Syz(f_0,...,f_s), columns by degree.
// Computed from an augmented module basis: elements (sum c_i f_i, c_0..c_s)
// whose principal component reduces to zero carry a syzygy in their trace.
template <class K>
SyzygyMatrix<K> syzygy_matrix(const std::vector<Polynomial<K>>& f) {
    if (f.empty()) fail("EmptyInput", "syzygy_matrix: no generators");
    const RingPtr<K>& ring = f[0].ring();
    const std::size_t m = f.size();
    int d = -1;
    for (const auto& g : f) {
        if (g.is_zero()) fail("ZeroPolynomial", "syzygy_matrix: zero generator");
        auto hd = homogeneous_degree(g);
        if (!hd) fail("NotEquigenerated", "generator not homogeneous");
        if (d < 0) d = *hd;
        else if (*hd != d) fail("NotEquigenerated", "generators of mixed degrees");
    }

    // augmented generators in R^(1+m)
    std::vector<FreeModuleElement<K>> aug;
    for (std::size_t i = 0; i < m; ++i) {
        FreeModuleElement<K> v = module_zero<K>(ring, 1 + m);
        v.comps[0] = f[i];
        v.comps[1 + i] = Polynomial<K>::constant(ring, ring->one());
        aug.push_back(std::move(v));
    }
    ModuleGB<K> gb = module_buchberger(aug, ring);

    struct Candidate {
        std::vector<Polynomial<K>> col;
        int degree;
    };
    std::vector<Candidate> cands;
    for (const auto& v : gb.elements) {
        if (!v.comps[0].is_zero()) continue;
        std::vector<Polynomial<K>> col(v.comps.begin() + 1, v.comps.end());
        int deg = -1;
        for (const auto& e : col) {
            if (e.is_zero()) continue;
            auto hd = homogeneous_degree(e);
            if (!hd) fail("InternalError", "non-homogeneous syzygy entry");
            if (deg < 0) deg = *hd;
            else if (*hd != deg) fail("InternalError", "syzygy column of mixed degrees");
        }
        if (deg == 0) fail("NotMinimal", "degree-zero syzygy: input not a minimal generating set");
        cands.push_back({std::move(col), deg});
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& a, const Candidate& b) { return a.degree < b.degree; });

    // degree-ascending redundancy pruning via module membership
    std::vector<Candidate> kept;
    std::vector<FreeModuleElement<K>> kept_elems;
    ModuleGB<K> kept_gb{ring, m, {}};
    for (auto& c : cands) {
        FreeModuleElement<K> v;
        v.comps = c.col;
        if (!kept_elems.empty() && module_member(v, kept_gb)) continue;
        kept_elems.push_back(std::move(v));
        kept_gb = module_buchberger(kept_elems, ring);
        kept.push_back(std::move(c));
    }

    SyzygyMatrix<K> phi;
    phi.ring = ring;
    phi.entries.assign(m, std::vector<Polynomial<K>>(kept.size(), Polynomial<K>(ring)));
    for (std::size_t j = 0; j < kept.size(); ++j) {
        phi.column_degrees.push_back(kept[j].degree);
        for (std::size_t i = 0; i < m; ++i) phi.entries[i][j] = kept[j].col[i];
    }
    return phi;
}

// Ideal of all t x t minors, by memoized cofactor expansion.
template <class K>
Ideal<K> minors(const std::vector<std::vector<Polynomial<K>>>& M, int t, const RingPtr<K>& ring) {
    const int rows = static_cast<int>(M.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(M[0].size());
    if (t <= 0) return Ideal<K>::unit(ring);
    if (t > std::min(rows, cols)) return Ideal<K>(ring, {});

    std::map<std::pair<std::vector<int>, std::vector<int>>, Polynomial<K>> memo;
    auto det = [&](auto&& self, const std::vector<int>& rsel, const std::vector<int>& csel)
        -> Polynomial<K> {
        if (rsel.size() == 1) return M[rsel[0]][csel[0]];
        auto key = std::make_pair(rsel, csel);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Polynomial<K> acc(ring);
        std::vector<int> sub_r(rsel.begin() + 1, rsel.end());
        for (std::size_t j = 0; j < csel.size(); ++j) {
            std::vector<int> sub_c;
            for (std::size_t k = 0; k < csel.size(); ++k)
                if (k != j) sub_c.push_back(csel[k]);
            Polynomial<K> term = M[rsel[0]][csel[j]] * self(self, sub_r, sub_c);
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        memo.emplace(std::move(key), acc);
        return acc;
    };

    std::vector<Polynomial<K>> gens;
    std::vector<int> rsel(t), csel(t);
    auto choose = [&](auto&& self, std::vector<int>& sel, int from, int total, int left,
                      auto&& done) -> void {
        if (left == 0) { done(); return; }
        for (int v = from; v <= total - left; ++v) {
            sel[sel.size() - left] = v;
            self(self, sel, v + 1, total, left - 1, done);
        }
    };
    choose(choose, rsel, 0, rows, t, [&] {
        choose(choose, csel, 0, cols, t, [&] {
            gens.push_back(det(det, rsel, csel));
        });
    });
    return Ideal<K>(ring, std::move(gens));
}

template <class K>
Ideal<K> minors(const SyzygyMatrix<K>& phi, int t) {
    return minors(phi.entries, t, phi.ring);
}

// Hilbert-Burch certification: height 2 plus the maximal-minor identity
// f_i = lambda * (-1)^i * det(phi with row i deleted) for one scalar lambda.
template <class K>
HilbertBurchData<K> hilbert_burch(const Ideal<K>& I) {
    if (I.gens.empty()) fail("EmptyInput", "hilbert_burch: zero ideal");
    const RingPtr<K>& ring = I.ring;
    const int r = static_cast<int>(ring->nvars()) - 1;

    HilbertBurchData<K> hb;
    hb.r = r;
    hb.gens = I.gens;
    hb.phi = syzygy_matrix(I.gens);
    hb.s = static_cast<int>(hb.phi.cols());
    hb.mu = hb.phi.column_degrees;
    hb.d = *homogeneous_degree(I.gens[0]);

    auto [dim, ht] = dimension_and_height(I);
    if (ht != 2) fail("NotHeightTwo", "ideal has height " + std::to_string(ht) + ", need 2");
    if (static_cast<std::size_t>(hb.s) + 1 != I.gens.size())
        fail("MinorMismatch", "syzygy matrix is not (s+1) x s");
    if (hb.s < r) fail("TooFewSyzygies", "s = " + std::to_string(hb.s) +
                                          " < r = " + std::to_string(r));

    // maximal minors, row i omitted
    std::vector<Polynomial<K>> minor(I.gens.size(), Polynomial<K>(ring));
    for (std::size_t i = 0; i < I.gens.size(); ++i) {
        std::vector<std::vector<Polynomial<K>>> sub;
        for (std::size_t k = 0; k < I.gens.size(); ++k)
            if (k != i) sub.push_back(hb.phi.entries[k]);
        Ideal<K> dets = minors(sub, hb.s, ring);
        minor[i] = dets.gens.empty() ? Polynomial<K>(ring) : dets.gens[0];
        if (i % 2 == 1) minor[i] = -minor[i];
    }
    // f_i = lambda * minor_i for a single scalar lambda
    K lambda = ring->make(0);
    bool have_lambda = false;
    for (std::size_t i = 0; i < I.gens.size(); ++i) {
        if (minor[i].is_zero()) {
            if (!I.gens[i].is_zero()) fail("MinorMismatch", "vanishing maximal minor");
            continue;
        }
        K cand = I.gens[i].leading().coeff / minor[i].leading().coeff;
        if (!have_lambda) { lambda = cand; have_lambda = true; }
    }
    if (!have_lambda) fail("MinorMismatch", "all maximal minors vanish");
    for (std::size_t i = 0; i < I.gens.size(); ++i) {
        Polynomial<K> scaled = minor[i].mul_term(lambda, Monomial(ring->nvars()));
        if (!(scaled == I.gens[i]))
            fail("MinorMismatch", "Hilbert-Burch minor identity fails at generator " +
                                      std::to_string(i));
    }

    int mu_sum = 0;
    for (int mj : hb.mu) {
        if (mj < 1) fail("NotMinimal", "syzygy of degree < 1");
        mu_sum += mj;
    }
    if (mu_sum != hb.d)
        fail("MinorMismatch", "sum of column degrees != generator degree");
    return hb;
}

// ht(I_{r+1-i}(phi)) > i for i = 1..r; the unit ideal passes automatically.
template <class K>
GCondReport g_condition(const HilbertBurchData<K>& hb) {
    GCondReport rep;
    rep.pass = true;
    for (int i = 1; i <= hb.r; ++i) {
        int t = hb.r + 1 - i;
        Ideal<K> fit = minors(hb.phi, t);
        int ht = fit.gens.empty() ? 0 : height_with_sentinel(fit);
        bool pass = (ht == kHeightInfinity) || (ht > i);
        rep.rows.push_back({i, t, ht, i, pass});
        rep.pass = rep.pass && pass;
    }
    return rep;
}

}  // namespace hbf

#endif
