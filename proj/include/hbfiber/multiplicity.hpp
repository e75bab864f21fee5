#ifndef HBFIBER_MULTIPLICITY_HPP
#define HBFIBER_MULTIPLICITY_HPP

#include <vector>

#include "field.hpp"

namespace hbf {

// Syzygy degree vector: s entries, s >= r >= 1, all positive.
struct MuVector {
    int r = 1;
    std::vector<int> mu;

    int s() const { return static_cast<int>(mu.size()); }

    void validate() const {
        if (r < 1) fail("BadParams", "r must be >= 1");
        if (s() < r) fail("BadParams", "need s >= r");
        for (int m : mu)
            if (m < 1) fail("BadParams", "mu entries must be positive");
    }
};

// binom(n, k) in the combinatorial convention: 0 whenever n < k or k < 0
// (in particular for negative n).
inline Int binom(long long n, long long k) {
    if (k < 0 || n < k) return 0;
    Int b = 1;
    for (long long i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;
    }
    return b;
}

// e_r(mu) by the triangle recurrence e[j][i] = e[j-1][i] + mu_j * e[j-1][i-1].
inline Int elementary_symmetric(int r, const std::vector<int>& mu) {
    const int s = static_cast<int>(mu.size());
    if (r < 0 || r > s) fail("BadParams", "elementary_symmetric: need 0 <= r <= s");
    std::vector<Int> e(r + 1, 0);
    e[0] = 1;
    for (int j = 0; j < s; ++j)
        for (int i = std::min(r, j + 1); i >= 1; --i) e[i] += Int(mu[j]) * e[i - 1];
    return e[r];
}

// oracle twin of elementary_symmetric: plain subset enumeration
inline Int elementary_symmetric_naive(int r, const std::vector<int>& mu) {
    const int s = static_cast<int>(mu.size());
    if (r < 0 || r > s) fail("BadParams", "elementary_symmetric: need 0 <= r <= s");
    Int total = 0;
    std::vector<int> idx(r);
    auto rec = [&](auto&& self, int from, int left) -> void {
        if (left == 0) {
            Int prod = 1;
            for (int k = 0; k < r; ++k) prod *= mu[idx[k]];
            total += prod;
            return;
        }
        for (int v = from; v <= s - left; ++v) {
            idx[r - left] = v;
            self(self, v + 1, left - 1);
        }
    };
    rec(rec, 0, r);
    return total;
}

namespace detail {

// sum over all size-i index subsets J of f(sum of mu over J)
template <class F>
Int subset_sum(int i, const std::vector<int>& mu, F&& f) {
    const int s = static_cast<int>(mu.size());
    if (s > 20) fail("BadParams", "subset enumeration guarded at s <= 20");
    if (i < 0 || i > s) return 0;
    Int total = 0;
    auto rec = [&](auto&& self, int from, int left, long long acc) -> void {
        if (left == 0) { total += f(acc); return; }
        for (int v = from; v <= s - left; ++v) self(self, v + 1, left - 1, acc + mu[v]);
    };
    rec(rec, 0, i, 0);
    return total;
}

}  // namespace detail

// m_i = sum over size-i subsets J of binom(sum_{e in J} mu_e - 1, r);
// the empty subset contributes binom(-1, r) = 0, so m_0 = 0.
inline Int m_coefficient(int i, const MuVector& mv) {
    mv.validate();
    if (i < 0 || i > mv.s()) fail("BadParams", "m_coefficient: need 0 <= i <= s");
    return detail::subset_sum(i, mv.mu, [&](long long acc) { return binom(acc - 1, mv.r); });
}

// Multiplicity of the saturated fiber algebra from the m_i coefficients:
//   s = r:  1 + sum_{i=0}^r (-1)^{r+i} m_i
//   s > r:  sum_{i=s-r}^s (-1)^{s+i} m_i binom(i, s-r)
// Always equal to elementary_symmetric(r, mu).
inline Int multiplicity_from_m(const MuVector& mv) {
    mv.validate();
    const int r = mv.r, s = mv.s();
    Int acc = 0;
    if (s == r) {
        acc = 1;
        for (int i = 0; i <= r; ++i) {
            Int term = m_coefficient(i, mv);
            acc += ((r + i) % 2 == 0) ? term : -term;
        }
    } else {
        for (int i = s - r; i <= s; ++i) {
            Int term = m_coefficient(i, mv) * binom(i, s - r);
            acc += ((s + i) % 2 == 0) ? term : -term;
        }
    }
    return acc;
}

// j(I) = d * e_r(mu), valid when d = sum(mu).
inline Int j_multiplicity_formula(int d, const MuVector& mv) {
    mv.validate();
    long long mu_sum = 0;
    for (int m : mv.mu) mu_sum += m;
    if (d != mu_sum) fail("DegreeMismatch", "d != sum of mu");
    return Int(d) * elementary_symmetric(mv.r, mv.mu);
}

enum class LemmaPart { i, ii, iii, iv };

struct LemmaParams {
    int r = 1;
    int s = 1;
    int k = 0;    // part (i)
    int ell = 1;  // part (ii)
    std::vector<int> mu;  // parts (ii)-(iv)
};

// Exact verification of the four alternating-sum identities behind the
// multiplicity formula, both sides by brute-force enumeration.
inline bool lemma_identity(LemmaPart part, const LemmaParams& p) {
    auto sign = [](int n) { return n % 2 == 0 ? Int(1) : Int(-1); };
    switch (part) {
        case LemmaPart::i: {
            if (p.k < 0 || p.k > p.r || p.r > p.s) fail("BadParams", "part (i): need 0 <= k <= r <= s");
            Int lhs = 0;
            for (int i = std::max(p.k, p.s - p.r); i <= p.s; ++i)
                lhs += sign(i) * binom(i, p.s - p.r) * binom(p.s - p.k, i - p.k);
            Int rhs = (p.k == p.r) ? sign(p.s) : Int(0);
            return lhs == rhs;
        }
        case LemmaPart::ii: {
            MuVector mv{p.r, p.mu};
            mv.validate();
            if (p.ell < 1 || p.ell > p.r) fail("BadParams", "part (ii): need 1 <= ell <= r");
            const int s = mv.s();
            Int lhs = 0;
            for (int i = s - p.r; i <= s; ++i) {
                if (i < 0) continue;
                Int inner = detail::subset_sum(i, p.mu, [&](long long acc) {
                    Int pw = 1;
                    for (int e = 0; e < p.ell; ++e) pw *= acc;
                    return pw;
                });
                lhs += sign(i) * binom(i, s - p.r) * inner;
            }
            Int rhs = 0;
            if (p.ell == p.r) {
                Int fact = 1;
                for (int i = 2; i <= p.r; ++i) fact *= i;
                rhs = sign(s) * fact * elementary_symmetric_naive(p.r, p.mu);
            }
            return lhs == rhs;
        }
        case LemmaPart::iii: {
            MuVector mv{p.r, p.mu};
            mv.validate();
            const int s = mv.s();
            if (s <= p.r) fail("BadParams", "part (iii): need s > r");
            Int lhs = 0;
            for (int i = s - p.r; i <= s; ++i) {
                Int inner = detail::subset_sum(
                    i, p.mu, [&](long long acc) { return binom(acc - 1, p.r); });
                lhs += sign(i) * binom(i, s - p.r) * inner;
            }
            return lhs == sign(s) * elementary_symmetric_naive(p.r, p.mu);
        }
        case LemmaPart::iv: {
            MuVector mv{p.r, p.mu};
            mv.validate();
            if (mv.s() != p.r) fail("BadParams", "part (iv): need s = r");
            Int lhs = 1;
            for (int i = 0; i <= p.r; ++i) {
                Int inner = detail::subset_sum(
                    i, p.mu, [&](long long acc) { return binom(acc - 1, p.r); });
                lhs += sign(i + p.r) * inner;
            }
            Int rhs = 1;
            for (int m : p.mu) rhs *= m;
            return lhs == rhs;
        }
    }
    return false;
}

struct MultiplicityReport {
    Int e_r;               // elementary symmetric value
    std::vector<Int> m;    // m_0 .. m_s
    Int alt_sum;           // alternating-sum route
    Int j;                 // d * e_r
    bool consistent = false;
};

inline MultiplicityReport multiplicity_report(int d, const MuVector& mv) {
    mv.validate();
    MultiplicityReport rep;
    rep.e_r = elementary_symmetric(mv.r, mv.mu);
    for (int i = 0; i <= mv.s(); ++i) rep.m.push_back(m_coefficient(i, mv));
    rep.alt_sum = multiplicity_from_m(mv);
    rep.j = j_multiplicity_formula(d, mv);
    rep.consistent = (rep.e_r == rep.alt_sum);
    return rep;
}

}  // namespace hbf

#endif
