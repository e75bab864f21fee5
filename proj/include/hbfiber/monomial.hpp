#ifndef HBFIBER_MONOMIAL_HPP
#define HBFIBER_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "field.hpp"

namespace hbf {

// Dense exponent vector with cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exp_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<int> exps)
        : exp_(std::move(exps)), deg_(std::accumulate(exp_.begin(), exp_.end(), 0)) {}

    std::size_t nvars() const { return exp_.size(); }
    int operator[](std::size_t i) const { return exp_[i]; }
    int total_degree() const { return deg_; }
    const std::vector<int>& exponents() const { return exp_; }
    bool is_one() const { return deg_ == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m(a.exp_.size());
        for (std::size_t i = 0; i < a.exp_.size(); ++i) m.exp_[i] = a.exp_[i] + b.exp_[i];
        m.deg_ = a.deg_ + b.deg_;
        return m;
    }

    bool divides(const Monomial& b) const {
        if (deg_ > b.deg_) return false;
        for (std::size_t i = 0; i < exp_.size(); ++i)
            if (exp_[i] > b.exp_[i]) return false;
        return true;
    }

    // a / this, caller must ensure divisibility
    Monomial divide_into(const Monomial& a) const {
        Monomial m(exp_.size());
        for (std::size_t i = 0; i < exp_.size(); ++i) m.exp_[i] = a.exp_[i] - exp_[i];
        m.deg_ = a.deg_ - deg_;
        return m;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial m(a.exp_.size());
        for (std::size_t i = 0; i < a.exp_.size(); ++i) m.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
        m.deg_ = std::accumulate(m.exp_.begin(), m.exp_.end(), 0);
        return m;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.exp_.size(); ++i)
            if (a.exp_[i] > 0 && b.exp_[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }

private:
    std::vector<int> exp_;
    int deg_ = 0;
};

enum class Cmp { less, equal, greater };

struct MonomialOrder {
    enum class Kind { grevlex, lex, block };
    Kind kind = Kind::grevlex;
    // block: first k variables form an elimination block, grevlex inside each block
    std::size_t block_k = 0;

    static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder block(std::size_t k) { return {Kind::block, k}; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

namespace detail {

// grevlex on the index range [lo, hi)
inline Cmp grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    int da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da > db ? Cmp::greater : Cmp::less;
    for (std::size_t i = hi; i-- > lo;) {
        int d = a[i] - b[i];
        if (d != 0) return d < 0 ? Cmp::greater : Cmp::less;
    }
    return Cmp::equal;
}

}  // namespace detail

inline Cmp compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    if (a.nvars() != b.nvars()) fail("LengthMismatch", "monomials in different rings");
    const std::size_t n = a.nvars();
    switch (ord.kind) {
        case MonomialOrder::Kind::grevlex:
            return detail::grevlex_range(a, b, 0, n);
        case MonomialOrder::Kind::lex:
            for (std::size_t i = 0; i < n; ++i) {
                int d = a[i] - b[i];
                if (d != 0) return d > 0 ? Cmp::greater : Cmp::less;
            }
            return Cmp::equal;
        case MonomialOrder::Kind::block: {
            Cmp c = detail::grevlex_range(a, b, 0, ord.block_k);
            if (c != Cmp::equal) return c;
            return detail::grevlex_range(a, b, ord.block_k, n);
        }
    }
    return Cmp::equal;
}

inline bool mono_greater(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    return compare(a, b, ord) == Cmp::greater;
}

}  // namespace hbf

#endif
