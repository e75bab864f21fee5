#ifndef HBFIBER_POLYNOMIAL_HPP
#define HBFIBER_POLYNOMIAL_HPP

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace hbf {

// Ring descriptor: coefficient field, named variables, ambient monomial order.
// Shared immutably by all polynomials living in it.
template <class K>
struct Ring {
    FieldDesc field;
    std::vector<std::string> vars;
    MonomialOrder order;

    std::size_t nvars() const { return vars.size(); }

    K make(std::int64_t n) const {
        if constexpr (std::is_same_v<K, Fp>)
            return Fp(n, field.p);
        else
            return K(n);
    }
    K one() const { return make(1); }

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.field == b.field && a.vars == b.vars && a.order == b.order;
    }
};

template <class K>
using RingPtr = std::shared_ptr<const Ring<K>>;

template <class K>
RingPtr<K> make_ring(FieldDesc field, std::vector<std::string> vars,
                     MonomialOrder ord = MonomialOrder::grevlex()) {
    return std::make_shared<const Ring<K>>(Ring<K>{std::move(field), std::move(vars), ord});
}

template <class K>
struct Term {
    K coeff;
    Monomial mono;
};

// Terms kept strictly descending in the ring order; no zero coefficients.
// The empty term list is the zero polynomial.
template <class K>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr<K> ring, std::vector<Term<K>> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {
        normalize();
    }

    const RingPtr<K>& ring() const { return ring_; }
    const std::vector<Term<K>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Term<K>& leading() const {
        if (terms_.empty()) fail("ZeroPolynomial", "leading term of zero");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading().mono; }

    static Polynomial zero(const RingPtr<K>& r) { return Polynomial(r); }
    static Polynomial constant(const RingPtr<K>& r, K c) {
        Polynomial p(r);
        if (!hbf::is_zero(c)) p.terms_.push_back({std::move(c), Monomial(r->nvars())});
        return p;
    }
    static Polynomial variable(const RingPtr<K>& r, std::size_t i, int e = 1) {
        std::vector<int> exps(r->nvars(), 0);
        exps[i] = e;
        Polynomial p(r);
        if (e >= 0) p.terms_.push_back({r->one(), Monomial(std::move(exps))});
        return p;
    }
    static Polynomial term(const RingPtr<K>& r, K c, Monomial m) {
        Polynomial p(r);
        if (!hbf::is_zero(c)) p.terms_.push_back({std::move(c), std::move(m)});
        return p;
    }

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
        f.check_same_ring(g);
        Polynomial out(f.ring_);
        out.terms_.reserve(f.terms_.size() + g.terms_.size());
        std::size_t i = 0, j = 0;
        const auto& ord = f.ring_->order;
        while (i < f.terms_.size() && j < g.terms_.size()) {
            Cmp c = compare(f.terms_[i].mono, g.terms_[j].mono, ord);
            if (c == Cmp::greater) {
                out.terms_.push_back(f.terms_[i++]);
            } else if (c == Cmp::less) {
                out.terms_.push_back(g.terms_[j++]);
            } else {
                K s = f.terms_[i].coeff + g.terms_[j].coeff;
                if (!hbf::is_zero(s)) out.terms_.push_back({std::move(s), f.terms_[i].mono});
                ++i; ++j;
            }
        }
        for (; i < f.terms_.size(); ++i) out.terms_.push_back(f.terms_[i]);
        for (; j < g.terms_.size(); ++j) out.terms_.push_back(g.terms_[j]);
        return out;
    }

    friend Polynomial operator-(const Polynomial& f) {
        Polynomial out(f.ring_);
        out.terms_.reserve(f.terms_.size());
        for (const auto& t : f.terms_) out.terms_.push_back({-t.coeff, t.mono});
        return out;
    }
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        f.check_same_ring(g);
        Polynomial out(f.ring_);
        if (f.is_zero() || g.is_zero()) return out;
        const auto& ord = f.ring_->order;
        auto cmp = [&ord](const Monomial& a, const Monomial& b) { return mono_greater(a, b, ord); };
        std::map<Monomial, K, decltype(cmp)> acc(cmp);
        for (const auto& tf : f.terms_)
            for (const auto& tg : g.terms_) {
                Monomial m = tf.mono * tg.mono;
                K c = tf.coeff * tg.coeff;
                auto it = acc.find(m);
                if (it == acc.end()) acc.emplace(std::move(m), std::move(c));
                else it->second = it->second + c;
            }
        for (auto& [m, c] : acc)
            if (!hbf::is_zero(c)) out.terms_.push_back({std::move(c), m});
        return out;
    }

    Polynomial mul_term(const K& c, const Monomial& m) const {
        Polynomial out(ring_);
        if (hbf::is_zero(c)) return out;
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) out.terms_.push_back({t.coeff * c, t.mono * m});
        return out;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        K inv = ring_->one() / terms_.front().coeff;
        return mul_term(inv, Monomial(ring_->nvars()));
    }

    friend bool operator==(const Polynomial& f, const Polynomial& g) {
        if (f.terms_.size() != g.terms_.size()) return false;
        for (std::size_t i = 0; i < f.terms_.size(); ++i)
            if (!(f.terms_[i].coeff == g.terms_[i].coeff) || !(f.terms_[i].mono == g.terms_[i].mono))
                return false;
        return true;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            std::string cs = coeff_str(t.coeff);
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) { os << "-"; cs = cs.substr(1); }
            } else {
                os << (neg ? " - " : " + ");
                if (neg) cs = cs.substr(1);
            }
            first = false;
            bool unit_coeff = (cs == "1") && !t.mono.is_one();
            if (!unit_coeff) os << cs;
            bool any = false;
            for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
                if (t.mono[i] == 0) continue;
                if (any || !unit_coeff) os << "*";
                os << ring_->vars[i];
                if (t.mono[i] > 1) os << "^" << t.mono[i];
                any = true;
            }
        }
        return os.str();
    }

    void check_same_ring(const Polynomial& g) const {
        if (ring_ == g.ring_) return;
        if (!ring_ || !g.ring_ || !(*ring_ == *g.ring_))
            fail("RingMismatch", "polynomials from different rings");
    }

private:
    void normalize() {
        const auto& ord = ring_->order;
        auto cmp = [&ord](const Monomial& a, const Monomial& b) { return mono_greater(a, b, ord); };
        std::map<Monomial, K, decltype(cmp)> acc(cmp);
        for (auto& t : terms_) {
            auto it = acc.find(t.mono);
            if (it == acc.end()) acc.emplace(t.mono, t.coeff);
            else it->second = it->second + t.coeff;
        }
        terms_.clear();
        for (auto& [m, c] : acc)
            if (!hbf::is_zero(c)) terms_.push_back({c, m});
    }

    RingPtr<K> ring_;
    std::vector<Term<K>> terms_;
};

// Quotient of an exact division f = q*g; throws InexactDivision otherwise.
template <class K>
Polynomial<K> exact_divide(const Polynomial<K>& f, const Polynomial<K>& g) {
    f.check_same_ring(g);
    if (g.is_zero()) fail("InexactDivision", "division by zero polynomial");
    Polynomial<K> q(f.ring());
    Polynomial<K> rem = f;
    const auto& gl = g.leading();
    while (!rem.is_zero()) {
        const auto& rl = rem.leading();
        if (!gl.mono.divides(rl.mono))
            fail("InexactDivision", "remainder nonzero in exact division");
        K c = rl.coeff / gl.coeff;
        Monomial m = gl.mono.divide_into(rl.mono);
        q = q + Polynomial<K>::term(f.ring(), c, m);
        rem = rem - g.mul_term(c, m);
    }
    return q;
}

template <class K>
std::optional<int> homogeneous_degree(const Polynomial<K>& f) {
    if (f.is_zero()) fail("ZeroPolynomial", "degree of zero polynomial");
    int d = f.terms().front().mono.total_degree();
    for (const auto& t : f.terms())
        if (t.mono.total_degree() != d) return std::nullopt;
    return d;
}

template <class K>
int total_degree(const Polynomial<K>& f) {
    int d = 0;
    for (const auto& t : f.terms()) d = std::max(d, t.mono.total_degree());
    return d;
}

template <class K>
K evaluate(const Polynomial<K>& f, const std::vector<K>& point) {
    if (point.size() != f.ring()->nvars())
        fail("LengthMismatch", "evaluation point has wrong length");
    K acc = f.ring()->make(0);
    for (const auto& t : f.terms()) {
        K v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i)
            for (int e = 0; e < t.mono[i]; ++e) v = v * point[i];
        acc = acc + v;
    }
    return acc;
}

}  // namespace hbf

#endif
