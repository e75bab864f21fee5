#ifndef HBFIBER_FIELD_HPP
#define HBFIBER_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hbf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    std::string code;
    error(std::string c, const std::string& msg)
        : std::runtime_error(msg), code(std::move(c)) {}
};

[[noreturn]] inline void fail(const char* code, const std::string& msg) {
    throw error(code, msg);
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Element of F_p, p < 2^31. Each element carries its modulus; mixed-modulus
// arithmetic is a programming error.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::int64_t v, std::uint32_t p) : p_(p) {
        std::int64_t m = v % static_cast<std::int64_t>(p);
        if (m < 0) m += p;
        v_ = static_cast<std::uint32_t>(m);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(Fp a, Fp b) {
        std::uint64_t s = std::uint64_t(a.v_) + b.v_;
        if (s >= a.p_) s -= a.p_;
        return raw(static_cast<std::uint32_t>(s), a.p_);
    }
    friend Fp operator-(Fp a, Fp b) {
        std::uint64_t s = std::uint64_t(a.v_) + a.p_ - b.v_;
        if (s >= a.p_) s -= a.p_;
        return raw(static_cast<std::uint32_t>(s), a.p_);
    }
    friend Fp operator*(Fp a, Fp b) {
        return raw(static_cast<std::uint32_t>(std::uint64_t(a.v_) * b.v_ % a.p_), a.p_);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    Fp inverse() const {
        if (v_ == 0) fail("DivisionByZero", "inverse of zero in F_p");
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = p_, nr = v_;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += p_;
        return raw(static_cast<std::uint32_t>(t), p_);
    }

    std::string str() const { return std::to_string(v_); }

private:
    static Fp raw(std::uint32_t v, std::uint32_t p) { Fp x; x.v_ = v; x.p_ = p; return x; }
    std::uint32_t v_;
    std::uint32_t p_;
};

inline bool is_zero(const Fp& a) { return a.is_zero(); }
inline bool is_zero(const Rat& a) { return a == 0; }

inline std::string coeff_str(const Fp& a) { return a.str(); }
inline std::string coeff_str(const Rat& a) { return a.str(); }

// Which coefficient field a ring works over.
struct FieldDesc {
    enum class Kind { prime, rational };
    Kind kind = Kind::prime;
    std::uint32_t p = 32003;

    static FieldDesc prime(std::uint32_t p) {
        if (!is_prime(p)) fail("NotPrime", "modulus " + std::to_string(p) + " is not prime");
        return FieldDesc{Kind::prime, p};
    }
    static FieldDesc rational() { return FieldDesc{Kind::rational, 0}; }

    friend bool operator==(const FieldDesc&, const FieldDesc&) = default;
};

}  // namespace hbf

#endif
