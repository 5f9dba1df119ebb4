#ifndef SYZYGY_FIELD_HPP
#define SYZYGY_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "syzygy/errors.hpp"

namespace syzygy {

/// Exact scalar domain: characteristic 0 (rationals) or a prime field F_p.
struct FieldSpec {
    std::uint64_t characteristic = 0;

    bool is_rational() const { return characteristic == 0; }
    std::string label() const {
        return characteristic == 0 ? std::string("Q") : "F" + std::to_string(characteristic);
    }
    bool operator==(const FieldSpec&) const = default;
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void validate_field_spec(const FieldSpec& fs) {
    if (fs.characteristic == 0) return;
    if (fs.characteristic >= (1ull << 31))
        throw Error("prime fields are limited to p < 2^31");
    if (!is_prime_u64(fs.characteristic))
        throw Error("characteristic must be 0 or prime, got " + std::to_string(fs.characteristic));
}

/// Arithmetic in F_p, p an odd-or-even prime below 2^31 so products fit in 64 bits.
class FpField {
  public:
    using Elt = std::uint64_t;

    explicit FpField(std::uint64_t p) : p_(p) { validate_field_spec({p}); }

    FieldSpec spec() const { return {p_}; }
    std::uint64_t characteristic() const { return p_; }

    Elt zero() const { return 0; }
    Elt one() const { return 1 % p_; }
    bool is_zero(Elt a) const { return a == 0; }

    Elt add(Elt a, Elt b) const {
        Elt s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elt sub(Elt a, Elt b) const { return a >= b ? a - b : a + p_ - b; }
    Elt neg(Elt a) const { return a == 0 ? 0 : p_ - a; }
    Elt mul(Elt a, Elt b) const { return (a * b) % p_; }

    Elt inv(Elt a) const {
        if (a == 0) throw Error("division by zero in F_p");
        // extended Euclid on signed ints; p < 2^31 keeps everything in range
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(a);
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<Elt>(t);
    }
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

    Elt from_int(std::int64_t v) const {
        std::int64_t m = v % static_cast<std::int64_t>(p_);
        if (m < 0) m += static_cast<std::int64_t>(p_);
        return static_cast<Elt>(m);
    }
    Elt from_mpq(const mpq_class& q) const {
        mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p_));
        mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p_));
        if (den == 0) throw Error("denominator divisible by p in reduction mod " + std::to_string(p_));
        std::int64_t n = num.get_si();
        std::int64_t d = den.get_si();
        return div(from_int(n), from_int(d));
    }

    std::string str(Elt a) const { return std::to_string(a); }

  private:
    std::uint64_t p_;
};

/// Exact rational arithmetic backed by GMP.
class RatField {
  public:
    using Elt = mpq_class;

    RatField() = default;

    FieldSpec spec() const { return {0}; }
    std::uint64_t characteristic() const { return 0; }

    Elt zero() const { return mpq_class(0); }
    Elt one() const { return mpq_class(1); }
    bool is_zero(const Elt& a) const { return sgn(a) == 0; }

    Elt add(const Elt& a, const Elt& b) const { return a + b; }
    Elt sub(const Elt& a, const Elt& b) const { return a - b; }
    Elt neg(const Elt& a) const { return -a; }
    Elt mul(const Elt& a, const Elt& b) const { return a * b; }
    Elt inv(const Elt& a) const {
        if (sgn(a) == 0) throw Error("division by zero in Q");
        return 1 / a;
    }
    Elt div(const Elt& a, const Elt& b) const { return a / inv_check(b); }

    Elt from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
    Elt from_mpq(const mpq_class& q) const { return q; }

    std::string str(const Elt& a) const { return a.get_str(); }

  private:
    Elt inv_check(const Elt& b) const {
        if (sgn(b) == 0) throw Error("division by zero in Q");
        return b;
    }
};

}  // namespace syzygy

#endif
