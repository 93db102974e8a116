#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace moorediag {

/// Exact integer. Values that fit in a machine word are stored inline;
/// anything larger is promoted to a GMP integer, so no operation ever
/// overflows silently. Division is truncated (C semantics).
class Int {
  public:
    Int() = default;
    Int(long long v) : v_(v) {}
    Int(long v) : v_(v) {}
    Int(int v) : v_(v) {}
    explicit Int(const mpz_class& z) { set_mpz(z); }
    Int(const Int& o) : v_(o.v_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
    Int(Int&& o) noexcept = default;
    Int& operator=(const Int& o) {
        v_ = o.v_;
        big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
        return *this;
    }
    Int& operator=(Int&& o) noexcept = default;

    static Int from_string(const std::string& s);

    bool is_small() const { return !big_; }
    bool is_zero() const { return !big_ && v_ == 0; }
    bool is_one() const { return !big_ && v_ == 1; }
    /// -1, 0 or +1.
    int sign() const;
    bool is_negative() const { return sign() < 0; }

    /// Value as long long; throws std::overflow_error if it does not fit.
    long long to_ll() const;
    mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(v_)); }
    std::string to_string() const;

    friend Int operator+(const Int& a, const Int& b) {
        if (!a.big_ && !b.big_) {
            long long r;
            if (!__builtin_add_overflow(a.v_, b.v_, &r)) return Int(r);
        }
        return add_slow(a, b);
    }
    friend Int operator-(const Int& a, const Int& b) {
        if (!a.big_ && !b.big_) {
            long long r;
            if (!__builtin_sub_overflow(a.v_, b.v_, &r)) return Int(r);
        }
        return sub_slow(a, b);
    }
    friend Int operator*(const Int& a, const Int& b) {
        if (!a.big_ && !b.big_) {
            long long r;
            if (!__builtin_mul_overflow(a.v_, b.v_, &r)) return Int(r);
        }
        return mul_slow(a, b);
    }
    Int operator-() const {
        if (!big_ && v_ != INT64_MIN) return Int(-v_);
        return neg_slow(*this);
    }
    Int& operator+=(const Int& o) { return *this = *this + o; }
    Int& operator-=(const Int& o) { return *this = *this - o; }
    Int& operator*=(const Int& o) { return *this = *this * o; }

    /// Truncated quotient (rounds toward zero). Divisor must be nonzero.
    friend Int operator/(const Int& a, const Int& b);
    /// Remainder matching operator/ (same sign as the dividend).
    friend Int operator%(const Int& a, const Int& b);
    /// Quotient asserting exact divisibility.
    Int div_exact(const Int& b) const;
    bool divisible_by(const Int& b) const;

    Int abs() const { return is_negative() ? -*this : *this; }
    static Int gcd(const Int& a, const Int& b);
    static Int lcm(const Int& a, const Int& b);

    friend bool operator==(const Int& a, const Int& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Int& a, const Int& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Int& a, const Int& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Int& a, const Int& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Int& a, const Int& b) { return cmp(a, b) >= 0; }

    /// Canonical representative of a mod m in [0, m) for m > 0; identity for m == 0.
    static Int mod_reduce(const Int& a, const Int& m);

  private:
    long long v_ = 0;
    std::unique_ptr<mpz_class> big_;  // set only when the value does not fit in v_

    void set_mpz(const mpz_class& z);
    static Int add_slow(const Int& a, const Int& b);
    static Int sub_slow(const Int& a, const Int& b);
    static Int mul_slow(const Int& a, const Int& b);
    static Int neg_slow(const Int& a);
    static int cmp(const Int& a, const Int& b);
};

inline std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.to_string(); }

/// Exact rational, normalized with positive denominator. Only the few
/// operations the Q/Z pairing needs.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(Int num, Int den);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    /// Representative in [0, 1), i.e. the image in Q/Z.
    Rational mod1() const;
    std::string to_string() const;

  private:
    Int num_, den_;
    void normalize();
};

}  // namespace moorediag
