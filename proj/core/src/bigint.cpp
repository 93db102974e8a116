#include "moorediag/bigint.hpp"

#include <stdexcept>

namespace moorediag {

namespace {
bool fits_ll(const mpz_class& z) {
    static_assert(sizeof(long) == sizeof(long long), "LP64 expected");
    return z.fits_slong_p();
}
}  // namespace

void Int::set_mpz(const mpz_class& z) {
    if (fits_ll(z)) {
        v_ = z.get_si();
        big_.reset();
    } else {
        big_ = std::make_unique<mpz_class>(z);
    }
}

Int Int::from_string(const std::string& s) {
    Int r;
    r.set_mpz(mpz_class(s));
    return r;
}

int Int::sign() const {
    if (big_) return sgn(*big_);
    return v_ > 0 ? 1 : (v_ < 0 ? -1 : 0);
}

long long Int::to_ll() const {
    if (big_) throw std::overflow_error("Int::to_ll: value does not fit in long long");
    return v_;
}

std::string Int::to_string() const {
    if (big_) return big_->get_str();
    return std::to_string(v_);
}

Int Int::add_slow(const Int& a, const Int& b) {
    Int r;
    r.set_mpz(a.to_mpz() + b.to_mpz());
    return r;
}

Int Int::sub_slow(const Int& a, const Int& b) {
    Int r;
    r.set_mpz(a.to_mpz() - b.to_mpz());
    return r;
}

Int Int::mul_slow(const Int& a, const Int& b) {
    Int r;
    r.set_mpz(a.to_mpz() * b.to_mpz());
    return r;
}

Int Int::neg_slow(const Int& a) {
    Int r;
    r.set_mpz(-a.to_mpz());
    return r;
}

int Int::cmp(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) return a.v_ < b.v_ ? -1 : (a.v_ > b.v_ ? 1 : 0);
    return ::cmp(a.to_mpz(), b.to_mpz());
}

Int operator/(const Int& a, const Int& b) {
    if (b.is_zero()) throw std::domain_error("Int: division by zero");
    if (!a.big_ && !b.big_ && !(a.v_ == INT64_MIN && b.v_ == -1)) return Int(a.v_ / b.v_);
    Int r;
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    r.set_mpz(q);
    return r;
}

Int operator%(const Int& a, const Int& b) {
    if (b.is_zero()) throw std::domain_error("Int: division by zero");
    if (!a.big_ && !b.big_ && !(a.v_ == INT64_MIN && b.v_ == -1)) return Int(a.v_ % b.v_);
    Int r;
    mpz_class m;
    mpz_tdiv_r(m.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    r.set_mpz(m);
    return r;
}

Int Int::div_exact(const Int& b) const {
    Int q = *this / b;
    if (!(*this % b).is_zero()) throw std::domain_error("Int::div_exact: not divisible");
    return q;
}

bool Int::divisible_by(const Int& b) const {
    if (b.is_zero()) return is_zero();
    return (*this % b).is_zero();
}

Int Int::gcd(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) {
        unsigned long long x = a.v_ < 0 ? 0ULL - static_cast<unsigned long long>(a.v_)
                                        : static_cast<unsigned long long>(a.v_);
        unsigned long long y = b.v_ < 0 ? 0ULL - static_cast<unsigned long long>(b.v_)
                                        : static_cast<unsigned long long>(b.v_);
        while (y) {
            unsigned long long t = x % y;
            x = y;
            y = t;
        }
        if (x <= static_cast<unsigned long long>(INT64_MAX)) return Int(static_cast<long long>(x));
    }
    Int r;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    r.set_mpz(g);
    return r;
}

Int Int::lcm(const Int& a, const Int& b) {
    if (a.is_zero() || b.is_zero()) return Int(0);
    return (a * b).abs().div_exact(gcd(a, b));
}

Int Int::mod_reduce(const Int& a, const Int& m) {
    if (m.is_zero()) return a;
    Int r = a % m;
    if (r.is_negative()) r += m.abs();
    return r;
}

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void Rational::normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = Int::gcd(num_, den_);
    if (!g.is_one() && !g.is_zero()) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
    if (num_.is_zero()) den_ = Int(1);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational Rational::mod1() const { return Rational(Int::mod_reduce(num_, den_), den_); }

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace moorediag
