#ifndef MODCUBIC_RATIONAL_HPP
#define MODCUBIC_RATIONAL_HPP

#include <limits>
#include <stdexcept>
#include <string>

#include "modcubic/bigint.hpp"

namespace modcubic {

// Reduced fraction over BigInt; denominator always positive, zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    static Rational from_string(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return Rational(BigInt::from_string(s));
        return Rational(BigInt::from_string(s.substr(0, slash)),
                        BigInt::from_string(s.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend int compare(const Rational& a, const Rational& b) {
        return compare(a.num_ * b.den_, b.num_ * a.den_);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(den_, num_);
    }

    Rational pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational r(1);
        Rational base = *this;
        unsigned long long k = static_cast<unsigned long long>(e);
        while (k) {
            if (k & 1ULL) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    Rational abs() const { return num_.is_negative() ? -*this : *this; }

    std::string to_string() const {
        if (den_ == BigInt(1)) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_;
    BigInt den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = gcd(num_, den_);
        num_ = num_ / g;
        den_ = den_ / g;
    }
};

inline std::string to_string(const Rational& v) { return v.to_string(); }

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// p-adic valuation: finite value, or infinite() for the zero input.
struct Valuation {
    bool infinite = false;
    long long value = 0;

    static Valuation inf() { return Valuation{true, 0}; }
    static Valuation of(long long v) { return Valuation{false, v}; }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite || b.infinite) return inf();
        return of(a.value + b.value);
    }
    friend Valuation min(const Valuation& a, const Valuation& b) {
        if (a.infinite) return b;
        if (b.infinite) return a;
        return of(std::min(a.value, b.value));
    }
    std::string to_string() const { return infinite ? "+inf" : std::to_string(value); }
};

inline long long val_p_integer(BigInt n, const BigInt& p) {
    long long v = 0;
    n = n.abs();
    while (true) {
        BigInt q, r;
        BigInt::divmod(n, p, q, r);
        if (!r.is_zero()) break;
        n = q;
        ++v;
    }
    return v;
}

inline Valuation val_p(const Rational& x, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("val_p: p must be prime");
    if (x.is_zero()) return Valuation::inf();
    BigInt bp(p);
    return Valuation::of(val_p_integer(x.num(), bp) - val_p_integer(x.den(), bp));
}

}  // namespace modcubic

#endif
