#ifndef MODCUBIC_CYCLOTOMIC_HPP
#define MODCUBIC_CYCLOTOMIC_HPP

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "modcubic/rational.hpp"

namespace modcubic {

inline unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace detail {

// dense integer polynomials, ascending coefficients
using ZPoly = std::vector<BigInt>;

inline ZPoly zpoly_trim(ZPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

// exact division, used only where divisibility is guaranteed
inline ZPoly zpoly_divide(const ZPoly& num, const ZPoly& den) {
    ZPoly rem = num;
    ZPoly quot(num.size(), BigInt(0));
    while (rem.size() >= den.size() && !rem.empty()) {
        BigInt q = rem.back() / den.back();
        std::size_t shift = rem.size() - den.size();
        quot[shift] = q;
        for (std::size_t i = 0; i < den.size(); ++i) rem[shift + i] -= q * den[i];
        rem = zpoly_trim(std::move(rem));
    }
    if (!rem.empty()) throw std::logic_error("zpoly_divide: inexact");
    return zpoly_trim(std::move(quot));
}

inline const ZPoly& cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, ZPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up
    for (unsigned m = 1; m <= n; ++m) {
        if (n % m || cache.count(m)) continue;
        ZPoly num(m + 1, BigInt(0));
        num[0] = BigInt(-1);
        num[m] = BigInt(1);
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0) num = zpoly_divide(num, cache.at(d));
        cache.emplace(m, std::move(num));
    }
    return cache.at(n);
}

}  // namespace detail

// Element of the cyclotomic field Q(zeta_N) in the power basis modulo Phi_N.
class Cyclotomic {
public:
    explicit Cyclotomic(unsigned conductor = 24)
        : n_(conductor), c_(euler_phi(conductor), Rational(0)) {
        if (conductor == 0) throw std::invalid_argument("Cyclotomic: conductor 0");
    }

    static Cyclotomic from_rational(Rational r, unsigned conductor = 24) {
        Cyclotomic z(conductor);
        z.c_[0] = std::move(r);
        return z;
    }

    // zeta_order^k inside Q(zeta_conductor); requires order | conductor
    static Cyclotomic root_of_unity(unsigned order, long long k, unsigned conductor = 24) {
        if (conductor % order != 0)
            throw std::invalid_argument("Cyclotomic: order does not divide conductor");
        long long step = conductor / order;
        long long e = ((k % order) + order) % order * step;
        Cyclotomic z = from_rational(Rational(1), conductor);
        for (long long i = 0; i < e; ++i) z.shift_up();
        return z;
    }

    unsigned conductor() const { return n_; }
    unsigned degree() const { return static_cast<unsigned>(c_.size()); }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }

    Rational rational_part() const {
        if (!is_rational()) throw std::domain_error("Cyclotomic: not rational");
        return c_[0];
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        a.require_same(b);
        Cyclotomic r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        a.require_same(b);
        Cyclotomic r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
        return r;
    }
    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        a.require_same(b);
        const std::size_t d = a.c_.size();
        std::vector<Rational> prod(2 * d - 1, Rational(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (b.c_[j].is_zero()) continue;
                prod[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return reduce(std::move(prod), a.n_);
    }

    friend Cyclotomic operator*(const Rational& s, const Cyclotomic& a) {
        Cyclotomic r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Extended Euclid in Q[x] against Phi_N; Phi_N irreducible, so every
    // nonzero element is invertible.
    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
        using QPoly = std::vector<Rational>;
        auto trim = [](QPoly p) {
            while (!p.empty() && p.back().is_zero()) p.pop_back();
            return p;
        };
        const auto& phi = detail::cyclotomic_polynomial(n_);
        QPoly r0(phi.size());
        for (std::size_t i = 0; i < phi.size(); ++i) r0[i] = Rational(phi[i]);
        QPoly r1 = trim(c_);
        QPoly s0{}, s1{Rational(1)};  // s tracks the coefficient of *this
        while (!r1.empty()) {
            // divide r0 by r1
            QPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
            QPoly rem = r0;
            while (rem.size() >= r1.size() && !rem.empty()) {
                Rational f = rem.back() / r1.back();
                std::size_t shift = rem.size() - r1.size();
                q[shift] = f;
                for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= f * r1[i];
                rem = trim(std::move(rem));
            }
            QPoly s2 = s0;
            s2.resize(std::max(s0.size(), q.size() + s1.size()), Rational(0));
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
            r0 = std::move(r1);
            r1 = trim(std::move(rem));
            s0 = std::move(s1);
            s1 = trim(std::move(s2));
        }
        if (r0.size() != 1) throw std::logic_error("Cyclotomic: gcd not constant");
        Cyclotomic inv(n_);
        for (std::size_t i = 0; i < s0.size() && i < inv.c_.size(); ++i)
            inv.c_[i] = s0[i] / r0[0];
        return inv;
    }

    Cyclotomic pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclotomic r = from_rational(Rational(1), n_);
        Cyclotomic base = *this;
        unsigned long long k = static_cast<unsigned long long>(e);
        while (k) {
            if (k & 1ULL) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        if (is_rational()) return c_[0].to_string();
        std::string s = "(";
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            Rational v = c_[i];
            if (first) {
                if (v.sign() < 0) {
                    s += "-";
                    v = -v;
                }
                first = false;
            } else if (v.sign() < 0) {
                s += " - ";
                v = -v;
            } else {
                s += " + ";
            }
            if (i == 0) {
                s += v.to_string();
            } else {
                if (v != Rational(1)) s += v.to_string() + "*";
                s += "z^" + std::to_string(i);
            }
        }
        return s + ")";
    }

private:
    unsigned n_;
    std::vector<Rational> c_;

    void require_same(const Cyclotomic& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Cyclotomic: conductor mismatch");
    }

    // multiply by x once, reducing modulo Phi_N
    void shift_up() {
        const auto& phi = detail::cyclotomic_polynomial(n_);
        Rational top = c_.back();
        for (std::size_t i = c_.size(); i-- > 1;) c_[i] = c_[i - 1];
        c_[0] = Rational(0);
        if (top.is_zero()) return;
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= top * Rational(phi[i]);
    }

    static Cyclotomic reduce(std::vector<Rational> prod, unsigned n) {
        const auto& phi = detail::cyclotomic_polynomial(n);
        const std::size_t d = phi.size() - 1;
        for (std::size_t deg = prod.size(); deg-- > d;) {
            Rational f = prod[deg];
            if (f.is_zero()) continue;
            prod[deg] = Rational(0);
            for (std::size_t i = 0; i < d; ++i) prod[deg - d + i] -= f * Rational(phi[i]);
        }
        Cyclotomic r(n);
        for (std::size_t i = 0; i < d; ++i) r.c_[i] = prod[i];
        return r;
    }
};

inline std::string to_string(const Cyclotomic& v) { return v.to_string(); }

}  // namespace modcubic

#endif
