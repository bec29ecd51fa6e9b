#ifndef MODCUBIC_MOTIVIC_HPP
#define MODCUBIC_MOTIVIC_HPP

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "modcubic/intmatrix.hpp"
#include "modcubic/polytope.hpp"

namespace modcubic::motivic {

// Integer polynomial in the Lefschetz class L; [point] = 1, [C*] = L - 1.
class MotivicClass {
public:
    MotivicClass() = default;

    static MotivicClass point() { return from_coefficients({1}); }
    static MotivicClass lefschetz() { return from_coefficients({0, 1}); }
    static MotivicClass cstar() { return from_coefficients({-1, 1}); }

    static MotivicClass from_coefficients(std::vector<long long> c) {
        MotivicClass m;
        m.c_ = std::move(c);
        m.trim();
        return m;
    }

    const std::vector<long long>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    friend MotivicClass operator+(const MotivicClass& a, const MotivicClass& b) {
        MotivicClass r;
        r.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.trim();
        return r;
    }
    friend MotivicClass operator-(const MotivicClass& a, const MotivicClass& b) {
        MotivicClass r;
        r.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
        r.trim();
        return r;
    }
    friend MotivicClass operator*(const MotivicClass& a, const MotivicClass& b) {
        if (a.is_zero() || b.is_zero()) return MotivicClass();
        MotivicClass r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    friend MotivicClass operator*(long long s, const MotivicClass& a) {
        MotivicClass r = a;
        for (auto& x : r.c_) x *= s;
        r.trim();
        return r;
    }
    MotivicClass& operator+=(const MotivicClass& o) { return *this = *this + o; }
    MotivicClass& operator-=(const MotivicClass& o) { return *this = *this - o; }
    MotivicClass& operator*=(const MotivicClass& o) { return *this = *this * o; }

    MotivicClass pow(unsigned e) const {
        MotivicClass r = point();
        MotivicClass base = *this;
        while (e) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const MotivicClass& a, const MotivicClass& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const MotivicClass& a, const MotivicClass& b) { return !(a == b); }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t k = c_.size(); k-- > 0;) {
            long long coef = c_[k];
            if (coef == 0) continue;
            if (s.empty()) {
                if (coef < 0) s += "-";
            } else {
                s += coef < 0 ? " - " : " + ";
            }
            long long mag = coef < 0 ? -coef : coef;
            if (k == 0) {
                s += std::to_string(mag);
            } else {
                if (mag != 1) s += std::to_string(mag) + "*";
                s += k == 1 ? "L" : "L^" + std::to_string(k);
            }
        }
        return s;
    }

private:
    std::vector<long long> c_;  // c_[k] = coefficient of L^k

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

inline std::string to_string(const MotivicClass& m) { return m.to_string(); }

// [P^n] = L^n + ... + 1
inline MotivicClass projective_class(unsigned n) {
    std::vector<long long> c(n + 1, 1);
    return MotivicClass::from_coefficients(std::move(c));
}

// ---------------------------------------------------------------------------
// Signed permutations acting on a torus
// ---------------------------------------------------------------------------

// acts by T_i -> eps_i T_{sigma(i)}
struct SignedPermutation {
    std::vector<std::size_t> perm;
    std::vector<int> signs;  // +1 / -1

    SignedPermutation(std::vector<std::size_t> p, std::vector<int> s)
        : perm(std::move(p)), signs(std::move(s)) {
        if (perm.size() != signs.size())
            throw std::invalid_argument("SignedPermutation: size mismatch");
        std::vector<bool> hit(perm.size(), false);
        for (std::size_t i : perm) {
            if (i >= perm.size() || hit[i])
                throw std::invalid_argument("SignedPermutation: not a permutation");
            hit[i] = true;
        }
        for (int s_ : signs)
            if (s_ != 1 && s_ != -1)
                throw std::invalid_argument("SignedPermutation: signs must be +-1");
    }

    int total_sign() const {
        int t = 1;
        for (int s : signs) t *= s;
        return t;
    }
};

struct FixedPointCertificate {
    bool fixed_point_free = false;
    std::vector<std::size_t> violating_cycle;  // coordinates of a sign -1 cycle
};

// A fixed point with all coordinates nonzero exists iff every cycle of the
// permutation has sign product +1; a violating cycle forces a coordinate to 0.
inline FixedPointCertificate fixed_point_free(const SignedPermutation& g) {
    FixedPointCertificate cert;
    std::vector<bool> seen(g.perm.size(), false);
    for (std::size_t start = 0; start < g.perm.size(); ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> cycle;
        int prod = 1;
        std::size_t i = start;
        do {
            seen[i] = true;
            cycle.push_back(i);
            prod *= g.signs[i];
            i = g.perm[i];
        } while (i != start);
        if (prod == -1) {
            cert.fixed_point_free = true;
            cert.violating_cycle = cycle;
            return cert;
        }
    }
    return cert;
}

// Brute-force oracle: solve T_i = eps_i T_{sigma(i)} as an integer linear
// system and ask for a kernel vector with all coordinates nonzero.
inline bool fixed_point_free_oracle(const SignedPermutation& g) {
    const std::size_t n = g.perm.size();
    IntegerMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a.at(i, i) += BigInt(1);
        a.at(i, g.perm[i]) -= BigInt(g.signs[i]);
    }
    IntegerMatrix k = kernel_lattice(a);
    if (k.cols() == 0) return true;  // only the zero solution
    for (std::size_t i = 0; i < n; ++i) {
        bool nonzero_somewhere = false;
        for (std::size_t j = 0; j < k.cols(); ++j)
            if (!k.at(i, j).is_zero()) nonzero_somewhere = true;
        if (!nonzero_somewhere) return true;  // coordinate identically zero
    }
    return false;  // generic kernel vector has all coordinates nonzero
}

inline MotivicClass stratum_sum(
    const std::vector<std::pair<MotivicClass, long long>>& strata) {
    MotivicClass total;
    for (const auto& [cls, mult] : strata) total += mult * cls;
    return total;
}

// ---------------------------------------------------------------------------
// Quotient catalogue for toric orbits
// ---------------------------------------------------------------------------

// Finite audited table of quotient classes, keyed by (orbit dimension, action
// kind). The swap entries with and without the simultaneous sign are kept
// separate; their values agree.
struct QuotientCatalogue {
    std::map<std::pair<int, std::string>, MotivicClass> entries;

    const MotivicClass& lookup(int dim, const std::string& action) const {
        auto it = entries.find({dim, action});
        if (it == entries.end())
            throw std::domain_error("quotient catalogue: (" + std::to_string(dim) + ", " +
                                    action + ") needs manual derivation");
        return it->second;
    }
};

inline QuotientCatalogue default_catalogue() {
    QuotientCatalogue cat;
    MotivicClass L = MotivicClass::lefschetz();
    MotivicClass C = MotivicClass::cstar();
    for (int d = 0; d <= 3; ++d) cat.entries[{d, "free"}] = C.pow(static_cast<unsigned>(d));
    cat.entries[{0, "finite_subgroup"}] = MotivicClass::point();
    cat.entries[{1, "finite_subgroup"}] = C;  // C^* / finite subgroup = C^*
    cat.entries[{2, "swap"}] = L * C;         // (C^*)^2 / swap = C^* x C
    cat.entries[{2, "swap_signed"}] = L * C;  // simultaneous-sign variant, same value
    cat.entries[{3, "s3_standard"}] = L * L * C;  // (C^*)^3 / S3 = C^* x C^2
    if (cat.entries.at({2, "swap"}) != cat.entries.at({2, "swap_signed"}))
        throw std::logic_error("quotient catalogue: swap variants must agree");
    return cat;
}

inline MotivicClass toric_orbit_classes(const std::vector<toric::FaceOrbit>& orbits,
                                        const QuotientCatalogue& catalogue) {
    MotivicClass total;
    for (const auto& orbit : orbits) total += catalogue.lookup(orbit.dim, orbit.action);
    return total;
}

}  // namespace modcubic::motivic

#endif
