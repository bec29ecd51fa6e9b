#ifndef MODCUBIC_DIVISORS_HPP
#define MODCUBIC_DIVISORS_HPP

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "modcubic/intmatrix.hpp"
#include "modcubic/rational.hpp"

namespace modcubic::ledger {

// Formal Q-linear combination of named divisor symbols.
class DivisorExpression {
public:
    DivisorExpression() = default;

    static DivisorExpression symbol(const std::string& name, Rational coeff = Rational(1)) {
        DivisorExpression e;
        e.add(name, coeff);
        return e;
    }

    void add(const std::string& name, const Rational& coeff) {
        if (coeff.is_zero()) return;
        auto it = coeffs_.find(name);
        if (it == coeffs_.end()) {
            coeffs_.emplace(name, coeff);
            return;
        }
        it->second += coeff;
        if (it->second.is_zero()) coeffs_.erase(it);
    }

    const std::map<std::string, Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coefficient(const std::string& name) const {
        auto it = coeffs_.find(name);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    friend DivisorExpression operator+(const DivisorExpression& a, const DivisorExpression& b) {
        DivisorExpression r = a;
        for (const auto& [n, c] : b.coeffs_) r.add(n, c);
        return r;
    }
    friend DivisorExpression operator-(const DivisorExpression& a, const DivisorExpression& b) {
        DivisorExpression r = a;
        for (const auto& [n, c] : b.coeffs_) r.add(n, -c);
        return r;
    }
    friend DivisorExpression operator*(const Rational& s, const DivisorExpression& a) {
        DivisorExpression r;
        for (const auto& [n, c] : a.coeffs_) r.add(n, s * c);
        return r;
    }
    DivisorExpression& operator+=(const DivisorExpression& o) { return *this = *this + o; }
    DivisorExpression& operator-=(const DivisorExpression& o) { return *this = *this - o; }

    friend bool operator==(const DivisorExpression& a, const DivisorExpression& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const DivisorExpression& a, const DivisorExpression& b) {
        return !(a == b);
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (const auto& [n, c] : coeffs_) {
            if (s.empty()) {
                if (c.sign() < 0) s += "-";
            } else {
                s += c.sign() < 0 ? " - " : " + ";
            }
            Rational mag = c.abs();
            if (mag != Rational(1)) s += mag.to_string() + "*";
            s += n;
        }
        return s;
    }

private:
    std::map<std::string, Rational> coeffs_;
};

inline std::string to_string(const DivisorExpression& e) { return e.to_string(); }

// Directed rewrites applied in a fixed order until no rewritable symbol
// remains; the rule set must be terminating (right-hand sides only mention
// terminal symbols).
class RewriteSystem {
public:
    void add_rule(const std::string& symbol, DivisorExpression replacement) {
        rules_.emplace_back(symbol, std::move(replacement));
    }

    DivisorExpression normalize(const DivisorExpression& e) const {
        DivisorExpression cur = e;
        for (int guard = 0; guard < 64; ++guard) {
            bool changed = false;
            for (const auto& [sym, repl] : rules_) {
                Rational c = cur.coefficient(sym);
                if (c.is_zero()) continue;
                cur.add(sym, -c);
                cur += c * repl;
                changed = true;
            }
            if (!changed) return cur;
        }
        throw std::logic_error("RewriteSystem: rules do not terminate");
    }

private:
    std::vector<std::pair<std::string, DivisorExpression>> rules_;
};

// ---------------------------------------------------------------------------
// Hodge-bundle relations on the Baily-Borel models
// ---------------------------------------------------------------------------

struct HodgeRelations {
    DivisorExpression nodal;          // D_n in lambda
    DivisorExpression eckardt;        // R in lambda
    DivisorExpression canonical;      // K = 5 lambda - (1-1/6) D_n - (1-1/2) R
    Rational canonical_lambda_coeff;  // K as a multiple of lambda
    DivisorExpression nodal_marked;   // D_{n,m} in lambda_m
    DivisorExpression canonical_marked;
    Rational polarization_lambda;     // O(1) = (this) * lambda
};

// weight-w form vanishing on a divisor with ramification index r gives
// w * lambda = (1/r) * divisor
inline HodgeRelations hodge_relations(std::pair<long long, long long> borcherds_weights = {4,
                                                                                           75},
                                      std::pair<long long, long long> ramification = {6, 2},
                                      long long marked_nodal_ramification = 3,
                                      long long nodal_wps_degree = 4) {
    auto [w_short, w_long] = borcherds_weights;
    auto [r_nodal, r_eckardt] = ramification;
    if (w_short <= 0 || w_long <= 0 || r_nodal <= 0 || r_eckardt <= 0)
        throw std::invalid_argument("hodge_relations: weights and indices must be positive");
    HodgeRelations h;
    h.nodal = DivisorExpression::symbol("lambda", Rational(w_short * r_nodal));
    h.eckardt = DivisorExpression::symbol("lambda", Rational(w_long * r_eckardt));
    // K = (dim+1) lambda - sum (1 - 1/r_i) Div_i
    Rational k(5);
    k -= Rational(r_nodal - 1, r_nodal) * Rational(w_short * r_nodal);
    k -= Rational(r_eckardt - 1, r_eckardt) * Rational(w_long * r_eckardt);
    h.canonical_lambda_coeff = k;
    h.canonical = DivisorExpression::symbol("lambda", k);

    h.nodal_marked = DivisorExpression::symbol("lambda_m",
                                               Rational(w_short * marked_nodal_ramification));
    Rational km(5);
    km -= Rational(marked_nodal_ramification - 1, marked_nodal_ramification) *
          Rational(w_short * marked_nodal_ramification);
    h.canonical_marked = DivisorExpression::symbol("lambda_m", km);

    // O(1) from D_n = O(nodal_wps_degree)
    h.polarization_lambda = Rational(w_short * r_nodal) / Rational(nodal_wps_degree);
    return h;
}

// ---------------------------------------------------------------------------
// Riemann-Hurwitz descent and discrepancies
// ---------------------------------------------------------------------------

// q^* K_down = K_up - sum (ratio_i - 1) R_i
inline DivisorExpression riemann_hurwitz_descent(
    const DivisorExpression& k_up,
    const std::vector<std::pair<DivisorExpression, Rational>>& ramification) {
    DivisorExpression down = k_up;
    for (const auto& [div, ratio] : ramification) {
        if (ratio < Rational(1))
            throw std::invalid_argument("riemann_hurwitz_descent: stabilizer ratio < 1");
        down -= (ratio - Rational(1)) * div;
    }
    return down;
}

// (c + sum (ratio_i - 1) mu_i) / gF_ratio - 1
inline Rational kirwan_discrepancy(long long codim,
                                   const std::vector<std::pair<Rational, Rational>>& ram,
                                   const Rational& gf_ratio) {
    if (codim < 2) throw std::invalid_argument("kirwan_discrepancy: codimension must be >= 2");
    if (gf_ratio < Rational(1))
        throw std::invalid_argument("kirwan_discrepancy: gF ratio must be >= 1");
    Rational num(codim);
    for (const auto& [ratio, mu] : ram) num += (ratio - Rational(1)) * mu;
    return num / gf_ratio - Rational(1);
}

// boundary variant: (a(F,X,Delta) + 1 + sum (ratio_i - 1) mu_i) / gF - 1
inline Rational kirwan_discrepancy_boundary(
    const Rational& a_f_delta, const std::vector<std::pair<Rational, Rational>>& ram,
    const Rational& gf_ratio) {
    Rational num = a_f_delta + Rational(1);
    for (const auto& [ratio, mu] : ram) num += (ratio - Rational(1)) * mu;
    return num / gf_ratio - Rational(1);
}

// ((1 + mu_D + mu_R) + 1) / r - 1
inline Rational toroidal_discrepancy(long long r, const Rational& mu_d, const Rational& mu_r) {
    if (r < 1) throw std::invalid_argument("toroidal_discrepancy: ramification index >= 1");
    return (Rational(1) + mu_d + mu_r + Rational(1)) / Rational(r) - Rational(1);
}

// solves 0 = restr(D) + a * restr(T) componentwise on Z^3
inline Rational pullback_coefficient(const std::array<long long, 3>& restr_divisor,
                                     const std::array<long long, 3>& restr_exceptional) {
    bool divisor_zero =
        restr_divisor[0] == 0 && restr_divisor[1] == 0 && restr_divisor[2] == 0;
    if (divisor_zero) return Rational(0);
    std::vector<Rational> candidates;
    for (int i = 0; i < 3; ++i) {
        if (restr_exceptional[i] == 0) {
            if (restr_divisor[i] != 0)
                throw std::invalid_argument("pullback_coefficient: inconsistent components");
            continue;
        }
        candidates.push_back(Rational(-restr_divisor[i], restr_exceptional[i]));
    }
    if (candidates.empty())
        throw std::invalid_argument("pullback_coefficient: exceptional restriction is zero");
    for (const auto& c : candidates)
        if (c != candidates[0])
            throw std::invalid_argument("pullback_coefficient: components disagree");
    return candidates[0];
}

// K^4 of (pullback + a E) with E contracted to a point: base + a^4 E^4
inline Rational top_self_intersection_blowup(const Rational& k4_base, const Rational& a,
                                             const Rational& e4) {
    return k4_base + a.pow(4) * e4;
}

// ---------------------------------------------------------------------------
// The 5-adic non-K-equivalence certificate
// ---------------------------------------------------------------------------

struct KEquivalenceVerdict {
    enum class Result { NotKEquivalent, Inconclusive };
    Result result = Result::Inconclusive;
    long long witness_prime = 0;
    long long coeff_valuation = 0;
    long long rhs_valuation = 0;
    std::string note;
};

// Decides whether coeff * d = rhs_tail can hold for some d in (1/e^dim) Z,
// knowing only the prime support of e. For a prime p outside that support,
// val_p(coeff * d) >= val_p(coeff) whenever d != 0, so val_p(rhs) <
// val_p(coeff) rules the equation out.
inline KEquivalenceVerdict k_equivalence_certificate(const Rational& lhs_coeff,
                                                     const std::set<long long>& e_prime_support,
                                                     const Rational& rhs_tail,
                                                     unsigned dim = 4) {
    KEquivalenceVerdict v;
    if (lhs_coeff.is_zero()) {
        v.note = "zero coefficient: no information";
        return v;
    }
    if (rhs_tail.is_zero()) {
        v.note = "rhs tail zero: d = 0 is admissible, inconclusive";
        return v;
    }
    std::vector<long long> candidates;
    for (long long p : prime_factors(lhs_coeff.num())) candidates.push_back(p);
    for (long long p : prime_factors(lhs_coeff.den())) candidates.push_back(p);
    for (long long p : prime_factors(rhs_tail.num())) candidates.push_back(p);
    for (long long p : prime_factors(rhs_tail.den())) candidates.push_back(p);
    for (long long p : candidates) {
        if (e_prime_support.count(p)) continue;  // val_p(d) could be negative
        long long vc = val_p(lhs_coeff, p).value;
        long long vr = val_p(rhs_tail, p).value;
        if (vc > vr) {
            v.result = KEquivalenceVerdict::Result::NotKEquivalent;
            v.witness_prime = p;
            v.coeff_valuation = vc;
            v.rhs_valuation = vr;
            v.note = "d lies in (1/e^" + std::to_string(dim) + ")Z with " + std::to_string(p) +
                     " not dividing e, so val_" + std::to_string(p) + "(lhs tail) >= " +
                     std::to_string(vc) + " > " + std::to_string(vr);
            return v;
        }
    }
    v.note = "no excluded prime separates the two tails";
    return v;
}

// ---------------------------------------------------------------------------
// Point counts in P(F_3^5)
// ---------------------------------------------------------------------------

struct F3RootCounts {
    std::size_t isotropic = 0;  // norm 0
    std::size_t short_roots = 0;   // norm 1
    std::size_t long_roots = 0;    // norm 2
    std::size_t short_orthogonal_to_h = 0;
    std::size_t long_orthogonal_to_h = 0;
};

// Exhaustive enumeration of the 121 points of P(F_3^5) under the standard
// signature-(4,1) form diag(1,1,1,1,2).
inline F3RootCounts f3_root_counts() {
    const int d[5] = {1, 1, 1, 1, 2};
    std::vector<std::array<int, 5>> points;
    for (int mask = 1; mask < 243; ++mask) {
        std::array<int, 5> v{};
        int m = mask;
        for (int i = 0; i < 5; ++i) {
            v[i] = m % 3;
            m /= 3;
        }
        int lead = -1;
        for (int i = 0; i < 5; ++i)
            if (v[i] != 0) {
                lead = i;
                break;
            }
        if (v[lead] != 1) continue;  // canonical representative
        points.push_back(v);
    }
    auto norm = [&](const std::array<int, 5>& v) {
        int n = 0;
        for (int i = 0; i < 5; ++i) n += d[i] * v[i] * v[i];
        return n % 3;
    };
    auto pair = [&](const std::array<int, 5>& v, const std::array<int, 5>& w) {
        int n = 0;
        for (int i = 0; i < 5; ++i) n += d[i] * v[i] * w[i];
        return n % 3;
    };
    F3RootCounts counts;
    std::array<int, 5> h{};
    bool have_h = false;
    for (const auto& v : points) {
        int n = norm(v);
        if (n == 0) {
            ++counts.isotropic;
            if (!have_h) {
                h = v;
                have_h = true;
            }
        } else if (n == 1) {
            ++counts.short_roots;
        } else {
            ++counts.long_roots;
        }
    }
    if (!have_h) throw std::logic_error("f3_root_counts: no isotropic point found");
    for (const auto& v : points) {
        if (pair(v, h) != 0) continue;
        int n = norm(v);
        if (n == 1) ++counts.short_orthogonal_to_h;
        if (n == 2) ++counts.long_orthogonal_to_h;
    }
    return counts;
}

// ---------------------------------------------------------------------------
// Intersection forms
// ---------------------------------------------------------------------------

// Symmetric pairing table on divisor symbols (surfaces).
class QuadraticForm {
public:
    void set(const std::string& a, const std::string& b, Rational value) {
        pairings_[key(a, b)] = std::move(value);
    }

    Rational pair(const std::string& a, const std::string& b) const {
        auto it = pairings_.find(key(a, b));
        if (it == pairings_.end())
            throw std::invalid_argument("QuadraticForm: missing pairing " + a + "." + b);
        return it->second;
    }

    Rational evaluate_square(const DivisorExpression& e) const {
        Rational total(0);
        for (const auto& [n1, c1] : e.coefficients())
            for (const auto& [n2, c2] : e.coefficients()) total += c1 * c2 * pair(n1, n2);
        return total;
    }

private:
    std::map<std::pair<std::string, std::string>, Rational> pairings_;

    static std::pair<std::string, std::string> key(const std::string& a, const std::string& b) {
        return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    }
};

// Top-degree product rules on a fourfold: values of all degree-4 monomials in
// the symbols. Missing monomials are errors, never assumed zero.
class QuarticForm {
public:
    void set(std::array<std::string, 4> symbols, Rational value) {
        std::sort(symbols.begin(), symbols.end());
        products_[symbols] = std::move(value);
    }

    Rational evaluate_fourth_power(const DivisorExpression& e) const {
        // multinomial expansion of (sum c_i s_i)^4
        std::vector<std::pair<std::string, Rational>> terms(e.coefficients().begin(),
                                                            e.coefficients().end());
        Rational total(0);
        const std::size_t n = terms.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) {
                        std::array<std::string, 4> key = {terms[i].first, terms[j].first,
                                                          terms[k].first, terms[l].first};
                        std::sort(key.begin(), key.end());
                        auto it = products_.find(key);
                        if (it == products_.end())
                            throw std::invalid_argument("QuarticForm: missing product");
                        total += terms[i].second * terms[j].second * terms[k].second *
                                 terms[l].second * it->second;
                    }
        return total;
    }

private:
    std::map<std::array<std::string, 4>, Rational> products_;
};

inline Rational quadratic_self_intersection(const DivisorExpression& e,
                                            const QuadraticForm& form) {
    return form.evaluate_square(e);
}

// discrepancy of a 1/n(1,1) quotient point
inline Rational quotient_discrepancy_n11(long long n) {
    if (n < 2) throw std::invalid_argument("quotient_discrepancy_n11: n >= 2");
    return Rational(2 - n, n);
}

}  // namespace modcubic::ledger

#endif
