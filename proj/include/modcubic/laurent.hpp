#ifndef MODCUBIC_LAURENT_HPP
#define MODCUBIC_LAURENT_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "modcubic/cyclotomic.hpp"

namespace modcubic {

// graded lexicographic order on exponent vectors
struct GradedLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        long long da = std::accumulate(a.begin(), a.end(), 0LL);
        long long db = std::accumulate(b.begin(), b.end(), 0LL);
        if (da != db) return da < db;
        return a < b;
    }
};

// one coefficient * monomial summand, the only legal substitution image
struct MonomialTerm {
    Cyclotomic coeff;
    std::map<std::string, int> powers;
};

// Sparse multivariate Laurent polynomial over a cyclotomic field. Values are
// immutable in spirit: every operation returns a fresh polynomial.
class LaurentPolynomial {
public:
    using TermMap = std::map<std::vector<int>, Cyclotomic, GradedLexLess>;

    explicit LaurentPolynomial(std::vector<std::string> vars, unsigned conductor = 24)
        : vars_(std::move(vars)), conductor_(conductor) {}

    static LaurentPolynomial constant(std::vector<std::string> vars, Cyclotomic c) {
        LaurentPolynomial p(std::move(vars), c.conductor());
        if (!c.is_zero()) p.terms_.emplace(std::vector<int>(p.vars_.size(), 0), std::move(c));
        return p;
    }

    static LaurentPolynomial constant(std::vector<std::string> vars, Rational r,
                                      unsigned conductor = 24) {
        return constant(std::move(vars), Cyclotomic::from_rational(std::move(r), conductor));
    }

    static LaurentPolynomial monomial(std::vector<std::string> vars, Cyclotomic c,
                                      const std::map<std::string, int>& powers) {
        LaurentPolynomial p(std::move(vars), c.conductor());
        std::vector<int> e(p.vars_.size(), 0);
        for (const auto& [name, k] : powers) e[p.var_index(name)] = k;
        if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
        return p;
    }

    static LaurentPolynomial variable(std::vector<std::string> vars, const std::string& name,
                                      unsigned conductor = 24) {
        return monomial(std::move(vars), Cyclotomic::from_rational(Rational(1), conductor),
                        {{name, 1}});
    }

    const std::vector<std::string>& variables() const { return vars_; }
    unsigned conductor() const { return conductor_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_ordinary() const {
        for (const auto& [e, c] : terms_)
            for (int k : e)
                if (k < 0) return false;
        return true;
    }

    bool is_single_term() const { return terms_.size() == 1; }

    MonomialTerm single_term() const {
        if (!is_single_term()) throw std::domain_error("LaurentPolynomial: not a single term");
        MonomialTerm t{terms_.begin()->second, {}};
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (terms_.begin()->first[i] != 0) t.powers[vars_[i]] = terms_.begin()->first[i];
        return t;
    }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        a.require_same_ring(b);
        LaurentPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        a.require_same_ring(b);
        LaurentPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    LaurentPolynomial operator-() const {
        LaurentPolynomial r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        a.require_same_ring(b);
        LaurentPolynomial r(a.vars_, a.conductor_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend LaurentPolynomial operator*(const Cyclotomic& s, const LaurentPolynomial& a) {
        LaurentPolynomial r(a.vars_, a.conductor_);
        for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
        return r;
    }
    friend LaurentPolynomial operator*(const Rational& s, const LaurentPolynomial& a) {
        return Cyclotomic::from_rational(s, a.conductor_) * a;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return *this = *this + o; }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return *this = *this - o; }
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    LaurentPolynomial pow(unsigned e) const {
        LaurentPolynomial r = constant(vars_, Rational(1), conductor_);
        LaurentPolynomial base = *this;
        while (e) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return !(a == b);
    }

    // Ring homomorphism sending each variable to a single term of the target
    // ring. Every variable occurring in *this must have an image.
    LaurentPolynomial substitute(const std::vector<std::string>& target_vars,
                                 const std::map<std::string, MonomialTerm>& images) const {
        LaurentPolynomial r(target_vars, conductor_);
        for (const auto& [name, img] : images)
            if (img.coeff.is_zero())
                throw std::invalid_argument("substitute: image of " + name +
                                            " is zero, not a single term");
        for (const auto& [e, c] : terms_) {
            Cyclotomic coeff = c;
            std::vector<int> out(target_vars.size(), 0);
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                auto it = images.find(vars_[i]);
                if (it == images.end())
                    throw std::invalid_argument("substitute: missing image for " + vars_[i]);
                coeff *= it->second.coeff.pow(e[i]);
                for (const auto& [tname, tp] : it->second.powers) {
                    auto pos = std::find(target_vars.begin(), target_vars.end(), tname);
                    if (pos == target_vars.end())
                        throw std::invalid_argument("substitute: unknown target variable " +
                                                    tname);
                    out[static_cast<std::size_t>(pos - target_vars.begin())] += tp * e[i];
                }
            }
            r.add_term(out, coeff);
        }
        return r;
    }

    // General composition; images may be arbitrary polynomials of the target
    // ring, zero included. Negative powers require single-term images.
    LaurentPolynomial substitute_general(
        const std::vector<std::string>& target_vars,
        const std::map<std::string, LaurentPolynomial>& images) const {
        LaurentPolynomial r(target_vars, conductor_);
        for (const auto& [e, c] : terms_) {
            LaurentPolynomial term =
                constant(target_vars, Cyclotomic(c));
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                auto it = images.find(vars_[i]);
                if (it == images.end())
                    throw std::invalid_argument("substitute: missing image for " + vars_[i]);
                const LaurentPolynomial& img = it->second;
                if (e[i] > 0) {
                    term *= img.pow(static_cast<unsigned>(e[i]));
                } else {
                    if (!img.is_single_term())
                        throw std::invalid_argument(
                            "substitute: negative power of non-monomial image");
                    MonomialTerm t = img.single_term();
                    MonomialTerm inv{t.coeff.inverse(), {}};
                    for (const auto& [n, k] : t.powers) inv.powers[n] = -k;
                    LaurentPolynomial invp = monomial(target_vars, inv.coeff, inv.powers);
                    term *= invp.pow(static_cast<unsigned>(-e[i]));
                }
                if (term.is_zero()) break;
            }
            r += term;
        }
        return r;
    }

    LaurentPolynomial derivative(const std::string& var) const {
        if (!is_ordinary())
            throw std::domain_error("derivative: polynomial has negative exponents");
        std::size_t vi = var_index(var);
        LaurentPolynomial r(vars_, conductor_);
        for (const auto& [e, c] : terms_) {
            if (e[vi] == 0) continue;
            std::vector<int> d = e;
            d[vi] -= 1;
            r.add_term(d, Rational(e[vi]) * c);
        }
        return r;
    }

    std::vector<LaurentPolynomial> gradient() const {
        std::vector<LaurentPolynomial> g;
        g.reserve(vars_.size());
        for (const auto& v : vars_) g.push_back(derivative(v));
        return g;
    }

    // minimum total degree over the support
    long long multiplicity_at_origin() const {
        if (is_zero()) throw std::domain_error("multiplicity_at_origin: zero polynomial");
        if (!is_ordinary())
            throw std::domain_error("multiplicity_at_origin: negative exponents present");
        long long best = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            long long d = std::accumulate(e.begin(), e.end(), 0LL);
            if (first || d < best) best = d;
            first = false;
        }
        return best;
    }

    // f = v^k * g with v not dividing g, k maximal
    std::pair<long long, LaurentPolynomial> extract_variable_power(const std::string& var) const {
        if (is_zero()) throw std::domain_error("extract_variable_power: zero polynomial");
        std::size_t vi = var_index(var);
        long long k = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e[vi] < k) k = e[vi];
            first = false;
        }
        LaurentPolynomial g(vars_, conductor_);
        for (const auto& [e, c] : terms_) {
            std::vector<int> d = e;
            d[vi] -= static_cast<int>(k);
            g.add_term(d, c);
        }
        return {k, g};
    }

    bool depends_on(const std::string& var) const {
        std::size_t vi = var_index(var);
        for (const auto& [e, c] : terms_)
            if (e[vi] != 0) return true;
        return false;
    }

    int degree_in(const std::string& var) const {
        std::size_t vi = var_index(var);
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[vi]);
        return d;
    }

    // canonical text: graded-lex sorted terms "coeff * v^e ..." joined by " + "
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            std::string mono;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += " ";
                mono += vars_[i] + "^" + std::to_string(e[i]);
            }
            if (mono.empty()) s += c.to_string();
            else s += c.to_string() + " * " + mono;
        }
        return s;
    }

    std::size_t var_index(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end())
            throw std::invalid_argument("LaurentPolynomial: unknown variable " + name);
        return static_cast<std::size_t>(it - vars_.begin());
    }

private:
    std::vector<std::string> vars_;
    unsigned conductor_;
    TermMap terms_;

    void require_same_ring(const LaurentPolynomial& o) const {
        if (vars_ != o.vars_ || conductor_ != o.conductor_)
            throw std::invalid_argument("LaurentPolynomial: ring mismatch");
    }

    void add_term(const std::vector<int>& e, Cyclotomic c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(c));
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
};

inline std::string to_string(const LaurentPolynomial& p) { return p.to_string(); }

}  // namespace modcubic

#endif
