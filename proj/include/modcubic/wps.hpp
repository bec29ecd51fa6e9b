#ifndef MODCUBIC_WPS_HPP
#define MODCUBIC_WPS_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "modcubic/rational.hpp"

namespace modcubic {

struct WeightedProjectiveSpace {
    std::vector<long long> weights;  // q_0 ... q_n, gcd 1

    explicit WeightedProjectiveSpace(std::vector<long long> q) : weights(std::move(q)) {
        if (weights.size() < 2)
            throw std::invalid_argument("WeightedProjectiveSpace: need at least two weights");
        long long g = 0;
        for (long long w : weights) {
            if (w <= 0) throw std::invalid_argument("WeightedProjectiveSpace: weights positive");
            g = std::gcd(g, w);
        }
        if (g != 1) throw std::invalid_argument("WeightedProjectiveSpace: gcd of weights != 1");
    }

    std::size_t dimension() const { return weights.size() - 1; }
};

struct CyclicQuotientChart {
    long long order = 1;                  // n of mu_n
    std::vector<long long> weights;       // reduced into [0, n)

    CyclicQuotientChart(long long n, std::vector<long long> w)
        : order(n), weights(std::move(w)) {
        if (order < 1) throw std::invalid_argument("CyclicQuotientChart: order >= 1");
        for (auto& x : weights) x = ((x % order) + order) % order;
    }
};

// chart U_i = C^n / mu_{q_i} with weights q_j mod q_i, j != i
inline CyclicQuotientChart chart_data(const WeightedProjectiveSpace& p, std::size_t i) {
    if (i >= p.weights.size()) throw std::out_of_range("chart_data: index out of range");
    std::vector<long long> w;
    for (std::size_t j = 0; j < p.weights.size(); ++j)
        if (j != i) w.push_back(p.weights[j]);
    return CyclicQuotientChart(p.weights[i], std::move(w));
}

struct ReidTaiAudit {
    std::optional<Rational> min_age;      // nullopt = trivial group (+infinity)
    std::vector<long long> quasi_reflections;  // group elements k with one nonzero weight
    bool canonical = true;
    std::vector<Rational> ages;           // age(k) for k = 1 .. n-1
};

// age(k) = (1/n) * sum_j (k*w_j mod n); canonical iff all ages >= 1 and no
// quasi-reflection occurs.
inline ReidTaiAudit reid_tai_audit(const CyclicQuotientChart& chart) {
    ReidTaiAudit audit;
    for (long long k = 1; k < chart.order; ++k) {
        long long residue_sum = 0;
        int nonzero = 0;
        for (long long w : chart.weights) {
            long long r = (k * w) % chart.order;
            residue_sum += r;
            if (r != 0) ++nonzero;
        }
        Rational age(residue_sum, chart.order);
        audit.ages.push_back(age);
        if (nonzero == 1) audit.quasi_reflections.push_back(k);
        if (!audit.min_age || age < *audit.min_age) audit.min_age = age;
    }
    audit.canonical =
        audit.quasi_reflections.empty() && (!audit.min_age || *audit.min_age >= Rational(1));
    return audit;
}

struct SingularStratum {
    std::vector<std::size_t> allowed;  // homogeneous coordinates that may be nonzero
    std::string name;

    std::size_t dimension() const { return allowed.size() - 1; }
};

// Fixed loci of the chart quotients, deduplicated across charts and with
// strata absorbed into larger ones.
inline std::vector<SingularStratum> singular_locus(const WeightedProjectiveSpace& p) {
    const std::size_t n1 = p.weights.size();
    std::set<std::vector<std::size_t>> allowed_sets;
    for (std::size_t i = 0; i < n1; ++i) {
        CyclicQuotientChart chart = chart_data(p, i);
        for (long long k = 1; k < chart.order; ++k) {
            std::vector<std::size_t> allowed{i};
            bool trivial = true;
            std::size_t pos = 0;
            for (std::size_t j = 0; j < n1; ++j) {
                if (j == i) continue;
                if ((k * chart.weights[pos]) % chart.order == 0) allowed.push_back(j);
                else trivial = false;
                ++pos;
            }
            if (trivial) continue;  // element acts trivially on this chart
            std::sort(allowed.begin(), allowed.end());
            allowed_sets.insert(std::move(allowed));
        }
    }
    // drop strata contained in a larger stratum
    std::vector<SingularStratum> out;
    for (const auto& a : allowed_sets) {
        bool contained = false;
        for (const auto& b : allowed_sets) {
            if (a == b || b.size() <= a.size()) continue;
            if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
                contained = true;
                break;
            }
        }
        if (contained) continue;
        SingularStratum s;
        s.allowed = a;
        if (a.size() == 1) {
            s.name = "P" + std::to_string(a[0]);
        } else {
            s.name = "{";
            bool first = true;
            for (std::size_t j = 0; j < n1; ++j) {
                if (std::find(a.begin(), a.end(), j) != a.end()) continue;
                if (!first) s.name += "=";
                s.name += "x" + std::to_string(j);
                first = false;
            }
            s.name += "=0}";
        }
        out.push_back(std::move(s));
    }
    return out;
}

// O(d_1) ... O(d_n) = (prod d_i) / (prod q_j)
inline Rational top_intersection(const WeightedProjectiveSpace& p,
                                 const std::vector<long long>& degrees) {
    if (degrees.size() != p.dimension())
        throw std::invalid_argument("top_intersection: need dim-many degrees");
    Rational num(1), den(1);
    for (long long d : degrees) num *= Rational(d);
    for (long long q : p.weights) den *= Rational(q);
    return num / den;
}

inline long long canonical_class_degree(const WeightedProjectiveSpace& p) {
    long long s = 0;
    for (long long q : p.weights) s += q;
    return -s;
}

// smallest m >= 1 with m*d Cartier: lcm over charts of q_i / gcd(q_i, d)
inline long long cartier_index(const WeightedProjectiveSpace& p, long long d) {
    if (d == 0) throw std::invalid_argument("cartier_index: degree must be nonzero");
    long long m = 1;
    for (long long q : p.weights) m = std::lcm(m, q / std::gcd(q, std::abs(d)));
    return m;
}

}  // namespace modcubic

#endif
