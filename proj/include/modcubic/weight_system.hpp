#ifndef MODCUBIC_WEIGHT_SYSTEM_HPP
#define MODCUBIC_WEIGHT_SYSTEM_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "modcubic/intmatrix.hpp"
#include "modcubic/rational.hpp"

namespace modcubic {

// Torus action data: one integer weight vector of length torus_rank per
// coordinate. Rank 1 and 2 are supported exactly (all that occurs here).
struct WeightSystem {
    unsigned torus_rank = 1;
    std::vector<std::string> coordinates;
    std::vector<std::vector<long long>> weights;

    WeightSystem(unsigned rank, std::vector<std::string> names,
                 std::vector<std::vector<long long>> w)
        : torus_rank(rank), coordinates(std::move(names)), weights(std::move(w)) {
        if (torus_rank < 1) throw std::invalid_argument("WeightSystem: rank must be >= 1");
        if (coordinates.size() != weights.size())
            throw std::invalid_argument("WeightSystem: one weight vector per coordinate");
        for (const auto& v : weights)
            if (v.size() != torus_rank)
                throw std::invalid_argument("WeightSystem: weight vector length != rank");
    }

    std::size_t size() const { return coordinates.size(); }

    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < coordinates.size(); ++i)
            if (coordinates[i] == name) return i;
        throw std::invalid_argument("WeightSystem: unknown coordinate " + name);
    }

    std::vector<bool> support_of(const std::vector<std::string>& names) const {
        std::vector<bool> s(size(), false);
        for (const auto& n : names) s[index_of(n)] = true;
        return s;
    }
};

// Exact certificate: a rational convex combination of support weights hitting
// the origin, or an integer functional strictly positive on every support
// weight.
struct StabilityCertificate {
    bool semistable = false;
    std::vector<std::pair<std::size_t, Rational>> combination;
    std::vector<long long> separating_functional;
};

namespace detail {

inline long long dotll(const std::vector<long long>& a, const std::vector<long long>& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// convex coefficients for 0 on the segment [w1, w2]; requires w2 = -t*w1, t>0
inline std::pair<Rational, Rational> segment_coefficients(const std::vector<long long>& w1,
                                                          const std::vector<long long>& w2) {
    Rational c1, c2;
    for (std::size_t k = 0; k < w1.size(); ++k)
        if (w1[k] != 0) {
            c1 = Rational(-w2[k], w1[k]);
            c2 = Rational(1);
            break;
        }
    Rational total = c1 + c2;
    return {c1 / total, c2 / total};
}

}  // namespace detail

// Origin-in-convex-hull test over the support, exact, with certificate.
// Caratheodory search in dimension <= 2: zero weight, antipodal pair, then
// triangle containment via a 3x3 rational solve.
inline StabilityCertificate is_semistable(const WeightSystem& w,
                                          const std::vector<bool>& support) {
    if (support.size() != w.size())
        throw std::invalid_argument("is_semistable: support size mismatch");
    if (w.torus_rank > 2)
        throw std::invalid_argument("is_semistable: only rank <= 2 implemented");
    StabilityCertificate cert;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < support.size(); ++i)
        if (support[i]) idx.push_back(i);
    if (idx.empty()) {
        cert.semistable = false;
        cert.separating_functional.assign(w.torus_rank, 0);
        cert.separating_functional[0] = 1;  // vacuously separating
        return cert;
    }

    auto is_zero_vec = [](const std::vector<long long>& v) {
        for (long long x : v)
            if (x) return false;
        return true;
    };

    for (std::size_t i : idx)
        if (is_zero_vec(w.weights[i])) {
            cert.semistable = true;
            cert.combination = {{i, Rational(1)}};
            return cert;
        }

    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            const auto& w1 = w.weights[idx[a]];
            const auto& w2 = w.weights[idx[b]];
            long long cross = w.torus_rank == 1
                                  ? 0
                                  : w1[0] * w2[1] - w1[1] * w2[0];
            if (cross == 0 && detail::dotll(w1, w2) < 0) {
                auto [c1, c2] = detail::segment_coefficients(w1, w2);
                cert.semistable = true;
                cert.combination = {{idx[a], c1}, {idx[b], c2}};
                return cert;
            }
        }

    if (w.torus_rank == 2) {
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b)
                for (std::size_t c = b + 1; c < idx.size(); ++c) {
                    const auto& w1 = w.weights[idx[a]];
                    const auto& w2 = w.weights[idx[b]];
                    const auto& w3 = w.weights[idx[c]];
                    // solve c1 w1 + c2 w2 + c3 w3 = 0, c1+c2+c3 = 1 by Cramer
                    BigInt det = BigInt(w1[0]) * (BigInt(w2[1]) - BigInt(w3[1])) -
                                 BigInt(w2[0]) * (BigInt(w1[1]) - BigInt(w3[1])) +
                                 BigInt(w3[0]) * (BigInt(w1[1]) - BigInt(w2[1]));
                    if (det.is_zero()) continue;  // collinear, pairs handle it
                    BigInt d1 = BigInt(w2[0]) * BigInt(w3[1]) - BigInt(w3[0]) * BigInt(w2[1]);
                    BigInt d2 = BigInt(w3[0]) * BigInt(w1[1]) - BigInt(w1[0]) * BigInt(w3[1]);
                    BigInt d3 = BigInt(w1[0]) * BigInt(w2[1]) - BigInt(w2[0]) * BigInt(w1[1]);
                    Rational c1(d1, det), c2(d2, det), c3(d3, det);
                    if (c1.sign() < 0 || c2.sign() < 0 || c3.sign() < 0) continue;
                    cert.semistable = true;
                    cert.combination = {{idx[a], c1}, {idx[b], c2}, {idx[c], c3}};
                    return cert;
                }
    }

    // Not in the hull. The open dual cone of the support weights is nonempty;
    // its two boundary rays are rotations of support weights, so some pairwise
    // sum over {w_i, rot90(w_i), -rot90(w_i)} lies strictly inside.
    std::vector<std::vector<long long>> candidates;
    for (std::size_t i : idx) {
        candidates.push_back(w.weights[i]);
        if (w.torus_rank == 2) {
            candidates.push_back({-w.weights[i][1], w.weights[i][0]});
            candidates.push_back({w.weights[i][1], -w.weights[i][0]});
        }
    }
    for (std::size_t a = 0; a < candidates.size(); ++a)
        for (std::size_t b = a; b < candidates.size(); ++b) {
            std::vector<long long> ell(w.torus_rank);
            for (unsigned k = 0; k < w.torus_rank; ++k)
                ell[k] = candidates[a][k] + candidates[b][k];
            bool ok = true;
            for (std::size_t i : idx)
                if (detail::dotll(ell, w.weights[i]) <= 0) {
                    ok = false;
                    break;
                }
            if (ok) {
                cert.semistable = false;
                cert.separating_functional = ell;
                return cert;
            }
        }
    throw std::logic_error("is_semistable: no certificate found");
}

// Maximal unstable support patterns: each fails the hull test while every
// strictly larger support passes. Enumerates all nonempty supports.
inline std::vector<std::vector<bool>> minimal_unstable_supports(const WeightSystem& w) {
    const std::size_t n = w.size();
    if (n > 20) throw std::invalid_argument("minimal_unstable_supports: too many coordinates");
    std::vector<bool> stable(std::size_t(1) << n, false);
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        std::vector<bool> s(n, false);
        for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
        stable[mask] = is_semistable(w, s).semistable;
    }
    std::vector<std::vector<bool>> result;
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        if (stable[mask]) continue;
        bool maximal = true;
        for (std::size_t i = 0; i < n && maximal; ++i)
            if (!((mask >> i) & 1) && !stable[mask | (std::size_t(1) << i)]) maximal = false;
        if (!maximal) continue;
        std::vector<bool> s(n, false);
        for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
        result.push_back(std::move(s));
    }
    return result;
}

struct ContinuousStabilizer {
    bool finite = false;
    FiniteAbelianGroup group;  // meaningful only when finite

    std::string to_string() const { return finite ? group.to_string() : "positive-dimensional"; }
};

// Kernel of the torus map cut out by the support's weight rows, via Smith
// normal form. With projectivize set, rows are differences against the first
// support weight (stabilizer of a projective point).
inline ContinuousStabilizer continuous_stabilizer(const WeightSystem& w,
                                                  const std::vector<bool>& support,
                                                  bool projectivize = false) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < support.size(); ++i)
        if (support[i]) idx.push_back(i);
    std::vector<std::vector<long long>> rows;
    if (projectivize) {
        for (std::size_t k = 1; k < idx.size(); ++k) {
            std::vector<long long> r(w.torus_rank);
            for (unsigned j = 0; j < w.torus_rank; ++j)
                r[j] = w.weights[idx[k]][j] - w.weights[idx[0]][j];
            rows.push_back(std::move(r));
        }
    } else {
        for (std::size_t i : idx) rows.push_back(w.weights[i]);
    }
    ContinuousStabilizer out;
    if (rows.empty()) {
        out.finite = w.torus_rank == 0;
        return out;
    }
    IntegerMatrix a = IntegerMatrix::from_rows(rows);
    auto diag = smith_diagonal(a);
    std::size_t rank = 0;
    for (const auto& d : diag)
        if (!d.is_zero()) ++rank;
    if (rank < w.torus_rank) return out;  // kernel has a torus factor
    out.finite = true;
    out.group = FiniteAbelianGroup::from_smith_diagonal(diag);
    return out;
}

struct PrimeSupportReport {
    std::set<long long> primes;
    std::size_t semistable_supports = 0;
    std::size_t positive_dimensional = 0;
};

// Primes dividing any stabilizer order along the semistable locus: the finite
// part's primes plus the primes of every projective continuous stabilizer over
// all 2^n support patterns.
inline PrimeSupportReport stabilizer_prime_support(const WeightSystem& w,
                                                   const BigInt& finite_part_order) {
    if (finite_part_order < BigInt(1))
        throw std::invalid_argument("stabilizer_prime_support: order must be >= 1");
    PrimeSupportReport rep;
    for (long long p : prime_factors(finite_part_order)) rep.primes.insert(p);
    const std::size_t n = w.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        std::vector<bool> s(n, false);
        for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
        if (!is_semistable(w, s).semistable) continue;
        ++rep.semistable_supports;
        ContinuousStabilizer st = continuous_stabilizer(w, s, /*projectivize=*/true);
        if (!st.finite) {
            ++rep.positive_dimensional;
            continue;
        }
        for (long long p : prime_factors(st.group.order())) rep.primes.insert(p);
    }
    return rep;
}

// The exceptional-P^5 weight system: two points on each of three rays.
inline WeightSystem exceptional_p5_weights() {
    return WeightSystem(2, {"T0", "T1", "T2", "Th0", "Th1", "Th2"},
                        {{-3, -3}, {3, 0}, {0, 3}, {-2, -2}, {2, 0}, {0, 2}});
}

}  // namespace modcubic

#endif
