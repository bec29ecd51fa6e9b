#ifndef MODCUBIC_INTMATRIX_HPP
#define MODCUBIC_INTMATRIX_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "modcubic/bigint.hpp"

namespace modcubic {

class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, BigInt(0)) {}

    static IntegerMatrix identity(std::size_t n) {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = BigInt(1);
        return m;
    }

    static IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
        if (rows.empty()) return IntegerMatrix(0, 0);
        IntegerMatrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = BigInt(rows[i][j]);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntegerMatrix transpose() const {
        IntegerMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        IntegerMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const IntegerMatrix& a, const IntegerMatrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    std::vector<BigInt> apply(const std::vector<BigInt>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("apply: size mismatch");
        std::vector<BigInt> y(rows_, BigInt(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
        return y;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? "; " : "";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ",";
                s += at(i, j).to_string();
            }
        }
        return s + "]";
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

struct HermiteResult {
    IntegerMatrix h;  // row HNF
    IntegerMatrix u;  // unimodular, u*m = h
    std::size_t rank = 0;
};

// Row-style Hermite normal form: pivots positive, entries above a pivot
// reduced into [0, pivot), zero rows at the bottom.
inline HermiteResult hermite_normal_form(const IntegerMatrix& m) {
    HermiteResult res{m, IntegerMatrix::identity(m.rows()), 0};
    IntegerMatrix& h = res.h;
    IntegerMatrix& u = res.u;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        // clear column c below row r via gcd pivoting
        while (true) {
            std::size_t best = m.rows();
            for (std::size_t i = r; i < m.rows(); ++i) {
                if (h.at(i, c).is_zero()) continue;
                if (best == m.rows() || h.at(i, c).abs() < h.at(best, c).abs()) best = i;
            }
            if (best == m.rows()) break;  // column already clear
            if (best != r)
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    std::swap(h.at(best, j), h.at(r, j));
                }
            if (best != r)
                for (std::size_t j = 0; j < m.rows(); ++j) std::swap(u.at(best, j), u.at(r, j));
            bool dirty = false;
            for (std::size_t i = r + 1; i < m.rows(); ++i) {
                if (h.at(i, c).is_zero()) continue;
                BigInt q = h.at(i, c) / h.at(r, c);
                for (std::size_t j = 0; j < m.cols(); ++j) h.at(i, j) -= q * h.at(r, j);
                for (std::size_t j = 0; j < m.rows(); ++j) u.at(i, j) -= q * u.at(r, j);
                if (!h.at(i, c).is_zero()) dirty = true;
            }
            if (!dirty) break;
        }
        if (h.at(r, c).is_zero()) continue;
        if (h.at(r, c).is_negative()) {
            for (std::size_t j = 0; j < m.cols(); ++j) h.at(r, j) = -h.at(r, j);
            for (std::size_t j = 0; j < m.rows(); ++j) u.at(r, j) = -u.at(r, j);
        }
        for (std::size_t i = 0; i < r; ++i) {
            BigInt q = h.at(i, c) / h.at(r, c);
            if (h.at(i, c).is_negative() && !(h.at(i, c) % h.at(r, c)).is_zero())
                q -= BigInt(1);  // floor division so residues land in [0, pivot)
            if (q.is_zero()) continue;
            for (std::size_t j = 0; j < m.cols(); ++j) h.at(i, j) -= q * h.at(r, j);
            for (std::size_t j = 0; j < m.rows(); ++j) u.at(i, j) -= q * u.at(r, j);
        }
        ++r;
    }
    res.rank = r;
    return res;
}

inline std::size_t rank(const IntegerMatrix& m) { return hermite_normal_form(m).rank; }

struct SmithResult {
    IntegerMatrix u, s, v;  // u*a*v = s
};

namespace detail {
inline SmithResult snf_fix_signs(SmithResult res, std::size_t processed) {
    IntegerMatrix& s = res.s;
    IntegerMatrix& u = res.u;
    for (std::size_t t = 0; t < processed; ++t)
        if (s.at(t, t).is_negative()) {
            for (std::size_t j = 0; j < s.cols(); ++j) s.at(t, j) = -s.at(t, j);
            for (std::size_t j = 0; j < u.cols(); ++j) u.at(t, j) = -u.at(t, j);
        }
    return res;
}
}  // namespace detail

// Smith normal form by elementary operations. Pivot = minimal-absolute-value
// nonzero entry, ties broken in row-major order.
inline SmithResult smith_normal_form(const IntegerMatrix& a) {
    SmithResult res{IntegerMatrix::identity(a.rows()), a, IntegerMatrix::identity(a.cols())};
    IntegerMatrix& s = res.s;
    IntegerMatrix& u = res.u;
    IntegerMatrix& v = res.v;
    const std::size_t n = std::min(a.rows(), a.cols());

    auto swap_rows = [&](std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < s.cols(); ++j) std::swap(s.at(i, j), s.at(k, j));
        for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(i, j), u.at(k, j));
    };
    auto swap_cols = [&](std::size_t j, std::size_t k) {
        for (std::size_t i = 0; i < s.rows(); ++i) std::swap(s.at(i, j), s.at(i, k));
        for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, j), v.at(i, k));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& q) {
        for (std::size_t j = 0; j < s.cols(); ++j) s.at(dst, j) += q * s.at(src, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(dst, j) += q * u.at(src, j);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& q) {
        for (std::size_t i = 0; i < s.rows(); ++i) s.at(i, dst) += q * s.at(i, src);
        for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, dst) += q * v.at(i, src);
    };

    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            std::size_t pi = s.rows(), pj = 0;
            for (std::size_t i = t; i < s.rows(); ++i)
                for (std::size_t j = t; j < s.cols(); ++j) {
                    if (s.at(i, j).is_zero()) continue;
                    if (pi == s.rows() || s.at(i, j).abs() < s.at(pi, pj).abs()) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == s.rows()) return detail::snf_fix_signs(res, t);  // rest is zero
            if (pi != t) swap_rows(pi, t);
            if (pj != t) swap_cols(pj, t);

            bool clean = true;
            for (std::size_t i = t + 1; i < s.rows(); ++i) {
                if (s.at(i, t).is_zero()) continue;
                add_row(i, t, -(s.at(i, t) / s.at(t, t)));
                if (!s.at(i, t).is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < s.cols(); ++j) {
                if (s.at(t, j).is_zero()) continue;
                add_col(j, t, -(s.at(t, j) / s.at(t, t)));
                if (!s.at(t, j).is_zero()) clean = false;
            }
            if (!clean) continue;

            // enforce divisibility of the remaining block by the pivot
            bool divides_all = true;
            for (std::size_t i = t + 1; i < s.rows() && divides_all; ++i)
                for (std::size_t j = t + 1; j < s.cols() && divides_all; ++j)
                    if (!(s.at(i, j) % s.at(t, t)).is_zero()) {
                        add_row(t, i, BigInt(1));
                        divides_all = false;
                    }
            if (divides_all) break;
        }
    }
    return detail::snf_fix_signs(res, n);
}

inline std::vector<BigInt> smith_diagonal(const IntegerMatrix& a) {
    SmithResult r = smith_normal_form(a);
    std::vector<BigInt> d;
    for (std::size_t t = 0; t < std::min(a.rows(), a.cols()); ++t) d.push_back(r.s.at(t, t));
    return d;
}

// Basis of the integer kernel {x : a*x = 0}, as matrix columns. The basis is
// computed from the HNF of the transpose and renormalized to a canonical HNF
// column form, so two kernels agree iff the returned matrices agree.
inline IntegerMatrix kernel_lattice(const IntegerMatrix& a) {
    HermiteResult hr = hermite_normal_form(a.transpose());
    std::vector<std::size_t> zero_rows;
    for (std::size_t i = 0; i < hr.h.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < hr.h.cols(); ++j)
            if (!hr.h.at(i, j).is_zero()) {
                zero = false;
                break;
            }
        if (zero) zero_rows.push_back(i);
    }
    IntegerMatrix rows(zero_rows.size(), a.cols());
    for (std::size_t k = 0; k < zero_rows.size(); ++k)
        for (std::size_t j = 0; j < a.cols(); ++j) rows.at(k, j) = hr.u.at(zero_rows[k], j);
    IntegerMatrix canon = hermite_normal_form(rows).h;
    IntegerMatrix basis(a.cols(), zero_rows.size());
    for (std::size_t k = 0; k < zero_rows.size(); ++k)
        for (std::size_t j = 0; j < a.cols(); ++j) basis.at(j, k) = canon.at(k, j);
    return basis;
}

// Lattices spanned by the columns of b1, b2.
inline bool same_column_lattice(const IntegerMatrix& b1, const IntegerMatrix& b2) {
    if (b1.rows() != b2.rows()) return false;
    HermiteResult h1 = hermite_normal_form(b1.transpose());
    HermiteResult h2 = hermite_normal_form(b2.transpose());
    if (h1.rank != h2.rank) return false;
    for (std::size_t i = 0; i < h1.rank; ++i)
        for (std::size_t j = 0; j < b1.rows(); ++j)
            if (h1.h.at(i, j) != h2.h.at(i, j)) return false;
    return true;
}

// Bareiss fraction-free determinant.
inline BigInt determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    const std::size_t n = m.rows();
    if (n == 0) return BigInt(1);
    IntegerMatrix w = m;
    BigInt prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            std::size_t piv = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!w.at(i, k).is_zero()) {
                    piv = i;
                    break;
                }
            if (piv == n) return BigInt(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    BigInt d = w.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

// |det B| for a square basis matrix; nullopt signals infinite index.
inline std::optional<BigInt> sublattice_index(const IntegerMatrix& b) {
    if (b.rows() != b.cols()) throw std::invalid_argument("sublattice_index: not square");
    BigInt d = determinant(b);
    if (d.is_zero()) return std::nullopt;
    return d.abs();
}

class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;  // trivial group

    explicit FiniteAbelianGroup(std::vector<BigInt> invariant_factors)
        : factors_(std::move(invariant_factors)) {
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (factors_[i] < BigInt(2))
                throw std::invalid_argument("FiniteAbelianGroup: factor < 2");
            if (i > 0 && !(factors_[i] % factors_[i - 1]).is_zero())
                throw std::invalid_argument("FiniteAbelianGroup: divisibility chain violated");
        }
    }

    // Keeps the diagonal entries > 1 of a Smith normal form.
    static FiniteAbelianGroup from_smith_diagonal(const std::vector<BigInt>& diag) {
        std::vector<BigInt> f;
        for (const auto& d : diag)
            if (d.abs() > BigInt(1)) f.push_back(d.abs());
        return FiniteAbelianGroup(std::move(f));
    }

    const std::vector<BigInt>& invariant_factors() const { return factors_; }
    bool is_trivial() const { return factors_.empty(); }

    BigInt order() const {
        BigInt o(1);
        for (const auto& d : factors_) o *= d;
        return o;
    }

    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return !(a == b);
    }

    std::string to_string() const {
        if (factors_.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += " x ";
            s += "Z" + factors_[i].to_string();
        }
        return s;
    }

private:
    std::vector<BigInt> factors_;
};

inline std::vector<long long> prime_factors(BigInt n) {
    std::vector<long long> ps;
    n = n.abs();
    if (n <= BigInt(1)) return ps;
    for (long long p = 2; BigInt(p) * BigInt(p) <= n; ++p) {
        BigInt q, r;
        BigInt::divmod(n, BigInt(p), q, r);
        if (r.is_zero()) {
            ps.push_back(p);
            while (r.is_zero()) {
                n = q;
                BigInt::divmod(n, BigInt(p), q, r);
            }
        }
    }
    if (n > BigInt(1)) ps.push_back(n.to_int64());
    return ps;
}

}  // namespace modcubic

#endif
