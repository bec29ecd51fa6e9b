#ifndef MODCUBIC_POLYTOPE_HPP
#define MODCUBIC_POLYTOPE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "modcubic/intmatrix.hpp"
#include "modcubic/rational.hpp"

namespace modcubic::toric {

struct Inequality {
    std::vector<BigInt> normal;  // integer normal
    Rational offset;             // normal . x >= offset
};

struct LatticePolytope {
    unsigned rank = 3;
    std::vector<Inequality> facets;
    std::vector<std::vector<Rational>> vertices;              // filled by enumerate_vertices
    std::vector<std::vector<std::size_t>> vertex_facets;      // tight facet sets per vertex
};

namespace detail {

inline Rational dot(const std::vector<BigInt>& n, const std::vector<Rational>& x) {
    Rational s(0);
    for (std::size_t i = 0; i < n.size(); ++i) s += Rational(n[i]) * x[i];
    return s;
}

inline std::optional<std::vector<Rational>> solve3x3(const std::array<std::vector<BigInt>, 3>& rows,
                                                     const std::array<Rational, 3>& rhs) {
    IntegerMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = rows[i][j];
    BigInt det = determinant(m);
    if (det.is_zero()) return std::nullopt;
    std::vector<Rational> x(3);
    for (std::size_t col = 0; col < 3; ++col) {
        // Cramer with rational right-hand side: scale rhs to integers first
        BigInt lcm_den(1);
        for (const auto& r : rhs) lcm_den = lcm(lcm_den, r.den());
        IntegerMatrix mc = m;
        std::vector<BigInt> scaled(3);
        for (std::size_t i = 0; i < 3; ++i) {
            Rational s = rhs[i] * Rational(lcm_den);
            scaled[i] = s.num();  // integer by construction
        }
        for (std::size_t i = 0; i < 3; ++i) mc.at(i, col) = scaled[i];
        x[col] = Rational(determinant(mc), det * lcm_den);
    }
    return x;
}

inline std::vector<BigInt> cross(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace detail

// Inequality system (B x)_i >= -a_i in the coordinates of the given kernel
// basis. The basis columns must span the integer kernel of gamma.
inline LatticePolytope polytope_from_character(const IntegerMatrix& gamma,
                                               const IntegerMatrix& basis,
                                               const std::vector<long long>& a) {
    if (a.size() != gamma.cols())
        throw std::invalid_argument("polytope_from_character: one offset per coordinate");
    if (basis.rows() != gamma.cols())
        throw std::invalid_argument("polytope_from_character: basis shape mismatch");
    if (!(gamma * basis).is_zero())
        throw std::invalid_argument("polytope_from_character: basis is not in the kernel");
    if (!same_column_lattice(basis, kernel_lattice(gamma)))
        throw std::invalid_argument("polytope_from_character: basis does not span the kernel");
    LatticePolytope p;
    p.rank = static_cast<unsigned>(basis.cols());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        Inequality ineq;
        for (std::size_t j = 0; j < basis.cols(); ++j) ineq.normal.push_back(basis.at(i, j));
        ineq.offset = Rational(-a[i]);
        p.facets.push_back(std::move(ineq));
    }
    return p;
}

inline LatticePolytope polytope_from_inequalities(std::vector<Inequality> facets,
                                                  unsigned rank = 3) {
    LatticePolytope p;
    p.rank = rank;
    p.facets = std::move(facets);
    return p;
}

// Exhaustive facet-triple intersection with exact rational solves. Errors on
// unbounded systems (recession direction found).
inline void enumerate_vertices(LatticePolytope& p) {
    if (p.rank != 3) throw std::invalid_argument("enumerate_vertices: rank-3 only");
    const std::size_t m = p.facets.size();

    // boundedness: the recession cone {d : N d >= 0} must be {0}
    {
        IntegerMatrix normals(m, 3);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < 3; ++j) normals.at(i, j) = p.facets[i].normal[j];
        if (rank(normals) < 3) throw std::invalid_argument("enumerate_vertices: unbounded");
        auto in_recession = [&](const std::vector<BigInt>& d) {
            for (const auto& f : p.facets) {
                BigInt s(0);
                for (std::size_t j = 0; j < 3; ++j) s += f.normal[j] * d[j];
                if (s.is_negative()) return false;
            }
            return true;
        };
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                std::vector<BigInt> d = detail::cross(p.facets[i].normal, p.facets[j].normal);
                bool zero = d[0].is_zero() && d[1].is_zero() && d[2].is_zero();
                if (zero) continue;
                std::vector<BigInt> neg = {-d[0], -d[1], -d[2]};
                if (in_recession(d) || in_recession(neg))
                    throw std::invalid_argument("enumerate_vertices: unbounded");
            }
    }

    std::vector<std::vector<Rational>> verts;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                auto x = detail::solve3x3(
                    {p.facets[i].normal, p.facets[j].normal, p.facets[k].normal},
                    {p.facets[i].offset, p.facets[j].offset, p.facets[k].offset});
                if (!x) continue;
                bool feasible = true;
                for (const auto& f : p.facets)
                    if (detail::dot(f.normal, *x) < f.offset) {
                        feasible = false;
                        break;
                    }
                if (!feasible) continue;
                if (std::find(verts.begin(), verts.end(), *x) == verts.end())
                    verts.push_back(*x);
            }
    std::sort(verts.begin(), verts.end(), [](const auto& a, const auto& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            int c = compare(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    p.vertices = std::move(verts);
    p.vertex_facets.clear();
    for (const auto& v : p.vertices) {
        std::vector<std::size_t> tight;
        for (std::size_t f = 0; f < m; ++f)
            if (detail::dot(p.facets[f].normal, v) == p.facets[f].offset) tight.push_back(f);
        p.vertex_facets.push_back(std::move(tight));
    }
}

struct FaceLatticeAudit {
    std::array<std::size_t, 3> f_vector = {0, 0, 0};  // vertices, edges, facets
    bool euler_ok = false;
    bool is_simple = false;            // every vertex on exactly rank facets
    bool is_combinatorial_cube = false;
    bool is_simplicial_fan = false;    // normal fan simplicial = polytope simple
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // vertex index pairs
};

inline FaceLatticeAudit face_lattice_audit(const LatticePolytope& p) {
    if (p.vertices.empty()) throw std::invalid_argument("face_lattice_audit: no vertices");
    FaceLatticeAudit audit;
    const std::size_t nv = p.vertices.size();
    audit.f_vector[0] = nv;
    audit.f_vector[2] = p.facets.size();

    // edges: vertex pairs sharing at least two facets
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j) {
            std::vector<std::size_t> common;
            std::set_intersection(p.vertex_facets[i].begin(), p.vertex_facets[i].end(),
                                  p.vertex_facets[j].begin(), p.vertex_facets[j].end(),
                                  std::back_inserter(common));
            if (common.size() >= 2) audit.edges.emplace_back(i, j);
        }
    audit.f_vector[1] = audit.edges.size();
    audit.euler_ok = nv + p.facets.size() == audit.edges.size() + 2;

    audit.is_simple = true;
    for (const auto& tf : p.vertex_facets)
        if (tf.size() != p.rank) audit.is_simple = false;
    audit.is_simplicial_fan = audit.is_simple;

    // combinatorial cube: simple, f-vector (8,12,6), quadrilateral facets,
    // three disjoint opposite facet pairs
    audit.is_combinatorial_cube = audit.is_simple && nv == 8 && audit.edges.size() == 12 &&
                                  p.facets.size() == 6 && audit.euler_ok;
    if (audit.is_combinatorial_cube) {
        std::vector<std::set<std::size_t>> facet_verts(p.facets.size());
        for (std::size_t v = 0; v < nv; ++v)
            for (std::size_t f : p.vertex_facets[v]) facet_verts[f].insert(v);
        std::size_t opposite_pairs = 0;
        for (std::size_t f = 0; f < p.facets.size(); ++f) {
            if (facet_verts[f].size() != 4) audit.is_combinatorial_cube = false;
            for (std::size_t g = f + 1; g < p.facets.size(); ++g) {
                std::vector<std::size_t> common;
                std::set_intersection(facet_verts[f].begin(), facet_verts[f].end(),
                                      facet_verts[g].begin(), facet_verts[g].end(),
                                      std::back_inserter(common));
                if (common.empty()) ++opposite_pairs;
            }
        }
        if (opposite_pairs != 3) audit.is_combinatorial_cube = false;
    }
    return audit;
}

// ---------------------------------------------------------------------------
// S3 action
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Rational> apply(const IntegerMatrix& g, const std::vector<Rational>& x) {
    std::vector<Rational> y(g.rows(), Rational(0));
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) y[i] += Rational(g.at(i, j)) * x[j];
    return y;
}

inline std::optional<std::vector<std::size_t>> vertex_permutation(
    const IntegerMatrix& g, const std::vector<std::vector<Rational>>& verts) {
    std::vector<std::size_t> perm(verts.size());
    std::vector<bool> hit(verts.size(), false);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        std::vector<Rational> img = apply(g, verts[i]);
        bool found = false;
        for (std::size_t j = 0; j < verts.size(); ++j)
            if (verts[j] == img) {
                perm[i] = j;
                hit[j] = true;
                found = true;
                break;
            }
        if (!found) return std::nullopt;
    }
    for (bool b : hit)
        if (!b) return std::nullopt;
    return perm;
}

}  // namespace detail

struct S3ActionAudit {
    bool relations_ok = false;          // tau^2 = 1, sigma^3 = 1, tau sigma tau = sigma^{-1}
    bool vertices_permuted = false;
    bool facets_permuted = false;       // inequality system preserved up to relabeling
    std::vector<std::size_t> fixed_vertices;
    bool conjugation_ok = false;        // conjugate to the standard S3 matrices
    bool sublattice_ok = false;         // index-27 sublattice permuted as vectors
    BigInt sublattice_index_value;
};

inline S3ActionAudit s3_action_audit(const IntegerMatrix& tau, const IntegerMatrix& sigma,
                                     const LatticePolytope& p) {
    S3ActionAudit audit;
    IntegerMatrix id = IntegerMatrix::identity(3);
    IntegerMatrix sigma2 = sigma * sigma;
    audit.relations_ok =
        (tau * tau == id) && (sigma * sigma2 == id) && (tau * sigma * tau == sigma2);

    auto pt = detail::vertex_permutation(tau, p.vertices);
    auto ps = detail::vertex_permutation(sigma, p.vertices);
    audit.vertices_permuted = pt.has_value() && ps.has_value();
    if (audit.vertices_permuted)
        for (std::size_t i = 0; i < p.vertices.size(); ++i)
            if ((*pt)[i] == i && (*ps)[i] == i) audit.fixed_vertices.push_back(i);

    // normals permuted modulo positive scaling, offsets consistent
    auto facets_ok = [&](const IntegerMatrix& g) {
        // x in facet j <=> g x in facet i with n_i (g x) = n_i g x: the pulled
        // back normal of facet i is g^T n_i; match it against the list
        IntegerMatrix gt = g.transpose();
        std::vector<bool> used(p.facets.size(), false);
        for (std::size_t i = 0; i < p.facets.size(); ++i) {
            std::vector<BigInt> pulled(3, BigInt(0));
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t c = 0; c < 3; ++c)
                    pulled[r] += gt.at(r, c) * p.facets[i].normal[c];
            bool matched = false;
            for (std::size_t j = 0; j < p.facets.size() && !matched; ++j) {
                if (used[j]) continue;
                // pulled == s * normal_j with s > 0 rational, offsets scale alike
                const auto& nj = p.facets[j].normal;
                std::optional<Rational> scale;
                bool prop = true;
                for (std::size_t r = 0; r < 3; ++r) {
                    if (nj[r].is_zero() != pulled[r].is_zero()) {
                        prop = false;
                        break;
                    }
                    if (nj[r].is_zero()) continue;
                    Rational s(pulled[r], nj[r]);
                    if (!scale) scale = s;
                    else if (*scale != s) {
                        prop = false;
                        break;
                    }
                }
                if (!prop || !scale || scale->sign() <= 0) continue;
                if (p.facets[i].offset != *scale * p.facets[j].offset) continue;
                used[j] = true;
                matched = true;
            }
            if (!matched) return false;
        }
        return true;
    };
    audit.facets_permuted = facets_ok(tau) && facets_ok(sigma);

    // change of basis to the standard representation: columns (-1,3,0),
    // (1,-2,2), (0,0,1); the third vector is the fixed one
    IntegerMatrix c = IntegerMatrix::from_rows({{-1, 1, 0}, {3, -2, 0}, {0, 2, 1}});
    IntegerMatrix tau_std = IntegerMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    IntegerMatrix sigma_std = IntegerMatrix::from_rows({{0, 1, 0}, {-1, -1, 0}, {0, 0, 1}});
    BigInt cdet = determinant(c);
    audit.conjugation_ok = (cdet == BigInt(1) || cdet == BigInt(-1)) &&
                           (tau * c == c * tau_std) && (sigma * c == c * sigma_std);

    // the rank-3 index-27 sublattice is permuted like the standard basis
    std::vector<std::vector<long long>> gens = {{0, 1, -1}, {3, -8, -1}, {-3, 7, -7}};
    IntegerMatrix gen_rows = IntegerMatrix::from_rows(gens);
    auto idx = sublattice_index(gen_rows);
    audit.sublattice_index_value = idx.value_or(BigInt(0));
    auto permutes = [&](const IntegerMatrix& g) {
        for (const auto& v : gens) {
            std::vector<BigInt> img = g.apply({BigInt(v[0]), BigInt(v[1]), BigInt(v[2])});
            bool found = false;
            for (const auto& w : gens)
                if (img[0] == BigInt(w[0]) && img[1] == BigInt(w[1]) && img[2] == BigInt(w[2]))
                    found = true;
            if (!found) return false;
        }
        return true;
    };
    audit.sublattice_ok = idx.has_value() && *idx == BigInt(27) && permutes(tau) &&
                          permutes(sigma);
    return audit;
}

// ---------------------------------------------------------------------------
// Face orbits under the S3 action
// ---------------------------------------------------------------------------

struct FaceOrbit {
    int dim = 0;
    std::size_t orbit_size = 0;
    std::size_t stabilizer_order = 1;
    std::string stabilizer;  // "1", "Z2", "Z3", "S3"
    std::string action;      // catalogue key: "free", "finite_subgroup", "swap", "s3_standard"
};

struct FaceOrbitReport {
    std::vector<FaceOrbit> orbits;
    std::array<std::size_t, 4> orbit_counts = {0, 0, 0, 0};  // per dimension
    bool burnside_ok = false;
};

namespace detail {

// integer primitive direction of a rational difference vector
inline std::vector<BigInt> primitive_direction(const std::vector<Rational>& a,
                                               const std::vector<Rational>& b) {
    BigInt lcm_den(1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        lcm_den = lcm(lcm_den, (b[i] - a[i]).den());
    }
    std::vector<BigInt> d;
    BigInt g(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rational s = (b[i] - a[i]) * Rational(lcm_den);
        d.push_back(s.num());
        g = gcd(g, s.num());
    }
    if (!g.is_zero())
        for (auto& x : d) x = x / g;
    return d;
}

// solve plane_basis * m = g * plane_basis for the induced 2x2 integer action
inline std::optional<IntegerMatrix> induced_plane_action(const IntegerMatrix& g,
                                                         const IntegerMatrix& plane_basis) {
    // pick two independent rows of the 3x2 basis
    for (std::size_t r1 = 0; r1 < 3; ++r1)
        for (std::size_t r2 = r1 + 1; r2 < 3; ++r2) {
            BigInt det = plane_basis.at(r1, 0) * plane_basis.at(r2, 1) -
                         plane_basis.at(r1, 1) * plane_basis.at(r2, 0);
            if (det.is_zero()) continue;
            IntegerMatrix img = g * plane_basis;  // 3x2
            IntegerMatrix m(2, 2);
            bool integral = true;
            for (std::size_t col = 0; col < 2 && integral; ++col) {
                // Cramer on the 2x2 system
                BigInt b1 = img.at(r1, col), b2 = img.at(r2, col);
                BigInt n0 = b1 * plane_basis.at(r2, 1) - b2 * plane_basis.at(r1, 1);
                BigInt n1 = plane_basis.at(r1, 0) * b2 - plane_basis.at(r2, 0) * b1;
                if (!(n0 % det).is_zero() || !(n1 % det).is_zero()) integral = false;
                else {
                    m.at(0, col) = n0 / det;
                    m.at(1, col) = n1 / det;
                }
            }
            if (!integral) return std::nullopt;
            if (g * plane_basis != plane_basis * m) return std::nullopt;
            return m;
        }
    return std::nullopt;
}

// involution classification: conjugate to the coordinate swap iff the fixed
// and antifixed sublattices span an index-2 sublattice
inline bool is_swap_class(const IntegerMatrix& m) {
    if (m * m != IntegerMatrix::identity(2)) return false;
    BigInt tr = m.at(0, 0) + m.at(1, 1);
    BigInt det = determinant(m);
    if (!(tr.is_zero() && det == BigInt(-1))) return false;
    // fixed vector: (m - I) v = 0; antifixed: (m + I) v = 0
    IntegerMatrix mi = m;
    mi.at(0, 0) -= BigInt(1);
    mi.at(1, 1) -= BigInt(1);
    IntegerMatrix fixed = kernel_lattice(mi);
    IntegerMatrix pl = m;
    pl.at(0, 0) += BigInt(1);
    pl.at(1, 1) += BigInt(1);
    IntegerMatrix anti = kernel_lattice(pl);
    if (fixed.cols() != 1 || anti.cols() != 1) return false;
    BigInt span_det =
        fixed.at(0, 0) * anti.at(1, 0) - fixed.at(1, 0) * anti.at(0, 0);
    return span_det.abs() == BigInt(2);
}

}  // namespace detail

inline FaceOrbitReport face_orbits(const IntegerMatrix& tau, const IntegerMatrix& sigma,
                                   const LatticePolytope& p,
                                   const FaceLatticeAudit& lattice,
                                   const S3ActionAudit& action_audit) {
    // distinct group elements among the six words
    std::vector<IntegerMatrix> group = {IntegerMatrix::identity(3)};
    for (const IntegerMatrix& w :
         {sigma, sigma * sigma, tau, tau * sigma, tau * sigma * sigma}) {
        if (std::find(group.begin(), group.end(), w) == group.end()) group.push_back(w);
    }

    // faces as sorted vertex index sets
    std::vector<std::vector<std::size_t>> faces;   // flat list
    std::vector<int> dims;
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        faces.push_back({v});
        dims.push_back(0);
    }
    for (const auto& [a, b] : lattice.edges) {
        faces.push_back({a, b});
        dims.push_back(1);
    }
    {
        std::vector<std::set<std::size_t>> facet_verts(p.facets.size());
        for (std::size_t v = 0; v < p.vertices.size(); ++v)
            for (std::size_t f : p.vertex_facets[v]) facet_verts[f].insert(v);
        for (const auto& fv : facet_verts) {
            faces.emplace_back(fv.begin(), fv.end());
            dims.push_back(2);
        }
    }
    {
        std::vector<std::size_t> all(p.vertices.size());
        for (std::size_t v = 0; v < p.vertices.size(); ++v) all[v] = v;
        faces.push_back(all);
        dims.push_back(3);
    }

    // vertex permutation per group element
    std::vector<std::vector<std::size_t>> perms;
    for (const auto& g : group) {
        auto perm = detail::vertex_permutation(g, p.vertices);
        if (!perm) throw std::invalid_argument("face_orbits: group does not act on vertices");
        perms.push_back(*perm);
    }

    auto image_face = [&](std::size_t gi, const std::vector<std::size_t>& face) {
        std::vector<std::size_t> img;
        img.reserve(face.size());
        for (std::size_t v : face) img.push_back(perms[gi][v]);
        std::sort(img.begin(), img.end());
        return img;
    };

    auto face_id = [&](const std::vector<std::size_t>& face, int dim) {
        for (std::size_t i = 0; i < faces.size(); ++i)
            if (dims[i] == dim && faces[i] == face) return i;
        throw std::logic_error("face_orbits: image is not a face");
    };

    FaceOrbitReport rep;
    std::vector<bool> seen(faces.size(), false);
    std::size_t fixed_total[4] = {0, 0, 0, 0};  // for Burnside, summed over group
    for (std::size_t gi = 0; gi < group.size(); ++gi)
        for (std::size_t i = 0; i < faces.size(); ++i)
            if (face_id(image_face(gi, faces[i]), dims[i]) == i)
                ++fixed_total[static_cast<std::size_t>(dims[i])];

    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (seen[i]) continue;
        std::set<std::size_t> orbit;
        std::vector<std::size_t> stab;  // indices into group
        for (std::size_t gi = 0; gi < group.size(); ++gi) {
            std::size_t j = face_id(image_face(gi, faces[i]), dims[i]);
            orbit.insert(j);
            if (j == i) stab.push_back(gi);
        }
        for (std::size_t j : orbit) seen[j] = true;

        FaceOrbit fo;
        fo.dim = dims[i];
        fo.orbit_size = orbit.size();
        fo.stabilizer_order = stab.size();
        fo.stabilizer = fo.stabilizer_order == 1   ? "1"
                        : fo.stabilizer_order == 2 ? "Z2"
                        : fo.stabilizer_order == 3 ? "Z3"
                                                   : "S3";

        // action classification for the quotient catalogue
        if (fo.stabilizer_order == 1) {
            fo.action = "free";
        } else if (fo.dim == 0) {
            fo.action = "finite_subgroup";
        } else if (fo.dim == 1) {
            // direction must be preserved (not reversed) by the stabilizer
            const auto& e = faces[i];
            std::vector<BigInt> d =
                detail::primitive_direction(p.vertices[e[0]], p.vertices[e[1]]);
            bool preserved = true;
            for (std::size_t gi : stab) {
                std::vector<BigInt> img = group[gi].apply(d);
                if (img != d) preserved = false;
            }
            fo.action = preserved ? "finite_subgroup" : "direction_reversing";
        } else if (fo.dim == 2) {
            // induced involution on the facet's direction lattice
            // identify the facet: common tight facet of all its vertices
            std::vector<std::size_t> common = p.vertex_facets[faces[i][0]];
            for (std::size_t v : faces[i]) {
                std::vector<std::size_t> next;
                std::set_intersection(common.begin(), common.end(),
                                      p.vertex_facets[v].begin(), p.vertex_facets[v].end(),
                                      std::back_inserter(next));
                common = next;
            }
            if (common.size() != 1 || fo.stabilizer_order != 2) {
                fo.action = "unclassified";
            } else {
                IntegerMatrix n(1, 3);
                for (std::size_t j = 0; j < 3; ++j)
                    n.at(0, j) = p.facets[common[0]].normal[j];
                IntegerMatrix plane = kernel_lattice(n);  // 3x2
                std::size_t nontrivial = stab[0] == 0 ? stab[1] : stab[0];
                auto induced = detail::induced_plane_action(group[nontrivial], plane);
                fo.action = induced && detail::is_swap_class(*induced) ? "swap"
                                                                       : "unclassified";
            }
        } else {
            // interior: the full lattice action; standard iff the conjugation
            // audit succeeded and the stabilizer is all of S3
            fo.action = (fo.stabilizer_order == 6 && action_audit.conjugation_ok)
                            ? "s3_standard"
                            : "unclassified";
        }
        ++rep.orbit_counts[static_cast<std::size_t>(fo.dim)];
        rep.orbits.push_back(std::move(fo));
    }

    rep.burnside_ok = true;
    for (int d = 0; d < 4; ++d)
        if (fixed_total[d] != rep.orbit_counts[static_cast<std::size_t>(d)] * group.size())
            rep.burnside_ok = false;
    return rep;
}

// ---------------------------------------------------------------------------
// The toric data of the boundary divisor
// ---------------------------------------------------------------------------

inline IntegerMatrix gamma_matrix() {
    return IntegerMatrix::from_rows(
        {{1, 1, 1, 1, 1, 1}, {-3, 3, 0, -2, 2, 0}, {-3, 0, 3, -2, 0, 2}});
}

inline IntegerMatrix reference_kernel_basis() {
    return IntegerMatrix::from_rows(
        {{0, 0, 1}, {-2, 0, 1}, {-16, -6, 1}, {-3, -1, -1}, {0, -1, -1}, {21, 8, -1}});
}

inline std::vector<long long> character_offsets() { return {-2, -2, -2, 3, 3, 3}; }

inline IntegerMatrix tau_matrix() {
    return IntegerMatrix::from_rows({{-1, 0, 0}, {5, 1, 0}, {-2, 0, 1}});
}

inline IntegerMatrix sigma_matrix() {
    return IntegerMatrix::from_rows({{-8, -3, 0}, {19, 7, 0}, {-16, -6, 1}});
}

// the eight vertex columns, exact rationals
inline std::vector<std::vector<Rational>> reference_vertices() {
    auto r = [](long long n, long long d) { return Rational(n, d); };
    return {
        {r(-3, 8), r(1, 1), r(2, 1)},  {r(0, 1), r(1, 7), r(20, 7)},
        {r(3, 8), r(-7, 8), r(11, 4)}, {r(0, 1), r(0, 1), r(2, 1)},
        {r(3, 7), r(-8, 7), r(20, 7)}, {r(0, 1), r(-1, 8), r(2, 1)},
        {r(0, 1), r(0, 1), r(3, 1)},   {r(-3, 7), r(1, 1), r(2, 1)},
    };
}

}  // namespace modcubic::toric

#endif
