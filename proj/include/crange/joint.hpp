#pragma once

// Joint (C-)numerical ranges of m-tuples: Haar sampling, exact polytope
// slices for diagonal tuples, and star-shapedness certification in R^k.

#include "crange/family.hpp"

namespace crange {

struct MatrixTuple {
    std::vector<Matrix> entries;

    std::size_t arity() const { return entries.size(); }
    Eigen::Index dim() const { return entries.empty() ? 0 : entries.front().rows(); }

    void validate() const {
        if (entries.empty()) throw std::invalid_argument("MatrixTuple: needs >= 1 entry");
        for (const auto& e : entries) require_same_dim(entries.front(), e, "MatrixTuple");
    }

    bool all_diagonal(double tol = 1e-12) const {
        for (const auto& e : entries) {
            Matrix off = e;
            off.diagonal().setZero();
            if (frob(off) > tol * std::max(1.0, frob(e))) return false;
        }
        return true;
    }
};

struct JointCloud {
    std::vector<Vector> points;  // m-vectors
    Seed seed;
    std::size_t count = 0;

    bool is_real(double tol = 1e-10) const {
        for (const auto& p : points)
            for (Eigen::Index i = 0; i < p.size(); ++i)
                if (std::abs(p(i).imag()) > tol) return false;
        return true;
    }
};

/// count joint samples (tr(C U*A_1 U), ..., tr(C U*A_m U)), one Haar
/// unitary per sample applied to every tuple entry.
inline JointCloud sample_joint(const Matrix& c, const MatrixTuple& tuple, std::size_t count,
                               const Seed& seed) {
    tuple.validate();
    require_same_dim(c, tuple.entries.front(), "sample_joint");
    JointCloud cloud;
    cloud.seed = seed;
    cloud.count = count;
    cloud.points.resize(count);
    const auto n = c.rows();
    const auto m = static_cast<Eigen::Index>(tuple.arity());
    parallel_for(count, [&](std::size_t k) {
        Matrix u = haar_unitary(n, seed.substream(k));
        Matrix conj = u * c * u.adjoint();  // tr(C U*AU) = tr((UCU*) A)
        Vector v(m);
        for (Eigen::Index j = 0; j < m; ++j) v(j) = (conj * tuple.entries[j]).trace();
        cloud.points[k] = std::move(v);
    });
    return cloud;
}

/// Image tuple B with B_i = sum_j T_ij A_j + f_i I. Sampled clouds obey
/// cloud(B) = T cloud(A) + (tr C) f pointwise for matched seeds.
inline MatrixTuple affine_image(const Eigen::MatrixXcd& t, const Vector& f,
                                const MatrixTuple& tuple) {
    tuple.validate();
    const auto m = static_cast<Eigen::Index>(tuple.arity());
    if (t.rows() != m || t.cols() != m || f.size() != m)
        throw std::invalid_argument("affine_image: map size mismatch");
    const auto n = tuple.dim();
    MatrixTuple out;
    out.entries.resize(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        Matrix b = f(i) * Matrix::Identity(n, n);
        for (Eigen::Index j = 0; j < m; ++j) b += t(i, j) * tuple.entries[j];
        out.entries[i] = std::move(b);
    }
    return out;
}

/// Dimension of the linear span of the traceless parts, as the numerical
/// rank of the m x n^2 coefficient matrix.
inline int flat_dimension(const MatrixTuple& tuple, double tol = 1e-10) {
    tuple.validate();
    const auto n = tuple.dim();
    const auto m = static_cast<Eigen::Index>(tuple.arity());
    Eigen::MatrixXcd coeff(m, n * n);
    for (Eigen::Index j = 0; j < m; ++j) {
        Matrix b = tuple.entries[j] -
                   (tuple.entries[j].trace() / static_cast<double>(n)) * Matrix::Identity(n, n);
        coeff.row(j) = Eigen::Map<Vector>(b.data(), n * n).transpose();
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(coeff);
    double top = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > tol * std::max(1.0, top)) ++rank;
    return rank;
}

/// Polytope slice of a joint range: convex hull of explicit vertices,
/// membership via convex-combination feasibility.
struct PolytopeSlice {
    std::vector<Vector> vertices;   // m-vectors
    std::vector<double> parameter;  // family weight of this slice
};

namespace detail {
inline Eigen::VectorXd embed_real(const Vector& v) {
    Eigen::VectorXd out(2 * v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out(2 * i) = v(i).real();
        out(2 * i + 1) = v(i).imag();
    }
    return out;
}

/// Exact distance from p to conv(vertices) by active-set enumeration:
/// the projection lies in the relative interior of some face, so the
/// minimum over faces with nonnegative affine weights is exact.
inline double polytope_distance(const std::vector<Eigen::VectorXd>& verts,
                                const Eigen::VectorXd& p) {
    const std::size_t nv = verts.size();
    if (nv == 0) return std::numeric_limits<double>::infinity();
    if (nv > 16) throw std::invalid_argument("polytope_distance: too many vertices");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t mask = 1; mask < (1u << nv); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < nv; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        const std::size_t k = idx.size();
        if (k == 1) {
            best = std::min(best, (verts[idx[0]] - p).norm());
            continue;
        }
        // minimize ||sum w_i v_i - p|| with sum w = 1 (Lagrange system)
        Eigen::MatrixXd sys(k + 1, k + 1);
        Eigen::VectorXd rhs(k + 1);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) sys(i, j) = verts[idx[i]].dot(verts[idx[j]]);
            sys(i, k) = 1.0;
            sys(k, i) = 1.0;
            rhs(i) = verts[idx[i]].dot(p);
        }
        sys(k, k) = 0.0;
        rhs(k) = 1.0;
        Eigen::VectorXd sol = sys.fullPivLu().solve(rhs);
        bool feasible = true;
        for (std::size_t i = 0; i < k; ++i)
            if (sol(i) < -1e-10) feasible = false;
        if (!feasible) continue;
        Eigen::VectorXd proj = Eigen::VectorXd::Zero(p.size());
        for (std::size_t i = 0; i < k; ++i) proj += sol(i) * verts[idx[i]];
        best = std::min(best, (proj - p).norm());
    }
    return best;
}
}  // namespace detail

inline double slice_distance(const PolytopeSlice& slice, const Vector& p) {
    std::vector<Eigen::VectorXd> verts;
    verts.reserve(slice.vertices.size());
    for (const auto& v : slice.vertices) verts.push_back(detail::embed_real(v));
    return detail::polytope_distance(verts, detail::embed_real(p));
}

inline bool slice_contains(const PolytopeSlice& slice, const Vector& p, double tol) {
    return slice_distance(slice, p) <= tol;
}

inline bool union_contains(const std::vector<PolytopeSlice>& slices, const Vector& p, double tol) {
    for (const auto& s : slices)
        if (slice_contains(s, p, tol)) return true;
    return false;
}

/// Exact joint range of a diagonal tuple: the convex hull of the n joint
/// diagonal columns, since x*A_j x = sum_k |x_k|^2 A_j[k,k].
inline PolytopeSlice diag_tuple_polytope(const MatrixTuple& tuple) {
    tuple.validate();
    if (!tuple.all_diagonal())
        throw std::invalid_argument("diag_tuple_polytope: tuple entries must be diagonal");
    const auto n = tuple.dim();
    const auto m = static_cast<Eigen::Index>(tuple.arity());
    PolytopeSlice slice;
    for (Eigen::Index k = 0; k < n; ++k) {
        Vector v(m);
        for (Eigen::Index j = 0; j < m; ++j) v(j) = tuple.entries[j](k, k);
        slice.vertices.push_back(std::move(v));
    }
    return slice;
}

/// True iff C is within tol of a rank-one orthogonal projection (the case
/// where W_C reduces to the classical numerical range).
inline bool is_rank_one_projection(const Matrix& c, double tol = 1e-10) {
    if (!is_hermitian(c, tol)) return false;
    auto vals = hermitian_spectrum_desc((c + c.adjoint()) / 2.0);
    if (std::abs(vals.front() - 1.0) > tol) return false;
    for (std::size_t i = 1; i < vals.size(); ++i)
        if (std::abs(vals[i]) > tol) return false;
    return true;
}

struct JointSliceSet {
    std::vector<PolytopeSlice> polytopes;  // exact path
    std::vector<JointCloud> clouds;        // sampling path
    std::vector<std::vector<double>> weights;
    bool exact = false;
};

inline MatrixTuple tuple_combination(const std::vector<MatrixTuple>& generators,
                                     const std::vector<double>& weights) {
    if (generators.empty()) throw std::invalid_argument("tuple_combination: no generators");
    const auto m = generators.front().arity();
    const auto n = generators.front().dim();
    MatrixTuple out;
    out.entries.assign(m, Matrix::Zero(n, n));
    for (std::size_t g = 0; g < generators.size(); ++g) {
        if (generators[g].arity() != m || generators[g].dim() != n)
            throw std::invalid_argument("tuple_combination: ragged generators");
        for (std::size_t j = 0; j < m; ++j) out.entries[j] += weights[g] * generators[g].entries[j];
    }
    return out;
}

/// Per-weight slices of the joint range of conv(generators). Exact
/// polytopes when every generator entry is diagonal and C acts as the
/// classical numerical range; clouds otherwise.
inline JointSliceSet joint_family_slices(const Matrix& c, const std::vector<MatrixTuple>& generators,
                                         const SimplexGrid& grid, std::size_t cloud_samples = 2000,
                                         Seed seed = Seed{}) {
    if (generators.empty()) throw std::invalid_argument("joint_family_slices: no generators");
    JointSliceSet out;
    bool diag = true;
    for (const auto& g : generators) {
        g.validate();
        if (!g.all_diagonal()) diag = false;
    }
    out.exact = diag && is_rank_one_projection(c);
    out.weights = grid.weights;
    for (std::size_t k = 0; k < grid.weights.size(); ++k) {
        MatrixTuple at = tuple_combination(generators, grid.weights[k]);
        if (out.exact) {
            PolytopeSlice slice = diag_tuple_polytope(at);
            slice.parameter = grid.weights[k];
            out.polytopes.push_back(std::move(slice));
        } else {
            out.clouds.push_back(sample_joint(c, at, cloud_samples, seed.substream(k * cloud_samples)));
        }
    }
    return out;
}

struct StarCertificateKd {
    Vector center;
    int checked_rays = 0;
    std::vector<std::pair<Vector, double>> violations;

    bool valid() const { return violations.empty(); }
};

/// Certifies mu as a star center of a union of polytope slices: segments
/// from mu to vertex targets are sampled and tested by per-slice
/// convex-combination feasibility.
inline StarCertificateKd certify_star_center_kd(const std::vector<PolytopeSlice>& slices,
                                                const Vector& mu, int targets, int steps,
                                                double tol, bool first_violation_only = false) {
    if (slices.empty()) throw std::invalid_argument("certify_star_center_kd: no slices");
    StarCertificateKd cert;
    cert.center = mu;
    std::vector<Vector> all;
    for (const auto& s : slices)
        for (const auto& v : s.vertices) all.push_back(v);
    std::vector<Vector> chosen;
    if (targets > 0 && all.size() > static_cast<std::size_t>(targets)) {
        double stride = static_cast<double>(all.size()) / targets;
        for (int i = 0; i < targets; ++i) chosen.push_back(all[static_cast<std::size_t>(i * stride)]);
    } else {
        chosen = std::move(all);
    }
    for (const auto& t : chosen) {
        ++cert.checked_rays;
        bool bad = false;
        double bad_s = 0.0;
        for (int k = 0; k <= steps; ++k) {
            double s = static_cast<double>(k) / steps;
            Vector p = mu + s * (t - mu);
            if (!union_contains(slices, p, tol)) {
                bad = true;
                bad_s = s;
                break;
            }
        }
        if (bad) {
            cert.violations.emplace_back(t, bad_s);
            if (first_violation_only) return cert;
        }
    }
    return cert;
}

}  // namespace crange
