#pragma once

// Single-matrix C-numerical range: Haar sampling, star centers, exact
// convex boundary tracing for Hermitian C, permutation-vertex polygons
// and shape classification.

#include "crange/geometry.hpp"
#include "crange/matrix.hpp"
#include "crange/parallel.hpp"

#include <numeric>
#include <string>
#include <variant>

namespace crange {

/// Seeded multiset of sampled range values with provenance.
struct RangeCloud {
    std::vector<Cplx> points;
    Seed seed;
    std::size_t count = 0;
    std::string c_label;
    std::string a_label;

    double diameter() const {
        geom::BBox bb;
        for (const auto& p : points) bb.add(p);
        return bb.diam();
    }
};

/// count samples tr(C U_k* A U_k) over independent Haar unitaries.
/// Sample k always uses substream k of the seed, so clouds are
/// deterministic and mergeable regardless of thread count.
inline RangeCloud sample_range(const Matrix& c, const Matrix& a, std::size_t count,
                               const Seed& seed) {
    require_same_dim(c, a, "sample_range");
    if (count < 1) throw std::invalid_argument("sample_range: count must be >= 1");
    RangeCloud cloud;
    cloud.seed = seed;
    cloud.count = count;
    cloud.points.resize(count);
    const auto n = c.rows();
    parallel_for(count, [&](std::size_t k) {
        Matrix u = haar_unitary(n, seed.substream(k));
        cloud.points[k] = c_value(c, a, u);
    });
    return cloud;
}

/// (tr C)(tr A)/n, the default star center of W_C(A).
inline Cplx star_center_default(const Matrix& c, const Matrix& a) {
    require_same_dim(c, a, "star_center_default");
    return c.trace() * a.trace() / static_cast<double>(c.rows());
}

/// Support function of W_C(A) for Hermitian C:
/// h(theta) = max_U Re(e^{-i theta} tr(C U* A U)), computed exactly as the
/// descending-descending spectral pairing of C and
/// H_theta = (e^{-i theta} A + e^{i theta} A*)/2, together with a range
/// point achieving it.
inline std::pair<double, Cplx> support_function_hermitian(const Matrix& c, const Matrix& a,
                                                          double theta) {
    require_same_dim(c, a, "support_function_hermitian");
    if (!is_hermitian(c)) throw std::invalid_argument("support_function_hermitian: C must be Hermitian");
    const auto n = c.rows();
    Cplx w = std::polar(1.0, -theta);
    Matrix h = (w * a + std::conj(w) * a.adjoint()) / 2.0;

    Eigen::SelfAdjointEigenSolver<Matrix> es_c((c + c.adjoint()) / 2.0);
    Eigen::SelfAdjointEigenSolver<Matrix> es_h(h);
    if (es_c.info() != Eigen::Success || es_h.info() != Eigen::Success)
        throw std::runtime_error("support_function_hermitian: eigensolver failed to converge");

    double value = 0.0;
    for (Eigen::Index j = 0; j < n; ++j)
        value += es_c.eigenvalues()(n - 1 - j) * es_h.eigenvalues()(n - 1 - j);

    // V co-diagonalizing the pairing: V maps C's eigenbasis onto H's with
    // matching descending order. Columns are produced ascending by Eigen,
    // which already pairs sorted spectra index by index.
    Matrix v = es_h.eigenvectors() * es_c.eigenvectors().adjoint();
    Cplx point = c_value(c, a, v);
    return {value, point};
}

/// Ordered support-angle trace of the (convex) boundary of W_C(A),
/// C Hermitian. support_points form an inscribed polygon of the range.
struct BoundaryCurve {
    std::vector<double> angles;
    std::vector<double> support_values;
    std::vector<Cplx> support_points;
};

inline BoundaryCurve boundary_trace(const Matrix& c, const Matrix& a, int angle_count) {
    if (angle_count < 3) throw std::invalid_argument("boundary_trace: angle_count must be >= 3");
    BoundaryCurve curve;
    curve.angles.resize(angle_count);
    curve.support_values.resize(angle_count);
    curve.support_points.resize(angle_count);
    parallel_for(angle_count, [&](std::size_t k) {
        double theta = 2.0 * M_PI * k / angle_count;
        auto [h, p] = support_function_hermitian(c, a, theta);
        curve.angles[k] = theta;
        curve.support_values[k] = h;
        curve.support_points[k] = p;
    });
    return curve;
}

/// Convex polygon of the achieved support points (the certified inner
/// approximation of a convex W_C(A)).
inline geom::Polygon boundary_polygon(const BoundaryCurve& curve) {
    return geom::convex_hull(curve.support_points);
}

struct PermutationVertices {
    std::vector<Cplx> products;  // all n! spectra pairings
    geom::Polygon hull;
};

/// All (c_1..c_n) P (a_1..a_n)^t over permutations P for normal C, A, and
/// their convex hull. Refuses n > 8.
inline PermutationVertices permutation_vertex_hull(const Matrix& c, const Matrix& a,
                                                   double tol = 1e-10) {
    require_same_dim(c, a, "permutation_vertex_hull");
    const auto n = c.rows();
    if (n > 8) throw std::invalid_argument("permutation_vertex_hull: n > 8 (factorial blow-up)");
    if (!is_normal(c, tol) || !is_normal(a, tol))
        throw std::invalid_argument("permutation_vertex_hull: inputs must be normal");
    auto cs = eigenvalues(c, is_hermitian(c, tol)).values;
    auto as = eigenvalues(a, is_hermitian(a, tol)).values;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end());
    PermutationVertices out;
    do {
        Cplx v = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) v += cs[i] * as[perm[i]];
        out.products.push_back(v);
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.hull = geom::convex_hull(out.products);
    return out;
}

enum class RangeKind { Singleton, Segment, Polygon, General };

struct RangeClass {
    RangeKind kind = RangeKind::General;
    std::vector<Cplx> witness;  // point; two endpoints; or the vertex list
};

namespace detail {
/// Endpoints of a segment-shaped W_C(A) from the sorted-pairing extremes:
/// with C = c0 I + conj(alpha_C) H_C and A = a0 I + conj(alpha_A) H_A,
/// tr(C U*AU) traces base + conj(alpha_C alpha_A) [min pairing, max pairing].
inline std::pair<Cplx, Cplx> segment_endpoints(const Matrix& c, const Matrix& a, Cplx alpha_c,
                                               Cplx alpha_a) {
    const auto n = c.rows();
    Cplx c0 = c.trace() / static_cast<double>(n);
    Cplx a0 = a.trace() / static_cast<double>(n);
    Matrix hc = alpha_c * (c - c0 * Matrix::Identity(n, n));
    Matrix ha = alpha_a * (a - a0 * Matrix::Identity(n, n));
    auto cd = hermitian_spectrum_desc((hc + hc.adjoint()) / 2.0);
    auto ad = hermitian_spectrum_desc((ha + ha.adjoint()) / 2.0);
    double hi = 0.0, lo = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        hi += cd[j] * ad[j];
        lo += cd[j] * ad[n - 1 - j];
    }
    Cplx base = star_center_default(c, a);
    Cplx dir = std::conj(alpha_c) * std::conj(alpha_a);
    return {base + dir * lo, base + dir * hi};
}
}  // namespace detail

/// Shape trichotomy: Singleton iff A scalar; Segment iff both C and A admit
/// essential Hermitian directions; Polygon when the permutation hull is
/// certified equal to the exactly traced range; else General.
inline RangeClass classify_range(const Matrix& c, const Matrix& a, double tol = 1e-6) {
    require_same_dim(c, a, "classify_range");
    if (is_scalar(c))
        throw std::invalid_argument("classify_range: scalar C carries no information");
    RangeClass cls;
    if (is_scalar(a)) {
        cls.kind = RangeKind::Singleton;
        cls.witness = {a.trace() / static_cast<double>(a.rows()) * c.trace()};
        return cls;
    }
    auto alpha_c = essential_hermitian_direction(c);
    auto alpha_a = essential_hermitian_direction(a);
    if (alpha_c && alpha_a) {
        auto [lo, hi] = detail::segment_endpoints(c, a, *alpha_c, *alpha_a);
        if (std::abs(hi - lo) <= tol) {
            cls.kind = RangeKind::Singleton;
            cls.witness = {(hi + lo) / 2.0};
        } else {
            cls.kind = RangeKind::Segment;
            cls.witness = {lo, hi};
        }
        return cls;
    }
    // Polygon certification: needs an essentially Hermitian C (exact trace)
    // and normal inputs for the permutation vertices.
    if (alpha_c && a.rows() <= 8 && is_normal(c) && is_normal(a)) {
        Matrix c_rot = *alpha_c * (c - c.trace() / static_cast<double>(c.rows()) *
                                            Matrix::Identity(c.rows(), c.rows()));
        c_rot = (c_rot + c_rot.adjoint()) / 2.0;
        auto pv = permutation_vertex_hull(c, a);
        // compare support functions of the hull (shifted/rotated to match
        // the Hermitian trace of c_rot) against the exact range trace
        auto curve = boundary_trace(c_rot, a, 180);
        Cplx shift = c.trace() / static_cast<double>(c.rows()) * a.trace();
        bool match = true;
        double scale = std::max(1.0, pv.hull.bbox().diam());
        for (int k = 0; k < 180 && match; ++k) {
            // hull support value in direction theta, mapped through
            // z -> alpha_c (z - shift)
            double theta = curve.angles[k];
            double hull_h = -std::numeric_limits<double>::infinity();
            for (const auto& v : pv.hull.vertices) {
                Cplx m = *alpha_c * (v - shift);
                hull_h = std::max(hull_h, (std::polar(1.0, -theta) * m).real());
            }
            if (std::abs(hull_h - curve.support_values[k]) > tol * scale) match = false;
        }
        if (match) {
            cls.kind = RangeKind::Polygon;
            cls.witness = std::vector<Cplx>(pv.hull.vertices.begin(), pv.hull.vertices.end());
            return cls;
        }
    }
    cls.kind = RangeKind::General;
    return cls;
}

/// Estimate of R = max{|u* C v| : u, v orthonormal} by alternating
/// maximization from Haar restarts. W_C(x y*) is the origin-centered disk
/// of this radius for any orthonormal x, y.
inline double rank_one_disk_radius(const Matrix& c, int restarts, const Seed& seed) {
    require_square(c, "rank_one_disk_radius");
    const auto n = c.rows();
    if (n < 2) return 0.0;
    double best = 0.0;
    for (int r = 0; r < restarts; ++r) {
        Matrix u2 = haar_unitary(n, seed.substream(r));
        Vector u = u2.col(0), v = u2.col(1);
        double val = 0.0;
        for (int it = 0; it < 200; ++it) {
            // best u orthogonal to v: normalized projection of C v
            Vector cu = c * v;
            cu -= v * v.dot(cu);
            double nu = cu.norm();
            if (nu < 1e-15) break;
            u = cu / nu;
            Vector cv = c.adjoint() * u;
            cv -= u * u.dot(cv);
            double nv = cv.norm();
            if (nv < 1e-15) break;
            v = cv / nv;
            double now = std::abs(u.dot(c * v));
            if (now - val < 1e-14) {
                val = now;
                break;
            }
            val = now;
        }
        best = std::max(best, val);
    }
    return best;
}

}  // namespace crange
