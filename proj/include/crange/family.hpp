#pragma once

// Convex families of matrices: slice decomposition of W_C(F), the diagonal
// compression reduction, direct sums and product numerical ranges.

#include "crange/range.hpp"

namespace crange {

struct MatrixFamily {
    enum class Kind { ConvexHull, ExplicitList };
    std::vector<Matrix> generators;
    Kind kind = Kind::ConvexHull;

    Eigen::Index dim() const { return generators.empty() ? 0 : generators.front().rows(); }

    void validate() const {
        if (generators.empty()) throw std::invalid_argument("MatrixFamily: needs >= 1 generator");
        for (const auto& g : generators) require_same_dim(generators.front(), g, "MatrixFamily");
    }
};

/// Deterministic lattice on the (m-1)-simplex: all weight vectors with
/// denominator `resolution`.
struct SimplexGrid {
    int m = 1;
    int resolution = 1;
    std::vector<std::vector<double>> weights;

    static SimplexGrid make(int m, int resolution) {
        if (m < 1 || resolution < 1) throw std::invalid_argument("SimplexGrid: bad parameters");
        SimplexGrid grid;
        grid.m = m;
        grid.resolution = resolution;
        std::vector<int> counts(m, 0);
        std::function<void(int, int)> rec = [&](int slot, int left) {
            if (slot == m - 1) {
                counts[slot] = left;
                std::vector<double> w(m);
                for (int i = 0; i < m; ++i) w[i] = static_cast<double>(counts[i]) / resolution;
                grid.weights.push_back(std::move(w));
                return;
            }
            for (int k = left; k >= 0; --k) {
                counts[slot] = k;
                rec(slot + 1, left - k);
            }
        };
        rec(0, resolution);
        return grid;
    }
};

/// Sum t_i A_i for weights on the simplex of F.
inline Matrix slice_matrix(const MatrixFamily& f, const std::vector<double>& weights) {
    f.validate();
    if (weights.size() != f.generators.size())
        throw std::invalid_argument("slice_matrix: weight count mismatch");
    double sum = 0.0;
    for (double w : weights) {
        if (w < -1e-12) throw std::invalid_argument("slice_matrix: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("slice_matrix: weights must sum to 1");
    Matrix out = Matrix::Zero(f.dim(), f.dim());
    for (std::size_t i = 0; i < weights.size(); ++i) out += weights[i] * f.generators[i];
    return out;
}

/// One slice of W_C(F): either an exact convex polygon (Hermitian C) or a
/// sampled cloud.
struct Slice {
    std::vector<double> weights;
    geom::Polygon polygon;   // convex path
    RangeCloud cloud;        // sampling path
};

struct SliceSet {
    std::vector<Slice> slices;
    bool convex_slices = false;
};

/// Per-weight slices of W_C(F). With Hermitian C each slice is the exact
/// boundary-trace polygon; otherwise each slice is a cloud of
/// `cloud_samples` values.
inline SliceSet family_slices(const Matrix& c, const MatrixFamily& f, const SimplexGrid& grid,
                              int angle_count, std::size_t cloud_samples = 2000,
                              Seed seed = Seed{}) {
    f.validate();
    require_same_dim(c, f.generators.front(), "family_slices");
    SliceSet out;
    out.convex_slices = is_hermitian(c);
    out.slices.resize(grid.weights.size());
    if (out.convex_slices) {
        parallel_for(grid.weights.size(), [&](std::size_t k) {
            Matrix a = slice_matrix(f, grid.weights[k]);
            out.slices[k].weights = grid.weights[k];
            out.slices[k].polygon = boundary_polygon(boundary_trace(c, a, angle_count));
        });
    } else {
        for (std::size_t k = 0; k < grid.weights.size(); ++k) {
            Matrix a = slice_matrix(f, grid.weights[k]);
            out.slices[k].weights = grid.weights[k];
            out.slices[k].cloud = sample_range(c, a, cloud_samples, seed.substream(k * cloud_samples));
        }
    }
    return out;
}

/// Region of a polygon slice set. For two-generator families (slices
/// ordered along one weight edge) consecutive slices are joined into
/// convex hulls so the union is a genuine 2D inner model of W_C(F);
/// otherwise the raw slice polygons are used.
inline geom::Region2 region_of_slices(const SliceSet& set, const std::string& label = {}) {
    if (!set.convex_slices)
        throw std::invalid_argument("region_of_slices: needs polygon slices (Hermitian C)");
    geom::Region2 region;
    region.label = label;
    bool edge_path = !set.slices.empty() && set.slices.front().weights.size() == 2;
    if (edge_path && set.slices.size() >= 2) {
        for (std::size_t k = 0; k + 1 < set.slices.size(); ++k) {
            std::vector<geom::Point> pts = set.slices[k].polygon.vertices;
            pts.insert(pts.end(), set.slices[k + 1].polygon.vertices.begin(),
                       set.slices[k + 1].polygon.vertices.end());
            region.parts.push_back(geom::convex_hull(pts));
        }
    } else {
        for (const auto& s : set.slices) region.parts.push_back(s.polygon);
    }
    return region;
}

/// Concatenated cloud of the whole family: per-slice Haar clouds over the
/// grid weights, merged in grid order.
inline RangeCloud family_cloud(const Matrix& c, const MatrixFamily& f, const SimplexGrid& grid,
                               std::size_t samples_per_slice, const Seed& seed) {
    f.validate();
    RangeCloud cloud;
    cloud.seed = seed;
    for (std::size_t k = 0; k < grid.weights.size(); ++k) {
        Matrix a = slice_matrix(f, grid.weights[k]);
        RangeCloud part = sample_range(c, a, samples_per_slice, seed.substream(k * samples_per_slice));
        cloud.points.insert(cloud.points.end(), part.points.begin(), part.points.end());
    }
    cloud.count = cloud.points.size();
    return cloud;
}

/// Diagonal compressions diag(x* A_1 x, ..., x* A_m x), one m x m diagonal
/// matrix per unit vector x.
inline std::vector<Matrix> hat_family(const std::vector<Matrix>& generators,
                                      const std::vector<Vector>& unit_vectors) {
    if (generators.empty()) throw std::invalid_argument("hat_family: needs >= 1 matrix");
    for (const auto& g : generators) require_same_dim(generators.front(), g, "hat_family");
    std::vector<Matrix> out;
    out.reserve(unit_vectors.size());
    const auto m = static_cast<Eigen::Index>(generators.size());
    for (const auto& x : unit_vectors) {
        if (std::abs(x.norm() - 1.0) > 1e-10)
            throw std::invalid_argument("hat_family: vectors must be unit");
        Matrix d = Matrix::Zero(m, m);
        for (Eigen::Index i = 0; i < m; ++i) d(i, i) = x.dot(generators[i] * x);
        out.push_back(std::move(d));
    }
    return out;
}

/// Block-diagonal direct sum.
inline Matrix direct_sum(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("direct_sum: needs >= 1 block");
    Eigen::Index total = 0;
    for (const auto& b : blocks) {
        require_square(b, "direct_sum");
        total += b.rows();
    }
    Matrix out = Matrix::Zero(total, total);
    Eigen::Index at = 0;
    for (const auto& b : blocks) {
        out.block(at, at, b.rows(), b.rows()) = b;
        at += b.rows();
    }
    return out;
}

/// Product numerical range samples (u (x) v)* M (u (x) v) with independent
/// Haar unit vectors u (dim m) and v (dim n); dim(M) must equal m*n.
inline RangeCloud product_numerical_range(const Matrix& mat, Eigen::Index m, Eigen::Index n,
                                          std::size_t count, const Seed& seed) {
    require_square(mat, "product_numerical_range");
    if (m < 1 || n < 1 || mat.rows() != m * n)
        throw std::invalid_argument("product_numerical_range: dimension does not factor as m*n");
    RangeCloud cloud;
    cloud.seed = seed;
    cloud.count = count;
    cloud.points.resize(count);
    parallel_for(count, [&](std::size_t k) {
        Vector u = haar_unit_vector(m, seed.substream(2 * k));
        Vector v = haar_unit_vector(n, seed.substream(2 * k + 1));
        Vector uv(m * n);
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j < n; ++j) uv(i * n + j) = u(i) * v(j);
        cloud.points[k] = uv.dot(mat * uv);
    });
    return cloud;
}

}  // namespace crange
