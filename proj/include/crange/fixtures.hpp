#pragma once

// Canonical worked fixtures: the bowtie and shifted-bowtie families, the
// deltoid-boundary family with its vertex table, product-range identities,
// the Pauli sphere and the two joint triangle families. Each fixture runs
// its pipeline and reports per-assertion pass/fail results.

#include "crange/family.hpp"
#include "crange/joint.hpp"
#include "crange/range.hpp"

#include <functional>
#include <sstream>

namespace crange {
namespace fixtures {

inline const Cplx kOmega = std::polar(1.0, 2.0 * M_PI / 3.0);  // primitive cube root of unity

inline Matrix e11(Eigen::Index n) {
    Matrix m = Matrix::Zero(n, n);
    m(0, 0) = 1.0;
    return m;
}

inline Matrix cube_root_diag() { return diag_matrix({1.0, kOmega, kOmega * kOmega}); }

inline Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}
inline Matrix pauli_y() {
    Matrix m(2, 2);
    m << Cplx(0, 0), Cplx(0, -1), Cplx(0, 1), Cplx(0, 0);
    return m;
}
inline Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

/// Boundary parametrization of the deltoid-like curve bounding the
/// self-range of diag(1, w, w^2): gamma(theta) = 2 e^{i theta} + e^{-2 i theta}.
inline Cplx deltoid_curve(double theta) {
    return 2.0 * std::polar(1.0, theta) + std::polar(1.0, -2.0 * theta);
}

/// Vertex path of the deltoid family: f(theta, t) =
/// (t + (1-t) e^{i pi/3}) (2 e^{i theta} + e^{-2 i theta}) + (1 - 2t)/2.
inline Cplx gamma_point(double theta, double t) {
    Cplx factor = t + (1.0 - t) * std::polar(1.0, M_PI / 3.0);
    return factor * deltoid_curve(theta) + (1.0 - 2.0 * t) / 2.0;
}

/// Star-shaped region bounded by the deltoid curve, star center 0.
/// Membership is a radial test: a dense sample table gives coarse bands,
/// refined by bisection on the exact curve when the query is near the
/// boundary. The region is star-shaped about 0, so each ray crosses the
/// boundary once and the radial comparison is exact.
class DeltoidRegion {
  public:
    explicit DeltoidRegion(int samples = 1 << 16) : n_(samples) {
        thetas_.resize(n_ + 1);
        pts_.resize(n_ + 1);
        for (int k = 0; k <= n_; ++k) {
            thetas_[k] = -M_PI + 2.0 * M_PI * k / n_;
            pts_[k] = deltoid_curve(thetas_[k]);
        }
        r_lo_.assign(kBins, std::numeric_limits<double>::infinity());
        r_hi_.assign(kBins, 0.0);
        bin_theta_.assign(kBins, 0.0);
        for (int k = 0; k <= n_; ++k) {
            int b = bin_of(std::arg(pts_[k]));
            double r = std::abs(pts_[k]);
            if (r < r_lo_[b]) r_lo_[b] = r;
            if (r > r_hi_[b]) {
                r_hi_[b] = r;
                bin_theta_[b] = thetas_[k];
            }
        }
        // widen bands over neighbors so interpolation gaps stay conservative
        auto lo = r_lo_, hi = r_hi_;
        for (int b = 0; b < kBins; ++b) {
            for (int d = -1; d <= 1; ++d) {
                int nb = (b + d + kBins) % kBins;
                lo[b] = std::min(lo[b], r_lo_[nb]);
                hi[b] = std::max(hi[b], r_hi_[nb]);
            }
        }
        r_lo_ = std::move(lo);
        r_hi_ = std::move(hi);
        for (int b = 0; b < kBins; ++b)
            if (!std::isfinite(r_lo_[b])) r_lo_[b] = 0.0;
    }

    /// Exact boundary radius along direction phi (bisection on the curve).
    double radius(double phi) const {
        auto g = [phi](double theta) {
            return (deltoid_curve(theta) * std::polar(1.0, -phi)).imag();
        };
        int b = bin_of(phi);
        double t0 = bin_theta_[b];
        // bracket the sign change of g around the recorded crossing
        double step = 2.0 * M_PI / kBins;
        double a = t0 - 2.0 * step, c = t0 + 2.0 * step;
        double ga = g(a), gc = g(c);
        if ((ga > 0) == (gc > 0)) {
            // widen; fall back to the sampled radius if no bracket appears
            for (int w = 3; w <= 16; ++w) {
                a = t0 - w * step;
                c = t0 + w * step;
                ga = g(a);
                gc = g(c);
                if ((ga > 0) != (gc > 0)) break;
            }
            if ((ga > 0) == (gc > 0)) return r_hi_[b];
        }
        for (int it = 0; it < 80; ++it) {
            double m = (a + c) / 2.0;
            double gm = g(m);
            if ((ga > 0) == (gm > 0)) {
                a = m;
                ga = gm;
            } else {
                c = m;
            }
        }
        return (deltoid_curve((a + c) / 2.0) * std::polar(1.0, -phi)).real();
    }

    /// Membership within radial tolerance tol.
    bool contains(const Cplx& p, double tol) const {
        double r = std::abs(p);
        if (r < 1e-12) return true;
        double phi = std::arg(p);
        int b = bin_of(phi);
        const double safety = 2e-3;
        if (r <= r_lo_[b] - safety) return true;
        if (r >= r_hi_[b] + safety + tol) return false;
        return r <= radius(phi) + tol;
    }

    const std::vector<Cplx>& boundary() const { return pts_; }

  private:
    static constexpr int kBins = 8192;
    static int bin_of(double phi) {
        int b = static_cast<int>(std::floor((phi + M_PI) / (2.0 * M_PI) * kBins));
        return std::clamp(b, 0, kBins - 1);
    }

    int n_;
    std::vector<double> thetas_;
    std::vector<Cplx> pts_;
    std::vector<double> r_lo_, r_hi_, bin_theta_;
};

inline const DeltoidRegion& deltoid_region() {
    static DeltoidRegion region;
    return region;
}

/// Union of the deltoid-family slices over a t grid: slice t is the
/// deltoid region mapped by z -> (t + (1-t) e^{i pi/3}) z + (1-2t)/2.
struct DeltoidFamilyUnion {
    int t_steps = 400;

    bool contains(const Cplx& p, double tol) const {
        const auto& base = deltoid_region();
        for (int k = 0; k <= t_steps; ++k) {
            double t = static_cast<double>(k) / t_steps;
            Cplx factor = t + (1.0 - t) * std::polar(1.0, M_PI / 3.0);
            Cplx z = (p - (1.0 - 2.0 * t) / 2.0) / factor;
            if (base.contains(z, tol / std::abs(factor))) return true;
        }
        return false;
    }
};

// ---- fixture reports ----

struct CheckResult {
    std::string label;
    bool pass = false;
    double value = 0.0;  // the measured quantity backing the verdict
};

struct FixtureReport {
    std::string id;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(const std::string& label, bool ok, double value) {
        checks.push_back({label, ok, value});
    }
};

// ---- reference regions for the two bowtie families ----

inline geom::Region2 bowtie_reference() {
    geom::Region2 r;
    r.label = "bowtie";
    r.parts.push_back(geom::convex_hull({{0, 0}, {1, 1}, {1, -1}}));
    r.parts.push_back(geom::convex_hull({{0, 0}, {-1, -1}, {-1, 1}}));
    return r;
}

inline geom::Region2 shifted_bowtie_reference() {
    geom::Region2 r;
    r.label = "shifted-bowtie";
    r.parts.push_back(geom::convex_hull({{0, 0}, {-1, 1}, {-1, -1}}));
    r.parts.push_back(geom::convex_hull({{0, 0}, {2, 0}, {1, -1}, {1, 1}}));
    r.parts.push_back(geom::convex_hull({{2, 0}, {3, 1}, {3, -1}}));
    return r;
}

/// Dense point model of a region: interior lattice plus part boundaries.
inline std::vector<geom::Point> region_point_model(const geom::Region2& r, double spacing) {
    auto pts = geom::region_grid_points(r, spacing, 0.0);
    for (const auto& part : r.parts) {
        int count = std::max(8, static_cast<int>(part.perimeter() / spacing));
        auto bd = part.boundary_samples(count);
        pts.insert(pts.end(), bd.begin(), bd.end());
    }
    return pts;
}

// ---- fixture builders ----

inline MatrixFamily bowtie_family() {
    Matrix a = diag_matrix({Cplx(1, 1), Cplx(1, -1)});
    MatrixFamily f;
    f.generators = {a, -a};
    return f;
}

inline std::pair<MatrixFamily, MatrixFamily> shifted_bowtie_families() {
    Matrix a = diag_matrix({Cplx(1, 1), Cplx(1, -1)});
    MatrixFamily f1;
    f1.generators = {a, -a};
    MatrixFamily f2;
    f2.generators = {a, -a + 4.0 * Matrix::Identity(2, 2)};
    return {f1, f2};
}

struct Ex31Artifacts {
    geom::Region2 region;
    std::vector<geom::Point> kernel;
    geom::ConvexityVerdict convexity;
};

/// Bowtie family: two-triangle union, non-convex, star-shaped about 0.
inline FixtureReport run_ex3_1(Ex31Artifacts* artifacts = nullptr, int grid = 400,
                                int angles = 720) {
    FixtureReport rep;
    rep.id = "ex3_1";
    MatrixFamily f = bowtie_family();
    Matrix c = e11(2);
    auto slices = family_slices(c, f, SimplexGrid::make(2, grid), angles);
    geom::Region2 region = region_of_slices(slices, "ex3_1");

    auto model = region_point_model(region, 0.005);
    auto reference = region_point_model(bowtie_reference(), 0.005);
    double hd = geom::hausdorff(model, reference);
    rep.add("hausdorff_vs_reference<=0.02", hd <= 0.02, hd);

    auto verdict = geom::certify_convex(region, 400, 1e-6);
    rep.add("convexity_refuted_with_witness", !verdict.convex, verdict.convex ? 0.0 : 1.0);

    auto kernel = geom::kernel_estimate(region, 20, 1e-9, 48, 12);
    bool has_zero = false;
    for (const auto& p : kernel) has_zero = has_zero || std::abs(p) <= 1e-9;
    rep.add("kernel_contains_origin", has_zero, static_cast<double>(kernel.size()));

    if (artifacts) {
        artifacts->region = std::move(region);
        artifacts->kernel = std::move(kernel);
        artifacts->convexity = verdict;
    }
    return rep;
}

struct Ex32Artifacts {
    geom::Region2 region;
    geom::StarCertificate cert_zero, cert_two;
    std::vector<geom::Point> kernel;
};

/// Shifted bowtie union: connected but not star-shaped; the kernel scan
/// comes up empty and both natural candidates get explicit violations.
inline FixtureReport run_ex3_2(Ex32Artifacts* artifacts = nullptr, int grid = 400,
                                int angles = 720, int kernel_resolution = 100) {
    FixtureReport rep;
    rep.id = "ex3_2";
    auto [f1, f2] = shifted_bowtie_families();
    Matrix c = e11(2);
    auto s1 = family_slices(c, f1, SimplexGrid::make(2, grid), angles);
    auto s2 = family_slices(c, f2, SimplexGrid::make(2, grid), angles);
    geom::Region2 region = region_of_slices(s1, "ex3_2");
    geom::Region2 r2 = region_of_slices(s2);
    region.parts.insert(region.parts.end(), r2.parts.begin(), r2.parts.end());
    region.invalidate();

    auto model = region_point_model(region, 0.005);
    auto reference = region_point_model(shifted_bowtie_reference(), 0.005);
    double hd = geom::hausdorff(model, reference);
    rep.add("hausdorff_vs_reference<=0.02", hd <= 0.02, hd);

    auto kernel = geom::kernel_estimate(region, kernel_resolution, 1e-9, 48, 12);
    rep.add("kernel_empty", kernel.empty(), static_cast<double>(kernel.size()));

    auto cert0 = geom::certify_star_center(region, {0.0, 0.0}, 128, 24, 1e-9, 512, true);
    auto cert2 = geom::certify_star_center(region, {2.0, 0.0}, 128, 24, 1e-9, 512, true);
    rep.add("violation_at_mu=0", !cert0.valid(), static_cast<double>(cert0.violations.size()));
    rep.add("violation_at_mu=2", !cert2.valid(), static_cast<double>(cert2.violations.size()));

    if (artifacts) {
        artifacts->region = std::move(region);
        artifacts->cert_zero = std::move(cert0);
        artifacts->cert_two = std::move(cert2);
        artifacts->kernel = std::move(kernel);
    }
    return rep;
}

/// Deltoid-family vertex table: the six exact values of gamma_point at
/// theta in {-2pi/3, 0, 2pi/3}, t in {0, 1}.
inline FixtureReport check_gamma_vertex_table() {
    FixtureReport rep;
    rep.id = "gamma_vertex_table";
    const double s32 = 3.0 * std::sqrt(3.0) / 2.0;
    struct Entry {
        double theta, t;
        Cplx expected;
    };
    const Entry table[] = {
        {-2.0 * M_PI / 3.0, 0.0, {2.0, -s32}}, {0.0, 0.0, {2.0, s32}},
        {2.0 * M_PI / 3.0, 0.0, {-2.5, 0.0}},  {-2.0 * M_PI / 3.0, 1.0, {-2.0, -s32}},
        {0.0, 1.0, {2.5, 0.0}},                {2.0 * M_PI / 3.0, 1.0, {-2.0, s32}},
    };
    for (const auto& e : table) {
        double err = std::abs(gamma_point(e.theta, e.t) - e.expected);
        std::ostringstream label;
        label << "f(" << e.theta << "," << e.t << ")";
        rep.add(label.str(), err <= 1e-12, err);
    }
    return rep;
}

struct Ex41Artifacts {
    RangeCloud cloud;
    std::vector<geom::Point> boundary0, boundary1;
};

/// Deltoid family: vertex table to 1e-12, Haar samples of the self-range
/// confined by the curve, and the two-tangent sweep showing no star
/// center exists on the imaginary axis.
inline std::vector<Cplx> deltoid_union_kernel_scan(int resolution, double tol, int steps);

inline FixtureReport run_ex4_1(Ex41Artifacts* artifacts = nullptr, std::uint64_t seed_root = 41,
                                std::size_t samples = 200000, int candidate_grid = 200,
                                int kernel_resolution = 120) {
    FixtureReport rep;
    rep.id = "ex4_1";
    for (auto& chk : check_gamma_vertex_table().checks) rep.checks.push_back(chk);

    Matrix c = cube_root_diag();
    RangeCloud cloud = sample_range(c, c, samples, Seed{seed_root, 0});
    const auto& region = deltoid_region();
    std::size_t inside = 0;
    for (const auto& p : cloud.points)
        if (region.contains(p, 1e-6)) ++inside;
    rep.add("samples_inside_curve", inside == cloud.points.size(),
            static_cast<double>(cloud.points.size() - inside));

    // Two-tangent candidate sweep: every center candidate i*y must keep both
    // segments to the extreme vertices f(0,0) and f(0,1) inside the union;
    // tangency at those vertices rules every candidate out.
    DeltoidFamilyUnion family;
    const Cplx horn0 = gamma_point(0.0, 0.0);  // 2 + 3sqrt(3)/2 i
    const Cplx horn1 = gamma_point(0.0, 1.0);  // 5/2
    const double y_min = -3.0, y_max = 3.0;
    const double tol = 6e-3;
    const int steps = 600;
    int surviving = 0;
    std::vector<int> alive(candidate_grid + 1, 0);
    parallel_for(candidate_grid + 1, [&](std::size_t k) {
        double y = y_min + (y_max - y_min) * k / candidate_grid;
        Cplx cand(0.0, y);
        auto segment_ok = [&](const Cplx& target) {
            for (int s = 0; s <= steps; ++s) {
                Cplx p = cand + (static_cast<double>(s) / steps) * (target - cand);
                if (!family.contains(p, tol)) return false;
            }
            return true;
        };
        if (segment_ok(horn0) && segment_ok(horn1)) alive[k] = 1;
    });
    for (int k = 0; k <= candidate_grid; ++k) surviving += alive[k];
    rep.add("no_imaginary_axis_star_center", surviving == 0, static_cast<double>(surviving));

    if (kernel_resolution > 0) {
        auto kernel = deltoid_union_kernel_scan(kernel_resolution, tol, 100);
        rep.add("union_kernel_empty", kernel.empty(), static_cast<double>(kernel.size()));
    }

    if (artifacts) {
        artifacts->cloud = std::move(cloud);
        for (int k = 0; k <= 720; ++k) {
            double theta = -M_PI + 2.0 * M_PI * k / 720;
            artifacts->boundary0.push_back(gamma_point(theta, 0.0));
            artifacts->boundary1.push_back(gamma_point(theta, 1.0));
        }
    }
    return rep;
}

/// Coarse kernel scan of the deltoid-family union (candidate grid over the
/// bounding box, early-exit star tests). Returns surviving candidates.
inline std::vector<Cplx> deltoid_union_kernel_scan(int resolution, double tol = 6e-3,
                                                   int steps = 200) {
    DeltoidFamilyUnion family;
    // the two extreme horns first: they reject almost every candidate early
    std::vector<Cplx> targets = {gamma_point(0.0, 0.0), gamma_point(0.0, 1.0)};
    for (int k = 0; k < 96; ++k) {
        double theta = -M_PI + 2.0 * M_PI * k / 96;
        targets.push_back(gamma_point(theta, 0.0));
        targets.push_back(gamma_point(theta, 1.0));
    }
    const double x0 = -3.0, x1 = 3.0, y0 = -3.0, y1 = 3.0;
    std::vector<std::vector<Cplx>> kept(resolution + 1);
    parallel_for(resolution + 1, [&](std::size_t iy) {
        double y = y0 + (y1 - y0) * iy / resolution;
        for (int ix = 0; ix <= resolution; ++ix) {
            Cplx cand(x0 + (x1 - x0) * ix / resolution, y);
            if (!family.contains(cand, tol)) continue;
            bool ok = true;
            for (const auto& t : targets) {
                for (int s = 0; s <= steps; ++s) {
                    Cplx p = cand + (static_cast<double>(s) / steps) * (t - cand);
                    if (!family.contains(p, tol)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
            if (ok) kept[iy].push_back(cand);
        }
    });
    std::vector<Cplx> out;
    for (auto& row : kept) out.insert(out.end(), row.begin(), row.end());
    return out;
}

inline Matrix ex4_5_matrix() {
    return diag_matrix({std::polar(1.0, M_PI / 3.0), std::polar(1.0, -M_PI / 3.0),
                        0.95 * std::polar(1.0, M_PI / 4.0)});
}

struct Ex45Artifacts {
    RangeCloud tensor_cloud, product_cloud;
};

/// Product-range identity on A (x) A: the tensor-product sample cloud
/// matches the set of pairwise products of two independent samples of the
/// classical range of A.
inline FixtureReport run_ex4_5(Ex45Artifacts* artifacts = nullptr, std::uint64_t seed_root = 45,
                                std::size_t samples = 100000) {
    FixtureReport rep;
    rep.id = "ex4_5";
    Matrix a = ex4_5_matrix();

    Matrix axa = Matrix::Zero(9, 9);
    for (Eigen::Index i = 0; i < 3; ++i)
        axa.block(3 * i, 3 * i, 3, 3) = a(i, i) * a;  // kron(A, A) for diagonal A

    // direct-sum identity: (+)_i (a_ii A) equals A (x) A for diagonal A
    Matrix osum = direct_sum({Cplx(a(0, 0)) * a, Cplx(a(1, 1)) * a, Cplx(a(2, 2)) * a});
    rep.add("direct_sum_equals_kron", frob(osum - axa) <= 1e-14, frob(osum - axa));

    RangeCloud tensor = product_numerical_range(axa, 3, 3, samples, Seed{seed_root, 0});

    Matrix c = e11(3);
    RangeCloud w1 = sample_range(c, a, samples, Seed{seed_root, 1'000'000});
    RangeCloud w2 = sample_range(c, a, samples, Seed{seed_root, 2'000'000});
    std::vector<Cplx> products(samples);
    for (std::size_t k = 0; k < samples; ++k) products[k] = w1.points[k] * w2.points[k];

    double hd = geom::hausdorff(tensor.points, products);
    rep.add("hausdorff_tensor_vs_products<=0.05", hd <= 0.05, hd);

    if (artifacts) {
        artifacts->tensor_cloud = std::move(tensor);
        artifacts->product_cloud.points = std::move(products);
        artifacts->product_cloud.count = samples;
    }
    return rep;
}

/// Direct-sum product-range identity: W_tensor((+) A_i) against the union
/// cloud of the convex family of the generators.
inline FixtureReport run_thm4_3(std::uint64_t seed_root = 43, std::size_t samples = 100000) {
    FixtureReport rep;
    rep.id = "thm4_3_demo";
    Matrix a = ex4_5_matrix();
    std::vector<Matrix> gens = {std::polar(1.0, M_PI / 3.0) * a, std::polar(1.0, -M_PI / 3.0) * a,
                                0.95 * std::polar(1.0, M_PI / 4.0) * a};
    Matrix osum = direct_sum(gens);
    RangeCloud tensor = product_numerical_range(osum, 3, 3, samples, Seed{seed_root, 0});

    MatrixFamily f;
    f.generators = gens;
    SimplexGrid grid = SimplexGrid::make(3, 40);
    std::size_t per_slice = std::max<std::size_t>(1, samples / grid.weights.size());
    RangeCloud family = family_cloud(e11(3), f, grid, per_slice, Seed{seed_root, 5'000'000});

    double hd = geom::hausdorff(tensor.points, family.points);
    rep.add("hausdorff_tensor_vs_family<=0.05", hd <= 0.05, hd);

    // 2x2 pair as a second desk-scale instance
    Matrix b1 = diag_matrix({Cplx(1, 0), Cplx(0, 1)});
    Matrix b2 = diag_matrix({Cplx(-1, 0), Cplx(0.5, -0.5)});
    Matrix osum2 = direct_sum({b1, b2});
    RangeCloud tensor2 = product_numerical_range(osum2, 2, 2, samples, Seed{seed_root, 7'000'000});
    MatrixFamily f2;
    f2.generators = {b1, b2};
    RangeCloud family2 = family_cloud(e11(2), f2, SimplexGrid::make(2, 200),
                                      std::max<std::size_t>(1, samples / 201),
                                      Seed{seed_root, 9'000'000});
    double hd2 = geom::hausdorff(tensor2.points, family2.points);
    rep.add("hausdorff_2x2_pair<=0.05", hd2 <= 0.05, hd2);
    return rep;
}

/// Diagonal-compression reduction on three 2x2 phase matrices: compressed
/// diagonals read off correctly, the compressed union matches the family
/// union, and 0 sits in every compressed triangle.
inline FixtureReport run_ex4_7(std::uint64_t seed_root = 47) {
    FixtureReport rep;
    rep.id = "ex4_7";
    Matrix a1 = diag_matrix({1.0, std::polar(1.0, M_PI / 3.0)});
    Matrix a2 = diag_matrix({std::polar(1.0, 2.0 * M_PI / 3.0), std::polar(1.0, M_PI)});
    Matrix a3 = diag_matrix({std::polar(1.0, 4.0 * M_PI / 3.0), std::polar(1.0, 5.0 * M_PI / 3.0)});
    std::vector<Matrix> gens = {a1, a2, a3};

    Vector x1 = Vector::Zero(2);
    x1(0) = 1.0;
    Vector x2 = Vector::Zero(2);
    x2(1) = 1.0;
    auto hats = hat_family(gens, {x1, x2});
    Matrix want1 = diag_matrix({1.0, std::polar(1.0, 2.0 * M_PI / 3.0), std::polar(1.0, 4.0 * M_PI / 3.0)});
    Matrix want2 =
        diag_matrix({std::polar(1.0, M_PI / 3.0), std::polar(1.0, M_PI), std::polar(1.0, 5.0 * M_PI / 3.0)});
    rep.add("hat_at_e1", frob(hats[0] - want1) <= 1e-14, frob(hats[0] - want1));
    rep.add("hat_at_e2", frob(hats[1] - want2) <= 1e-14, frob(hats[1] - want2));

    // 0 lies in the triangle of every compressed matrix along the family path
    bool zero_in_all = true;
    for (int k = 0; k <= 200 && zero_in_all; ++k) {
        double t = static_cast<double>(k) / 200;
        Cplx mu = t + (1.0 - t) * std::polar(1.0, M_PI / 3.0);
        geom::Polygon tri = geom::convex_hull(
            {mu, kOmega * mu, kOmega * kOmega * mu});
        zero_in_all = tri.contains({0.0, 0.0}, 1e-12);
    }
    rep.add("origin_in_every_compressed_triangle", zero_in_all, zero_in_all ? 1.0 : 0.0);

    // union identity at desk scale: family union cloud vs compressed union cloud
    MatrixFamily f;
    f.generators = gens;
    RangeCloud family = family_cloud(e11(2), f, SimplexGrid::make(3, 20), 500,
                                     Seed{seed_root, 0});
    std::size_t vectors = 10000, per_hat = 10;
    std::vector<Cplx> hat_points(vectors * per_hat);
    parallel_for(vectors, [&](std::size_t k) {
        Vector x = haar_unit_vector(2, Seed{seed_root, 10'000'000 + k});
        Matrix hat = Matrix::Zero(3, 3);
        for (int j = 0; j < 3; ++j) hat(j, j) = x.dot(gens[j] * x);
        for (std::size_t s = 0; s < per_hat; ++s) {
            Vector y = haar_unit_vector(3, Seed{seed_root, 20'000'000 + k * per_hat + s});
            hat_points[k * per_hat + s] = y.dot(hat * y);
        }
    });
    double hd = geom::hausdorff(family.points, hat_points);
    rep.add("hausdorff_family_vs_compressed<=0.03", hd <= 0.03, hd);
    return rep;
}

struct PauliArtifacts {
    JointCloud cloud;
};

/// Pauli triple: the joint range is the unit sphere; the origin is far
/// from every sample.
inline FixtureReport run_pauli(PauliArtifacts* artifacts = nullptr, std::uint64_t seed_root = 5,
                               std::size_t samples = 100000) {
    FixtureReport rep;
    rep.id = "pauli";
    MatrixTuple tuple;
    tuple.entries = {pauli_x(), pauli_y(), pauli_z()};
    JointCloud cloud = sample_joint(e11(2), tuple, samples, Seed{seed_root, 0});
    double worst = 0.0, nearest_origin = std::numeric_limits<double>::infinity();
    for (const auto& p : cloud.points) {
        double norm2 = 0.0;
        for (Eigen::Index i = 0; i < 3; ++i) norm2 += std::norm(p(i));
        worst = std::max(worst, std::abs(norm2 - 1.0));
        nearest_origin = std::min(nearest_origin, std::sqrt(norm2));
    }
    rep.add("max_sphere_residual<=1e-9", worst <= 1e-9, worst);
    rep.add("origin_gap>=0.5", nearest_origin >= 0.5, nearest_origin);
    rep.add("flat_dimension==3", flat_dimension(tuple) == 3,
            static_cast<double>(flat_dimension(tuple)));
    if (artifacts) artifacts->cloud = std::move(cloud);
    return rep;
}

inline std::pair<MatrixTuple, MatrixTuple> at_family_generators() {
    MatrixTuple a0, a1;
    a0.entries = {diag_matrix({0.0, 0.0, 1.0}), diag_matrix({1.0, 0.0, 1.0}),
                  diag_matrix({0.0, 0.0, 1.0})};
    a1.entries = {diag_matrix({1.0, 1.0, 0.0}), diag_matrix({0.0, 1.0, 0.0}),
                  diag_matrix({0.0, 1.0, 0.0})};
    return {a0, a1};
}

/// Interpolated triangle family: slices are the exact triangles
/// conv{(t,1-t,0), (t,t,t), (1-t,1-t,1-t)}; (1/2,1/2,1/2) is a certified
/// star center while the origin is rejected with a witness.
inline FixtureReport run_at_family(std::uint64_t seed_root = 51) {
    FixtureReport rep;
    rep.id = "at_family";
    auto [a0, a1] = at_family_generators();
    auto set = joint_family_slices(e11(3), {a1, a0}, SimplexGrid::make(2, 100));
    rep.add("exact_polytope_path", set.exact, set.exact ? 1.0 : 0.0);

    // slice vertex formula, and the common point in every slice
    bool vertices_ok = true, common_ok = true;
    Vector center(3);
    center << 0.5, 0.5, 0.5;
    for (std::size_t k = 0; k < set.polytopes.size(); ++k) {
        double t = set.polytopes[k].parameter[0];
        Vector v1(3), v2(3), v3(3);
        v1 << t, 1 - t, 0;
        v2 << t, t, t;
        v3 << 1 - t, 1 - t, 1 - t;
        double err = std::numeric_limits<double>::infinity();
        // vertex list order is the diagonal order; compare as sets
        std::vector<Vector> want = {v1, v2, v3};
        err = 0.0;
        for (const auto& w : want) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& got : set.polytopes[k].vertices) best = std::min(best, (w - got).norm());
            err = std::max(err, best);
        }
        if (err > 1e-12) vertices_ok = false;
        if (!slice_contains(set.polytopes[k], center, 1e-9)) common_ok = false;
    }
    rep.add("slice_vertex_formula", vertices_ok, vertices_ok ? 1.0 : 0.0);
    rep.add("center_in_every_slice", common_ok, common_ok ? 1.0 : 0.0);

    auto good = certify_star_center_kd(set.polytopes, center, 0, 64, 1e-9);
    rep.add("star_center_at_(.5,.5,.5)", good.valid(), static_cast<double>(good.violations.size()));

    Vector origin = Vector::Zero(3);
    auto bad = certify_star_center_kd(set.polytopes, origin, 0, 64, 1e-9, true);
    rep.add("origin_rejected", !bad.valid(), static_cast<double>(bad.violations.size()));

    // the documented witness direction: midpoints toward (1/2,1/2,0) leave the union
    Vector w(3);
    w << 0.5, 0.5, 0.0;
    Vector mid = 0.5 * w;
    rep.add("witness_segment_toward_(.5,.5,0)", !union_contains(set.polytopes, mid, 1e-9),
            union_contains(set.polytopes, mid, 1e-9) ? 1.0 : 0.0);
    (void)seed_root;
    return rep;
}

inline std::pair<MatrixTuple, MatrixTuple> nonstar_joint_generators() {
    MatrixTuple a, b;
    a.entries = {diag_matrix({0.0, 1.0, 0.0}), diag_matrix({1.0, 0.0, -1.0}),
                 Matrix::Identity(3, 3)};
    b.entries = {diag_matrix({1.0, 0.0, 0.0}), diag_matrix({0.0, -1.0, 1.0}),
                 Matrix::Zero(3, 3)};
    return {a, b};
}

/// Max alpha with (alpha, 0, t) in the triangle slice at parameter t:
/// intersection of the y = 0 line with the slice triangle in the (x, y)
/// plane (all slice vertices share z = t).
inline double nonstar_slice_max_alpha(double t) {
    const double vx[3] = {1 - t, t, 0.0};
    const double vy[3] = {t, t - 1, 1 - 2 * t};
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        if (std::abs(vy[i]) <= 1e-15) best = std::max(best, vx[i]);
        if ((vy[i] > 0) != (vy[j] > 0) && vy[i] != vy[j]) {
            double u = vy[i] / (vy[i] - vy[j]);
            best = std::max(best, vx[i] + u * (vx[j] - vx[i]));
        }
    }
    return best;
}

/// Non-star-shaped joint family: extremal profile 1 - 2t + 2t^2, the
/// reflection symmetry of the slice family, and rejection of the
/// candidate centers on the symmetry axis.
inline FixtureReport run_nonstar_joint(std::uint64_t seed_root = 52) {
    FixtureReport rep;
    rep.id = "nonstar_joint";
    auto [a, b] = nonstar_joint_generators();
    auto set = joint_family_slices(e11(3), {a, b}, SimplexGrid::make(2, 1000));
    rep.add("exact_polytope_path", set.exact, set.exact ? 1.0 : 0.0);

    // extremal profile on the 101-point t grid, evaluated on the s-grid slices
    double worst = 0.0;
    for (int k = 0; k <= 100; ++k) {
        double t = static_cast<double>(k) / 100;
        double alpha = -std::numeric_limits<double>::infinity();
        for (const auto& slice : set.polytopes) {
            // slice parameter is the weight on the first generator
            double s = slice.parameter[0];
            if (std::abs(s - t) > 1e-9) continue;
            Vector probe(3);
            double cand = nonstar_slice_max_alpha(s);
            probe << cand, 0.0, s;
            if (slice_contains(slice, probe, 1e-9)) alpha = std::max(alpha, cand);
        }
        worst = std::max(worst, std::abs(alpha - (1.0 - 2.0 * t + 2.0 * t * t)));
    }
    rep.add("extremal_profile_1-2t+2t^2<=1e-6", worst <= 1e-6, worst);

    // reflection symmetry g(a,b,c) = (a,-b,1-c): slice s maps onto slice 1-s
    bool symmetric = true;
    const std::size_t n_slices = set.polytopes.size();
    for (std::size_t k = 0; k < n_slices && symmetric; ++k) {
        const auto& src = set.polytopes[k];
        const auto& dst = set.polytopes[n_slices - 1 - k];
        for (const auto& v : src.vertices) {
            Vector g(3);
            g << v(0), -v(1), 1.0 - v(2).real();
            double best = std::numeric_limits<double>::infinity();
            for (const auto& wv : dst.vertices) best = std::min(best, (g - wv).norm());
            if (best > 1e-12) symmetric = false;
        }
    }
    rep.add("g_symmetry_vertex_sets", symmetric, symmetric ? 1.0 : 0.0);

    // affine image of the first generator reproduces the second's polytope
    Eigen::MatrixXcd t_map = Eigen::MatrixXcd::Zero(3, 3);
    t_map(0, 0) = 1.0;
    t_map(1, 1) = -1.0;
    t_map(2, 2) = -1.0;
    Vector f_shift(3);
    f_shift << 0.0, 0.0, 1.0;
    auto mapped = diag_tuple_polytope(affine_image(t_map, f_shift, a));
    auto want = diag_tuple_polytope(b);
    bool affine_ok = true;
    for (const auto& v : mapped.vertices) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& wv : want.vertices) best = std::min(best, (v - wv).norm());
        if (best > 1e-12) affine_ok = false;
    }
    rep.add("affine_map_swaps_generators", affine_ok, affine_ok ? 1.0 : 0.0);

    // candidate centers on the symmetry axis are rejected with witnesses
    for (double a_coord : {0.0, 0.05, 0.1}) {
        Vector cand(3);
        cand << a_coord, 0.0, 0.5;
        auto cert = certify_star_center_kd(set.polytopes, cand, 512, 96, 1e-9, true);
        std::ostringstream label;
        label << "reject_(" << a_coord << ",0,0.5)";
        rep.add(label.str(), !cert.valid(), static_cast<double>(cert.violations.size()));
    }
    (void)seed_root;
    return rep;
}

/// Rank-one family: the range of a rank-one step is the origin-centered
/// disk with the bilinear-form radius.
inline FixtureReport run_ex2_3b(std::uint64_t seed_root = 23) {
    FixtureReport rep;
    rep.id = "ex2_3b";
    double r1 = rank_one_disk_radius(e11(2), 50, Seed{seed_root, 0});
    rep.add("radius_E11==0.5", std::abs(r1 - 0.5) <= 1e-4, r1);
    double r2 = rank_one_disk_radius(diag_matrix({1.0, -1.0}), 50, Seed{seed_root, 100});
    rep.add("radius_diag(1,-1)==1", std::abs(r2 - 1.0) <= 1e-4, r2);

    // W(2 E12) is the unit disk: the traced boundary has h == 1 everywhere
    Matrix a = Matrix::Zero(2, 2);
    a(0, 1) = 2.0;
    auto curve = boundary_trace(e11(2), a, 720);
    double h_err = 0.0;
    for (double h : curve.support_values) h_err = std::max(h_err, std::abs(h - 1.0));
    rep.add("disk_support_h==1", h_err <= 1e-9, h_err);
    double poly_err = 0.0;
    for (const auto& p : curve.support_points) poly_err = std::max(poly_err, std::abs(std::abs(p) - 1.0));
    rep.add("disk_boundary_radius==1<=1e-4", poly_err <= 1e-4, poly_err);

    auto cls = classify_range(e11(2), a);
    rep.add("classified_general", cls.kind == RangeKind::General, 0.0);
    return rep;
}

}  // namespace fixtures
}  // namespace crange
