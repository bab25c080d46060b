#pragma once

// Planar geometry: convex hulls, regions as unions of convex polygons,
// star-shapedness and convexity certification, separating support lines,
// Hausdorff distance between point clouds.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace crange {
namespace geom {

using Point = std::complex<double>;

inline double cross(const Point& o, const Point& a, const Point& b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

/// Orientation sign of (o, a, b): +1 CCW, -1 CW, 0 collinear.
/// Near-zero double results are recomputed in extended precision.
inline int orient(const Point& o, const Point& a, const Point& b) {
    double d = cross(o, a, b);
    double scale = std::abs(a.real() - o.real()) + std::abs(a.imag() - o.imag()) +
                   std::abs(b.real() - o.real()) + std::abs(b.imag() - o.imag());
    if (std::abs(d) > 1e-12 * std::max(1.0, scale * scale))
        return d > 0 ? 1 : -1;
    long double dl = (static_cast<long double>(a.real()) - o.real()) *
                         (static_cast<long double>(b.imag()) - o.imag()) -
                     (static_cast<long double>(a.imag()) - o.imag()) *
                         (static_cast<long double>(b.real()) - o.real());
    if (dl > 1e-30L) return 1;
    if (dl < -1e-30L) return -1;
    return 0;
}

inline double dist_point_segment(const Point& p, const Point& a, const Point& b) {
    Point ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

struct BBox {
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -std::numeric_limits<double>::infinity();
    double ymin = std::numeric_limits<double>::infinity();
    double ymax = -std::numeric_limits<double>::infinity();

    void add(const Point& p) {
        xmin = std::min(xmin, p.real());
        xmax = std::max(xmax, p.real());
        ymin = std::min(ymin, p.imag());
        ymax = std::max(ymax, p.imag());
    }
    void add(const BBox& o) {
        xmin = std::min(xmin, o.xmin);
        xmax = std::max(xmax, o.xmax);
        ymin = std::min(ymin, o.ymin);
        ymax = std::max(ymax, o.ymax);
    }
    bool near(const Point& p, double tol) const {
        return p.real() >= xmin - tol && p.real() <= xmax + tol &&
               p.imag() >= ymin - tol && p.imag() <= ymax + tol;
    }
    double diam() const { return std::hypot(xmax - xmin, ymax - ymin); }
};

/// Convex polygon, CCW vertex order. May degenerate to a segment (two
/// vertices) or a point (one vertex).
struct Polygon {
    std::vector<Point> vertices;

    bool empty() const { return vertices.empty(); }
    std::size_t size() const { return vertices.size(); }

    BBox bbox() const {
        BBox b;
        for (const auto& v : vertices) b.add(v);
        return b;
    }

    double area() const {
        if (vertices.size() < 3) return 0.0;
        double s = 0.0;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            const Point& a = vertices[i];
            const Point& b = vertices[(i + 1) % vertices.size()];
            s += a.real() * b.imag() - b.real() * a.imag();
        }
        return s / 2.0;
    }

    Point centroid() const {
        if (vertices.empty()) return {0.0, 0.0};
        Point c{0.0, 0.0};
        for (const auto& v : vertices) c += v;
        return c / static_cast<double>(vertices.size());
    }

    double perimeter() const {
        double s = 0.0;
        for (std::size_t i = 0; i + 1 < vertices.size(); ++i) s += std::abs(vertices[i + 1] - vertices[i]);
        if (vertices.size() > 2) s += std::abs(vertices.front() - vertices.back());
        return s;
    }

    /// Unsigned distance from p to the polygon boundary.
    double boundary_distance(const Point& p) const {
        if (vertices.empty()) return std::numeric_limits<double>::infinity();
        if (vertices.size() == 1) return std::abs(p - vertices[0]);
        double d = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            const Point& a = vertices[i];
            const Point& b = vertices[(i + 1) % vertices.size()];
            d = std::min(d, dist_point_segment(p, a, b));
        }
        return d;
    }

    /// Membership within distance tol of the (closed, convex) polygon.
    bool contains(const Point& p, double tol) const {
        if (vertices.empty()) return false;
        if (vertices.size() == 1) return std::abs(p - vertices[0]) <= tol;
        if (vertices.size() == 2) return dist_point_segment(p, vertices[0], vertices[1]) <= tol;
        bool inside = true;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            const Point& a = vertices[i];
            const Point& b = vertices[(i + 1) % vertices.size()];
            double len = std::abs(b - a);
            if (len == 0.0) continue;
            if (cross(a, b, p) < -tol * len) {
                inside = false;
                break;
            }
        }
        if (inside) return true;
        return tol > 0.0 && boundary_distance(p) <= tol;
    }

    /// Uniform-by-arc-length boundary samples (count points).
    std::vector<Point> boundary_samples(int count) const {
        std::vector<Point> out;
        if (vertices.empty() || count <= 0) return out;
        if (vertices.size() == 1) {
            out.assign(1, vertices[0]);
            return out;
        }
        std::vector<Point> loop = vertices;
        if (vertices.size() > 2) loop.push_back(vertices.front());
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < loop.size(); ++i) total += std::abs(loop[i + 1] - loop[i]);
        if (total == 0.0) {
            out.assign(1, vertices[0]);
            return out;
        }
        double step = total / count;
        double acc = 0.0;
        std::size_t seg = 0;
        double seg_end = std::abs(loop[1] - loop[0]);
        for (int k = 0; k < count; ++k) {
            double target = k * step;
            while (target > seg_end && seg + 2 < loop.size()) {
                acc = seg_end;
                ++seg;
                seg_end += std::abs(loop[seg + 1] - loop[seg]);
            }
            double seg_len = seg_end - acc;
            double t = seg_len > 0.0 ? (target - acc) / seg_len : 0.0;
            out.push_back(loop[seg] + t * (loop[seg + 1] - loop[seg]));
        }
        return out;
    }
};

/// Andrew monotone chain. Lexicographic (x, then y) tie-breaking; collinear
/// input degrades to a segment, coincident input to a point.
inline Polygon convex_hull(std::vector<Point> pts) {
    if (pts.empty()) throw std::invalid_argument("convex_hull: empty input");
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Point& a, const Point& b) { return a == b; }),
              pts.end());
    Polygon poly;
    if (pts.size() <= 2) {
        poly.vertices = pts;
        return poly;
    }
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() == 2) {
        // all input collinear: keep extreme endpoints only
        poly.vertices = hull;
        return poly;
    }
    poly.vertices = std::move(hull);
    return poly;
}

/// Union of convex polygons; membership means membership in any part.
struct Region2 {
    std::vector<Polygon> parts;
    std::string label;

    mutable std::vector<BBox> bbox_cache;

    void invalidate() const { bbox_cache.clear(); }

    const std::vector<BBox>& bboxes() const {
        if (bbox_cache.size() != parts.size()) {
            bbox_cache.clear();
            bbox_cache.reserve(parts.size());
            for (const auto& p : parts) bbox_cache.push_back(p.bbox());
        }
        return bbox_cache;
    }

    BBox bbox() const {
        BBox b;
        for (const auto& pb : bboxes()) b.add(pb);
        return b;
    }

    bool contains(const Point& p, double tol) const {
        const auto& boxes = bboxes();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (!boxes[i].near(p, tol)) continue;
            if (parts[i].contains(p, tol)) return true;
        }
        return false;
    }

    std::vector<Point> all_vertices() const {
        std::vector<Point> out;
        for (const auto& part : parts)
            out.insert(out.end(), part.vertices.begin(), part.vertices.end());
        return out;
    }
};

inline bool region_contains(const Region2& r, const Point& p, double tol) {
    return r.contains(p, tol);
}

/// True iff all steps+1 equally spaced points of [a, b] lie in R.
inline bool segment_in_region(const Region2& r, const Point& a, const Point& b, int steps,
                              double tol) {
    if (steps < 2) throw std::invalid_argument("segment_in_region: steps must be >= 2");
    for (int k = 0; k <= steps; ++k) {
        double s = static_cast<double>(k) / steps;
        if (!r.contains(a + s * (b - a), tol)) return false;
    }
    return true;
}

struct StarCertificate {
    Point center;
    int checked_rays = 0;
    std::vector<std::pair<Point, double>> violations;  // (target, failing parameter)

    bool valid() const { return violations.empty(); }
};

namespace detail {
/// First failing parameter on [mu, target], or nullopt if the whole
/// sampled segment lies in R.
inline std::optional<double> segment_violation(const Region2& r, const Point& mu,
                                               const Point& target, int steps, double tol) {
    for (int k = 0; k <= steps; ++k) {
        double s = static_cast<double>(k) / steps;
        if (!r.contains(mu + s * (target - mu), tol)) return s;
    }
    return std::nullopt;
}
}  // namespace detail

/// Collects star-center targets: all part vertices plus boundary_samples
/// arc-length samples distributed over parts by perimeter.
inline std::vector<Point> star_targets(const Region2& r, int boundary_samples) {
    std::vector<Point> targets = r.all_vertices();
    if (boundary_samples > 0 && !r.parts.empty()) {
        double total = 0.0;
        for (const auto& p : r.parts) total += p.perimeter();
        for (const auto& p : r.parts) {
            int cnt = total > 0.0
                          ? std::max(1, static_cast<int>(std::lround(boundary_samples * p.perimeter() / total)))
                          : 1;
            auto samples = p.boundary_samples(cnt);
            targets.insert(targets.end(), samples.begin(), samples.end());
        }
    }
    return targets;
}

/// Certifies mu as a star center of R by sampled segment tests against
/// boundary samples and all part vertices. Targets are visited farthest
/// first so failures surface early.
inline StarCertificate certify_star_center(const Region2& r, const Point& mu,
                                           int boundary_samples, int steps, double tol,
                                           std::size_t max_targets = 0, bool first_violation_only = false) {
    StarCertificate cert;
    cert.center = mu;
    std::vector<Point> targets = star_targets(r, boundary_samples);
    std::sort(targets.begin(), targets.end(), [&](const Point& a, const Point& b) {
        return std::norm(a - mu) > std::norm(b - mu);
    });
    if (max_targets > 0 && targets.size() > max_targets) {
        // keep the spread: stride subsample of the distance-sorted list
        std::vector<Point> kept;
        kept.reserve(max_targets);
        double stride = static_cast<double>(targets.size()) / max_targets;
        for (std::size_t i = 0; i < max_targets; ++i)
            kept.push_back(targets[static_cast<std::size_t>(i * stride)]);
        targets = std::move(kept);
    }
    for (const auto& t : targets) {
        ++cert.checked_rays;
        if (auto bad = detail::segment_violation(r, mu, t, steps, tol)) {
            cert.violations.emplace_back(t, *bad);
            if (first_violation_only) return cert;
        }
    }
    return cert;
}

/// Grid points of the region bounding box whose star certificate is valid.
/// An empty result means no certified center at this resolution.
inline std::vector<Point> kernel_estimate(const Region2& r, int grid_resolution, double tol,
                                          int boundary_samples = 64, int steps = 16) {
    if (grid_resolution < 2) throw std::invalid_argument("kernel_estimate: resolution must be >= 2");
    BBox bb = r.bbox();
    std::vector<Point> kernel;
    for (int iy = 0; iy <= grid_resolution; ++iy) {
        for (int ix = 0; ix <= grid_resolution; ++ix) {
            Point mu(bb.xmin + (bb.xmax - bb.xmin) * ix / grid_resolution,
                     bb.ymin + (bb.ymax - bb.ymin) * iy / grid_resolution);
            if (!r.contains(mu, tol)) continue;
            auto cert = certify_star_center(r, mu, boundary_samples, steps, tol, 256, true);
            if (cert.valid()) kernel.push_back(mu);
        }
    }
    return kernel;
}

struct ConvexityVerdict {
    bool convex = true;
    Point witness;  // first hull point not in the region, when convex == false
};

/// Tests R for convexity: builds the hull of all part vertices and probes
/// boundary_samples points of the hull (area rejection sampling, fixed
/// stream) for region membership.
inline ConvexityVerdict certify_convex(const Region2& r, int boundary_samples, double tol) {
    ConvexityVerdict verdict;
    auto verts = r.all_vertices();
    if (verts.empty()) return verdict;
    Polygon hull = convex_hull(verts);
    if (hull.size() <= 2) {
        // collinear region: convex iff the hull segment is covered
        if (hull.size() == 2) {
            for (int k = 0; k <= std::max(boundary_samples, 2); ++k) {
                double s = static_cast<double>(k) / std::max(boundary_samples, 2);
                Point p = hull.vertices[0] + s * (hull.vertices[1] - hull.vertices[0]);
                if (!r.contains(p, tol)) return {false, p};
            }
        }
        return verdict;
    }
    BBox bb = hull.bbox();
    std::mt19937_64 rng(0x5eedc0ffeeULL);
    std::uniform_real_distribution<double> ux(bb.xmin, bb.xmax), uy(bb.ymin, bb.ymax);
    int accepted = 0;
    long attempts = 0;
    const long attempt_cap = 1000L * std::max(boundary_samples, 1);
    while (accepted < boundary_samples && attempts < attempt_cap) {
        ++attempts;
        Point p(ux(rng), uy(rng));
        if (!hull.contains(p, 0.0)) continue;
        ++accepted;
        if (!r.contains(p, tol)) return {false, p};
    }
    return verdict;
}

struct SupportLine {
    Point normal;      // unit outward normal
    double offset = 0.0;  // max of normal . p over the supported set
    std::vector<Point> contact_set;
};

namespace detail {
inline double support_max(const Polygon& poly, const Point& n) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : poly.vertices)
        best = std::max(best, n.real() * v.real() + n.imag() * v.imag());
    return best;
}
inline double support_min(const Polygon& poly, const Point& n) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& v : poly.vertices)
        best = std::min(best, n.real() * v.real() + n.imag() * v.imag());
    return best;
}

/// Strictly separating direction for disjoint convex polygons (SAT over
/// edge normals of both polygons plus vertex-vertex directions).
inline std::optional<Point> separating_direction(const Polygon& p, const Polygon& q) {
    std::vector<Point> candidates;
    auto add_edges = [&candidates](const Polygon& poly, double sign) {
        const auto& v = poly.vertices;
        std::size_t m = v.size();
        if (m < 2) return;
        for (std::size_t i = 0; i < m; ++i) {
            Point e = v[(i + 1) % m] - v[i];
            double len = std::abs(e);
            if (len == 0.0) continue;
            candidates.push_back(sign * Point(e.imag(), -e.real()) / len);
            candidates.push_back(-sign * Point(e.imag(), -e.real()) / len);
        }
    };
    add_edges(p, 1.0);
    add_edges(q, 1.0);
    for (const auto& a : p.vertices)
        for (const auto& b : q.vertices)
            if (a != b) candidates.push_back((b - a) / std::abs(b - a));
    double best_gap = 0.0;
    std::optional<Point> best;
    for (const auto& d : candidates) {
        double gap = support_min(q, d) - support_max(p, d);
        if (gap > best_gap) {
            best_gap = gap;
            best = d;
        }
    }
    return best;
}
}  // namespace detail

struct SeparatingLines {
    SupportLine l1, l2;
    Point mu;  // intersection of the two lines
};

/// Two non-parallel common support lines of disjoint convex polygons P, Q
/// with Q in the opposite closed half-plane, found as roots of
/// q(t) = min{ n(t).(w - p) : w in Q, p in P(t) } by bisection after a
/// 200-point bracketing scan. Their intersection mu is returned.
inline SeparatingLines separating_support_lines(const Polygon& p, const Polygon& q) {
    if (p.empty() || q.empty())
        throw std::invalid_argument("separating_support_lines: empty polygon");
    auto dir = detail::separating_direction(p, q);
    if (!dir)
        throw std::invalid_argument("separating_support_lines: polygons are not strictly separated");
    double phi0 = std::arg(*dir);
    auto normal = [phi0](double t) { return std::polar(1.0, phi0 + t); };
    auto qfun = [&](double t) {
        Point n = normal(t);
        return detail::support_min(q, n) - detail::support_max(p, n);
    };
    if (qfun(0.0) <= 0.0)
        throw std::invalid_argument("separating_support_lines: separation scan failed");

    auto root_in = [&](double lo, double hi) -> std::optional<double> {
        const int scan = 200;
        double prev_t = lo, prev_q = qfun(lo);
        for (int k = 1; k <= scan; ++k) {
            double t = lo + (hi - lo) * k / scan;
            double qt = qfun(t);
            if ((prev_q > 0.0) != (qt > 0.0)) {
                double a = prev_t, b = t, qa = prev_q;
                for (int it = 0; it < 200; ++it) {
                    double mid = (a + b) / 2.0;
                    double qm = qfun(mid);
                    if (std::abs(qm) <= 1e-12) return mid;
                    if ((qa > 0.0) == (qm > 0.0)) {
                        a = mid;
                        qa = qm;
                    } else {
                        b = mid;
                    }
                }
                return (a + b) / 2.0;
            }
            prev_t = t;
            prev_q = qt;
        }
        return std::nullopt;
    };

    auto t1 = root_in(0.0, -M_PI);  // scan down into (-pi, 0)
    auto t2 = root_in(0.0, M_PI);
    if (!t1 || !t2)
        throw std::invalid_argument(
            "separating_support_lines: no transversal support lines (collinear configuration; "
            "use the collinear hull branch)");

    auto make_line = [&](double t) {
        SupportLine line;
        line.normal = normal(t);
        line.offset = detail::support_max(p, line.normal);
        for (const auto& v : p.vertices) {
            double proj = line.normal.real() * v.real() + line.normal.imag() * v.imag();
            if (proj >= line.offset - 1e-9) line.contact_set.push_back(v);
        }
        return line;
    };
    SeparatingLines out{make_line(*t1), make_line(*t2), Point{}};

    // line j: n_j . x = offset_j; solve the 2x2 system for the intersection
    double a11 = out.l1.normal.real(), a12 = out.l1.normal.imag();
    double a21 = out.l2.normal.real(), a22 = out.l2.normal.imag();
    double det = a11 * a22 - a12 * a21;
    if (std::abs(det) < 1e-12)
        throw std::invalid_argument("separating_support_lines: support lines are parallel");
    out.mu = Point((out.l1.offset * a22 - out.l2.offset * a12) / det,
                   (a11 * out.l2.offset - a21 * out.l1.offset) / det);
    return out;
}

namespace detail {
/// Uniform grid over a point set for nearest-neighbor queries.
class GridIndex {
  public:
    explicit GridIndex(const std::vector<Point>& pts) : pts_(pts) {
        for (const auto& p : pts) bb_.add(p);
        double diam = std::max(bb_.diam(), 1e-300);
        cell_ = diam / 128.0;
        for (std::size_t i = 0; i < pts.size(); ++i) cells_[key(pts[i])].push_back(i);
    }

    double nearest_dist(const Point& p, std::size_t skip = SIZE_MAX) const {
        auto [cx, cy] = coords(p);
        double best = std::numeric_limits<double>::infinity();
        for (int ring = 0;; ++ring) {
            bool any = false;
            for (int dy = -ring; dy <= ring; ++dy) {
                for (int dx = -ring; dx <= ring; ++dx) {
                    if (std::max(std::abs(dx), std::abs(dy)) != ring) continue;
                    auto it = cells_.find(pack(cx + dx, cy + dy));
                    if (it == cells_.end()) continue;
                    any = true;
                    for (std::size_t idx : it->second) {
                        if (idx == skip) continue;
                        best = std::min(best, std::abs(p - pts_[idx]));
                    }
                }
            }
            // once something was found, one extra ring guarantees correctness
            if (best < std::numeric_limits<double>::infinity() &&
                best <= (ring - 1) * cell_)
                return best;
            if (ring > 300 && !any && best < std::numeric_limits<double>::infinity()) return best;
            if (ring > 100000) return best;  // safety stop
            (void)any;
        }
    }

  private:
    std::pair<long, long> coords(const Point& p) const {
        return {static_cast<long>(std::floor((p.real() - bb_.xmin) / cell_)),
                static_cast<long>(std::floor((p.imag() - bb_.ymin) / cell_))};
    }
    long long pack(long x, long y) const { return (static_cast<long long>(x) << 32) ^ (y & 0xffffffffLL); }
    long long key(const Point& p) const {
        auto [x, y] = coords(p);
        return pack(x, y);
    }

    const std::vector<Point>& pts_;
    BBox bb_;
    double cell_ = 1.0;
    std::unordered_map<long long, std::vector<std::size_t>> cells_;
};
}  // namespace detail

inline double directed_hausdorff(const std::vector<Point>& from, const std::vector<Point>& to) {
    if (from.empty() || to.empty()) throw std::invalid_argument("hausdorff: empty point set");
    detail::GridIndex index(to);
    double worst = 0.0;
    for (const auto& p : from) worst = std::max(worst, index.nearest_dist(p));
    return worst;
}

inline double hausdorff(const std::vector<Point>& a, const std::vector<Point>& b) {
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

/// Median nearest-neighbor spacing of a cloud (the density proxy behind
/// cloud-membership tolerances).
inline double median_nn_spacing(const std::vector<Point>& pts) {
    if (pts.size() < 2) return 0.0;
    detail::GridIndex index(pts);
    std::vector<double> d;
    d.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) d.push_back(index.nearest_dist(pts[i], i));
    std::nth_element(d.begin(), d.begin() + d.size() / 2, d.end());
    return d[d.size() / 2];
}

/// Grid rasterization of a region: all lattice points (spacing apart)
/// of the bounding box that lie in R.
inline std::vector<Point> region_grid_points(const Region2& r, double spacing, double tol = 0.0) {
    BBox bb = r.bbox();
    std::vector<Point> out;
    for (double y = bb.ymin; y <= bb.ymax + spacing / 2; y += spacing)
        for (double x = bb.xmin; x <= bb.xmax + spacing / 2; x += spacing) {
            Point p(x, y);
            if (r.contains(p, tol)) out.push_back(p);
        }
    return out;
}

}  // namespace geom
}  // namespace crange
