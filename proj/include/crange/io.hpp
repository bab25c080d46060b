#pragma once

// File formats: matrix JSON, family manifests, cloud/boundary/joint CSV,
// region JSON and SVG rendering.

#include "crange/family.hpp"
#include "crange/geometry.hpp"
#include "crange/joint.hpp"

#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace crange {
namespace io {

using nlohmann::json;

// ---- matrix literal exchange: {"n": int, "re": [[..]], "im": [[..]]} ----

inline json matrix_to_json(const Matrix& a) {
    json j;
    j["n"] = a.rows();
    json re = json::array(), im = json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        json rrow = json::array(), irow = json::array();
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            rrow.push_back(a(i, k).real());
            irow.push_back(a(i, k).imag());
        }
        re.push_back(rrow);
        im.push_back(irow);
    }
    j["re"] = re;
    j["im"] = im;
    return j;
}

inline Matrix matrix_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("re"))
        throw std::invalid_argument("matrix JSON: missing \"n\" or \"re\"");
    Eigen::Index n = j.at("n").get<Eigen::Index>();
    if (n < 1) throw std::invalid_argument("matrix JSON: n must be >= 1");
    const json& re = j.at("re");
    const json* im = j.contains("im") ? &j.at("im") : nullptr;
    if (static_cast<Eigen::Index>(re.size()) != n || (im && static_cast<Eigen::Index>(im->size()) != n))
        throw std::invalid_argument("matrix JSON: row count does not match n");
    Matrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const json& rrow = re.at(i);
        if (static_cast<Eigen::Index>(rrow.size()) != n)
            throw std::invalid_argument("matrix JSON: ragged \"re\" row " + std::to_string(i));
        for (Eigen::Index k = 0; k < n; ++k) {
            double rv = rrow.at(k).get<double>();
            double iv = im ? im->at(i).at(k).get<double>() : 0.0;
            a(i, k) = Cplx(rv, iv);
        }
    }
    return a;
}

inline Matrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return matrix_from_json(j);
}

// ---- family manifest:
//   {"C": matrix, "generators": [matrix...], "grid": int, "angles": int,
//    "samples": int, "seed": int} ----

struct FamilyManifest {
    Matrix c;
    MatrixFamily family;
    int grid = 200;
    int angles = 720;
    int samples = 10000;
    std::uint64_t seed = 0;
};

inline FamilyManifest manifest_from_json(const json& j) {
    FamilyManifest m;
    if (!j.contains("C") || !j.contains("generators"))
        throw std::invalid_argument("family manifest: missing \"C\" or \"generators\"");
    m.c = matrix_from_json(j.at("C"));
    for (const auto& g : j.at("generators")) m.family.generators.push_back(matrix_from_json(g));
    m.family.validate();
    if (j.contains("grid")) m.grid = j.at("grid").get<int>();
    if (j.contains("angles")) m.angles = j.at("angles").get<int>();
    if (j.contains("samples")) m.samples = j.at("samples").get<int>();
    if (j.contains("seed")) m.seed = j.at("seed").get<std::uint64_t>();
    return m;
}

inline FamilyManifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open manifest: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return manifest_from_json(j);
}

// ---- CSV exports ----

inline void write_cloud_csv(const std::string& path, const RangeCloud& cloud) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "re,im\n" << std::setprecision(17);
    for (const auto& p : cloud.points) out << p.real() << ',' << p.imag() << '\n';
}

inline void write_boundary_csv(const std::string& path, const BoundaryCurve& curve) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "theta,h,re,im\n" << std::setprecision(17);
    for (std::size_t k = 0; k < curve.angles.size(); ++k)
        out << curve.angles[k] << ',' << curve.support_values[k] << ','
            << curve.support_points[k].real() << ',' << curve.support_points[k].imag() << '\n';
}

inline void write_joint_csv(const std::string& path, const JointCloud& cloud) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    if (cloud.points.empty()) {
        out << "\n";
        return;
    }
    const auto m = cloud.points.front().size();
    for (Eigen::Index j = 0; j < m; ++j) out << (j ? "," : "") << "re_" << (j + 1) << ",im_" << (j + 1);
    out << '\n' << std::setprecision(17);
    for (const auto& p : cloud.points) {
        for (Eigen::Index j = 0; j < m; ++j)
            out << (j ? "," : "") << p(j).real() << ',' << p(j).imag();
        out << '\n';
    }
}

// ---- region JSON: {"parts": [[[x,y],...],...]} ----

inline json region_to_json(const geom::Region2& r) {
    json parts = json::array();
    for (const auto& poly : r.parts) {
        json part = json::array();
        for (const auto& v : poly.vertices) part.push_back({v.real(), v.imag()});
        parts.push_back(part);
    }
    return json{{"parts", parts}};
}

inline geom::Region2 region_from_json(const json& j) {
    geom::Region2 r;
    for (const auto& part : j.at("parts")) {
        geom::Polygon poly;
        for (const auto& v : part) poly.vertices.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
        r.parts.push_back(std::move(poly));
    }
    return r;
}

inline json slices_to_json(const std::vector<PolytopeSlice>& slices) {
    json arr = json::array();
    for (const auto& s : slices) {
        json verts = json::array();
        for (const auto& v : s.vertices) {
            json vv = json::array();
            for (Eigen::Index i = 0; i < v.size(); ++i) vv.push_back({v(i).real(), v(i).imag()});
            verts.push_back(vv);
        }
        arr.push_back({{"parameter", s.parameter}, {"vertices", verts}});
    }
    return arr;
}

// ---- SVG rendering (fixed styling so figures diff cleanly) ----

struct SvgLayers {
    const geom::Region2* region = nullptr;
    const std::vector<geom::Point>* kernel = nullptr;
    const std::vector<geom::Point>* cloud = nullptr;
    std::vector<std::pair<geom::Point, geom::Point>> lines;
};

inline void write_svg(const std::string& path, const SvgLayers& layers) {
    geom::BBox bb;
    if (layers.region)
        for (const auto& p : layers.region->parts)
            for (const auto& v : p.vertices) bb.add(v);
    if (layers.cloud)
        for (const auto& p : *layers.cloud) bb.add(p);
    if (layers.kernel)
        for (const auto& p : *layers.kernel) bb.add(p);
    for (const auto& [a, b] : layers.lines) {
        bb.add(a);
        bb.add(b);
    }
    if (bb.xmax < bb.xmin) bb = geom::BBox{0, 1, 0, 1};
    double mx = 0.05 * std::max(bb.xmax - bb.xmin, 1e-6);
    double my = 0.05 * std::max(bb.ymax - bb.ymin, 1e-6);
    double x0 = bb.xmin - mx, y0 = bb.ymin - my;
    double w = (bb.xmax - bb.xmin) + 2 * mx, h = (bb.ymax - bb.ymin) + 2 * my;

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << std::setprecision(8);
    // y axis flipped so the plane renders with +y up
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 << ' ' << -(y0 + h) << ' '
        << w << ' ' << h << "\">\n";
    out << "<g transform=\"scale(1,-1)\">\n";
    if (layers.region) {
        for (const auto& poly : layers.region->parts) {
            if (poly.vertices.empty()) continue;
            out << "<polygon fill=\"#9ecae1\" fill-opacity=\"0.45\" stroke=\"#3182bd\" stroke-width=\""
                << w / 800 << "\" points=\"";
            for (const auto& v : poly.vertices) out << v.real() << ',' << v.imag() << ' ';
            out << "\"/>\n";
        }
    }
    if (layers.cloud) {
        double r = w / 600;
        for (const auto& p : *layers.cloud)
            out << "<circle cx=\"" << p.real() << "\" cy=\"" << p.imag() << "\" r=\"" << r
                << "\" fill=\"#636363\" fill-opacity=\"0.5\"/>\n";
    }
    if (layers.kernel) {
        double r = w / 300;
        for (const auto& p : *layers.kernel)
            out << "<circle cx=\"" << p.real() << "\" cy=\"" << p.imag() << "\" r=\"" << r
                << "\" fill=\"#31a354\"/>\n";
    }
    for (const auto& [a, b] : layers.lines)
        out << "<line x1=\"" << a.real() << "\" y1=\"" << a.imag() << "\" x2=\"" << b.real()
            << "\" y2=\"" << b.imag() << "\" stroke=\"#e6550d\" stroke-width=\"" << w / 400
            << "\"/>\n";
    out << "</g>\n</svg>\n";
}

}  // namespace io
}  // namespace crange
