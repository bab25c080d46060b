// crange: command-line driver for C-numerical range computations.
//
// Subcommands:
//   range    one matrix pair: classification, boundary, sample cloud
//   family   convex family from a manifest: slices, region, convexity
//   joint    joint range of a matrix tuple (or tuple family) from a manifest
//   certify  star-center certification of a family region at a given point
//   repro    run a named built-in fixture end to end
//
// Exit codes: 0 success, 1 a certification or fixture check failed,
// 2 bad usage or unreadable input.

#include "crange/fixtures.hpp"
#include "crange/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using namespace crange;
using namespace crange::io;
using nlohmann::json;

struct FormatSet {
    bool csv = false, json_out = false, svg = false;
};

FormatSet parse_formats(const std::string& spec) {
    FormatSet fs;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "csv")
            fs.csv = true;
        else if (item == "json")
            fs.json_out = true;
        else if (item == "svg")
            fs.svg = true;
        else if (!item.empty())
            throw std::invalid_argument("unknown format: " + item);
    }
    return fs;
}

json cloud_stats(const RangeCloud& cloud) {
    json j;
    j["count"] = cloud.points.size();
    j["diameter"] = cloud.diameter();
    return j;
}

int cmd_range(const std::string& c_path, const std::string& a_path, int angles,
              std::size_t samples, std::uint64_t seed, const std::string& out,
              const std::string& format) {
    Matrix c = load_matrix(c_path);
    Matrix a = load_matrix(a_path);
    FormatSet fs = parse_formats(format);

    json summary;
    auto cls = classify_range(c, a);
    switch (cls.kind) {
        case RangeKind::Singleton: summary["kind"] = "singleton"; break;
        case RangeKind::Segment: summary["kind"] = "segment"; break;
        case RangeKind::Polygon: summary["kind"] = "polygon"; break;
        case RangeKind::General: summary["kind"] = "general"; break;
    }
    Cplx mu = star_center_default(c, a);
    summary["star_center"] = {mu.real(), mu.imag()};

    RangeCloud cloud = sample_range(c, a, samples, Seed{seed, 0});
    summary["cloud"] = cloud_stats(cloud);

    bool hermitian = is_hermitian(c);
    geom::Region2 region;
    BoundaryCurve curve;
    if (hermitian) {
        curve = boundary_trace(c, a, angles);
        region.parts.push_back(boundary_polygon(curve));
        summary["boundary_angles"] = angles;
        summary["convex"] = true;
    }

    if (!out.empty()) {
        if (fs.csv) {
            write_cloud_csv(out + "_cloud.csv", cloud);
            if (hermitian) write_boundary_csv(out + "_boundary.csv", curve);
        }
        if (fs.json_out && hermitian) {
            std::ofstream rf(out + "_region.json");
            rf << region_to_json(region).dump(2) << '\n';
        }
        if (fs.svg) {
            SvgLayers layers;
            if (hermitian) layers.region = &region;
            layers.cloud = &cloud.points;
            write_svg(out + ".svg", layers);
        }
    }
    std::cout << summary.dump(2) << '\n';
    return 0;
}

int cmd_family(const std::string& manifest_path, int grid, int angles, int samples,
               std::uint64_t seed, bool have_seed, const std::string& out,
               const std::string& format) {
    FamilyManifest m = load_manifest(manifest_path);
    if (grid > 0) m.grid = grid;
    if (angles > 0) m.angles = angles;
    if (samples > 0) m.samples = samples;
    if (have_seed) m.seed = seed;
    FormatSet fs = parse_formats(format);

    json summary;
    summary["generators"] = m.family.generators.size();
    summary["grid"] = m.grid;
    SimplexGrid sg = SimplexGrid::make(static_cast<int>(m.family.generators.size()), m.grid);
    auto slices = family_slices(m.c, m.family, sg, m.angles,
                                static_cast<std::size_t>(m.samples), Seed{m.seed, 0});
    summary["convex_slices"] = slices.convex_slices;

    geom::Region2 region;
    if (slices.convex_slices) {
        region = region_of_slices(slices, "family");
        auto verdict = geom::certify_convex(region, 400, 1e-6);
        summary["union_convex"] = verdict.convex;
        if (!verdict.convex)
            summary["convexity_witness"] = {verdict.witness.real(), verdict.witness.imag()};
        summary["parts"] = region.parts.size();
    }

    RangeCloud cloud = family_cloud(m.c, m.family, sg,
                                    std::max<std::size_t>(1, m.samples / sg.weights.size()),
                                    Seed{m.seed, 1});
    summary["cloud"] = cloud_stats(cloud);

    if (!out.empty()) {
        if (fs.csv) write_cloud_csv(out + "_cloud.csv", cloud);
        if (fs.json_out && slices.convex_slices) {
            std::ofstream rf(out + "_region.json");
            rf << region_to_json(region).dump(2) << '\n';
        }
        if (fs.svg) {
            SvgLayers layers;
            if (slices.convex_slices) layers.region = &region;
            layers.cloud = &cloud.points;
            write_svg(out + ".svg", layers);
        }
    }
    std::cout << summary.dump(2) << '\n';
    return 0;
}

MatrixTuple tuple_from_json(const json& arr) {
    MatrixTuple t;
    for (const auto& mj : arr) t.entries.push_back(matrix_from_json(mj));
    t.validate();
    return t;
}

int cmd_joint(const std::string& manifest_path, int grid, int samples, std::uint64_t seed,
              bool have_seed, const std::string& out, const std::string& format) {
    std::ifstream in(manifest_path);
    if (!in) throw std::invalid_argument("cannot open manifest: " + manifest_path);
    json j;
    in >> j;
    if (!j.contains("C") || !j.contains("tuples"))
        throw std::invalid_argument("joint manifest: missing \"C\" or \"tuples\"");
    Matrix c = matrix_from_json(j.at("C"));
    std::vector<MatrixTuple> tuples;
    for (const auto& tj : j.at("tuples")) tuples.push_back(tuple_from_json(tj));
    if (tuples.empty()) throw std::invalid_argument("joint manifest: empty tuple list");
    if (grid <= 0) grid = j.value("grid", 100);
    if (samples <= 0) samples = j.value("samples", 10000);
    if (!have_seed) seed = j.value("seed", std::uint64_t{0});
    FormatSet fs = parse_formats(format);

    json summary;
    summary["tuples"] = tuples.size();
    summary["arity"] = tuples.front().arity();
    summary["flat_dimension"] = flat_dimension(tuples.front());

    JointCloud cloud;
    if (tuples.size() == 1) {
        cloud = sample_joint(c, tuples.front(), static_cast<std::size_t>(samples), Seed{seed, 0});
        summary["count"] = cloud.points.size();
        bool diag_exact = tuples.front().all_diagonal() && is_rank_one_projection(c);
        summary["exact_polytope"] = diag_exact;
        if (diag_exact && fs.json_out && !out.empty()) {
            auto slice = diag_tuple_polytope(tuples.front());
            std::ofstream sf(out + "_polytope.json");
            sf << slices_to_json({slice}).dump(2) << '\n';
        }
    } else {
        SimplexGrid sg = SimplexGrid::make(static_cast<int>(tuples.size()), grid);
        auto set = joint_family_slices(c, tuples, sg,
                                       std::max<std::size_t>(1, samples / sg.weights.size()),
                                       Seed{seed, 0});
        summary["exact_polytope"] = set.exact;
        summary["slices"] = set.exact ? set.polytopes.size() : set.clouds.size();
        if (set.exact) {
            if (fs.json_out && !out.empty()) {
                std::ofstream sf(out + "_slices.json");
                sf << slices_to_json(set.polytopes).dump(2) << '\n';
            }
            // flatten vertices into a representative cloud for CSV export
            for (const auto& s : set.polytopes)
                for (const auto& v : s.vertices) cloud.points.push_back(v);
        } else {
            for (const auto& cl : set.clouds)
                cloud.points.insert(cloud.points.end(), cl.points.begin(), cl.points.end());
        }
        summary["count"] = cloud.points.size();
    }
    if (!out.empty() && fs.csv && !cloud.points.empty()) write_joint_csv(out + "_cloud.csv", cloud);
    std::cout << summary.dump(2) << '\n';
    return 0;
}

int cmd_certify(const std::string& manifest_path, double mu_re, double mu_im, double tol,
                int grid, int angles, const std::string& out, const std::string& format) {
    FamilyManifest m = load_manifest(manifest_path);
    if (grid > 0) m.grid = grid;
    if (angles > 0) m.angles = angles;
    if (!is_hermitian(m.c))
        throw std::invalid_argument("certify: needs Hermitian C (polygon slices)");
    FormatSet fs = parse_formats(format);

    SimplexGrid sg = SimplexGrid::make(static_cast<int>(m.family.generators.size()), m.grid);
    auto slices = family_slices(m.c, m.family, sg, m.angles);
    geom::Region2 region = region_of_slices(slices, "certify");

    geom::Point mu(mu_re, mu_im);
    auto cert = geom::certify_star_center(region, mu, 256, 32, tol);
    json summary;
    summary["mu"] = {mu_re, mu_im};
    summary["tol"] = tol;
    summary["checked_rays"] = cert.checked_rays;
    summary["valid"] = cert.valid();
    if (!cert.valid()) {
        const auto& [target, s] = cert.violations.front();
        summary["violation"] = {{"target", {target.real(), target.imag()}}, {"parameter", s}};
    }
    if (!out.empty() && fs.json_out) {
        std::ofstream rf(out + "_region.json");
        rf << region_to_json(region).dump(2) << '\n';
    }
    if (!out.empty() && fs.svg) {
        SvgLayers layers;
        layers.region = &region;
        write_svg(out + ".svg", layers);
    }
    std::cout << summary.dump(2) << '\n';
    return cert.valid() ? 0 : 1;
}

int cmd_repro(const std::string& fixture, std::uint64_t seed, bool have_seed,
              const std::string& out, const std::string& format) {
    FormatSet fs = parse_formats(format);
    fixtures::FixtureReport rep;
    if (fixture == "ex2_3b") {
        rep = fixtures::run_ex2_3b(have_seed ? seed : 23);
    } else if (fixture == "ex3_1") {
        fixtures::Ex31Artifacts art;
        rep = fixtures::run_ex3_1(&art);
        if (!out.empty() && fs.json_out) {
            std::ofstream rf(out + "_region.json");
            rf << region_to_json(art.region).dump(2) << '\n';
        }
        if (!out.empty() && fs.svg) {
            SvgLayers layers;
            layers.region = &art.region;
            layers.kernel = &art.kernel;
            write_svg(out + ".svg", layers);
        }
    } else if (fixture == "ex3_2") {
        fixtures::Ex32Artifacts art;
        rep = fixtures::run_ex3_2(&art);
        if (!out.empty() && fs.json_out) {
            std::ofstream rf(out + "_region.json");
            rf << region_to_json(art.region).dump(2) << '\n';
        }
        if (!out.empty() && fs.svg) {
            SvgLayers layers;
            layers.region = &art.region;
            write_svg(out + ".svg", layers);
        }
    } else if (fixture == "ex4_1") {
        fixtures::Ex41Artifacts art;
        rep = fixtures::run_ex4_1(&art, have_seed ? seed : 41);
        if (!out.empty() && fs.csv) write_cloud_csv(out + "_cloud.csv", art.cloud);
    } else if (fixture == "ex4_5") {
        fixtures::Ex45Artifacts art;
        rep = fixtures::run_ex4_5(&art, have_seed ? seed : 45);
        if (!out.empty() && fs.csv) {
            write_cloud_csv(out + "_tensor.csv", art.tensor_cloud);
            write_cloud_csv(out + "_products.csv", art.product_cloud);
        }
    } else if (fixture == "ex4_7") {
        rep = fixtures::run_ex4_7(have_seed ? seed : 47);
    } else if (fixture == "thm4_3_demo") {
        rep = fixtures::run_thm4_3(have_seed ? seed : 43);
    } else if (fixture == "pauli") {
        fixtures::PauliArtifacts art;
        rep = fixtures::run_pauli(&art, have_seed ? seed : 5);
        if (!out.empty() && fs.csv) write_joint_csv(out + "_cloud.csv", art.cloud);
    } else if (fixture == "at_family") {
        rep = fixtures::run_at_family();
    } else if (fixture == "nonstar_joint") {
        rep = fixtures::run_nonstar_joint();
    } else {
        throw std::invalid_argument(
            "unknown fixture: " + fixture +
            " (known: ex2_3b ex3_1 ex3_2 ex4_1 ex4_5 ex4_7 thm4_3_demo pauli at_family "
            "nonstar_joint)");
    }
    json summary;
    summary["fixture"] = rep.id;
    summary["pass"] = rep.pass();
    json checks = json::array();
    for (const auto& chk : rep.checks) {
        checks.push_back({{"label", chk.label}, {"pass", chk.pass}, {"value", chk.value}});
        std::cerr << (chk.pass ? "PASS " : "FAIL ") << rep.id << ": " << chk.label
                  << " (value=" << chk.value << ")\n";
    }
    summary["checks"] = std::move(checks);
    std::cout << summary.dump(2) << '\n';
    return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"C-numerical range toolkit"};
    app.require_subcommand(1);

    std::string c_path, a_path, manifest, out, format = "csv", fixture;
    int grid = 0, angles = 720, kr_angles = 0, samples_i = 0;
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    double tol = 1e-9, mu_re = 0.0, mu_im = 0.0;
    bool have_seed = false;

    auto* range = app.add_subcommand("range", "numerical range of one matrix pair");
    range->add_option("--c", c_path, "matrix C (JSON)")->required();
    range->add_option("--a", a_path, "matrix A (JSON)")->required();
    range->add_option("--angles", angles, "boundary angles");
    range->add_option("--samples", samples, "Haar sample count");
    range->add_option("--seed", seed, "RNG seed");
    range->add_option("--out", out, "output path prefix");
    range->add_option("--format", format, "comma list of csv,json,svg");

    auto* family = app.add_subcommand("family", "range of a convex matrix family");
    family->add_option("--manifest", manifest, "family manifest (JSON)")->required();
    family->add_option("--grid", grid, "simplex grid resolution");
    family->add_option("--angles", kr_angles, "boundary angles");
    family->add_option("--samples", samples_i, "total Haar sample count");
    family->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) { have_seed = true; });
    family->add_option("--out", out, "output path prefix");
    family->add_option("--format", format, "comma list of csv,json,svg");

    auto* joint = app.add_subcommand("joint", "joint range of a matrix tuple");
    joint->add_option("--manifest", manifest, "joint manifest (JSON)")->required();
    joint->add_option("--grid", grid, "simplex grid resolution");
    joint->add_option("--samples", samples_i, "Haar sample count");
    joint->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) { have_seed = true; });
    joint->add_option("--out", out, "output path prefix");
    joint->add_option("--format", format, "comma list of csv,json,svg");

    auto* certify = app.add_subcommand("certify", "certify a star center of a family region");
    certify->add_option("--manifest", manifest, "family manifest (JSON)")->required();
    certify->add_option("--mu-re", mu_re, "candidate center, real part");
    certify->add_option("--mu-im", mu_im, "candidate center, imaginary part");
    certify->add_option("--tol", tol, "membership tolerance");
    certify->add_option("--grid", grid, "simplex grid resolution");
    certify->add_option("--angles", kr_angles, "boundary angles");
    certify->add_option("--out", out, "output path prefix");
    certify->add_option("--format", format, "comma list of csv,json,svg");

    auto* repro = app.add_subcommand("repro", "run a built-in fixture");
    repro->add_option("--fixture", fixture, "fixture id")->required();
    repro->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) { have_seed = true; });
    repro->add_option("--out", out, "output path prefix");
    repro->add_option("--format", format, "comma list of csv,json,svg");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (range->parsed())
            return cmd_range(c_path, a_path, angles, samples, seed, out, format);
        if (family->parsed())
            return cmd_family(manifest, grid, kr_angles, samples_i, seed, have_seed, out, format);
        if (joint->parsed())
            return cmd_joint(manifest, grid, samples_i, seed, have_seed, out, format);
        if (certify->parsed())
            return cmd_certify(manifest, mu_re, mu_im, tol, grid, kr_angles, out, format);
        if (repro->parsed()) return cmd_repro(fixture, seed, have_seed, out, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
