#include "crange/fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace crange;

TEST_CASE("SimplexGrid enumerates lattice weights") {
    SECTION("m = 2, resolution 4") {
        auto g = SimplexGrid::make(2, 4);
        REQUIRE(g.weights.size() == 5);
        for (const auto& w : g.weights) {
            CHECK(std::abs(w[0] + w[1] - 1.0) <= 1e-15);
            CHECK(w[0] >= 0.0);
        }
        // ordered along the edge: first weight decreasing
        for (std::size_t k = 1; k < g.weights.size(); ++k)
            CHECK(g.weights[k][0] < g.weights[k - 1][0]);
    }
    SECTION("m = 3, resolution 3 has C(5,2) = 10 points") {
        CHECK(SimplexGrid::make(3, 3).weights.size() == 10);
    }
}

TEST_CASE("slice_matrix") {
    Matrix a = diag_matrix({Cplx(1, 1), Cplx(1, -1)});
    MatrixFamily f;
    f.generators = {a, -a};
    SECTION("pure weights select a generator") {
        CHECK(frob(slice_matrix(f, {1.0, 0.0}) - a) <= 1e-15);
    }
    SECTION("midpoint of conv{A, -A} is zero") {
        CHECK(frob(slice_matrix(f, {0.5, 0.5})) <= 1e-15);
    }
    SECTION("edge formula (2t - 1) A") {
        for (double t : {0.1, 0.3, 0.8}) {
            Matrix m = slice_matrix(f, {t, 1.0 - t});
            CHECK(frob(m - (2.0 * t - 1.0) * a) <= 1e-14);
        }
    }
    SECTION("weight validation") {
        CHECK_THROWS_AS(slice_matrix(f, {0.5}), std::invalid_argument);
        CHECK_THROWS_AS(slice_matrix(f, {0.7, 0.7}), std::invalid_argument);
        CHECK_THROWS_AS(slice_matrix(f, {-0.2, 1.2}), std::invalid_argument);
    }
}

TEST_CASE("family_slices and region_of_slices") {
    Matrix e11 = diag_matrix({1.0, 0.0});
    SECTION("two-triangle union within Hausdorff 0.02 of the reference") {
        auto f = fixtures::bowtie_family();
        auto slices = family_slices(e11, f, SimplexGrid::make(2, 100), 360);
        REQUIRE(slices.convex_slices);
        auto region = region_of_slices(slices);
        auto model = fixtures::region_point_model(region, 0.01);
        auto reference = fixtures::region_point_model(fixtures::bowtie_reference(), 0.01);
        CHECK(geom::hausdorff(model, reference) <= 0.02);
    }
    SECTION("three-part union within Hausdorff 0.02 of the reference") {
        auto [f1, f2] = fixtures::shifted_bowtie_families();
        auto s1 = family_slices(e11, f1, SimplexGrid::make(2, 100), 360);
        auto s2 = family_slices(e11, f2, SimplexGrid::make(2, 100), 360);
        auto region = region_of_slices(s1);
        auto r2 = region_of_slices(s2);
        region.parts.insert(region.parts.end(), r2.parts.begin(), r2.parts.end());
        region.invalidate();
        auto model = fixtures::region_point_model(region, 0.01);
        auto reference = fixtures::region_point_model(fixtures::shifted_bowtie_reference(), 0.01);
        CHECK(geom::hausdorff(model, reference) <= 0.02);
    }
    SECTION("singleton family reduces to one boundary polygon") {
        Matrix a = diag_matrix({Cplx(1, 1), Cplx(1, -1)});
        MatrixFamily f;
        f.generators = {a};
        auto slices = family_slices(e11, f, SimplexGrid::make(1, 1), 360);
        REQUIRE(slices.slices.size() == 1);
        auto direct = boundary_polygon(boundary_trace(e11, a, 360));
        REQUIRE(slices.slices[0].polygon.size() == direct.size());
        for (std::size_t k = 0; k < direct.size(); ++k)
            CHECK(std::abs(slices.slices[0].polygon.vertices[k] - direct.vertices[k]) <= 1e-15);
    }
    SECTION("non-Hermitian C produces clouds, and region_of_slices refuses") {
        Matrix c = diag_matrix({Cplx(0, 1), Cplx(0, 0)});
        MatrixFamily f;
        f.generators = {diag_matrix({1.0, 2.0}), diag_matrix({0.0, 1.0})};
        auto slices = family_slices(c, f, SimplexGrid::make(2, 4), 90, 50, Seed{1, 0});
        REQUIRE_FALSE(slices.convex_slices);
        CHECK(slices.slices[0].cloud.points.size() == 50);
        CHECK_THROWS_AS(region_of_slices(slices), std::invalid_argument);
    }
}

TEST_CASE("hat_family diagonal compressions") {
    Matrix a1 = diag_matrix({1.0, std::polar(1.0, M_PI / 3.0)});
    Matrix a2 = diag_matrix({std::polar(1.0, 2.0 * M_PI / 3.0), std::polar(1.0, M_PI)});
    Matrix a3 = diag_matrix({std::polar(1.0, 4.0 * M_PI / 3.0), std::polar(1.0, 5.0 * M_PI / 3.0)});
    Vector e1 = Vector::Zero(2), e2 = Vector::Zero(2);
    e1(0) = 1.0;
    e2(1) = 1.0;
    SECTION("first and second diagonal entries are read off") {
        auto hats = hat_family({a1, a2, a3}, {e1, e2});
        REQUIRE(hats.size() == 2);
        Matrix want1 = diag_matrix(
            {1.0, std::polar(1.0, 2.0 * M_PI / 3.0), std::polar(1.0, 4.0 * M_PI / 3.0)});
        Matrix want2 = diag_matrix(
            {std::polar(1.0, M_PI / 3.0), std::polar(1.0, M_PI), std::polar(1.0, 5.0 * M_PI / 3.0)});
        CHECK(frob(hats[0] - want1) <= 1e-14);
        CHECK(frob(hats[1] - want2) <= 1e-14);
    }
    SECTION("single identity generator compresses to diag(1)") {
        auto hats = hat_family({Matrix::Identity(2, 2)}, {e1});
        REQUIRE(hats.size() == 1);
        REQUIRE(hats[0].rows() == 1);
        CHECK(std::abs(hats[0](0, 0) - 1.0) <= 1e-14);
    }
    SECTION("non-unit vectors are rejected") {
        Vector bad = 2.0 * e1;
        CHECK_THROWS_AS(hat_family({a1}, {bad}), std::invalid_argument);
    }
}

TEST_CASE("direct_sum") {
    SECTION("identity blocks") {
        CHECK(frob(direct_sum({Matrix::Identity(1, 1), Matrix::Identity(1, 1)}) -
                   Matrix::Identity(2, 2)) <= 1e-15);
    }
    SECTION("single block is itself") {
        Matrix e11 = diag_matrix({1.0, 0.0});
        CHECK(frob(direct_sum({e11}) - e11) <= 1e-15);
    }
    SECTION("kron identity for the diagonal product fixture") {
        Matrix a = fixtures::ex4_5_matrix();
        Matrix osum = direct_sum({Cplx(a(0, 0)) * a, Cplx(a(1, 1)) * a, Cplx(a(2, 2)) * a});
        Matrix axa = Matrix::Zero(9, 9);
        for (Eigen::Index i = 0; i < 3; ++i) axa.block(3 * i, 3 * i, 3, 3) = a(i, i) * a;
        CHECK(frob(osum - axa) <= 1e-14);
    }
}

TEST_CASE("product_numerical_range") {
    SECTION("identity gives the constant 1") {
        auto cloud = product_numerical_range(Matrix::Identity(6, 6), 2, 3, 200, Seed{31, 0});
        for (const auto& p : cloud.points) CHECK(std::abs(p - 1.0) <= 1e-12);
    }
    SECTION("dimension mismatch is rejected") {
        CHECK_THROWS_AS(product_numerical_range(Matrix::Identity(6, 6), 2, 2, 10, Seed{0, 0}),
                        std::invalid_argument);
    }
    SECTION("direct sum matches the family union cloud (reduced scale)") {
        Matrix b1 = diag_matrix({Cplx(1, 0), Cplx(0, 1)});
        Matrix b2 = diag_matrix({Cplx(-1, 0), Cplx(0.5, -0.5)});
        auto tensor = product_numerical_range(direct_sum({b1, b2}), 2, 2, 30000, Seed{32, 0});
        MatrixFamily f;
        f.generators = {b1, b2};
        auto family = family_cloud(diag_matrix({1.0, 0.0}), f, SimplexGrid::make(2, 100), 300,
                                   Seed{33, 0});
        CHECK(geom::hausdorff(tensor.points, family.points) <= 0.07);
    }
}

TEST_CASE("family_cloud is deterministic and slice-ordered") {
    Matrix e11 = diag_matrix({1.0, 0.0});
    auto f = fixtures::bowtie_family();
    auto c1 = family_cloud(e11, f, SimplexGrid::make(2, 4), 20, Seed{7, 0});
    auto c2 = family_cloud(e11, f, SimplexGrid::make(2, 4), 20, Seed{7, 0});
    REQUIRE(c1.points.size() == 100);
    for (std::size_t k = 0; k < c1.points.size(); ++k) CHECK(c1.points[k] == c2.points[k]);
}
