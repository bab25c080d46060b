#include "crange/fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace crange;

namespace {
Matrix e11_of(Eigen::Index n) { return fixtures::e11(n); }
}  // namespace

TEST_CASE("sample_joint") {
    SECTION("scalar tuple collapses to one point") {
        MatrixTuple t;
        t.entries = {3.0 * Matrix::Identity(2, 2), -Matrix::Identity(2, 2)};
        auto cloud = sample_joint(e11_of(2), t, 300, Seed{1, 0});
        for (const auto& p : cloud.points) {
            CHECK(std::abs(p(0) - 3.0) <= 1e-12);
            CHECK(std::abs(p(1) + 1.0) <= 1e-12);
        }
    }
    SECTION("Pauli tuple lands on the unit sphere") {
        MatrixTuple t;
        t.entries = {fixtures::pauli_x(), fixtures::pauli_y(), fixtures::pauli_z()};
        auto cloud = sample_joint(e11_of(2), t, 20000, Seed{2, 0});
        for (const auto& p : cloud.points) {
            double norm2 = std::norm(p(0)) + std::norm(p(1)) + std::norm(p(2));
            CHECK(std::abs(norm2 - 1.0) <= 1e-9);
            CHECK(std::abs(p(0).imag()) <= 1e-12);  // Hermitian data: real coordinates
        }
        CHECK(cloud.is_real());
    }
    SECTION("arity-1 tuple reduces to sample_range with the same seed") {
        MatrixTuple t;
        t.entries = {diag_matrix({Cplx(1, 1), Cplx(1, -1)})};
        auto joint = sample_joint(e11_of(2), t, 100, Seed{5, 0});
        auto plain = sample_range(e11_of(2), t.entries[0], 100, Seed{5, 0});
        for (std::size_t k = 0; k < 100; ++k)
            CHECK(std::abs(joint.points[k](0) - plain.points[k]) <= 1e-14);
    }
}

TEST_CASE("affine_image") {
    auto [a, b] = fixtures::nonstar_joint_generators();
    SECTION("identity map is a no-op") {
        MatrixTuple same = affine_image(Eigen::MatrixXcd::Identity(3, 3), Vector::Zero(3), a);
        for (std::size_t j = 0; j < 3; ++j) CHECK(frob(same.entries[j] - a.entries[j]) <= 1e-15);
    }
    SECTION("zero map with shift e1 gives the constant (tr C, 0, 0)") {
        Vector f = Vector::Zero(3);
        f(0) = 1.0;
        MatrixTuple mapped = affine_image(Eigen::MatrixXcd::Zero(3, 3), f, a);
        auto cloud = sample_joint(e11_of(3), mapped, 100, Seed{3, 0});
        for (const auto& p : cloud.points) {
            CHECK(std::abs(p(0) - 1.0) <= 1e-12);  // tr E11 = 1
            CHECK(std::abs(p(1)) <= 1e-12);
            CHECK(std::abs(p(2)) <= 1e-12);
        }
    }
    SECTION("reflection symmetry swaps the two generators' polytopes") {
        Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(3, 3);
        t(0, 0) = 1.0;
        t(1, 1) = -1.0;
        t(2, 2) = -1.0;
        Vector f = Vector::Zero(3);
        f(2) = 1.0;
        auto mapped = diag_tuple_polytope(affine_image(t, f, a));
        auto want = diag_tuple_polytope(b);
        for (const auto& v : mapped.vertices) {
            double best = 1e300;
            for (const auto& w : want.vertices) best = std::min(best, (v - w).norm());
            CHECK(best <= 1e-12);
        }
    }
}

TEST_CASE("flat_dimension") {
    SECTION("scalar entries span nothing") {
        MatrixTuple t;
        t.entries = {Matrix::Identity(2, 2), Cplx(0, 2) * Matrix::Identity(2, 2)};
        CHECK(flat_dimension(t) == 0);
    }
    SECTION("proportional traceless parts give 1") {
        Matrix h = diag_matrix({1.0, -1.0});
        MatrixTuple t;
        t.entries = {h, 2.0 * h + Matrix::Identity(2, 2)};
        CHECK(flat_dimension(t) == 1);
    }
    SECTION("Pauli tuple gives 3") {
        MatrixTuple t;
        t.entries = {fixtures::pauli_x(), fixtures::pauli_y(), fixtures::pauli_z()};
        CHECK(flat_dimension(t) == 3);
    }
}

TEST_CASE("diag_tuple_polytope") {
    SECTION("triangle-family slice vertices") {
        auto [a0, a1] = fixtures::at_family_generators();
        for (double t : {0.0, 0.25, 0.5, 1.0}) {
            MatrixTuple at = tuple_combination({a1, a0}, {t, 1.0 - t});
            auto slice = diag_tuple_polytope(at);
            REQUIRE(slice.vertices.size() == 3);
            Vector v1(3), v2(3), v3(3);
            v1 << t, 1 - t, 0;
            v2 << t, t, t;
            v3 << 1 - t, 1 - t, 1 - t;
            for (const auto& want : {v1, v2, v3}) {
                double best = 1e300;
                for (const auto& got : slice.vertices) best = std::min(best, (want - got).norm());
                CHECK(best <= 1e-12);
            }
        }
    }
    SECTION("final-family slice vertices") {
        auto [a, b] = fixtures::nonstar_joint_generators();
        for (double s : {0.0, 0.3, 0.5, 1.0}) {
            MatrixTuple at = tuple_combination({a, b}, {s, 1.0 - s});
            auto slice = diag_tuple_polytope(at);
            Vector v1(3), v2(3), v3(3);
            v1 << 1 - s, s, s;
            v2 << s, s - 1, s;
            v3 << 0, 1 - 2 * s, s;
            for (const auto& want : {v1, v2, v3}) {
                double best = 1e300;
                for (const auto& got : slice.vertices) best = std::min(best, (want - got).norm());
                CHECK(best <= 1e-12);
            }
        }
    }
    SECTION("m = 1 diagonal matrix gives its entries as vertices") {
        MatrixTuple t;
        t.entries = {diag_matrix({Cplx(1, 0), Cplx(0, 2), Cplx(-1, -1)})};
        auto slice = diag_tuple_polytope(t);
        REQUIRE(slice.vertices.size() == 3);
        CHECK(std::abs(slice.vertices[1](0) - Cplx(0, 2)) <= 1e-15);
    }
    SECTION("non-diagonal tuples are rejected") {
        MatrixTuple t;
        t.entries = {fixtures::pauli_x()};
        CHECK_THROWS_AS(diag_tuple_polytope(t), std::invalid_argument);
    }
}

TEST_CASE("slice membership is exact on polytopes") {
    auto [a0, a1] = fixtures::at_family_generators();
    auto slice = diag_tuple_polytope(tuple_combination({a1, a0}, {0.5, 0.5}));
    Vector center(3);
    center << 0.5, 0.5, 0.5;  // a vertex of the t = 1/2 triangle
    CHECK(slice_contains(slice, center, 1e-12));
    Vector mid(3);
    mid << 0.5, 0.5, 0.25;  // midpoint of the (t,1-t,0)-(t,t,t) edge
    CHECK(slice_contains(slice, mid, 1e-12));
    Vector outside(3);
    outside << 0.0, 0.0, 0.0;
    CHECK_FALSE(slice_contains(slice, outside, 1e-9));
    // distance to a known segment: (0,0,0) to triangle at t = 1/2
    double d = slice_distance(slice, outside);
    CHECK(d > 0.5);
}

TEST_CASE("joint_family_slices") {
    SECTION("triangle family: 101 exact slices all containing the center") {
        auto [a0, a1] = fixtures::at_family_generators();
        auto set = joint_family_slices(e11_of(3), {a1, a0}, SimplexGrid::make(2, 100));
        REQUIRE(set.exact);
        REQUIRE(set.polytopes.size() == 101);
        Vector center(3);
        center << 0.5, 0.5, 0.5;
        for (const auto& s : set.polytopes) CHECK(slice_contains(s, center, 1e-9));
    }
    SECTION("extremal profile of the final family on a coarse grid") {
        auto [a, b] = fixtures::nonstar_joint_generators();
        auto set = joint_family_slices(e11_of(3), {a, b}, SimplexGrid::make(2, 100));
        REQUIRE(set.exact);
        for (const auto& slice : set.polytopes) {
            double s = slice.parameter[0];
            double alpha = fixtures::nonstar_slice_max_alpha(s);
            CHECK(std::abs(alpha - (1.0 - 2.0 * s + 2.0 * s * s)) <= 1e-9);
            Vector probe(3);
            probe << alpha, 0.0, s;
            CHECK(slice_contains(slice, probe, 1e-9));
            Vector beyond(3);
            beyond << alpha + 1e-4, 0.0, s;
            CHECK_FALSE(slice_contains(slice, beyond, 1e-9));
        }
    }
    SECTION("single generator gives one slice") {
        auto [a0, a1] = fixtures::at_family_generators();
        auto set = joint_family_slices(e11_of(3), {a0}, SimplexGrid::make(1, 1));
        CHECK(set.polytopes.size() == 1);
    }
    SECTION("non-rank-one C falls back to clouds") {
        auto [a0, a1] = fixtures::at_family_generators();
        auto set = joint_family_slices(diag_matrix({2.0, 1.0, 0.0}), {a1, a0},
                                       SimplexGrid::make(2, 4), 50, Seed{4, 0});
        CHECK_FALSE(set.exact);
        CHECK(set.clouds.size() == 5);
    }
}

TEST_CASE("certify_star_center_kd") {
    auto [a0, a1] = fixtures::at_family_generators();
    auto set = joint_family_slices(e11_of(3), {a1, a0}, SimplexGrid::make(2, 100));
    REQUIRE(set.exact);
    SECTION("(1/2,1/2,1/2) is a certified star center") {
        Vector center(3);
        center << 0.5, 0.5, 0.5;
        CHECK(certify_star_center_kd(set.polytopes, center, 0, 48, 1e-9).valid());
    }
    SECTION("the origin is rejected with a witness toward (1/2,1/2,0)") {
        Vector origin = Vector::Zero(3);
        auto cert = certify_star_center_kd(set.polytopes, origin, 0, 48, 1e-9, true);
        REQUIRE_FALSE(cert.valid());
        // the documented mid-segment escape: (1/4,1/4,0) is outside the union
        Vector mid(3);
        mid << 0.25, 0.25, 0.0;
        CHECK_FALSE(union_contains(set.polytopes, mid, 1e-9));
    }
    SECTION("a vertex of a single convex slice is a valid center") {
        std::vector<PolytopeSlice> one = {set.polytopes.front()};
        CHECK(certify_star_center_kd(one, one[0].vertices[0], 0, 16, 1e-9).valid());
    }
}

TEST_CASE("tuple validation") {
    MatrixTuple ragged;
    ragged.entries = {Matrix::Identity(2, 2), Matrix::Identity(3, 3)};
    CHECK_THROWS_AS(ragged.validate(), std::invalid_argument);
    MatrixTuple empty;
    CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
}
