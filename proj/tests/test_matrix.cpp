#include "crange/matrix.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace crange;

namespace {
Matrix mat2(Cplx a, Cplx b, Cplx c, Cplx d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}
}  // namespace

TEST_CASE("hermitian_parts splits A into H1 + iH2") {
    SECTION("diag(1+i, 1-i)") {
        auto [h1, h2] = hermitian_parts(diag_matrix({Cplx(1, 1), Cplx(1, -1)}));
        CHECK(frob(h1 - Matrix::Identity(2, 2)) <= 1e-15);
        CHECK(frob(h2 - diag_matrix({1.0, -1.0})) <= 1e-15);
    }
    SECTION("Hermitian A gives (A, 0)") {
        Matrix a = mat2(2, Cplx(0, 1), Cplx(0, -1), -3);
        auto [h1, h2] = hermitian_parts(a);
        CHECK(frob(h1 - a) <= 1e-15);
        CHECK(frob(h2) <= 1e-15);
    }
    SECTION("i*I gives (0, I)") {
        auto [h1, h2] = hermitian_parts(Cplx(0, 1) * Matrix::Identity(2, 2));
        CHECK(frob(h1) <= 1e-15);
        CHECK(frob(h2 - Matrix::Identity(2, 2)) <= 1e-15);
    }
    SECTION("reassembly is exact") {
        Matrix a = mat2(Cplx(1, 2), Cplx(-3, 0.5), Cplx(0, 1), Cplx(2, -2));
        auto [h1, h2] = hermitian_parts(a);
        CHECK(frob(a - (h1 + Cplx(0, 1) * h2)) <= 1e-14);
        CHECK(is_hermitian(h1, 1e-14));
        CHECK(is_hermitian(h2, 1e-14));
    }
}

TEST_CASE("is_scalar classifies scalar matrices") {
    CHECK(is_scalar(3.0 * Matrix::Identity(2, 2), 1e-12));
    CHECK_FALSE(is_scalar(diag_matrix({1.0, 0.0}), 1e-12));
    CHECK(is_scalar(Matrix::Zero(2, 2), 0.0));
}

TEST_CASE("essential_hermitian_direction") {
    SECTION("Hermitian non-scalar matrix has direction 1") {
        auto alpha = essential_hermitian_direction(diag_matrix({3.0, -1.0}));
        REQUIRE(alpha.has_value());
        CHECK(std::abs(*alpha - 1.0) <= 1e-9);
    }
    SECTION("diag(1+i, 1-i) has direction e^{i pi/2}") {
        Matrix a = diag_matrix({Cplx(1, 1), Cplx(1, -1)});
        auto alpha = essential_hermitian_direction(a);
        REQUIRE(alpha.has_value());
        CHECK(std::abs(*alpha - Cplx(0, 1)) <= 1e-9);
        // alpha * (A - (tr A / 2) I) must be Hermitian by direct multiplication
        Matrix traceless = a - (a.trace() / 2.0) * Matrix::Identity(2, 2);
        CHECK(is_hermitian(*alpha * traceless, 1e-9));
    }
    SECTION("E12 is not essentially Hermitian") {
        Matrix a = Matrix::Zero(2, 2);
        a(0, 1) = 1.0;
        CHECK_FALSE(essential_hermitian_direction(a).has_value());
    }
    SECTION("alpha argument is normalized to [0, pi)") {
        auto alpha = essential_hermitian_direction(diag_matrix({Cplx(0, 1), Cplx(0, -1)}));
        REQUIRE(alpha.has_value());
        double arg = std::arg(*alpha);
        CHECK(arg >= -1e-12);
        CHECK(arg < M_PI);
    }
}

TEST_CASE("haar_unitary basics") {
    SECTION("n = 1 gives a unimodular scalar") {
        Matrix u = haar_unitary(1, Seed{7, 0});
        CHECK(std::abs(std::abs(u(0, 0)) - 1.0) <= 1e-12);
    }
    SECTION("unitarity holds for several dimensions and seeds") {
        for (Eigen::Index n : {2, 3, 4, 5}) {
            for (std::uint64_t s : {0ull, 1ull, 99ull}) {
                Matrix u = haar_unitary(n, Seed{s, static_cast<std::uint64_t>(n)});
                CHECK(frob(u.adjoint() * u - Matrix::Identity(n, n)) <= 1e-12);
            }
        }
    }
    SECTION("determinism: same seed, same matrix") {
        Matrix a = haar_unitary(3, Seed{42, 5});
        Matrix b = haar_unitary(3, Seed{42, 5});
        CHECK(frob(a - b) == 0.0);
        Matrix c = haar_unitary(3, Seed{42, 6});
        CHECK(frob(a - c) > 1e-6);
    }
    SECTION("mean |U11|^2 over 1e5 samples at n = 3 is 1/3") {
        const std::size_t count = 100000;
        double acc = 0.0;
        Seed root{2024, 0};
        for (std::size_t k = 0; k < count; ++k)
            acc += std::norm(haar_unitary(3, root.substream(k))(0, 0));
        CHECK(std::abs(acc / count - 1.0 / 3.0) <= 0.01);
    }
}

TEST_CASE("haar_unit_vector is unit and deterministic") {
    Vector v = haar_unit_vector(4, Seed{3, 1});
    CHECK(std::abs(v.norm() - 1.0) <= 1e-12);
    CHECK((v - haar_unit_vector(4, Seed{3, 1})).norm() == 0.0);
}

TEST_CASE("eigenvalues") {
    SECTION("Hermitian diag(3, -1) descending") {
        auto s = eigenvalues(diag_matrix({-1.0, 3.0}), true);
        REQUIRE(s.values.size() == 2);
        CHECK(std::abs(s.values[0] - 3.0) <= 1e-12);
        CHECK(std::abs(s.values[1] + 1.0) <= 1e-12);
    }
    SECTION("identity") {
        auto s = eigenvalues(Matrix::Identity(3, 3), true);
        for (const auto& v : s.values) CHECK(std::abs(v - 1.0) <= 1e-12);
    }
    SECTION("nilpotent [[0,2],[0,0]]") {
        Matrix a = Matrix::Zero(2, 2);
        a(0, 1) = 2.0;
        auto s = eigenvalues(a, false);
        for (const auto& v : s.values) CHECK(std::abs(v) <= 1e-9);
    }
}

TEST_CASE("c_value evaluates tr(C U*A U)") {
    Matrix c = diag_matrix({1.0, 0.0});
    Matrix a = diag_matrix({Cplx(1, 1), Cplx(1, -1)});
    CHECK(std::abs(c_value(c, a, Matrix::Identity(2, 2)) - Cplx(1, 1)) <= 1e-14);
    Matrix swap = mat2(0, 1, 1, 0);
    CHECK(std::abs(c_value(c, a, swap) - Cplx(1, -1)) <= 1e-14);
    // tr A invariance for C = I
    Matrix u = haar_unitary(2, Seed{11, 0});
    CHECK(std::abs(c_value(Matrix::Identity(2, 2), diag_matrix({0.0, 2.0}), u) - 2.0) <= 1e-12);
}

TEST_CASE("unitary invariance of c_value distribution endpoints") {
    // c_value(C, A, U) = c_value(V*CV, U... ) consistency: spectra pairing bound
    Matrix c = diag_matrix({2.0, 1.0});
    Matrix a = diag_matrix({3.0, -1.0});
    for (std::uint64_t k = 0; k < 200; ++k) {
        Cplx z = c_value(c, a, haar_unitary(2, Seed{8, k}));
        CHECK(z.real() <= 5.0 + 1e-9);   // sorted pairing 2*3 + 1*(-1)
        CHECK(z.real() >= -1.0 - 1e-9);  // anti-sorted pairing 2*(-1) + 1*3
        CHECK(std::abs(z.imag()) <= 1e-12);
    }
}
