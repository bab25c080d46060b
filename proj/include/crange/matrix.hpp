#pragma once

// Complex matrix primitives: Hermitian decomposition, eigensolvers and
// seeded Haar-random unitary generation.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace crange {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Reproducible sampling seed. Equal (root, stream) pairs generate
/// bitwise-equal sample sequences; substreams for parallel sweeps are
/// derived by bumping the stream counter.
struct Seed {
    std::uint64_t root = 0;
    std::uint64_t stream = 0;

    Seed substream(std::uint64_t index) const { return Seed{root, stream + index}; }

    std::mt19937_64 engine() const {
        std::seed_seq seq{static_cast<unsigned>(root), static_cast<unsigned>(root >> 32),
                          static_cast<unsigned>(stream), static_cast<unsigned>(stream >> 32)};
        return std::mt19937_64(seq);
    }
};

inline void require_square(const Matrix& a, const char* who) {
    if (a.rows() != a.cols() || a.rows() < 1)
        throw std::invalid_argument(std::string(who) + ": matrix must be square and non-empty");
}

inline void require_same_dim(const Matrix& a, const Matrix& b, const char* who) {
    require_square(a, who);
    require_square(b, who);
    if (a.rows() != b.rows())
        throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

inline double frob(const Matrix& a) { return a.norm(); }

/// Splits A into Hermitian parts (H1, H2) with A = H1 + i*H2.
inline std::pair<Matrix, Matrix> hermitian_parts(const Matrix& a) {
    require_square(a, "hermitian_parts");
    Matrix adj = a.adjoint();
    Matrix h1 = (a + adj) / 2.0;
    Matrix h2 = (a - adj) / Cplx(0.0, 2.0);
    return {h1, h2};
}

inline bool is_hermitian(const Matrix& a, double tol = 1e-10) {
    return frob(a - a.adjoint()) <= tol * std::max(1.0, frob(a));
}

inline bool is_normal(const Matrix& a, double tol = 1e-10) {
    Matrix aa = a * a.adjoint();
    Matrix bb = a.adjoint() * a;
    return frob(aa - bb) <= tol * std::max(1.0, frob(a) * frob(a));
}

/// True iff A is within tol (relative Frobenius) of (tr A / n) I.
inline bool is_scalar(const Matrix& a, double tol = 1e-10) {
    require_square(a, "is_scalar");
    const auto n = a.rows();
    Cplx mean = a.trace() / static_cast<double>(n);
    Matrix dev = a - mean * Matrix::Identity(n, n);
    return frob(dev) <= tol * std::max(1.0, frob(a));
}

/// Finds a unit alpha with argument in [0, pi) such that
/// alpha * (A - (tr A / n) I) is Hermitian, when one exists.
/// Scalar matrices report alpha = 1. Writing the traceless part as
/// H1 + i H2, the condition is sin(phi) H1 + cos(phi) H2 = 0, a 2x2
/// eigenproblem in the Frobenius Gram matrix of (H1, H2).
inline std::optional<Cplx> essential_hermitian_direction(const Matrix& a, double tol = 1e-10) {
    require_square(a, "essential_hermitian_direction");
    const auto n = a.rows();
    Matrix b = a - (a.trace() / static_cast<double>(n)) * Matrix::Identity(n, n);
    double scale = std::max(1.0, frob(a));
    if (frob(b) <= tol * scale) return Cplx(1.0, 0.0);

    auto [h1, h2] = hermitian_parts(b);
    Eigen::Matrix2d gram;
    gram(0, 0) = h1.squaredNorm();
    gram(1, 1) = h2.squaredNorm();
    gram(0, 1) = gram(1, 0) = (h1.cwiseProduct(h2.conjugate())).sum().real();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(gram);
    Eigen::Vector2d dir = es.eigenvectors().col(0);  // smallest eigenvalue
    double residual = std::sqrt(std::max(0.0, es.eigenvalues()(0)));
    if (residual > tol * scale) return std::nullopt;

    // dir = (sin phi, cos phi); alpha = e^{i phi}, normalized into [0, pi).
    double phi = std::atan2(dir(0), dir(1));
    while (phi < 0.0) phi += M_PI;
    while (phi >= M_PI) phi -= M_PI;
    return std::polar(1.0, phi);
}

/// Haar-distributed random unitary: QR of a standard complex Gaussian
/// matrix with the column phases corrected so the triangular factor has
/// a positive real diagonal. Deterministic given the seed.
inline Matrix haar_unitary(Eigen::Index n, const Seed& seed) {
    if (n < 1) throw std::invalid_argument("haar_unitary: n must be >= 1");
    auto rng = seed.engine();
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i) g(i, j) = Cplx(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
        Cplx d = r(j, j);
        double m = std::abs(d);
        q.col(j) *= (m > 0.0) ? d / m : Cplx(1.0, 0.0);
    }
    return q;
}

/// First column of a Haar unitary: a uniformly distributed unit vector.
inline Vector haar_unit_vector(Eigen::Index n, const Seed& seed) {
    if (n < 1) throw std::invalid_argument("haar_unit_vector: n must be >= 1");
    auto rng = seed.engine();
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(n);
    double nrm2 = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        v(i) = Cplx(gauss(rng), gauss(rng));
        nrm2 += std::norm(v(i));
    }
    return v / std::sqrt(nrm2);
}

struct EigenSpectrum {
    std::vector<Cplx> values;   // descending by real part when hermitian
    bool hermitian_flag = false;
};

/// Full spectrum with multiplicity. The Hermitian path returns real values
/// sorted in descending order; the general path leaves ordering unspecified.
inline EigenSpectrum eigenvalues(const Matrix& a, bool hermitian_hint) {
    require_square(a, "eigenvalues");
    EigenSpectrum out;
    out.hermitian_flag = hermitian_hint;
    if (hermitian_hint) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(a);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("eigenvalues: self-adjoint solver failed to converge (max sweeps reached)");
        const auto& ev = es.eigenvalues();
        for (Eigen::Index i = ev.size(); i-- > 0;) out.values.emplace_back(ev(i), 0.0);
    } else {
        Eigen::ComplexEigenSolver<Matrix> es(a);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("eigenvalues: Schur iteration failed to converge (iteration cap hit)");
        const auto& ev = es.eigenvalues();
        for (Eigen::Index i = 0; i < ev.size(); ++i) out.values.push_back(ev(i));
    }
    return out;
}

/// Sorted (descending) real eigenvalues of a Hermitian matrix.
inline std::vector<double> hermitian_spectrum_desc(const Matrix& a) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("hermitian_spectrum_desc: eigensolver failed to converge");
    std::vector<double> vals(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::reverse(vals.begin(), vals.end());
    return vals;
}

/// tr(C U* A U). U must be unitary; C, A, U share one dimension.
inline Cplx c_value(const Matrix& c, const Matrix& a, const Matrix& u) {
    require_same_dim(c, a, "c_value");
    require_same_dim(c, u, "c_value");
    return (c * u.adjoint() * a * u).trace();
}

inline Matrix diag_matrix(const std::vector<Cplx>& entries) {
    Matrix m = Matrix::Zero(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

}  // namespace crange
