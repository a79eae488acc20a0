#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "dqc/cmat.hpp"

namespace dqc {

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;

// Threshold separating "zero" generator eigenvalues from decaying ones; a
// second eigenvalue below it means the steady state is not unique.
inline constexpr double kSpectralTol = 1e-8;

/// Hermitian, unit-trace, positive-semidefinite matrix on a power-of-two
/// dimensional Hilbert space. The constructor enforces the invariants.
struct DensityMatrix {
    Eigen::Index dim;
    CMat mat;

    explicit DensityMatrix(CMat m) : dim(m.rows()), mat(std::move(m)) {
        if (dim < 1 || mat.cols() != dim || (dim & (dim - 1)) != 0)
            throw DimensionMismatch("DensityMatrix: dimension must be a power of two");
        if (!all_finite(mat)) throw std::invalid_argument("DensityMatrix: non-finite entries");
        if (!is_hermitian(mat, kHermitianTol))
            throw std::invalid_argument("DensityMatrix: not Hermitian");
        if (std::abs(mat.trace() - Complex(1.0)) > kTraceTol)
            throw std::invalid_argument("DensityMatrix: trace is not 1");
        Eigen::SelfAdjointEigenSolver<CMat> es(mat, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -kPsdTol)
            throw std::invalid_argument("DensityMatrix: not positive semidefinite");
    }
};

// Removes solver noise from a candidate state: divide out the (possibly
// complex) trace, then symmetrize. Division first also cancels the arbitrary
// global phase of an eigenvector.
inline DensityMatrix hermitize_normalize(const CMat& m) {
    const Complex tr = m.trace();
    if (std::abs(tr) < 1e-12)
        throw NoSteadyState("candidate steady state has vanishing trace");
    CMat scaled = m / tr;
    CMat herm = 0.5 * (scaled + scaled.adjoint());
    herm /= herm.trace().real();
    return DensityMatrix(herm);
}

/// Superoperator on a d-dimensional system, stored as a d^2 x d^2 matrix acting
/// on column-stacked vectorized operators.
struct SuperOp {
    Eigen::Index dim;
    CMat mat;
};

using JumpList = std::vector<std::pair<double, CMat>>;

// Generator of d rho/dt = -i[H, rho] + sum_k rate_k (L rho L+ - 1/2 {L+L, rho}).
// Under column stacking the dissipator of one channel reads
// conj(L) kron L - 1/2 (I kron L+L + (L+L)^T kron I).
inline SuperOp lindblad_superop(const CMat& h, const JumpList& jumps) {
    if (h.rows() != h.cols()) throw DimensionMismatch("lindblad_superop: H must be square");
    if (!is_hermitian(h, kHermitianTol))
        throw NonHermitianHamiltonian("lindblad_superop: H is not Hermitian");
    const Eigen::Index d = h.rows();
    const CMat id = CMat::Identity(d, d);

    CMat gen = -kImag * (kron(id, h) - kron(h.transpose(), id));
    for (const auto& [rate, op] : jumps) {
        if (rate < 0) throw NegativeRate("lindblad_superop: negative jump rate");
        if (op.rows() != d || op.cols() != d)
            throw DimensionMismatch("lindblad_superop: jump operator dimension mismatch");
        const CMat ldl = op.adjoint() * op;
        gen += rate * (kron(op.conjugate(), op) -
                       0.5 * (kron(id, ldl) + kron(ldl.transpose(), id)));
    }
    return SuperOp{d, std::move(gen)};
}

struct SteadyState {
    DensityMatrix rho;
    double gap;  // |Re| of the second-smallest eigenvalue by modulus
};

/// Unique stationary state of a Lindblad generator via dense eigendecomposition.
/// Throws NoSteadyState when no eigenvalue sits at zero (within kSpectralTol)
/// and DegenerateSteadyState when more than one does.
inline SteadyState steady_state(const SuperOp& g) {
    Eigen::ComplexEigenSolver<CMat> es(g.mat);
    if (es.info() != Eigen::Success)
        throw NoSteadyState("steady_state: eigendecomposition failed");

    const Eigen::Index n = g.mat.rows();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) order[std::size_t(i)] = i;
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return std::abs(es.eigenvalues()(a)) < std::abs(es.eigenvalues()(b));
    });

    const Complex lambda0 = es.eigenvalues()(order[0]);
    if (std::abs(lambda0) > kSpectralTol)
        throw NoSteadyState("steady_state: no eigenvalue within tolerance of zero");
    if (n > 1 && std::abs(es.eigenvalues()(order[1])) < kSpectralTol)
        throw DegenerateSteadyState("steady_state: zero eigenvalue is not unique");

    const double gap = n > 1 ? std::abs(es.eigenvalues()(order[1]).real()) : 0.0;
    DensityMatrix rho = hermitize_normalize(devectorize(es.eigenvectors().col(order[0]), g.dim));
    return SteadyState{std::move(rho), gap};
}

/// rho(t) = devec(exp(g t) vec(rho0)) by scaling-and-squaring matrix exponential.
inline DensityMatrix propagate(const SuperOp& g, const DensityMatrix& rho0, double t) {
    if (t < 0) throw std::invalid_argument("propagate: t must be >= 0");
    if (rho0.dim != g.dim) throw DimensionMismatch("propagate: state/generator dimension mismatch");
    const CMat prop = (g.mat * t).exp();
    return hermitize_normalize(devectorize(prop * vectorize(rho0.mat), g.dim));
}

// 1/2 ||a - b||_1 for Hermitian a, b.
inline double trace_distance(const CMat& a, const CMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("trace_distance: shape mismatch");
    CMat diff = a - b;
    diff = 0.5 * (diff + diff.adjoint());
    Eigen::SelfAdjointEigenSolver<CMat> es(diff, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

inline double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    return trace_distance(a.mat, b.mat);
}

// (x, y, z) expectation values of a qubit state.
inline Vec3 bloch_vector(const CMat& rho) {
    if (rho.rows() != 2 || rho.cols() != 2) throw DimensionMismatch("bloch_vector: need a 2x2 state");
    return Vec3((rho * sigma_x()).trace().real(),
                (rho * sigma_y()).trace().real(),
                (rho * sigma_z()).trace().real());
}

inline DensityMatrix density_from_bloch(const Vec3& r) {
    if (r.norm() > 1.0 + 1e-12)
        throw std::invalid_argument("density_from_bloch: Bloch vector must have norm <= 1");
    return DensityMatrix(0.5 * (identity2() + pauli_dot(r)));
}

}  // namespace dqc
