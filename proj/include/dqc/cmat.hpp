#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "dqc/errors.hpp"

namespace dqc {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;

inline constexpr Complex kImag{0.0, 1.0};

inline const CMat& identity2() {
    static const CMat m = CMat::Identity(2, 2);
    return m;
}

inline const CMat& sigma_x() {
    static const CMat m = (CMat(2, 2) << 0, 1, 1, 0).finished();
    return m;
}

inline const CMat& sigma_y() {
    static const CMat m = (CMat(2, 2) << 0, -kImag, kImag, 0).finished();
    return m;
}

inline const CMat& sigma_z() {
    static const CMat m = (CMat(2, 2) << 1, 0, 0, -1).finished();
    return m;
}

// pauli(0), pauli(1), pauli(2) = sigma_x, sigma_y, sigma_z.
inline const CMat& pauli(int a) {
    switch (a) {
        case 0: return sigma_x();
        case 1: return sigma_y();
        default: return sigma_z();
    }
}

// w . sigma for a (possibly complex) 3-vector of coefficients.
inline CMat pauli_dot(const CVec3& w) {
    return w(0) * sigma_x() + w(1) * sigma_y() + w(2) * sigma_z();
}

inline CMat pauli_dot(const Vec3& w) {
    return pauli_dot(CVec3(w(0), w(1), w(2)));
}

inline double max_abs(const CMat& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool all_finite(const CMat& m) {
    return m.allFinite();
}

inline bool is_hermitian(const CMat& m, double tol = 1e-10) {
    return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

inline CMat kron(const CMat& a, const CMat& b) {
    return Eigen::kroneckerProduct(a, b);
}

// Tensor product of many factors, leftmost factor first.
inline CMat kron_all(const std::vector<CMat>& factors) {
    CMat out = CMat::Identity(1, 1);
    for (const CMat& f : factors) out = kron(out, f);
    return out;
}

// Single-qubit operator embedded at tensor factor `pos` of an n-qubit register
// (factor 0 is leftmost).
inline CMat embed_qubit(const CMat& op, int pos, int n_qubits) {
    if (op.rows() != 2 || op.cols() != 2) throw DimensionMismatch("embed_qubit: operator must be 2x2");
    if (pos < 0 || pos >= n_qubits) throw DimensionMismatch("embed_qubit: factor index out of range");
    const Eigen::Index left = Eigen::Index(1) << pos;
    const Eigen::Index right = Eigen::Index(1) << (n_qubits - pos - 1);
    return kron(kron(CMat::Identity(left, left), op), CMat::Identity(right, right));
}

// Reduced matrix on subsystem `keep`, all other factors traced out.
inline CMat partial_trace(const CMat& m, const std::vector<Eigen::Index>& dims, int keep) {
    if (keep < 0 || std::size_t(keep) >= dims.size())
        throw DimensionMismatch("partial_trace: keep index out of range");
    Eigen::Index total = 1;
    for (Eigen::Index d : dims) {
        if (d < 1) throw DimensionMismatch("partial_trace: subsystem dimensions must be >= 1");
        total *= d;
    }
    if (m.rows() != total || m.cols() != total)
        throw DimensionMismatch("partial_trace: dims do not factor the matrix dimension");

    Eigen::Index before = 1, after = 1;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (int(i) < keep) before *= dims[i];
        if (int(i) > keep) after *= dims[i];
    }
    const Eigen::Index dk = dims[std::size_t(keep)];

    CMat out = CMat::Zero(dk, dk);
    for (Eigen::Index b = 0; b < before; ++b)
        for (Eigen::Index a = 0; a < after; ++a)
            for (Eigen::Index r = 0; r < dk; ++r)
                for (Eigen::Index c = 0; c < dk; ++c)
                    out(r, c) += m((b * dk + r) * after + a, (b * dk + c) * after + a);
    return out;
}

// Column-stacking vectorization; the convention used throughout is
// vec(A X B) = (B^T kron A) vec(X).
inline CVec vectorize(const CMat& m) {
    return Eigen::Map<const CVec>(m.data(), m.size());
}

inline CMat devectorize(const CVec& v, Eigen::Index d) {
    if (v.size() != d * d) throw DimensionMismatch("devectorize: vector length is not d*d");
    return Eigen::Map<const CMat>(v.data(), d, d);
}

}  // namespace dqc
