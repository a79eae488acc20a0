#pragma once

#include <array>
#include <cmath>
#include <utility>

#include "dqc/cmat.hpp"

namespace dqc {

namespace detail {
inline double wrap_2pi(double x) {
    x = std::fmod(x, 2.0 * M_PI);
    if (x < 0) x += 2.0 * M_PI;
    return x;
}
}  // namespace detail

/// One engineered dissipative mode acting on an auxiliary qubit: a direction
/// (theta, phi) on the Bloch sphere plus the pumping asymmetry mu in [-1, 1].
/// Angles outside the canonical ranges are wrapped, not rejected, because the
/// parameterization is periodic and training steps may cross the boundaries:
/// (theta, phi) and (2 pi - theta, phi + pi) describe the same mode.
struct DissipativeMode {
    double theta;  // [0, pi]
    double phi;    // [0, 2 pi)
    double mu;     // [-1, 1]

    DissipativeMode(double theta_in, double phi_in, double mu_in)
        : theta(detail::wrap_2pi(theta_in)), phi(detail::wrap_2pi(phi_in)), mu(mu_in) {
        if (theta > M_PI) {
            theta = 2.0 * M_PI - theta;
            phi = detail::wrap_2pi(phi + M_PI);
        }
        if (!(mu >= -1.0 && mu <= 1.0))
            throw std::invalid_argument("DissipativeMode: mu must lie in [-1, 1]");
    }
};

// |s> and the orthogonal |s_perp> of a mode.
inline std::pair<CVec, CVec> kets(const DissipativeMode& mode) {
    const double c = std::cos(0.5 * mode.theta);
    const double s = std::sin(0.5 * mode.theta);
    const Complex em = std::exp(-kImag * (0.5 * mode.phi));
    const Complex ep = std::exp(kImag * (0.5 * mode.phi));
    CVec ket_s(2), ket_perp(2);
    ket_s << c * em, s * ep;
    ket_perp << s * em, -c * ep;
    return {ket_s, ket_perp};
}

// Orthonormal triple (v, v', v''): v is the Bloch vector of |s><s|,
// v' = v(pi/2 - theta, phi + pi), v'' = v(pi/2, phi + pi/2).
inline std::array<Vec3, 3> bloch_frame(const DissipativeMode& mode) {
    const double st = std::sin(mode.theta), ct = std::cos(mode.theta);
    const double cp = std::cos(mode.phi), sp = std::sin(mode.phi);
    const Vec3 v(st * cp, st * sp, ct);
    const Vec3 vp(-ct * cp, -ct * sp, st);
    const Vec3 vpp(-sp, cp, 0.0);
    return {v, vp, vpp};
}

// The two jump operators, already carrying their weights:
// L1 = sqrt((1+mu)/2) |s><s_perp| and L2 = sqrt((1-mu)/2) |s_perp><s|.
// Oriented so that psi0 of the eigensystem below is the stationary state
// (L1 pumps |s_perp> into |s>).
inline std::pair<CMat, CMat> lindblad_ops(const DissipativeMode& mode) {
    const auto [ket_s, ket_perp] = kets(mode);
    const CMat raise = ket_s * ket_perp.adjoint();
    const CMat lower = ket_perp * ket_s.adjoint();
    return {std::sqrt(0.5 * (1.0 + mode.mu)) * raise,
            std::sqrt(0.5 * (1.0 - mode.mu)) * lower};
}

/// Spectral data of the unit-strength single-qubit dissipator of a mode:
/// eigen-operators psi_k with eigenvalues xi = (0, -1/2, -1/2, -1) and the
/// complementary basis phi_k with Tr(psi_l phi_k) = delta_lk.
struct ModeEigensystem {
    std::array<CMat, 4> psi;
    std::array<CMat, 4> phi_comp;
    std::array<double, 4> xi;
};

inline ModeEigensystem eigensystem(const DissipativeMode& mode) {
    const auto [ket_s, ket_perp] = kets(mode);
    const CMat p = ket_s * ket_s.adjoint();        // |s><s|
    const CMat q = ket_perp * ket_perp.adjoint();  // |s_perp><s_perp|
    const CMat up = ket_s * ket_perp.adjoint();
    const CMat down = ket_perp * ket_s.adjoint();
    const double wp = 0.5 * (1.0 + mode.mu);
    const double wm = 0.5 * (1.0 - mode.mu);

    ModeEigensystem sys;
    sys.psi = {wp * p + wm * q, up, down, p - q};
    sys.phi_comp = {identity2(), down, up, wm * p - wp * q};
    sys.xi = {0.0, -0.5, -0.5, -1.0};
    return sys;
}

}  // namespace dqc
