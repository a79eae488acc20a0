#include <catch2/catch_amalgamated.hpp>

#include "dqc/dissipation.hpp"
#include "dqc/lindblad.hpp"
#include "dqc/rng.hpp"

using namespace dqc;
using Catch::Approx;

namespace {

DissipativeMode random_mode(Rng& rng) {
    return {rng.uniform(0.0, M_PI), rng.uniform(0.0, 2.0 * M_PI), rng.uniform(-1.0, 1.0)};
}

// unit-strength dissipator of one mode, built through the qcore generator
SuperOp mode_dissipator(const DissipativeMode& mode) {
    const auto [l1, l2] = lindblad_ops(mode);
    return lindblad_superop(CMat::Zero(2, 2), {{1.0, l1}, {1.0, l2}});
}

}  // namespace

TEST_CASE("kets at the pole and the equator") {
    const auto [s0, p0] = kets(DissipativeMode(0.0, 0.0, 0.0));
    REQUIRE(std::abs(s0(0) - Complex(1.0)) < 1e-15);
    REQUIRE(std::abs(s0(1)) < 1e-15);
    REQUIRE(std::abs(p0(0)) < 1e-15);
    REQUIRE(std::abs(p0(1) - Complex(-1.0)) < 1e-15);

    const auto [se, pe] = kets(DissipativeMode(M_PI / 2.0, 0.0, 0.0));
    REQUIRE(std::abs(se(0) - Complex(1.0 / std::sqrt(2.0))) < 1e-15);
    REQUIRE(std::abs(se(1) - Complex(1.0 / std::sqrt(2.0))) < 1e-15);
}

TEST_CASE("kets are orthonormal for arbitrary modes") {
    Rng rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto [s, p] = kets(random_mode(rng));
        REQUIRE(std::abs(s.dot(p)) <= 1e-14);
        REQUIRE(s.norm() == Approx(1.0).margin(1e-14));
        REQUIRE(p.norm() == Approx(1.0).margin(1e-14));
    }
}

TEST_CASE("mode angles wrap instead of rejecting") {
    // theta beyond pi reflects; the kets must describe the same physical state
    DissipativeMode wrapped(M_PI + 0.4, 1.0, 0.5);
    REQUIRE(wrapped.theta == Approx(M_PI - 0.4));
    REQUIRE(wrapped.phi == Approx(1.0 + M_PI));
    DissipativeMode canonical(M_PI - 0.4, 1.0 + M_PI, 0.5);
    auto [sw, pw] = kets(wrapped);
    auto [sc, pc] = kets(canonical);
    REQUIRE(max_abs((sw * sw.adjoint()).eval() - (sc * sc.adjoint()).eval()) < 1e-14);

    DissipativeMode negative(-0.3, 0.25, 0.0);
    REQUIRE(negative.theta == Approx(0.3));
    REQUIRE_THROWS_AS(DissipativeMode(0.1, 0.1, 1.5), std::invalid_argument);
}

TEST_CASE("bloch frame at reference angles") {
    const auto [v_eq, vp_eq, vpp_eq] = bloch_frame(DissipativeMode(M_PI / 2.0, 0.0, 0.0));
    REQUIRE((v_eq - Vec3(1, 0, 0)).norm() < 1e-15);

    const auto [v0, vp0, vpp0] = bloch_frame(DissipativeMode(0.0, 0.0, 0.0));
    REQUIRE((vp0 - Vec3(-1, 0, 0)).norm() < 1e-15);
    REQUIRE((vpp0 - Vec3(0, 1, 0)).norm() < 1e-15);
}

TEST_CASE("bloch frame is an orthonormal triple with fixed handedness") {
    Rng rng(12);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto [v, vp, vpp] = bloch_frame(random_mode(rng));
        REQUIRE(std::abs(v.dot(vp)) <= 1e-12);
        REQUIRE(std::abs(v.dot(vpp)) <= 1e-12);
        REQUIRE(std::abs(vp.dot(vpp)) <= 1e-12);
        REQUIRE(v.norm() == Approx(1.0).margin(1e-13));
        REQUIRE(vp.norm() == Approx(1.0).margin(1e-13));
        REQUIRE(vpp.norm() == Approx(1.0).margin(1e-13));
        // the formulas fix v x v' = -v''
        REQUIRE((v.cross(vp) + vpp).norm() < 1e-12);
    }
}

TEST_CASE("lindblad operators at the asymmetry extremes") {
    DissipativeMode mode(1.1, 0.7, 1.0);
    const auto [l1, l2] = lindblad_ops(mode);
    REQUIRE(max_abs(l2) == 0.0);
    const auto [s, p] = kets(mode);
    REQUIRE(max_abs(l1 - (s * p.adjoint()).eval()) < 1e-15);

    const auto [m1, m2] = lindblad_ops(DissipativeMode(1.1, 0.7, 0.0));
    REQUIRE(m1.norm() == Approx(1.0 / std::sqrt(2.0)).margin(1e-14));
    REQUIRE(m2.norm() == Approx(1.0 / std::sqrt(2.0)).margin(1e-14));
}

TEST_CASE("psi0 is the stationary state of the mode dissipator") {
    Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        DissipativeMode mode = random_mode(rng);
        SteadyState ss = steady_state(mode_dissipator(mode));
        REQUIRE(max_abs(ss.rho.mat - eigensystem(mode).psi[0]) < 1e-10);
    }
}

TEST_CASE("eigensystem at mu = 1, theta = 0 has psi0 = |0><0|") {
    ModeEigensystem sys = eigensystem(DissipativeMode(0.0, 0.0, 1.0));
    CMat proj0 = CMat::Zero(2, 2);
    proj0(0, 0) = 1;
    REQUIRE(max_abs(sys.psi[0] - proj0) < 1e-15);
}

TEST_CASE("psi0 and phi3 are trace-orthogonal for any mu") {
    Rng rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        ModeEigensystem sys = eigensystem(random_mode(rng));
        REQUIRE(std::abs((sys.psi[0] * sys.phi_comp[3]).trace()) < 1e-14);
    }
}

TEST_CASE("dissipator eigen-relations and biorthonormality") {
    Rng rng(15);
    for (int trial = 0; trial < 1000; ++trial) {
        DissipativeMode mode = random_mode(rng);
        ModeEigensystem sys = eigensystem(mode);
        SuperOp d = mode_dissipator(mode);
        for (int k = 0; k < 4; ++k) {
            CVec residual =
                d.mat * vectorize(sys.psi[std::size_t(k)]) - sys.xi[std::size_t(k)] * vectorize(sys.psi[std::size_t(k)]);
            REQUIRE(residual.cwiseAbs().maxCoeff() <= 1e-12);
            for (int l = 0; l < 4; ++l) {
                const Complex tr = (sys.psi[std::size_t(l)] * sys.phi_comp[std::size_t(k)]).trace();
                REQUIRE(std::abs(tr - (k == l ? 1.0 : 0.0)) <= 1e-12);
            }
        }
        REQUIRE(sys.xi[0] == 0.0);
        REQUIRE(sys.xi[1] == -0.5);
        REQUIRE(sys.xi[2] == -0.5);
        REQUIRE(sys.xi[3] == -1.0);
    }
}

TEST_CASE("psi3 is the eigenvalue -1 eigen-operator") {
    Rng rng(16);
    for (int trial = 0; trial < 100; ++trial) {
        DissipativeMode mode = random_mode(rng);
        ModeEigensystem sys = eigensystem(mode);
        CVec image = mode_dissipator(mode).mat * vectorize(sys.psi[3]);
        REQUIRE(max_abs(devectorize(image, 2) + sys.psi[3]) <= 1e-12);
    }
}

TEST_CASE("psi0 equals the identity-plus-Bloch form") {
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        DissipativeMode mode = random_mode(rng);
        const auto [v, vp, vpp] = bloch_frame(mode);
        CMat expected = 0.5 * (identity2() + mode.mu * pauli_dot(v));
        REQUIRE(max_abs(eigensystem(mode).psi[0] - expected) <= 1e-12);
    }
}

TEST_CASE("psi0 is Hermitian, unit trace and positive") {
    Rng rng(18);
    for (int trial = 0; trial < 100; ++trial) {
        ModeEigensystem sys = eigensystem(random_mode(rng));
        DensityMatrix rho(sys.psi[0]);  // constructor enforces all three
        REQUIRE(rho.dim == 2);
    }
}
