#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dqc/dissipation.hpp"
#include "dqc/lindblad.hpp"

namespace dqc {

/// Real 3x3 exchange couplings between the central qubit and one auxiliary
/// qubit; reality keeps the interaction Hermitian.
using CouplingMatrix = Eigen::Matrix3d;

struct ModelConfig {
    int n_aux = 0;
    std::vector<CouplingMatrix> couplings;
    std::vector<DissipativeMode> modes;
    double gamma = 100.0;

    void validate() const {
        if (n_aux < 1) throw std::invalid_argument("ModelConfig: need at least one auxiliary qubit");
        if (int(couplings.size()) != n_aux || int(modes.size()) != n_aux)
            throw std::invalid_argument("ModelConfig: couplings/modes must have length n_aux");
        if (!(gamma > 0)) throw std::invalid_argument("ModelConfig: gamma must be positive");
        for (const auto& j : couplings)
            if (!j.allFinite()) throw std::invalid_argument("ModelConfig: non-finite coupling entry");
    }
};

// Tensor ordering is fixed project-wide: the central qubit is factor 0
// (leftmost), auxiliary qubit n is factor n+1.
inline std::vector<Eigen::Index> qubit_dims(int n_aux) {
    return std::vector<Eigen::Index>(std::size_t(n_aux) + 1, 2);
}

// H = sum_n vec(sigma^0) . (J_n vec(sigma^n)) on the (N+1)-qubit space.
inline CMat build_hamiltonian(const ModelConfig& config) {
    config.validate();
    const int nq = config.n_aux + 1;
    const Eigen::Index dim = Eigen::Index(1) << nq;
    CMat h = CMat::Zero(dim, dim);
    for (int n = 0; n < config.n_aux; ++n)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                h += config.couplings[std::size_t(n)](a, b) *
                     (embed_qubit(pauli(a), 0, nq) * embed_qubit(pauli(b), n + 1, nq));
    return h;
}

/// Generator of the full model: -i[H, .] + Gamma sum_n sum_alpha D_{L_n^alpha},
/// with each per-mode jump embedded on its auxiliary qubit. Dense dimension is
/// 4^(N+1), so N is capped.
inline SuperOp build_full_liouvillian(const ModelConfig& config, int max_aux = 4) {
    config.validate();
    if (config.n_aux > max_aux)
        throw ModelTooLarge("build_full_liouvillian: full solver capped at N=" +
                            std::to_string(max_aux));
    const int nq = config.n_aux + 1;
    JumpList jumps;
    for (int n = 0; n < config.n_aux; ++n) {
        const auto [l1, l2] = lindblad_ops(config.modes[std::size_t(n)]);
        jumps.emplace_back(config.gamma, embed_qubit(l1, n + 1, nq));
        jumps.emplace_back(config.gamma, embed_qubit(l2, n + 1, nq));
    }
    return lindblad_superop(build_hamiltonian(config), jumps);
}

// Closed-form central-qubit operators attached to the four eigen-indices of
// auxiliary qubit n:
//   g0 = mu (J v) . sigma,   g1 = (J v') . sigma - i (J v'') . sigma,
//   g2 = g1+,                g3 = 2 (J v) . sigma.
inline std::array<CMat, 4> g_operators_closed(const ModelConfig& config, int n) {
    config.validate();
    if (n < 0 || n >= config.n_aux) throw DimensionMismatch("g_operators_closed: bad auxiliary index");
    const auto& j = config.couplings[std::size_t(n)];
    const auto [v, vp, vpp] = bloch_frame(config.modes[std::size_t(n)]);
    const Vec3 jv = j * v, jvp = j * vp, jvpp = j * vpp;
    const CMat g1 = pauli_dot(jvp) - kImag * pauli_dot(jvpp);
    return {config.modes[std::size_t(n)].mu * pauli_dot(jv), g1, g1.adjoint().eval(),
            2.0 * pauli_dot(jv)};
}

/// Per-auxiliary eigen-index assignment (k_n in 0..3); the all-zero index is
/// the stationary sector.
using MultiIndex = std::vector<int>;

namespace detail {

inline bool is_zero_index(const MultiIndex& k) {
    for (int v : k)
        if (v != 0) return false;
    return true;
}

// All 4^N - 1 indices with at least one nonzero digit, i.e. Re(Xi) < 0.
inline std::vector<MultiIndex> retained_indices(int n_aux) {
    std::vector<MultiIndex> out;
    const std::uint64_t total = std::uint64_t(1) << (2 * n_aux);
    for (std::uint64_t code = 1; code < total; ++code) {
        MultiIndex k(static_cast<std::size_t>(n_aux));
        for (int n = 0; n < n_aux; ++n) k[std::size_t(n)] = int((code >> (2 * n)) & 3);
        out.push_back(std::move(k));
    }
    return out;
}

// Tr(A B) without forming the product.
inline Complex trace_of_product(const CMat& a, const CMat& b) {
    return a.cwiseProduct(b.transpose()).sum();
}

}  // namespace detail

// Literal evaluation of g_K = Tr_{central-complement}((I (x) Psi_K) H). By the
// locality of H this vanishes whenever two or more digits of K are nonzero.
inline CMat g_operators_general(const ModelConfig& config, const MultiIndex& k) {
    config.validate();
    if (int(k.size()) != config.n_aux)
        throw DimensionMismatch("g_operators_general: multi-index length must be n_aux");
    std::vector<CMat> factors{identity2()};
    for (int n = 0; n < config.n_aux; ++n) {
        const int kn = k[std::size_t(n)];
        if (kn < 0 || kn > 3)
            throw std::invalid_argument("g_operators_general: index digits must be in 0..3");
        factors.push_back(eigensystem(config.modes[std::size_t(n)]).psi[std::size_t(kn)]);
    }
    const CMat m = kron_all(factors) * build_hamiltonian(config);
    return partial_trace(m, qubit_dims(config.n_aux), 0);
}

/// Coefficient data of the elimination: over the retained indices (Re Xi < 0),
/// C = Tr(Phi_K+ Phi_K' Psi_0), Y = -C / Xi*, A = Y + Y*, B = (Y - Y*) / 2i,
/// plus the g operator of every retained index.
struct CoefficientTables {
    std::vector<MultiIndex> indices;
    Eigen::VectorXd xi;          // total eigenvalue of each retained index
    CMat c_mat, y_mat, a_mat, b_mat;
    std::vector<CMat> g_ops;
};

inline CoefficientTables coefficient_tables(const ModelConfig& config) {
    config.validate();
    const int n_aux = config.n_aux;
    std::vector<ModeEigensystem> systems;
    for (int n = 0; n < n_aux; ++n) systems.push_back(eigensystem(config.modes[std::size_t(n)]));

    CoefficientTables t;
    t.indices = detail::retained_indices(n_aux);
    const Eigen::Index m = Eigen::Index(t.indices.size());

    CMat psi0 = CMat::Identity(1, 1);
    for (int n = 0; n < n_aux; ++n) psi0 = kron(psi0, systems[std::size_t(n)].psi[0]).eval();

    std::vector<CMat> phi_ops;
    t.xi.resize(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const MultiIndex& k = t.indices[std::size_t(i)];
        std::vector<CMat> factors;
        double xi = 0.0;
        for (int n = 0; n < n_aux; ++n) {
            const auto& sys = systems[std::size_t(n)];
            factors.push_back(sys.phi_comp[std::size_t(k[std::size_t(n)])]);
            xi += sys.xi[std::size_t(k[std::size_t(n)])];
        }
        phi_ops.push_back(kron_all(factors));
        t.xi(i) = xi;
        t.g_ops.push_back(g_operators_general(config, k));
    }

    t.c_mat.resize(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const CMat phi_i_dag = phi_ops[std::size_t(i)].adjoint();
        for (Eigen::Index jj = 0; jj < m; ++jj)
            t.c_mat(i, jj) = detail::trace_of_product(phi_i_dag, phi_ops[std::size_t(jj)] * psi0);
    }

    t.y_mat.resize(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        t.y_mat.row(i) = -t.c_mat.row(i) / std::conj(Complex(t.xi(i)));
    t.a_mat = t.y_mat + t.y_mat.conjugate();
    t.b_mat = (t.y_mat - t.y_mat.conjugate()) / (2.0 * kImag);
    return t;
}

enum class Route { closed, general };

/// Effective single-qubit generator after eliminating the auxiliary qubits:
/// drift h_d, jump channels with their rates, the assembled superoperator
/// -i[h_d, .] + (1/Gamma) * dissipator, and the second-order Hamiltonian
/// correction h_a (identically zero for this model).
struct EffectiveGenerator {
    CMat h_d;
    JumpList channels;  // rates as produced by the elimination, before the 1/Gamma weight
    SuperOp superop;
    CMat h_a;
};

namespace detail {

inline constexpr double kRateCut = 1e-14;

inline EffectiveGenerator effective_closed(const ModelConfig& config) {
    EffectiveGenerator gen;
    gen.h_d = CMat::Zero(2, 2);
    for (int n = 0; n < config.n_aux; ++n) {
        const auto g = g_operators_closed(config, n);
        const double mu = config.modes[std::size_t(n)].mu;
        gen.h_d += g[0];
        const std::array<std::pair<double, const CMat*>, 3> parts{
            std::pair<double, const CMat*>{2.0 * (1.0 + mu), &g[1]},
            std::pair<double, const CMat*>{2.0 * (1.0 - mu), &g[2]},
            std::pair<double, const CMat*>{0.5 * (1.0 - mu * mu), &g[3]}};
        for (const auto& [rate, op] : parts)
            if (rate > kRateCut) gen.channels.emplace_back(rate, *op);
    }
    JumpList weighted;
    for (const auto& [rate, op] : gen.channels) weighted.emplace_back(rate / config.gamma, op);
    gen.superop = lindblad_superop(gen.h_d, weighted);
    gen.h_a = CMat::Zero(2, 2);
    return gen;
}

inline EffectiveGenerator effective_general(const ModelConfig& config) {
    const CoefficientTables t = coefficient_tables(config);
    const Eigen::Index m = Eigen::Index(t.indices.size());

    EffectiveGenerator gen;
    gen.h_d = g_operators_general(config, MultiIndex(std::size_t(config.n_aux), 0));

    gen.h_a = CMat::Zero(2, 2);
    CMat dissipator = CMat::Zero(4, 4);
    const CMat id = identity2();
    for (Eigen::Index i = 0; i < m; ++i) {
        const CMat gi_dag = t.g_ops[std::size_t(i)].adjoint();
        for (Eigen::Index jj = 0; jj < m; ++jj) {
            const CMat& gj = t.g_ops[std::size_t(jj)];
            const CMat gdg = gi_dag * gj;
            gen.h_a += t.b_mat(i, jj) * gdg;
            dissipator += t.a_mat(i, jj) *
                          (kron(t.g_ops[std::size_t(i)].conjugate(), gj) -
                           0.5 * (kron(id, gdg) + kron(gdg.transpose(), id)));
        }
        const double rate = t.a_mat(i, i).real();
        if (rate > kRateCut && max_abs(t.g_ops[std::size_t(i)]) > 1e-12)
            gen.channels.emplace_back(rate, t.g_ops[std::size_t(i)]);
    }
    if (max_abs(gen.h_a) > 1e-10)
        throw std::runtime_error("effective_generator: second-order Hamiltonian correction is not zero");

    const CMat comm = -kImag * (kron(id, gen.h_d) - kron(gen.h_d.transpose(), id));
    gen.superop = SuperOp{2, comm + dissipator / config.gamma};
    return gen;
}

}  // namespace detail

inline EffectiveGenerator effective_generator(const ModelConfig& config, Route route) {
    config.validate();
    return route == Route::closed ? detail::effective_closed(config)
                                  : detail::effective_general(config);
}

/// Builds both routes, requires them to agree entrywise, and returns the
/// closed-route generator carrying the general route's measured h_a.
inline EffectiveGenerator effective_generator_checked(const ModelConfig& config,
                                                      double tol = 1e-8) {
    EffectiveGenerator closed = effective_generator(config, Route::closed);
    const EffectiveGenerator general = effective_generator(config, Route::general);
    const double mismatch = max_abs(closed.superop.mat - general.superop.mat);
    if (mismatch > tol)
        throw RouteMismatch("effective generator routes disagree by " + std::to_string(mismatch));
    closed.h_a = general.h_a;
    return closed;
}

inline SteadyState central_steady_state(const ModelConfig& config, Route route = Route::closed) {
    return steady_state(effective_generator(config, route).superop);
}

/// One row of the strong-dissipation validation: how far the reduced steady
/// state of the full model sits from the effective one at a given Gamma, and
/// how far the auxiliary marginals sit from their stationary psi0.
struct GammaValidation {
    double gamma;
    double central_distance;
    double aux_distance;  // worst auxiliary marginal
};

inline std::vector<GammaValidation> validate_effective(const ModelConfig& config,
                                                       const std::vector<double>& gammas,
                                                       int max_aux = 4) {
    config.validate();
    std::vector<GammaValidation> rows;
    for (double gamma : gammas) {
        ModelConfig cfg = config;
        cfg.gamma = gamma;
        const SteadyState full = steady_state(build_full_liouvillian(cfg, max_aux));
        const CMat central = partial_trace(full.rho.mat, qubit_dims(cfg.n_aux), 0);
        const SteadyState eff = steady_state(effective_generator_checked(cfg).superop);

        double aux_dist = 0.0;
        for (int n = 0; n < cfg.n_aux; ++n) {
            const CMat marginal = partial_trace(full.rho.mat, qubit_dims(cfg.n_aux), n + 1);
            const CMat psi0 = eigensystem(cfg.modes[std::size_t(n)]).psi[0];
            aux_dist = std::max(aux_dist, trace_distance(marginal, psi0));
        }
        rows.push_back({gamma, trace_distance(central, eff.rho.mat), aux_dist});
    }
    return rows;
}

}  // namespace dqc
