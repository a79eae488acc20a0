#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <vector>

#include "dqc/central_spin.hpp"
#include "dqc/experiments.hpp"
#include "dqc/parallel.hpp"
#include "dqc/rng.hpp"

namespace dqc {

/// Learning-rate schedule: a constant rate, or cosine annealing from eta_max
/// down to eta_min across the epoch budget.
struct Schedule {
    enum class Kind { constant, cosine };

    Kind kind = Kind::constant;
    double eta = 0.05;
    double eta_max = 0.05;
    double eta_min = 0.001;
    int total_epochs = 1;

    static Schedule constant(double eta) {
        if (!(eta > 0)) throw std::invalid_argument("Schedule: eta must be positive");
        Schedule s;
        s.kind = Kind::constant;
        s.eta = eta;
        return s;
    }

    static Schedule cosine(double eta_max, double eta_min, int total_epochs) {
        if (!(eta_max >= eta_min) || !(eta_min > 0))
            throw std::invalid_argument("Schedule: need eta_max >= eta_min > 0");
        if (total_epochs < 1) throw std::invalid_argument("Schedule: total_epochs must be >= 1");
        Schedule s;
        s.kind = Kind::cosine;
        s.eta_max = eta_max;
        s.eta_min = eta_min;
        s.total_epochs = total_epochs;
        return s;
    }
};

inline double schedule_rate(const Schedule& s, int t) {
    if (s.kind == Schedule::Kind::constant) return s.eta;
    if (t < 0 || t > s.total_epochs)
        throw std::invalid_argument("schedule_rate: epoch outside [0, total_epochs]");
    return s.eta_min +
           0.5 * (s.eta_max - s.eta_min) * (1.0 + std::cos(M_PI * double(t) / double(s.total_epochs)));
}

/// Flattened trainable parameters: the 9N coupling entries (row-major per
/// auxiliary qubit), optionally followed by (theta_n, phi_n) pairs when the
/// dissipative modes are trained as well.
using ParamVector = std::vector<double>;

inline ParamVector pack_params(const ModelConfig& config, bool include_modes) {
    config.validate();
    ParamVector p;
    p.reserve(std::size_t(config.n_aux) * (include_modes ? 11 : 9));
    for (const auto& j : config.couplings)
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) p.push_back(j(r, c));
    if (include_modes)
        for (const auto& mode : config.modes) {
            p.push_back(mode.theta);
            p.push_back(mode.phi);
        }
    return p;
}

inline ModelConfig unpack_params(const ParamVector& p, const ModelConfig& proto,
                                 bool include_modes) {
    const std::size_t n = std::size_t(proto.n_aux);
    const std::size_t expected = 9 * n + (include_modes ? 2 * n : 0);
    if (p.size() != expected) throw DimensionMismatch("unpack_params: wrong parameter count");
    ModelConfig config = proto;
    std::size_t at = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) config.couplings[i](r, c) = p[at++];
    if (include_modes)
        for (std::size_t i = 0; i < n; ++i) {
            const double theta = p[at++];
            const double phi = p[at++];
            config.modes[i] = DissipativeMode(theta, phi, proto.modes[i].mu);
        }
    return config;
}

// Distance between the model's steady state and the target in observable
// space: sqrt(sum_a Tr(sigma_a (rho_S - target))^2). Equals the Euclidean
// distance between the two Bloch vectors.
inline double state_prep_loss(const ModelConfig& config, const DensityMatrix& target,
                              Route route = Route::closed) {
    if (target.dim != 2) throw DimensionMismatch("state_prep_loss: target must be a qubit state");
    const CMat diff = central_steady_state(config, route).rho.mat - target.mat;
    double sum = 0.0;
    for (int a = 0; a < 3; ++a) {
        const double tr = (pauli(a) * diff).trace().real();
        sum += tr * tr;
    }
    return std::sqrt(sum);
}

using Objective = std::function<double(const ParamVector&)>;

// Central finite differences, one coordinate pair per probe; probes of
// distinct coordinates run concurrently and are reduced in index order.
inline std::vector<double> grad_fd(const Objective& objective, const ParamVector& p, double h,
                                   int threads = 1) {
    if (!(h > 0)) throw std::invalid_argument("grad_fd: step must be positive");
    const int dim = int(p.size());
    std::vector<double> plus(static_cast<std::size_t>(dim)), minus(static_cast<std::size_t>(dim));
    parallel_for(dim, threads, [&](int i) {
        ParamVector probe = p;
        probe[std::size_t(i)] = p[std::size_t(i)] + h;
        plus[std::size_t(i)] = objective(probe);
        probe[std::size_t(i)] = p[std::size_t(i)] - h;
        minus[std::size_t(i)] = objective(probe);
    });
    std::vector<double> grad(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        if (!std::isfinite(plus[std::size_t(i)]) || !std::isfinite(minus[std::size_t(i)]))
            throw NonFiniteObjective("grad_fd: objective returned NaN/Inf at a probe point");
        grad[std::size_t(i)] = (plus[std::size_t(i)] - minus[std::size_t(i)]) / (2.0 * h);
    }
    return grad;
}

/// Loss/cost trace of one gradient-descent run plus the trained parameters.
struct TrainRecord {
    struct EpochRow {
        int epoch;
        double value;
        double eta;
    };
    std::vector<EpochRow> epochs;
    ParamVector final_params;
    double wall_seconds = 0.0;
};

namespace detail {

// The square-root loss is non-smooth at zero; below this the gradient is
// defined as zero and the step is skipped.
inline constexpr double kLossFloor = 1e-10;

// Reruns a solver step with the epoch attached to steady-state failures, so a
// degenerate configuration reports where training broke down.
template <class Fn>
auto at_epoch(int t, Fn&& fn) {
    try {
        return fn();
    } catch (const DegenerateSteadyState& e) {
        throw DegenerateSteadyState(std::string(e.what()) + " (epoch " + std::to_string(t) + ")");
    } catch (const NoSteadyState& e) {
        throw NoSteadyState(std::string(e.what()) + " (epoch " + std::to_string(t) + ")");
    }
}

inline TrainRecord descend(const Objective& objective, ParamVector p, int epochs,
                           const Schedule& schedule, double h, int threads, double stop_value,
                           bool skip_step_below_floor) {
    if (epochs < 1) throw std::invalid_argument("training: epochs must be >= 1");
    const auto start = std::chrono::steady_clock::now();
    TrainRecord record;
    bool stopped = false;
    for (int t = 0; t < epochs; ++t) {
        const double value = at_epoch(t, [&] { return objective(p); });
        if (!std::isfinite(value)) throw NonFiniteObjective("training: non-finite objective");
        const double eta = schedule_rate(schedule, t);
        record.epochs.push_back({t, value, eta});
        if (stop_value > 0 && value < stop_value) {
            stopped = true;
            break;
        }
        if (skip_step_below_floor && value < kLossFloor) continue;
        const std::vector<double> grad = at_epoch(t, [&] { return grad_fd(objective, p, h, threads); });
        for (std::size_t i = 0; i < p.size(); ++i) p[i] -= eta * grad[i];
    }
    if (!stopped) {
        const double value = at_epoch(epochs, [&] { return objective(p); });
        if (!std::isfinite(value)) throw NonFiniteObjective("training: non-finite objective");
        record.epochs.push_back({epochs, value, schedule_rate(schedule, epochs)});
    }
    record.final_params = std::move(p);
    record.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
}

}  // namespace detail

/// Full-batch gradient descent on all couplings and mode angles to drive the
/// central steady state toward `target`. Stops early once the loss drops below
/// `stop_loss` (pass 0 to always run the whole budget).
inline TrainRecord train_state_prep(const DensityMatrix& target, const ModelConfig& init,
                                    int epochs, const Schedule& schedule, double h,
                                    int threads = 1, double stop_loss = 0.0) {
    const Objective objective = [&](const ParamVector& p) {
        return state_prep_loss(unpack_params(p, init, true), target);
    };
    return detail::descend(objective, pack_params(init, true), epochs, schedule, h, threads,
                           stop_loss, /*skip_step_below_floor=*/true);
}

inline double sigmoid(double z, double k) {
    return 1.0 / (1.0 + std::exp(-k * z));
}

struct Prediction {
    double sigma_z;  // <sigma_z> of the encoded steady state
    double prob;     // sigmoid(k <sigma_z>)
    int label;       // 1 iff <sigma_z> >= 0
};

// Encodes the sample into the dissipative modes (theta_n from the features,
// phi_n = 0), relaxes to the steady state, and reads out <sigma_z>.
inline Prediction predict(const ModelConfig& config, const LabeledSample& sample, double k,
                          Route route = Route::closed) {
    if (config.n_aux != 2)
        throw DimensionMismatch("predict: 2-D samples require exactly two auxiliary qubits");
    ModelConfig encoded = config;
    encoded.modes[0] = DissipativeMode(sample.theta1, 0.0, config.modes[0].mu);
    encoded.modes[1] = DissipativeMode(sample.theta2, 0.0, config.modes[1].mu);
    const double sz = bloch_vector(central_steady_state(encoded, route).rho.mat)(2);
    const double prob = sigmoid(sz, k);
    return {sz, prob, sz >= 0.0 ? 1 : 0};
}

// Mean binary cross-entropy of the encoded predictions over the dataset.
// Probabilities are clamped to [eps, 1-eps] before the logs.
inline double cross_entropy(const ModelConfig& config, const Dataset& data, double k,
                            int threads = 1) {
    if (data.empty()) throw EmptyDataset("cross_entropy: empty dataset");
    constexpr double eps = 1e-12;
    std::vector<double> costs(data.size());
    parallel_for(int(data.size()), threads, [&](int i) {
        const LabeledSample& s = data[std::size_t(i)];
        if (s.label != 0 && s.label != 1)
            throw std::invalid_argument("cross_entropy: labels must be 0 or 1");
        double f = predict(config, s, k).prob;
        f = std::min(std::max(f, eps), 1.0 - eps);
        costs[std::size_t(i)] = s.label == 1 ? -std::log(f) : -std::log(1.0 - f);
    });
    double total = 0.0;
    for (double c : costs) total += c;
    return total / double(data.size());
}

/// Full-batch gradient descent on the coupling entries only; the dissipative
/// modes carry the data and are not trained.
inline TrainRecord train_classifier(const Dataset& data, const ModelConfig& init, int epochs,
                                    const Schedule& schedule, double h, double k,
                                    int threads = 1) {
    if (data.empty()) throw EmptyDataset("train_classifier: empty dataset");
    const Objective objective = [&](const ParamVector& p) {
        // gradient probes already run in parallel, so the per-sample loop is serial
        return cross_entropy(unpack_params(p, init, false), data, k, 1);
    };
    return detail::descend(objective, pack_params(init, false), epochs, schedule, h, threads,
                           /*stop_value=*/0.0, /*skip_step_below_floor=*/false);
}

// Seeded initialization: coupling entries i.i.d. normal with the given spread,
// drawn row-major per auxiliary qubit.
inline std::vector<CouplingMatrix> random_couplings(int n_aux, Rng& rng, double stddev = 0.5) {
    std::vector<CouplingMatrix> out(static_cast<std::size_t>(n_aux));
    for (auto& j : out)
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) j(r, c) = rng.normal(0.0, stddev);
    return out;
}

// Fresh config for state preparation: random couplings, modes at the equator
// (theta = pi/2, phi = 0).
inline ModelConfig state_prep_init(int n_aux, double gamma, double mu, std::uint64_t seed) {
    Rng rng(seed);
    ModelConfig config;
    config.n_aux = n_aux;
    config.gamma = gamma;
    config.couplings = random_couplings(n_aux, rng);
    config.modes.assign(std::size_t(n_aux), DissipativeMode(M_PI / 2.0, 0.0, mu));
    return config;
}

// Fresh config for classification; mode angles are placeholders that the
// encoding overwrites per sample.
inline ModelConfig classifier_init(int n_aux, double gamma, double mu, std::uint64_t seed) {
    return state_prep_init(n_aux, gamma, mu, seed);
}

}  // namespace dqc
