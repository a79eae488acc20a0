#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dqc/svg.hpp"
#include "dqc/training.hpp"

namespace dqc::cli {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Run configuration: a flat key = value file; one file plus the seed fully
// determines a run. Unknown and duplicate keys are rejected.
// ---------------------------------------------------------------------------

struct RunConfig {
    std::string kind;  // datagen | prepare | train | eval | validate
    int n_aux = 2;
    double gamma = 100.0;
    double mu = 1.0;
    double k = 10.0;
    int epochs = -1;          // -1 = per-kind default (500 prepare, 400 train)
    std::string schedule;     // "" = per-kind default (constant prepare, cosine train)
    double eta = 0.05;
    double eta_max = 0.05;
    double eta_min = 0.001;
    double fd_step = 1e-4;
    std::uint64_t seed = 1;
    double loss_threshold = 1e-2;
    std::string target;
    std::string boundary;
    int n_samples = 200;
    std::string train_data;
    std::string eval_data;
    std::string model_path;
    std::vector<double> gammas = {50.0, 100.0, 1000.0};
    std::string out_dir = ".";
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    double out = 0;
    try {
        out = std::stod(v, &used);
    } catch (...) {
        throw std::invalid_argument("config: key '" + key + "' is not a number: '" + v + "'");
    }
    if (used != v.size())
        throw std::invalid_argument("config: key '" + key + "' has trailing characters: '" + v + "'");
    return out;
}

inline long long parse_int(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    long long out = 0;
    try {
        out = std::stoll(v, &used);
    } catch (...) {
        throw std::invalid_argument("config: key '" + key + "' is not an integer: '" + v + "'");
    }
    if (used != v.size())
        throw std::invalid_argument("config: key '" + key + "' has trailing characters: '" + v + "'");
    return out;
}

inline std::vector<double> parse_double_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
    if (out.empty()) throw std::invalid_argument("config: key '" + key + "' is an empty list");
    return out;
}

}  // namespace detail

inline RunConfig parse_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");

    static const std::set<std::string> known = {
        "task.kind",        "model.n_aux",   "model.gamma",     "model.mu",
        "model.k",          "train.epochs",  "train.schedule",  "train.eta",
        "train.eta_max",    "train.eta_min", "train.fd_step",   "train.seed",
        "train.loss_threshold", "task.target", "task.boundary", "task.n_samples",
        "task.train_data",  "task.eval_data", "task.model",     "task.gammas",
        "out.dir"};

    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected 'key = value'");
        const std::string key = detail::trim(t.substr(0, eq));
        const std::string value = detail::trim(t.substr(eq + 1));
        if (!known.count(key))
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": unknown key '" +
                                        key + "'");
        if (kv.count(key))
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": duplicate key '" +
                                        key + "'");
        kv[key] = value;
    }

    RunConfig c;
    auto take = [&](const char* key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        return it->second;
    };
    if (auto v = take("task.kind")) c.kind = *v;
    if (auto v = take("model.n_aux")) c.n_aux = int(detail::parse_int("model.n_aux", *v));
    if (auto v = take("model.gamma")) c.gamma = detail::parse_double("model.gamma", *v);
    if (auto v = take("model.mu")) c.mu = detail::parse_double("model.mu", *v);
    if (auto v = take("model.k")) c.k = detail::parse_double("model.k", *v);
    if (auto v = take("train.epochs")) c.epochs = int(detail::parse_int("train.epochs", *v));
    if (auto v = take("train.schedule")) c.schedule = *v;
    if (auto v = take("train.eta")) c.eta = detail::parse_double("train.eta", *v);
    if (auto v = take("train.eta_max")) c.eta_max = detail::parse_double("train.eta_max", *v);
    if (auto v = take("train.eta_min")) c.eta_min = detail::parse_double("train.eta_min", *v);
    if (auto v = take("train.fd_step")) c.fd_step = detail::parse_double("train.fd_step", *v);
    if (auto v = take("train.seed"))
        c.seed = std::uint64_t(detail::parse_int("train.seed", *v));
    if (auto v = take("train.loss_threshold"))
        c.loss_threshold = detail::parse_double("train.loss_threshold", *v);
    if (auto v = take("task.target")) c.target = *v;
    if (auto v = take("task.boundary")) c.boundary = *v;
    if (auto v = take("task.n_samples")) c.n_samples = int(detail::parse_int("task.n_samples", *v));
    if (auto v = take("task.train_data")) c.train_data = *v;
    if (auto v = take("task.eval_data")) c.eval_data = *v;
    if (auto v = take("task.model")) c.model_path = *v;
    if (auto v = take("task.gammas")) c.gammas = detail::parse_double_list("task.gammas", *v);
    if (auto v = take("out.dir")) c.out_dir = *v;

    if (c.kind.empty()) throw std::invalid_argument("config: task.kind is required");
    if (c.kind != "datagen" && c.kind != "prepare" && c.kind != "train" && c.kind != "eval" &&
        c.kind != "validate")
        throw std::invalid_argument("config: unknown task.kind '" + c.kind + "'");
    if (c.n_aux < 1) throw std::invalid_argument("config: model.n_aux must be >= 1");
    if (!(c.gamma > 0)) throw std::invalid_argument("config: model.gamma must be positive");
    if (c.mu < -1 || c.mu > 1) throw std::invalid_argument("config: model.mu must be in [-1, 1]");
    if (!(c.k > 0)) throw std::invalid_argument("config: model.k must be positive");
    if (c.epochs == 0) throw std::invalid_argument("config: epochs must be >= 1");
    if (c.epochs < -1) throw std::invalid_argument("config: epochs must be >= 1");
    if (!c.schedule.empty() && c.schedule != "constant" && c.schedule != "cosine")
        throw std::invalid_argument("config: train.schedule must be 'constant' or 'cosine'");
    if (!(c.eta > 0) || !(c.eta_max > 0) || !(c.eta_min > 0))
        throw std::invalid_argument("config: learning rates must be positive");
    if (!(c.fd_step > 0)) throw std::invalid_argument("config: train.fd_step must be positive");
    if (c.n_samples < 1) throw std::invalid_argument("config: task.n_samples must be >= 1");
    for (double g : c.gammas)
        if (!(g > 0)) throw std::invalid_argument("config: task.gammas must be positive");
    return c;
}

// Command-line overrides on top of the config file.
struct CliOptions {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    int threads = 1;
    bool svg = false;
};

// ---------------------------------------------------------------------------
// Parsing of target states and boundaries
// ---------------------------------------------------------------------------

inline Boundary parse_boundary(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("boundary: empty specification");
    if (spec == "linear") return Boundary::linear();
    if (spec == "quadratic") return Boundary::quadratic();
    if (spec == "cubic") return Boundary::cubic();
    return Boundary::custom(detail::parse_double_list("task.boundary", spec));
}

inline DensityMatrix parse_target(const std::string& spec) {
    if (spec == "zero") return density_from_bloch(Vec3(0, 0, 1));
    if (spec == "one") return density_from_bloch(Vec3(0, 0, -1));
    if (spec == "plus") return density_from_bloch(Vec3(1, 0, 0));
    if (spec.rfind("random:", 0) == 0) {
        Rng rng(std::uint64_t(detail::parse_int("task.target", spec.substr(7))));
        const double z = rng.uniform(-1.0, 1.0);
        const double phi = rng.uniform(0.0, 2.0 * M_PI);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        return density_from_bloch(Vec3(r * std::cos(phi), r * std::sin(phi), z));
    }
    if (spec.rfind("bloch:", 0) == 0) {
        const auto v = detail::parse_double_list("task.target", spec.substr(6));
        if (v.size() != 3) throw std::invalid_argument("target: bloch: needs three components");
        return density_from_bloch(Vec3(v[0], v[1], v[2]));
    }
    throw std::invalid_argument("target: unknown specification '" + spec +
                                "' (use zero|one|plus|random:<seed>|bloch:x,y,z)");
}

// ---------------------------------------------------------------------------
// CSV and JSON artifacts
// ---------------------------------------------------------------------------

namespace detail {

inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline void ensure_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::invalid_argument("cannot create output directory '" + dir + "'");
}

inline double round6(double v) {
    return std::round(v * 1e6) / 1e6;
}

}  // namespace detail

inline void write_dataset_csv(const std::string& path, const Dataset& data) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << "theta1,theta2,label\n";
    for (const auto& s : data)
        out << detail::fmt_double(s.theta1) << ',' << detail::fmt_double(s.theta2) << ','
            << s.label << '\n';
}

inline Dataset read_dataset_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open dataset '" + path + "'");
    Dataset data;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = detail::trim(line);
        if (t.empty()) continue;
        if (lineno == 1) {
            if (t != "theta1,theta2,label")
                throw std::invalid_argument(path + ":1: expected header 'theta1,theta2,label'");
            continue;
        }
        std::stringstream ss(t);
        std::string f1, f2, f3;
        if (!std::getline(ss, f1, ',') || !std::getline(ss, f2, ',') || !std::getline(ss, f3, ','))
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": malformed row");
        std::string extra;
        if (std::getline(ss, extra, ','))
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": too many fields");
        LabeledSample s{};
        try {
            s.theta1 = detail::parse_double("theta1", detail::trim(f1));
            s.theta2 = detail::parse_double("theta2", detail::trim(f2));
            const long long y = detail::parse_int("label", detail::trim(f3));
            if (y != 0 && y != 1) throw std::invalid_argument("label must be 0 or 1");
            s.label = int(y);
        } catch (const std::exception& e) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        data.push_back(s);
    }
    if (data.empty()) throw std::invalid_argument(path + ": no data rows");
    return data;
}

inline void write_curve_csv(const std::string& path, const TrainRecord& record,
                            const std::string& value_name) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << "epoch," << value_name << ",eta\n";
    for (const auto& row : record.epochs)
        out << row.epoch << ',' << detail::fmt_double(row.value) << ','
            << detail::fmt_double(row.eta) << '\n';
}

inline void write_roc_csv(const std::string& path, const RocCurve& curve) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << "fpr,tpr\n";
    for (const auto& [fpr, tpr] : curve.points)
        out << detail::fmt_double(fpr) << ',' << detail::fmt_double(tpr) << '\n';
}

inline void write_validation_csv(const std::string& path, const std::vector<GammaValidation>& rows) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << "gamma,central_distance,aux_distance\n";
    for (const auto& r : rows)
        out << detail::fmt_double(r.gamma) << ',' << detail::fmt_double(r.central_distance) << ','
            << detail::fmt_double(r.aux_distance) << '\n';
}

/// Serialized model: couplings row-major, per-mode angles, shared mu, the
/// sigmoid steepness and the creation seed. load(save(m)) reproduces every
/// numeric field exactly.
inline void save_artifact(const std::string& path, const ModelConfig& config, double k,
                          std::uint64_t seed, const json& summary) {
    config.validate();
    for (const auto& m : config.modes)
        if (m.mu != config.modes[0].mu)
            throw std::invalid_argument("save_artifact: modes must share one mu");
    json j;
    j["version"] = 1;
    j["gamma"] = config.gamma;
    j["mu"] = config.modes[0].mu;
    j["k"] = k;
    j["couplings"] = json::array();
    for (const auto& jn : config.couplings) {
        json row = json::array();
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) row.push_back(jn(r, c));
        j["couplings"].push_back(row);
    }
    j["modes"] = json::array();
    for (const auto& m : config.modes) j["modes"].push_back({{"theta", m.theta}, {"phi", m.phi}});
    j["seed"] = seed;
    j["summary"] = summary;
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

struct LoadedModel {
    ModelConfig config;
    double k = 10.0;
    std::uint64_t seed = 0;
    json summary;
};

inline LoadedModel load_artifact(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open model '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument(path + ": invalid JSON: " + e.what());
    }
    try {
        if (j.at("version").get<int>() != 1)
            throw std::invalid_argument("unsupported artifact version");
        LoadedModel m;
        m.config.gamma = j.at("gamma").get<double>();
        const double mu = j.at("mu").get<double>();
        m.k = j.at("k").get<double>();
        m.seed = j.value("seed", std::uint64_t(0));
        m.summary = j.value("summary", json::object());
        const auto& couplings = j.at("couplings");
        const auto& modes = j.at("modes");
        if (couplings.size() != modes.size() || couplings.empty())
            throw std::invalid_argument("couplings/modes arrays must have equal nonzero length");
        m.config.n_aux = int(couplings.size());
        for (const auto& row : couplings) {
            if (row.size() != 9) throw std::invalid_argument("coupling rows must have 9 entries");
            CouplingMatrix jn;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) jn(r, c) = row[std::size_t(3 * r + c)].get<double>();
            m.config.couplings.push_back(jn);
        }
        for (const auto& mode : modes)
            m.config.modes.emplace_back(mode.at("theta").get<double>(),
                                        mode.at("phi").get<double>(), mu);
        m.config.validate();
        return m;
    } catch (const json::exception& e) {
        throw std::invalid_argument(path + ": bad artifact: " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Commands. Each returns the process exit code: 0 success, 1 validation or
// config error (thrown as std::invalid_argument by the helpers above),
// 2 numerical failure.
// ---------------------------------------------------------------------------

namespace detail {

inline void require_kind(const RunConfig& config, const std::string& kind) {
    if (config.kind != kind)
        throw std::invalid_argument("config: task.kind is '" + config.kind + "' but the '" + kind +
                                    "' command was invoked");
}

inline std::string out_path(const RunConfig& config, const CliOptions& opts,
                            const std::string& name) {
    const std::string dir = opts.out_dir.value_or(config.out_dir);
    ensure_dir(dir);
    return (std::filesystem::path(dir) / name).string();
}

inline std::uint64_t run_seed(const RunConfig& config, const CliOptions& opts) {
    return opts.seed.value_or(config.seed);
}

inline Schedule make_schedule(const RunConfig& config, int epochs, const std::string& fallback) {
    const std::string kind = config.schedule.empty() ? fallback : config.schedule;
    return kind == "constant" ? Schedule::constant(config.eta)
                              : Schedule::cosine(config.eta_max, config.eta_min, epochs);
}

}  // namespace detail

inline int cmd_datagen(const RunConfig& config, const CliOptions& opts) {
    detail::require_kind(config, "datagen");
    if (config.boundary.empty()) throw std::invalid_argument("config: task.boundary is required");
    const Boundary boundary = parse_boundary(config.boundary);
    const Dataset data = generate_dataset(boundary, config.n_samples, detail::run_seed(config, opts));
    const std::string path = detail::out_path(config, opts, "dataset.csv");
    write_dataset_csv(path, data);
    if (opts.svg) {
        SvgPlot plot("dataset", "theta1", "theta2");
        std::vector<std::pair<double, double>> c0, c1;
        for (const auto& s : data)
            (s.label == 1 ? c1 : c0).emplace_back(s.theta1, s.theta2);
        plot.add_scatter(c0, "crimson");
        plot.add_scatter(c1, "royalblue");
        plot.write(detail::out_path(config, opts, "dataset.svg"));
    }
    std::cout << "wrote " << path << " (" << data.size() << " samples)\n";
    return 0;
}

inline int cmd_prepare(const RunConfig& config, const CliOptions& opts) {
    detail::require_kind(config, "prepare");
    if (config.target.empty()) throw std::invalid_argument("config: task.target is required");
    const DensityMatrix target = parse_target(config.target);
    const int epochs = config.epochs > 0 ? config.epochs : 500;
    const Schedule schedule = detail::make_schedule(config, epochs, "constant");
    const std::uint64_t seed = detail::run_seed(config, opts);
    const ModelConfig init = state_prep_init(config.n_aux, config.gamma, config.mu, seed);

    const TrainRecord record = train_state_prep(target, init, epochs, schedule, config.fd_step,
                                                opts.threads, config.loss_threshold);
    const double final_loss = record.epochs.back().value;

    write_curve_csv(detail::out_path(config, opts, "loss_curve.csv"), record, "loss");
    const ModelConfig trained = unpack_params(record.final_params, init, true);
    json summary = {{"task", "prepare"},
                    {"target", config.target},
                    {"epochs_run", record.epochs.back().epoch},
                    {"final_loss", final_loss},
                    {"wall_seconds", record.wall_seconds}};
    save_artifact(detail::out_path(config, opts, "model.json"), trained, config.k, seed, summary);
    if (opts.svg) {
        SvgPlot plot("state preparation", "epoch", "loss");
        std::vector<std::pair<double, double>> pts;
        for (const auto& r : record.epochs) pts.emplace_back(double(r.epoch), r.value);
        plot.add_line(pts, "royalblue");
        plot.write(detail::out_path(config, opts, "loss_curve.svg"));
    }
    std::cout << "final loss " << final_loss << " after " << record.epochs.back().epoch
              << " epochs\n";
    if (!(final_loss < config.loss_threshold)) {
        std::cerr << "prepare: final loss " << final_loss << " is not below threshold "
                  << config.loss_threshold << "\n";
        return 2;
    }
    return 0;
}

inline int cmd_train(const RunConfig& config, const CliOptions& opts) {
    detail::require_kind(config, "train");
    if (config.train_data.empty()) throw std::invalid_argument("config: task.train_data is required");
    if (config.n_aux != 2)
        throw std::invalid_argument("config: classification runs need model.n_aux = 2");
    const Dataset data = read_dataset_csv(config.train_data);
    const int epochs = config.epochs > 0 ? config.epochs : 400;
    const Schedule schedule = detail::make_schedule(config, epochs, "cosine");
    const std::uint64_t seed = detail::run_seed(config, opts);
    const ModelConfig init = classifier_init(config.n_aux, config.gamma, config.mu, seed);

    const TrainRecord record = train_classifier(data, init, epochs, schedule, config.fd_step,
                                                config.k, opts.threads);

    write_curve_csv(detail::out_path(config, opts, "cost_curve.csv"), record, "cost");
    const ModelConfig trained = unpack_params(record.final_params, init, false);
    json summary = {{"task", "train"},
                    {"train_data", config.train_data},
                    {"n_train", data.size()},
                    {"epochs_run", record.epochs.back().epoch},
                    {"final_cost", record.epochs.back().value},
                    {"wall_seconds", record.wall_seconds}};
    const std::string model_path = detail::out_path(config, opts, "model.json");
    save_artifact(model_path, trained, config.k, seed, summary);
    if (opts.svg) {
        SvgPlot plot("classifier training", "epoch", "cost");
        std::vector<std::pair<double, double>> pts;
        for (const auto& r : record.epochs) pts.emplace_back(double(r.epoch), r.value);
        plot.add_line(pts, "royalblue");
        plot.write(detail::out_path(config, opts, "cost_curve.svg"));
    }
    std::cout << "final cost " << record.epochs.back().value << ", model saved to " << model_path
              << "\n";
    return 0;
}

inline int cmd_eval(const RunConfig& config, const CliOptions& opts) {
    detail::require_kind(config, "eval");
    if (config.model_path.empty()) throw std::invalid_argument("config: task.model is required");
    if (config.eval_data.empty()) throw std::invalid_argument("config: task.eval_data is required");
    const LoadedModel model = load_artifact(config.model_path);
    const Dataset data = read_dataset_csv(config.eval_data);

    std::vector<double> scores(data.size());
    std::vector<int> predicted(data.size()), labels(data.size());
    parallel_for(int(data.size()), opts.threads, [&](int i) {
        const Prediction p = predict(model.config, data[std::size_t(i)], model.k);
        scores[std::size_t(i)] = p.prob;
        predicted[std::size_t(i)] = p.label;
        labels[std::size_t(i)] = data[std::size_t(i)].label;
    });

    const double acc = accuracy(predicted, labels);
    const RocCurve curve = roc(scores, labels);

    write_roc_csv(detail::out_path(config, opts, "roc.csv"), curve);
    json metrics = {{"accuracy", detail::round6(acc)},
                    {"auc", detail::round6(curve.auc)},
                    {"n_samples", data.size()},
                    {"model", config.model_path}};
    const std::string metrics_path = detail::out_path(config, opts, "metrics.json");
    {
        std::ofstream out(metrics_path);
        if (!out) throw std::invalid_argument("cannot write '" + metrics_path + "'");
        out << metrics.dump(2) << '\n';
    }
    if (opts.svg) {
        SvgPlot plot("ROC", "false positive rate", "true positive rate");
        plot.add_line({{0.0, 0.0}, {1.0, 1.0}}, "gray");
        plot.add_line(curve.points, "royalblue");
        plot.write(detail::out_path(config, opts, "roc.svg"));
    }
    std::cout << "accuracy " << acc << ", auc " << curve.auc << " on " << data.size()
              << " samples\n";
    return 0;
}

inline int cmd_validate(const RunConfig& config, const CliOptions& opts) {
    detail::require_kind(config, "validate");
    Rng rng(mix_seed(detail::run_seed(config, opts), 0x76616c69));  // "vali"
    ModelConfig model;
    model.n_aux = config.n_aux;
    model.gamma = config.gamma;
    model.couplings = random_couplings(config.n_aux, rng);
    for (int n = 0; n < config.n_aux; ++n)
        model.modes.emplace_back(rng.uniform(0.0, M_PI), rng.uniform(0.0, 2.0 * M_PI), config.mu);

    const std::vector<GammaValidation> rows = validate_effective(model, config.gammas);
    const std::string path = detail::out_path(config, opts, "validation.csv");
    write_validation_csv(path, rows);

    int code = 0;
    for (const auto& r : rows) {
        std::cout << "gamma " << r.gamma << ": central distance " << r.central_distance
                  << ", aux distance " << r.aux_distance << "\n";
        if (r.central_distance > 5.0 / r.gamma) {
            std::cerr << "validate: distance " << r.central_distance << " at gamma " << r.gamma
                      << " exceeds 5/gamma\n";
            code = 2;
        }
    }
    std::cout << "wrote " << path << "\n";
    return code;
}

inline int run_command(const std::string& kind, const RunConfig& config, const CliOptions& opts) {
    if (kind == "datagen") return cmd_datagen(config, opts);
    if (kind == "prepare") return cmd_prepare(config, opts);
    if (kind == "train") return cmd_train(config, opts);
    if (kind == "eval") return cmd_eval(config, opts);
    if (kind == "validate") return cmd_validate(config, opts);
    throw std::invalid_argument("unknown command '" + kind + "'");
}

}  // namespace dqc::cli
