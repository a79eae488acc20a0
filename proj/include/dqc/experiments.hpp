#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "dqc/errors.hpp"
#include "dqc/rng.hpp"

namespace dqc {

/// One 2-D data point (theta1, theta2) in [0, pi]^2 with its binary label.
struct LabeledSample {
    double theta1;
    double theta2;
    int label;
};

using Dataset = std::vector<LabeledSample>;

/// Decision boundary theta2 = g(theta1); points on or above it are class 1.
/// Coefficients are stored highest degree first.
struct Boundary {
    enum class Kind { linear, quadratic, cubic, custom };

    Kind kind = Kind::custom;
    std::vector<double> coeffs;

    double operator()(double x) const {
        double y = 0.0;
        for (double c : coeffs) y = y * x + c;
        return y;
    }

    int label_of(double theta1, double theta2) const {
        return theta2 >= (*this)(theta1) ? 1 : 0;
    }

    static Boundary linear() { return {Kind::linear, {-2.0, 1.5 * M_PI}}; }
    static Boundary quadratic() { return {Kind::quadratic, {1.0, -M_PI, M_PI * M_PI / 4.0}}; }
    static Boundary cubic() { return {Kind::cubic, {1.0, -2.0, 1.0, -0.5}}; }
    static Boundary custom(std::vector<double> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("Boundary: empty coefficient list");
        return {Kind::custom, std::move(coeffs)};
    }
};

// n samples with theta1, theta2 drawn i.i.d. uniform on [0, pi] (theta1 first),
// labeled by the boundary rule.
inline Dataset generate_dataset(const Boundary& boundary, int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("generate_dataset: n must be >= 1");
    Rng rng(seed);
    Dataset out;
    out.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i) {
        const double t1 = rng.uniform(0.0, M_PI);
        const double t2 = rng.uniform(0.0, M_PI);
        out.push_back({t1, t2, boundary.label_of(t1, t2)});
    }
    return out;
}

inline double accuracy(const std::vector<int>& predictions, const std::vector<int>& labels) {
    if (predictions.empty()) throw EmptyInput("accuracy: empty input");
    if (predictions.size() != labels.size()) throw LengthMismatch("accuracy: length mismatch");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < predictions.size(); ++i)
        if (predictions[i] == labels[i]) ++hits;
    return double(hits) / double(predictions.size());
}

/// ROC points from (0,0) to (1,1), one threshold step per distinct score, and
/// the trapezoidal area under them.
struct RocCurve {
    std::vector<std::pair<double, double>> points;  // (fpr, tpr)
    double auc = 0.0;
};

inline RocCurve roc(const std::vector<double>& scores, const std::vector<int>& labels) {
    if (scores.size() != labels.size()) throw LengthMismatch("roc: length mismatch");
    std::size_t n_pos = 0, n_neg = 0;
    for (int y : labels) (y == 1 ? n_pos : n_neg)++;
    if (n_pos == 0 || n_neg == 0)
        throw SingleClassDataset("roc: need at least one sample of each class");

    std::vector<std::size_t> order(scores.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

    RocCurve curve;
    curve.points.emplace_back(0.0, 0.0);  // threshold +inf: nothing predicted positive
    std::size_t tp = 0, fp = 0, i = 0;
    while (i < order.size()) {
        const double s = scores[order[i]];
        // group score ties into a single threshold step
        while (i < order.size() && scores[order[i]] == s) {
            (labels[order[i]] == 1 ? tp : fp)++;
            ++i;
        }
        curve.points.emplace_back(double(fp) / double(n_neg), double(tp) / double(n_pos));
    }
    curve.points.emplace_back(1.0, 1.0);  // threshold -inf: everything positive

    for (std::size_t p = 1; p < curve.points.size(); ++p) {
        const auto& [fpr0, tpr0] = curve.points[p - 1];
        const auto& [fpr1, tpr1] = curve.points[p];
        curve.auc += (fpr1 - fpr0) * 0.5 * (tpr0 + tpr1);
    }
    return curve;
}

}  // namespace dqc
