#include "autotext/linear_classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace autotext {
namespace {

double dot(const std::vector<double>& w, const SparseVector& x) {
    double acc = 0.0;
    for (const auto& [idx, val] : x.entries) acc += w[idx] * val;
    return acc;
}

// Dual coordinate descent for min 1/2 w'w + C sum max(0, 1 - y_i w'x_i),
// the liblinear L1-loss solver. The bias is an implicit constant feature
// stored at index dim.
void fit_binary(const std::vector<const SparseVector*>& xs, const std::vector<int>& ys,
                std::size_t dim, const TrainOptions& opts, std::uint64_t seed,
                std::vector<double>& w_out, double& b_out) {
    const std::size_t n = xs.size();
    std::vector<double> w(dim + 1, 0.0);
    std::vector<double> alpha(n, 0.0);
    std::vector<double> q_diag(n);
    for (std::size_t i = 0; i < n; ++i) {
        double q = 1.0;  // bias feature
        for (const auto& [idx, val] : xs[i]->entries) q += val * val;
        q_diag[i] = q;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    const double c_upper = opts.hyper_c;

    for (int epoch = 0; epoch < opts.max_epochs; ++epoch) {
        for (std::size_t i = n; i > 1; --i) {
            std::swap(order[i - 1], order[rng() % i]);
        }
        double max_violation = 0.0;
        for (std::size_t pos = 0; pos < n; ++pos) {
            const std::size_t i = order[pos];
            const double y = ys[i];
            const double g = y * (dot(w, *xs[i]) + w[dim]) - 1.0;
            double pg = g;
            if (alpha[i] <= 0.0) pg = std::min(g, 0.0);
            else if (alpha[i] >= c_upper) pg = std::max(g, 0.0);
            max_violation = std::max(max_violation, std::fabs(pg));
            if (std::fabs(pg) < 1e-12) continue;
            const double a_new = std::clamp(alpha[i] - g / q_diag[i], 0.0, c_upper);
            const double delta = (a_new - alpha[i]) * y;
            if (delta != 0.0) {
                for (const auto& [idx, val] : xs[i]->entries) w[idx] += delta * val;
                w[dim] += delta;
                alpha[i] = a_new;
            }
        }
        if (max_violation < opts.tolerance) break;
    }
    b_out = w[dim];
    w.pop_back();
    w_out = std::move(w);
}

}  // namespace

LinearModel train(const std::vector<std::pair<SparseVector, std::string>>& data,
                  std::size_t dim, const TrainOptions& opts) {
    if (opts.hyper_c <= 0 || opts.tolerance <= 0 || opts.max_epochs < 1) {
        throw std::invalid_argument("invalid training options");
    }
    std::set<std::string> labels;
    for (const auto& [x, y] : data) {
        labels.insert(y);
        for (const auto& [idx, val] : x.entries) {
            if (idx >= dim) throw std::invalid_argument("feature index exceeds dimension");
        }
    }
    if (labels.size() < 2) throw std::invalid_argument("training data needs at least 2 classes");

    LinearModel model;
    model.classes.assign(labels.begin(), labels.end());
    model.dim = dim;
    model.hyper_c = opts.hyper_c;
    model.weights.resize(model.classes.size());
    model.bias.resize(model.classes.size());

    std::vector<const SparseVector*> xs;
    xs.reserve(data.size());
    for (const auto& [x, y] : data) xs.push_back(&x);

    for (std::size_t c = 0; c < model.classes.size(); ++c) {
        std::vector<int> ys;
        ys.reserve(data.size());
        for (const auto& [x, y] : data) ys.push_back(y == model.classes[c] ? 1 : -1);
        fit_binary(xs, ys, dim, opts, opts.seed * 1000003u + c, model.weights[c], model.bias[c]);
    }
    return model;
}

std::vector<double> decision_values(const LinearModel& model, const SparseVector& x) {
    std::vector<double> out(model.classes.size());
    for (std::size_t c = 0; c < model.classes.size(); ++c) {
        out[c] = dot(model.weights[c], x) + model.bias[c];
    }
    return out;
}

const std::string& predict(const LinearModel& model, const SparseVector& x) {
    const auto values = decision_values(model, x);
    std::size_t best = 0;
    for (std::size_t c = 1; c < values.size(); ++c) {
        if (values[c] > values[best]) best = c;
    }
    return model.classes[best];
}

}  // namespace autotext
