#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "autotext/vector_space.hpp"

namespace autotext {

struct TrainOptions {
    double hyper_c = 1.0;
    double tolerance = 1e-3;
    int max_epochs = 1000;
    std::uint64_t seed = 0;
};

// One-vs-rest linear max-margin model. Classes are kept sorted; each class
// owns a dense weight vector over the feature dimension plus a bias.
struct LinearModel {
    std::vector<std::string> classes;
    std::vector<std::vector<double>> weights;
    std::vector<double> bias;
    std::size_t dim = 0;
    double hyper_c = 1.0;
};

// Fits one L2-regularized hinge-loss binary problem per class by dual
// coordinate descent with a seeded example order. Throws
// std::invalid_argument on single-class data or out-of-range indices.
LinearModel train(const std::vector<std::pair<SparseVector, std::string>>& data,
                  std::size_t dim, const TrainOptions& opts = {});

// w_c . x + b_c for every class, in class order.
std::vector<double> decision_values(const LinearModel& model, const SparseVector& x);

// argmax of decision_values; ties break toward the lowest class index.
const std::string& predict(const LinearModel& model, const SparseVector& x);

}  // namespace autotext
