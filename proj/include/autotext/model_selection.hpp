#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "autotext/config_space.hpp"
#include "autotext/dataset_io.hpp"
#include "autotext/metrics.hpp"
#include "autotext/text_model.hpp"

namespace autotext {

struct ValidationScheme {
    enum class Kind { KFold, BinaryPartition };
    Kind kind = Kind::KFold;
    int k = 3;
    double beta = 0.7;
    std::uint64_t seed = 0;
};

struct TrajectoryEntry {
    std::string canonical;
    double score = 0.0;
    std::string phase;  // "random" | "climb"
};

struct SearchState {
    std::map<std::string, double> memo;
    long pipeline_evaluations = 0;  // instrumented; must equal memo.size()
    ConfigValues best;
    double best_score = -1.0;
    std::string best_canonical;
    std::vector<TrajectoryEntry> trajectory;
};

// Index-based split descriptions over a dataset.
struct Split {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};

// Stratified k folds; per-class fold sizes differ by at most 1. Splits are
// computed on a per-class order sorted by text and then seed-shuffled, so
// they do not depend on the input file order. Throws when a class has
// fewer than k examples (naming the class).
std::vector<Split> stratified_kfold(const LabeledDataset& data, int k, std::uint64_t seed);

// Single stratified split: per class round(beta * n_class) items to train.
Split binary_partition(const LabeledDataset& data, double beta, std::uint64_t seed);

std::vector<Split> make_splits(const LabeledDataset& data, const ValidationScheme& scheme);

// Mean metric of the full pipeline over the scheme's splits. Degenerate
// pipelines (empty post-filter vocabulary, single-class train fold)
// contribute 0 rather than erroring.
double score_config(const PipelineConfig& cfg, const LabeledDataset& data,
                    const ValidationScheme& scheme, MetricKind metric);

// Scoring callback used by the search; decouples the optimizer from the
// text pipeline so synthetic landscapes can drive it in tests.
using ScoreFn = std::function<double(const ConfigValues&)>;

// Caching scorer over a fixed (data, scheme, metric): splits are computed
// once and token bags are reused across configurations that share the same
// preprocessing + tokenizer choice.
class PipelineScorer {
  public:
    PipelineScorer(const SpaceDescriptor& desc, const LabeledDataset& data,
                   const ValidationScheme& scheme, MetricKind metric);

    double operator()(const ConfigValues& values);

  private:
    const SpaceDescriptor& desc_;
    const LabeledDataset& data_;
    ValidationScheme scheme_;
    MetricKind metric_;
    std::vector<Split> splits_;
    std::string cached_key_;
    std::vector<BagOfTokens> cached_bags_;
};

struct OptimizeOptions {
    int samples = 32;  // random-search size m
    std::uint64_t seed = 0;
    int threads = 1;
};

// Best of m distinct random configurations; ties break toward the smallest
// canonical encoding. Previously memoized configurations are skipped when
// drawing the m samples.
ConfigValues random_search(const SpaceDescriptor& desc, const ScoreFn& score, int m,
                           std::mt19937_64& rng, SearchState& state, int threads = 1);

// Greedy ascent over unit-distance neighborhoods with strict improvement;
// memoized neighbors are never re-evaluated.
ConfigValues hill_climbing(const ConfigValues& start, const SpaceDescriptor& desc,
                           const ScoreFn& score, SearchState& state, int threads = 1);

// Random search followed by hill climbing from its argmax, sharing one
// evaluation memory.
ConfigValues optimize(const SpaceDescriptor& desc, const ScoreFn& score,
                      const OptimizeOptions& opts, SearchState& state);

ConfigValues optimize(const SpaceDescriptor& desc, const LabeledDataset& data,
                      const ValidationScheme& scheme, MetricKind metric,
                      const OptimizeOptions& opts, SearchState& state);

// Rebuilds the winning pipeline on the whole dataset. Degenerate
// vocabularies are fatal here, unlike during the search.
TextModel fit_final(const PipelineConfig& cfg, const LabeledDataset& data,
                    const TrainOptions& train_opts = {});

// Search report: per-evaluation records sorted by (phase, canonical key)
// plus a summary block.
nlohmann::ordered_json search_report(const SpaceDescriptor& desc, const SearchState& state);

}  // namespace autotext
