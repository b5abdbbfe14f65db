#include "autotext/model_selection.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace autotext {
namespace {

void seeded_shuffle(std::vector<std::size_t>& items, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[rng() % i]);
    }
}

// Per-class index lists, ordered by (text, original index) before the seeded
// shuffle so splits do not depend on the order of the input file.
std::vector<std::pair<std::string, std::vector<std::size_t>>> group_by_class(
    const LabeledDataset& data, std::uint64_t seed) {
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < data.items.size(); ++i) {
        groups[data.items[i].label].push_back(i);
    }
    std::vector<std::pair<std::string, std::vector<std::size_t>>> out;
    std::uint64_t class_index = 0;
    for (auto& [label, indices] : groups) {
        std::sort(indices.begin(), indices.end(), [&](std::size_t a, std::size_t b) {
            return std::tie(data.items[a].text, a) < std::tie(data.items[b].text, b);
        });
        seeded_shuffle(indices, seed * 2654435761u + class_index++);
        out.emplace_back(label, std::move(indices));
    }
    return out;
}

struct EvalResult {
    std::string canonical;
    double score = 0.0;
};

void record(SearchState& state, const ConfigValues& values, const std::string& canonical,
            double score, const char* phase) {
    state.memo.emplace(canonical, score);
    state.trajectory.push_back({canonical, score, phase});
    if (score > state.best_score ||
        (score == state.best_score && (state.best_canonical.empty() || canonical < state.best_canonical))) {
        state.best = values;
        state.best_score = score;
        state.best_canonical = canonical;
    }
}

// Scores every candidate, possibly across threads; result order follows the
// candidate order, so downstream decisions are schedule-independent.
std::vector<double> evaluate_batch(const std::vector<ConfigValues>& candidates,
                                   const ScoreFn& score, int threads) {
    std::vector<double> scores(candidates.size());
    if (threads <= 1 || candidates.size() < 2) {
        for (std::size_t i = 0; i < candidates.size(); ++i) scores[i] = score(candidates[i]);
        return scores;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < candidates.size(); i = next.fetch_add(1)) {
            scores[i] = score(candidates[i]);
        }
    };
    std::vector<std::future<void>> futures;
    const int n_workers = std::min<int>(threads, static_cast<int>(candidates.size()));
    for (int t = 0; t < n_workers; ++t) {
        futures.push_back(std::async(std::launch::async, worker));
    }
    for (auto& f : futures) f.get();
    return scores;
}

}  // namespace

std::vector<Split> stratified_kfold(const LabeledDataset& data, int k, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    const auto groups = group_by_class(data, seed);
    for (const auto& [label, indices] : groups) {
        if (static_cast<int>(indices.size()) < k) {
            throw std::invalid_argument("class '" + label + "' has fewer than k=" +
                                        std::to_string(k) + " examples");
        }
    }
    std::vector<Split> splits(k);
    int class_index = 0;
    for (const auto& [label, indices] : groups) {
        // offset by class so per-class remainders land in different folds,
        // keeping the total fold sizes balanced as well
        for (std::size_t j = 0; j < indices.size(); ++j) {
            const int fold = static_cast<int>((j + class_index) % k);
            for (int f = 0; f < k; ++f) {
                (f == fold ? splits[f].test : splits[f].train).push_back(indices[j]);
            }
        }
        ++class_index;
    }
    for (auto& split : splits) {
        std::sort(split.train.begin(), split.train.end());
        std::sort(split.test.begin(), split.test.end());
    }
    return splits;
}

Split binary_partition(const LabeledDataset& data, double beta, std::uint64_t seed) {
    if (beta <= 0.0 || beta >= 1.0) throw std::invalid_argument("beta must be in (0,1)");
    Split split;
    for (const auto& [label, indices] : group_by_class(data, seed)) {
        const auto n = indices.size();
        const auto n_train = static_cast<std::size_t>(
            std::floor(beta * static_cast<double>(n) + 0.5));  // round half up
        for (std::size_t j = 0; j < n; ++j) {
            (j < n_train ? split.train : split.test).push_back(indices[j]);
        }
    }
    if (split.train.empty() || split.test.empty()) {
        throw std::invalid_argument("binary partition leaves an empty side");
    }
    std::sort(split.train.begin(), split.train.end());
    std::sort(split.test.begin(), split.test.end());
    return split;
}

std::vector<Split> make_splits(const LabeledDataset& data, const ValidationScheme& scheme) {
    if (scheme.kind == ValidationScheme::Kind::KFold) {
        return stratified_kfold(data, scheme.k, scheme.seed);
    }
    return {binary_partition(data, scheme.beta, scheme.seed)};
}

namespace {

Vocabulary build_train_vocabulary(const std::vector<BagOfTokens>& bags,
                                  const std::vector<std::size_t>& train) {
    Vocabulary vocab;
    vocab.n_docs = static_cast<int>(train.size());
    for (std::size_t i : train) {
        for (const auto& [token, count] : bags[i]) {
            auto& st = vocab.tokens[token];
            st.collection_freq += count;
            st.doc_freq += 1;
        }
    }
    if (vocab.tokens.empty()) throw DegenerateVocabularyError();
    std::uint32_t id = 0;
    for (auto& [token, st] : vocab.tokens) st.id = id++;
    return vocab;
}

double score_splits(const PipelineConfig& cfg, const LabeledDataset& data,
                    const std::vector<BagOfTokens>& bags, const std::vector<Split>& splits,
                    MetricKind metric) {
    double sum = 0.0;
    for (const auto& split : splits) {
        double fold_score = 0.0;
        try {
            std::set<std::string> train_labels;
            for (std::size_t i : split.train) train_labels.insert(data.items[i].label);
            if (train_labels.size() < 2) throw DegenerateVocabularyError();

            const Vocabulary vocab =
                apply_filters(build_train_vocabulary(bags, split.train), cfg.weighting);
            std::vector<std::pair<SparseVector, std::string>> train_data;
            train_data.reserve(split.train.size());
            for (std::size_t i : split.train) {
                train_data.emplace_back(vectorize(vocab, cfg.weighting, bags[i]),
                                        data.items[i].label);
            }
            const LinearModel model = train(train_data, vocab.size());
            std::vector<std::string> truth, preds;
            truth.reserve(split.test.size());
            preds.reserve(split.test.size());
            for (std::size_t i : split.test) {
                truth.push_back(data.items[i].label);
                preds.push_back(predict(model, vectorize(vocab, cfg.weighting, bags[i])));
            }
            fold_score = evaluate(metric, confusion(truth, preds));
        } catch (const DegenerateVocabularyError&) {
            fold_score = 0.0;
        }
        sum += fold_score;
    }
    return sum / static_cast<double>(splits.size());
}

std::vector<BagOfTokens> corpus_bags(const PipelineConfig& cfg, const LabeledDataset& data) {
    std::vector<BagOfTokens> bags;
    bags.reserve(data.items.size());
    for (const auto& item : data.items) {
        bags.push_back(tokenize(cfg.tokenizers, apply_transform_chain(cfg.prep, item.text)));
    }
    return bags;
}

std::string bags_cache_key(const PipelineConfig& cfg) {
    return preprocess_to_json(cfg.prep).dump() + tokenizer_set_to_json(cfg.tokenizers).dump();
}

std::mutex g_scorer_mutex;

}  // namespace

double score_config(const PipelineConfig& cfg, const LabeledDataset& data,
                    const ValidationScheme& scheme, MetricKind metric) {
    const auto splits = make_splits(data, scheme);
    return score_splits(cfg, data, corpus_bags(cfg, data), splits, metric);
}

PipelineScorer::PipelineScorer(const SpaceDescriptor& desc, const LabeledDataset& data,
                               const ValidationScheme& scheme, MetricKind metric)
    : desc_(desc), data_(data), scheme_(scheme), metric_(metric),
      splits_(make_splits(data, scheme)) {}

double PipelineScorer::operator()(const ConfigValues& values) {
    const PipelineConfig cfg = decode_pipeline(desc_, values);
    const std::string key = bags_cache_key(cfg);
    {
        std::lock_guard<std::mutex> lock(g_scorer_mutex);
        if (key == cached_key_ && !cached_bags_.empty()) {
            // reuse; copy out under the lock to stay safe across threads
            const std::vector<BagOfTokens> bags = cached_bags_;
            return score_splits(cfg, data_, bags, splits_, metric_);
        }
    }
    std::vector<BagOfTokens> bags = corpus_bags(cfg, data_);
    const double result = score_splits(cfg, data_, bags, splits_, metric_);
    {
        std::lock_guard<std::mutex> lock(g_scorer_mutex);
        cached_key_ = key;
        cached_bags_ = std::move(bags);
    }
    return result;
}

ConfigValues random_search(const SpaceDescriptor& desc, const ScoreFn& score, int m,
                           std::mt19937_64& rng, SearchState& state, int threads) {
    if (m < 1) throw std::invalid_argument("random search sample count must be >= 1");
    std::vector<ConfigValues> candidates;
    std::vector<std::string> canonicals;
    std::set<std::string> drawn;
    const long max_attempts = std::max<long>(10000, 200L * m);
    for (long attempt = 0; attempt < max_attempts && static_cast<int>(candidates.size()) < m;
         ++attempt) {
        ConfigValues c = random_config(desc, rng);
        std::string canon = canonical_encoding(desc, c);
        if (state.memo.count(canon) || drawn.count(canon)) continue;
        drawn.insert(canon);
        candidates.push_back(std::move(c));
        canonicals.push_back(std::move(canon));
    }
    const auto scores = evaluate_batch(candidates, score, threads);
    state.pipeline_evaluations += static_cast<long>(candidates.size());
    std::size_t best = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        record(state, candidates[i], canonicals[i], scores[i], "random");
        if (i > 0 && (scores[i] > scores[best] ||
                      (scores[i] == scores[best] && canonicals[i] < canonicals[best]))) {
            best = i;
        }
    }
    if (candidates.empty()) {
        if (state.best_score < 0) throw std::runtime_error("random search drew no configurations");
        return state.best;
    }
    return candidates[best];
}

ConfigValues hill_climbing(const ConfigValues& start, const SpaceDescriptor& desc,
                           const ScoreFn& score, SearchState& state, int threads) {
    ConfigValues current = start;
    std::string current_canon = canonical_encoding(desc, current);
    auto it = state.memo.find(current_canon);
    double current_score;
    if (it != state.memo.end()) {
        current_score = it->second;
    } else {
        current_score = score(current);
        state.pipeline_evaluations += 1;
        record(state, current, current_canon, current_score, "climb");
    }

    while (true) {
        const auto nbrs = neighborhood(desc, current, 1);
        std::vector<std::string> nbr_canon(nbrs.size());
        std::vector<ConfigValues> to_eval;
        std::vector<std::size_t> to_eval_pos;
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            nbr_canon[i] = canonical_encoding(desc, nbrs[i]);
            if (!state.memo.count(nbr_canon[i])) {
                to_eval.push_back(nbrs[i]);
                to_eval_pos.push_back(i);
            }
        }
        const auto scores = evaluate_batch(to_eval, score, threads);
        state.pipeline_evaluations += static_cast<long>(to_eval.size());
        for (std::size_t j = 0; j < to_eval.size(); ++j) {
            record(state, to_eval[j], nbr_canon[to_eval_pos[j]], scores[j], "climb");
        }
        std::size_t best = nbrs.size();
        double best_score = -1.0;
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const double s = state.memo.at(nbr_canon[i]);
            if (best == nbrs.size() || s > best_score ||
                (s == best_score && nbr_canon[i] < nbr_canon[best])) {
                best = i;
                best_score = s;
            }
        }
        if (best == nbrs.size() || best_score <= current_score) break;
        current = nbrs[best];
        current_canon = nbr_canon[best];
        current_score = best_score;
    }
    return current;
}

ConfigValues optimize(const SpaceDescriptor& desc, const ScoreFn& score,
                      const OptimizeOptions& opts, SearchState& state) {
    std::mt19937_64 rng(opts.seed);
    const ConfigValues seed_config =
        random_search(desc, score, opts.samples, rng, state, opts.threads);
    return hill_climbing(seed_config, desc, score, state, opts.threads);
}

ConfigValues optimize(const SpaceDescriptor& desc, const LabeledDataset& data,
                      const ValidationScheme& scheme, MetricKind metric,
                      const OptimizeOptions& opts, SearchState& state) {
    PipelineScorer scorer(desc, data, scheme, metric);
    return optimize(desc, [&scorer](const ConfigValues& v) { return scorer(v); }, opts, state);
}

TextModel fit_final(const PipelineConfig& cfg, const LabeledDataset& data,
                    const TrainOptions& train_opts) {
    if (data.distinct_labels() < 2) {
        throw std::invalid_argument("final training needs at least 2 classes");
    }
    std::vector<BagOfTokens> bags = corpus_bags(cfg, data);
    const Vocabulary vocab = apply_filters(build_vocabulary(bags), cfg.weighting);
    std::vector<std::pair<SparseVector, std::string>> train_data;
    train_data.reserve(bags.size());
    for (std::size_t i = 0; i < bags.size(); ++i) {
        train_data.emplace_back(vectorize(vocab, cfg.weighting, bags[i]), data.items[i].label);
    }
    TextModel model;
    model.prep = cfg.prep;
    model.tokenizers = cfg.tokenizers;
    model.weighting = cfg.weighting;
    model.vocab = vocab;
    model.classifier = train(train_data, vocab.size(), train_opts);
    return model;
}

nlohmann::ordered_json search_report(const SpaceDescriptor& desc, const SearchState& state) {
    std::vector<TrajectoryEntry> entries = state.trajectory;
    std::sort(entries.begin(), entries.end(), [](const TrajectoryEntry& a, const TrajectoryEntry& b) {
        const int pa = a.phase == "random" ? 0 : 1;
        const int pb = b.phase == "random" ? 0 : 1;
        return std::tie(pa, a.canonical) < std::tie(pb, b.canonical);
    });
    nlohmann::ordered_json evaluations = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        evaluations.push_back({{"config", e.canonical}, {"score", e.score}, {"phase", e.phase}});
    }
    nlohmann::ordered_json report;
    report["evaluations"] = std::move(evaluations);
    report["summary"] = {{"best_config", config_to_json(desc, state.best)},
                         {"best_score", state.best_score},
                         {"evaluations", state.memo.size()}};
    return report;
}

}  // namespace autotext
