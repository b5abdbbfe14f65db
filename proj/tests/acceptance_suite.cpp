// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line with its measured numbers.

#include "doctest.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <random>
#include <set>

#include "autotext/model_selection.hpp"
#include "oracle_metrics.hpp"
#include "synthetic_corpus.hpp"

using namespace autotext;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail
              << std::endl;
    CHECK_MESSAGE(pass, "criterion ", criterion, ": ", detail);
}

// Reduced space (112 configurations) whose slots all map onto the real
// pipeline: 2 preprocessing toggles, 3 tokenizer switches, the scheme.
SpaceDescriptor reduced_space() {
    SpaceDescriptor desc;
    desc.slots.push_back({"diacritic", {"apply", "identity"}});
    desc.slots.push_back({"case", {"apply", "identity"}});
    for (const char* name : {"w1", "c3", "c4"}) {
        desc.tokenizer_slots.push_back(desc.slots.size());
        desc.slots.push_back({name, {"on", "off"}});
    }
    desc.slots.push_back({"scheme", {"tf", "tfidf"}});
    return desc;
}

PipelineConfig baseline_config() {
    PipelineConfig cfg;  // all-identity preprocessing, TF, no filters
    cfg.tokenizers.enabled[tokenizer_index("w1")] = true;
    return cfg;
}

}  // namespace

TEST_CASE("criterion 1: tokenizer golden examples") {
    const auto start = Clock::now();
    const auto w3 = word_ngrams(3, "The red car is in front of the tree");
    const std::vector<std::string> w3_expected = {
        "The red car", "red car is",  "car is in",    "is in front",
        "in front of", "front of the", "of the tree"};
    const auto c4 = char_ngrams(4, "I like the red car");
    const std::vector<std::string> c4_expected = {
        "I li", " lik", "like", "ike ", "ke t", "e th", " the", "the ",
        "he r", "e re", " red", "red ", "ed c", "d ca", " car"};
    const auto s21 = skip_grams(2, 1, "I like the red car");
    const std::vector<std::string> s21_expected = {"I~the", "like~red", "the~car"};
    const double elapsed = seconds_since(start);
    const bool pass = w3 == w3_expected && c4 == c4_expected && s21 == s21_expected &&
                      w3.size() == 7 && c4.size() == 15 && s21.size() == 3 && elapsed < 1.0;
    report(1, pass, "7/15/3 golden tokens reproduced in " + std::to_string(elapsed) + "s");
}

TEST_CASE("criterion 2: configuration graph properties") {
    const auto start = Clock::now();
    const SpaceDescriptor desc = default_space();
    std::mt19937_64 rng(2024);
    bool pass = true;
    for (int iter = 0; iter < 10000 && pass; ++iter) {
        const ConfigValues a = random_config(desc, rng);
        const ConfigValues b = random_config(desc, rng);
        const ConfigValues c = random_config(desc, rng);
        const int ab = hamming_distance(desc, a, b);
        pass = ab >= 0 && ab == hamming_distance(desc, b, a) && ((ab == 0) == (a == b)) &&
               ab <= hamming_distance(desc, a, c) + hamming_distance(desc, c, b);
    }
    for (int iter = 0; iter < 1000 && pass; ++iter) {
        const ConfigValues c = random_config(desc, rng);
        int enabled = 0;
        for (std::size_t s : desc.tokenizer_slots) enabled += c[s] == kTokenizerOn;
        const auto nbrs = neighborhood(desc, c, 1);
        const std::size_t expected = 34 - (enabled == 1 ? 1 : 0);
        pass = nbrs.size() == expected;
        for (const auto& nb : nbrs) {
            if (hamming_distance(desc, c, nb) != 1) pass = false;
        }
    }
    const double elapsed = seconds_since(start);
    pass = pass && elapsed < 10.0;
    report(2, pass, "metric axioms + neighborhood sizes verified in " +
                        std::to_string(elapsed) + "s");
}

TEST_CASE("criterion 3: space size") {
    SpaceDescriptor paper;
    for (auto [name, card] : {std::pair<const char*, int>{"prep", 1296}, {"tok", 81}, {"weight", 32}}) {
        Slot slot{name, {}};
        for (int v = 0; v < card; ++v) slot.domain.push_back(std::to_string(v));
        paper.slots.push_back(std::move(slot));
    }
    bool pass = space_size(paper) == 3359232u;
    pass = pass && space_size(default_space()) == 1358913024u;

    // exhaustive enumeration agreement on toy spaces
    SpaceDescriptor toy;
    toy.slots.push_back({"a", {"0", "1", "2"}});
    toy.slots.push_back({"b", {"0", "1", "2", "3"}});
    toy.slots.push_back({"c", {"0", "1"}});
    pass = pass && space_size(toy) == enumerate_space(toy).size();
    SpaceDescriptor constrained = reduced_space();
    pass = pass && space_size(constrained) == enumerate_space(constrained).size();
    report(3, pass, "3359232 / 1358913024 and enumeration cross-checks exact");
}

TEST_CASE("criteria 4-6: search vs oracle, memoization, local optimality") {
    const auto start = Clock::now();
    const SpaceDescriptor desc = reduced_space();
    const LabeledDataset data = testing::separable_corpus(25, 31);
    ValidationScheme scheme;
    scheme.k = 2;
    scheme.seed = 9;

    // exhaustive ranking
    const auto all = enumerate_space(desc);
    std::vector<std::pair<double, std::string>> ranked;
    std::map<std::string, double> truth;
    {
        PipelineScorer scorer(desc, data, scheme, MetricKind::MacroF1);
        for (const auto& c : all) {
            const double s = scorer(c);
            const std::string canon = canonical_encoding(desc, c);
            ranked.emplace_back(s, canon);
            truth[canon] = s;
        }
    }
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    const std::size_t cut = (all.size() * 5 + 99) / 100;  // top 5%, ceil
    const double top5_threshold = ranked[cut - 1].first;

    int hits = 0;
    bool memo_ok = true;
    bool local_ok = true;
    for (int seed = 0; seed < 20; ++seed) {
        PipelineScorer scorer(desc, data, scheme, MetricKind::MacroF1);
        SearchState state;
        OptimizeOptions opts;
        opts.samples = 20;
        opts.seed = static_cast<std::uint64_t>(seed);
        const ConfigValues best =
            optimize(desc, [&scorer](const ConfigValues& v) { return scorer(v); }, opts, state);
        const double best_score = state.memo.at(canonical_encoding(desc, best));
        if (best_score >= top5_threshold) ++hits;
        if (state.pipeline_evaluations != static_cast<long>(state.memo.size())) memo_ok = false;
        for (const auto& nb : neighborhood(desc, best, 1)) {
            if (truth.at(canonical_encoding(desc, nb)) > best_score + 1e-12) local_ok = false;
        }
    }

    // with m = |C| random search returns the exhaustive argmax
    PipelineScorer scorer(desc, data, scheme, MetricKind::MacroF1);
    SearchState full_state;
    std::mt19937_64 rng(77);
    const ConfigValues rs_best =
        random_search(desc, [&scorer](const ConfigValues& v) { return scorer(v); },
                      static_cast<int>(all.size()), rng, full_state, 1);
    const bool exhaustive_ok = canonical_encoding(desc, rs_best) == ranked[0].second ||
                               truth.at(canonical_encoding(desc, rs_best)) == ranked[0].first;
    std::string rs_canon = canonical_encoding(desc, rs_best);
    std::string argmax_canon = ranked[0].second;
    for (const auto& [s, canon] : ranked) {
        if (s == ranked[0].first && canon < argmax_canon) argmax_canon = canon;
    }
    const bool exact_argmax = rs_canon == argmax_canon;
    const bool full_memo_ok =
        full_state.pipeline_evaluations == static_cast<long>(full_state.memo.size());

    const double elapsed = seconds_since(start);
    report(4, hits >= 16 && exhaustive_ok && exact_argmax && elapsed < 300.0,
           std::to_string(hits) + "/20 runs in top 5%, m=|C| recovers the argmax, " +
               std::to_string(elapsed) + "s");
    report(5, memo_ok && full_memo_ok, "pipeline evaluations == |memo| in every run");
    report(6, local_ok, "every hill-climbing result beats all 1-neighbors (exhaustive rescore)");
}

TEST_CASE("criterion 7: metrics oracle") {
    std::mt19937_64 rng(501);
    static const std::vector<std::string> labels = {"a", "b", "c"};
    bool pass = true;
    for (int iter = 0; iter < 1000 && pass; ++iter) {
        const std::size_t n = 1 + rng() % 50;
        std::vector<std::string> t, p;
        for (std::size_t i = 0; i < n; ++i) {
            t.push_back(labels[rng() % labels.size()]);
            p.push_back(labels[rng() % labels.size()]);
        }
        const ConfusionCounts counts = confusion(t, p);
        pass = std::fabs(evaluate(MetricKind::MacroF1, counts) - testing::oracle_macro_f1(t, p)) < 1e-12 &&
               std::fabs(evaluate(MetricKind::MicroF1, counts) - testing::oracle_micro_f1(t, p)) < 1e-12 &&
               std::fabs(evaluate(MetricKind::Accuracy, counts) - testing::oracle_accuracy(t, p)) < 1e-12;
    }
    const ConfusionCounts hand = confusion({"a", "a", "b", "b"}, {"a", "b", "b", "b"});
    pass = pass && std::fabs(evaluate(MetricKind::Accuracy, hand) - 0.75) < 1e-12 &&
           std::fabs(evaluate(MetricKind::MacroF1, hand) - 0.7333) < 5e-5;
    report(7, pass, "1000 random list pairs within 1e-12; hand case 0.75 / 0.7333");
}

TEST_CASE("criterion 8: validation schemes") {
    LabeledDataset data;
    for (int c = 0; c < 3; ++c) {
        for (int i = 0; i < 10; ++i) {
            data.items.push_back({"t" + std::to_string(c * 10 + i),
                                  std::string(1, static_cast<char>('a' + c))});
        }
    }
    bool pass = true;
    const auto folds = stratified_kfold(data, 3, 4);
    for (const auto& split : folds) {
        if (split.test.size() != 10) pass = false;
        std::map<std::string, int> per_class;
        for (std::size_t i : split.test) per_class[data.items[i].label]++;
        for (const auto& [label, count] : per_class) {
            if (std::abs(count - 10 / 3) > 1) pass = false;
        }
    }
    const Split split = binary_partition(data, 0.7, 4);
    pass = pass && split.train.size() == 21 && split.test.size() == 9;
    std::map<std::string, int> train_count;
    for (std::size_t i : split.train) train_count[data.items[i].label]++;
    for (const auto& [label, count] : train_count) {
        if (count != 7) pass = false;  // round(0.7 * 10)
    }
    report(8, pass, "3-fold folds of 10 balanced +-1; binary 21/9 with 7 per class in train");
}

TEST_CASE("criteria 9-11: end-to-end benchmark, determinism, robustness") {
    const auto start = Clock::now();
    const LabeledDataset data = testing::noisy_corpus(500, 555);
    ValidationScheme scheme;
    scheme.k = 3;
    const SpaceDescriptor desc = default_space();

    // criterion 9: optimized beats the fixed baseline by >= 0.02 for >= 4/5 seeds
    int wins = 0;
    for (int seed = 0; seed < 5; ++seed) {
        ValidationScheme s = scheme;
        s.seed = static_cast<std::uint64_t>(seed);
        const double baseline = score_config(baseline_config(), data, s, MetricKind::MacroF1);
        OptimizeOptions opts;
        opts.samples = 16;
        opts.seed = static_cast<std::uint64_t>(seed);
        SearchState state;
        optimize(desc, data, s, MetricKind::MacroF1, opts, state);
        if (state.best_score >= baseline + 0.02) ++wins;
        std::cout << "  seed " << seed << ": baseline " << baseline << " optimized "
                  << state.best_score << std::endl;
    }
    const double elapsed9 = seconds_since(start);
    report(9, wins >= 4 && elapsed9 < 600.0,
           std::to_string(wins) + "/5 seeds beat baseline by >= 0.02 in " +
               std::to_string(elapsed9) + "s");

    // criterion 10: identical settings give byte-identical config and report output
    {
        OptimizeOptions opts;
        opts.samples = 8;
        opts.seed = 3;
        ValidationScheme s = scheme;
        s.seed = 3;
        SearchState s1, s2;
        const ConfigValues b1 = optimize(desc, data, s, MetricKind::MacroF1, opts, s1);
        const ConfigValues b2 = optimize(desc, data, s, MetricKind::MacroF1, opts, s2);
        const bool pass = config_to_json(desc, b1).dump(2) == config_to_json(desc, b2).dump(2) &&
                          search_report(desc, s1).dump(2) == search_report(desc, s2).dump(2);
        report(10, pass, "two identical optimize runs produce byte-identical config and report");
    }

    // criterion 11: raw vs pre-lowercased input reach final macro-F1 within 0.03
    {
        LabeledDataset lowered = data;
        for (auto& item : lowered.items) item.text = lower_case(item.text);
        OptimizeOptions opts;
        opts.samples = 16;
        opts.seed = 11;
        ValidationScheme s = scheme;
        s.seed = 11;
        SearchState raw_state, low_state;
        optimize(desc, data, s, MetricKind::MacroF1, opts, raw_state);
        optimize(desc, lowered, s, MetricKind::MacroF1, opts, low_state);
        const double diff = std::fabs(raw_state.best_score - low_state.best_score);
        report(11, diff <= 0.03,
               "raw " + std::to_string(raw_state.best_score) + " vs lowercased " +
                   std::to_string(low_state.best_score) + " (diff " + std::to_string(diff) + ")");
    }
}
