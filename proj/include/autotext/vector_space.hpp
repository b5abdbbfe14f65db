#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "autotext/tokenizer.hpp"

namespace autotext {

enum class WeightingScheme { TF, TFIDF };

struct WeightingConfig {
    double max_filter_alpha = 1.0;  // in {0.9, 0.95, 0.99, 1.0}
    int min_filter_freq = 1;        // in {1, 3, 5, 10}
    WeightingScheme scheme = WeightingScheme::TF;

    bool operator==(const WeightingConfig&) const = default;
};

const char* weighting_scheme_name(WeightingScheme scheme);
WeightingScheme parse_weighting_scheme(const std::string& name);

// Raised when the frequency filters leave no tokens; the search scores such
// configurations as 0, final training treats it as fatal.
struct DegenerateVocabularyError : std::runtime_error {
    DegenerateVocabularyError() : std::runtime_error("filters removed every vocabulary token") {}
};

struct Vocabulary {
    struct Stats {
        std::uint32_t id = 0;
        std::int64_t collection_freq = 0;
        int doc_freq = 0;
    };
    // Lexicographic token order; ids follow iteration order (0..V-1).
    std::map<std::string, Stats> tokens;
    int n_docs = 0;

    std::size_t size() const { return tokens.size(); }
};

struct SparseVector {
    // (index, weight) pairs with strictly increasing indices.
    std::vector<std::pair<std::uint32_t, double>> entries;

    bool empty() const { return entries.empty(); }
};

// Counts collection/document frequencies over the corpus; ids are assigned
// in lexicographic token order. Throws std::invalid_argument on an empty
// corpus and DegenerateVocabularyError when no token occurs at all.
Vocabulary build_vocabulary(const std::vector<BagOfTokens>& corpus);

// Max-filter (collection_freq > alpha * max_freq) then min-filter
// (collection_freq < min_filter_freq); surviving ids are recompacted.
Vocabulary apply_filters(const Vocabulary& vocab, const WeightingConfig& cfg);

// TF = multiplicity / total in-vocabulary multiplicity of the bag;
// TFIDF = TF * ln(n_docs / doc_freq). Result is L2-normalized.
SparseVector vectorize(const Vocabulary& vocab, const WeightingConfig& cfg, const BagOfTokens& bag);

}  // namespace autotext
