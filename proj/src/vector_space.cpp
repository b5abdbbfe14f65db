#include "autotext/vector_space.hpp"

#include <algorithm>
#include <cmath>

namespace autotext {

const char* weighting_scheme_name(WeightingScheme scheme) {
    return scheme == WeightingScheme::TF ? "tf" : "tfidf";
}

WeightingScheme parse_weighting_scheme(const std::string& name) {
    if (name == "tf") return WeightingScheme::TF;
    if (name == "tfidf") return WeightingScheme::TFIDF;
    throw std::invalid_argument("unknown weighting scheme: " + name);
}

Vocabulary build_vocabulary(const std::vector<BagOfTokens>& corpus) {
    if (corpus.empty()) throw std::invalid_argument("empty corpus");
    Vocabulary vocab;
    vocab.n_docs = static_cast<int>(corpus.size());
    for (const auto& bag : corpus) {
        for (const auto& [token, count] : bag) {
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

Vocabulary apply_filters(const Vocabulary& vocab, const WeightingConfig& cfg) {
    std::int64_t max_freq = 0;
    for (const auto& [token, st] : vocab.tokens) {
        max_freq = std::max(max_freq, st.collection_freq);
    }
    const double upper = cfg.max_filter_alpha * static_cast<double>(max_freq);
    Vocabulary out;
    out.n_docs = vocab.n_docs;
    for (const auto& [token, st] : vocab.tokens) {
        if (static_cast<double>(st.collection_freq) > upper) continue;
        if (st.collection_freq < cfg.min_filter_freq) continue;
        out.tokens.emplace(token, st);
    }
    if (out.tokens.empty()) throw DegenerateVocabularyError();
    std::uint32_t id = 0;
    for (auto& [token, st] : out.tokens) st.id = id++;
    return out;
}

SparseVector vectorize(const Vocabulary& vocab, const WeightingConfig& cfg, const BagOfTokens& bag) {
    std::int64_t total = 0;
    std::vector<std::pair<std::uint32_t, double>> raw;
    raw.reserve(bag.size());
    for (const auto& [token, count] : bag) {
        auto it = vocab.tokens.find(token);
        if (it == vocab.tokens.end()) continue;
        total += count;
        raw.emplace_back(it->second.id, static_cast<double>(count) * (cfg.scheme == WeightingScheme::TFIDF
                             ? std::log(static_cast<double>(vocab.n_docs) / it->second.doc_freq)
                             : 1.0));
    }
    SparseVector vec;
    if (total == 0) return vec;
    double norm_sq = 0.0;
    for (auto& [id, w] : raw) {
        w /= static_cast<double>(total);
        norm_sq += w * w;
    }
    if (norm_sq > 0.0) {
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (auto& [id, w] : raw) w *= inv;
    }
    std::sort(raw.begin(), raw.end());
    // Drop exact zeros (e.g. TFIDF tokens present in every document).
    for (const auto& [id, w] : raw) {
        if (w != 0.0) vec.entries.emplace_back(id, w);
    }
    return vec;
}

}  // namespace autotext
