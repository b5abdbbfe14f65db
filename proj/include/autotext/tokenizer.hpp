#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"

namespace autotext {

enum class TokenizerFamily { WordNgram, CharNgram, SkipGram };

struct TokenizerId {
    TokenizerFamily family;
    int n = 0;     // word n in 1..3, char n in 1..9, skip-gram window w
    int skip = 0;  // skip-grams only

    bool operator==(const TokenizerId&) const = default;
};

// The 15 tokenizers: w1..w3, c1..c9, s3.1, s2.2, s2.1 (fixed order).
inline constexpr int kTokenizerCount = 15;
const std::array<TokenizerId, kTokenizerCount>& all_tokenizers();
const std::array<std::string, kTokenizerCount>& tokenizer_names();
int tokenizer_index(const std::string& name);  // throws on unknown name

struct TokenizerSet {
    std::array<bool, kTokenizerCount> enabled{};

    bool any() const;
    int count() const;
    bool operator==(const TokenizerSet&) const = default;
};

// Multiset of token strings; multiplicities are always >= 1.
using BagOfTokens = std::unordered_map<std::string, int>;

// Raw per-family tokenizers; tokens are emitted without namespace prefixes.
std::vector<std::string> word_ngrams(int n, std::string_view text);
std::vector<std::string> char_ngrams(int n, std::string_view text);
std::vector<std::string> skip_grams(int w, int s, std::string_view text);

// Union of all enabled tokenizers; tokens are prefixed with the tokenizer
// name ("w1:", "c4:", "s2.1:") so families never collide in the vocabulary.
// Throws std::invalid_argument when no tokenizer is enabled.
BagOfTokens tokenize(const TokenizerSet& set, std::string_view text);

nlohmann::ordered_json tokenizer_set_to_json(const TokenizerSet& set);
TokenizerSet tokenizer_set_from_json(const nlohmann::json& j);

}  // namespace autotext
