#include "autotext/tokenizer.hpp"

#include <cctype>
#include <stdexcept>

#include "autotext/utf8.hpp"

namespace autotext {
namespace {

std::vector<std::string> split_words(std::string_view text) {
    std::vector<std::string> words;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) words.emplace_back(text.substr(i, j - i));
        i = j;
    }
    return words;
}

// Collapses whitespace runs to single spaces and trims the ends, so that
// char n-grams see the same word spacing regardless of input formatting.
std::string normalize_spacing(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            pending_space = !out.empty();
        } else {
            if (pending_space) out.push_back(' ');
            pending_space = false;
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace

const std::array<TokenizerId, kTokenizerCount>& all_tokenizers() {
    static const std::array<TokenizerId, kTokenizerCount> ids = {{
        {TokenizerFamily::WordNgram, 1, 0},
        {TokenizerFamily::WordNgram, 2, 0},
        {TokenizerFamily::WordNgram, 3, 0},
        {TokenizerFamily::CharNgram, 1, 0},
        {TokenizerFamily::CharNgram, 2, 0},
        {TokenizerFamily::CharNgram, 3, 0},
        {TokenizerFamily::CharNgram, 4, 0},
        {TokenizerFamily::CharNgram, 5, 0},
        {TokenizerFamily::CharNgram, 6, 0},
        {TokenizerFamily::CharNgram, 7, 0},
        {TokenizerFamily::CharNgram, 8, 0},
        {TokenizerFamily::CharNgram, 9, 0},
        {TokenizerFamily::SkipGram, 3, 1},
        {TokenizerFamily::SkipGram, 2, 2},
        {TokenizerFamily::SkipGram, 2, 1},
    }};
    return ids;
}

const std::array<std::string, kTokenizerCount>& tokenizer_names() {
    static const std::array<std::string, kTokenizerCount> names = {
        "w1", "w2", "w3", "c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9",
        "s3.1", "s2.2", "s2.1"};
    return names;
}

int tokenizer_index(const std::string& name) {
    const auto& names = tokenizer_names();
    for (int i = 0; i < kTokenizerCount; ++i) {
        if (names[i] == name) return i;
    }
    throw std::invalid_argument("unknown tokenizer: " + name);
}

bool TokenizerSet::any() const {
    for (bool b : enabled) {
        if (b) return true;
    }
    return false;
}

int TokenizerSet::count() const {
    int c = 0;
    for (bool b : enabled) c += b;
    return c;
}

std::vector<std::string> word_ngrams(int n, std::string_view text) {
    const auto words = split_words(text);
    std::vector<std::string> out;
    if (static_cast<int>(words.size()) < n) return out;
    out.reserve(words.size() - n + 1);
    for (std::size_t i = 0; i + n <= words.size(); ++i) {
        std::string tok = words[i];
        for (int k = 1; k < n; ++k) {
            tok += ' ';
            tok += words[i + k];
        }
        out.push_back(std::move(tok));
    }
    return out;
}

std::vector<std::string> char_ngrams(int n, std::string_view text) {
    const std::string norm = normalize_spacing(text);
    const auto cps = utf8::decode(norm);
    std::vector<std::string> out;
    if (static_cast<int>(cps.size()) < n) return out;
    out.reserve(cps.size() - n + 1);
    for (std::size_t i = 0; i + n <= cps.size(); ++i) {
        std::string tok;
        for (int k = 0; k < n; ++k) utf8::append(cps[i + k], tok);
        out.push_back(std::move(tok));
    }
    return out;
}

std::vector<std::string> skip_grams(int w, int s, std::string_view text) {
    const auto words = split_words(text);
    std::vector<std::string> out;
    const int span = (w - 1) * (s + 1) + 1;  // words covered by one token
    const int m = static_cast<int>(words.size());
    if (m < span) return out;
    out.reserve(m - span + 1);
    for (int i = 0; i + span <= m; ++i) {
        std::string tok = words[i];
        for (int k = 1; k < w; ++k) {
            tok += '~';
            tok += words[i + k * (s + 1)];
        }
        out.push_back(std::move(tok));
    }
    return out;
}

BagOfTokens tokenize(const TokenizerSet& set, std::string_view text) {
    if (!set.any()) throw std::invalid_argument("tokenizer set is empty");
    BagOfTokens bag;
    const auto& ids = all_tokenizers();
    const auto& names = tokenizer_names();
    for (int i = 0; i < kTokenizerCount; ++i) {
        if (!set.enabled[i]) continue;
        std::vector<std::string> toks;
        switch (ids[i].family) {
            case TokenizerFamily::WordNgram: toks = word_ngrams(ids[i].n, text); break;
            case TokenizerFamily::CharNgram: toks = char_ngrams(ids[i].n, text); break;
            case TokenizerFamily::SkipGram: toks = skip_grams(ids[i].n, ids[i].skip, text); break;
        }
        for (auto& t : toks) {
            bag[names[i] + ":" + t] += 1;
        }
    }
    return bag;
}

nlohmann::ordered_json tokenizer_set_to_json(const TokenizerSet& set) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    const auto& names = tokenizer_names();
    for (int i = 0; i < kTokenizerCount; ++i) {
        if (set.enabled[i]) arr.push_back(names[i]);
    }
    return arr;
}

TokenizerSet tokenizer_set_from_json(const nlohmann::json& j) {
    TokenizerSet set;
    for (const auto& name : j) {
        set.enabled[tokenizer_index(name.get<std::string>())] = true;
    }
    return set;
}

}  // namespace autotext
