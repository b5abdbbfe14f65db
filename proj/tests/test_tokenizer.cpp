#include "doctest.h"

#include <random>

#include "autotext/tokenizer.hpp"

using namespace autotext;

TEST_CASE("word n-grams match the worked example") {
    const auto toks = word_ngrams(3, "The red car is in front of the tree");
    const std::vector<std::string> expected = {
        "The red car", "red car is",  "car is in",    "is in front",
        "in front of", "front of the", "of the tree"};
    CHECK(toks == expected);
}

TEST_CASE("word n-grams edge cases") {
    CHECK(word_ngrams(1, "hello") == std::vector<std::string>{"hello"});
    CHECK(word_ngrams(2, "hi").empty());
    CHECK(word_ngrams(1, "   ").empty());
}

TEST_CASE("char n-grams match the worked example") {
    const auto toks = char_ngrams(4, "I like the red car");
    const std::vector<std::string> expected = {
        "I li", " lik", "like", "ike ", "ke t", "e th", " the", "the ",
        "he r", "e re", " red", "red ", "ed c", "d ca", " car"};
    CHECK(toks == expected);
}

TEST_CASE("char n-grams edge cases") {
    CHECK(char_ngrams(1, "ab") == std::vector<std::string>{"a", "b"});
    CHECK(char_ngrams(9, "short").empty());
    // code points, not bytes
    CHECK(char_ngrams(1, "ñu") == std::vector<std::string>{"\xc3\xb1", "u"});
}

TEST_CASE("skip-grams match the worked example") {
    const auto toks = skip_grams(2, 1, "I like the red car");
    CHECK(toks == std::vector<std::string>{"I~the", "like~red", "the~car"});
}

TEST_CASE("skip-grams edge cases") {
    CHECK(skip_grams(2, 1, "a b").empty());
    CHECK(skip_grams(3, 1, "a b c d e") == std::vector<std::string>{"a~c~e"});
    CHECK(skip_grams(2, 2, "a b c d") == std::vector<std::string>{"a~d"});
}

TEST_CASE("token count formula") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 100; ++iter) {
        const int m = static_cast<int>(rng() % 12);
        std::string text;
        for (int i = 0; i < m; ++i) {
            if (!text.empty()) text += ' ';
            text += static_cast<char>('a' + (rng() % 26));
        }
        for (int n = 1; n <= 3; ++n) {
            CHECK(static_cast<int>(word_ngrams(n, text).size()) == std::max(0, m - n + 1));
        }
        const int chars = m == 0 ? 0 : 2 * m - 1;  // single-char words + spaces
        for (int n = 1; n <= 9; ++n) {
            CHECK(static_cast<int>(char_ngrams(n, text).size()) == std::max(0, chars - n + 1));
        }
        for (auto [w, s] : {std::pair{3, 1}, {2, 2}, {2, 1}}) {
            CHECK(static_cast<int>(skip_grams(w, s, text).size()) ==
                  std::max(0, m - (w + (w - 1) * s) + 1));
        }
    }
}

TEST_CASE("tokenize unions enabled families with namespaces") {
    TokenizerSet set;
    set.enabled[tokenizer_index("w1")] = true;
    BagOfTokens bag = tokenize(set, "a b a");
    CHECK(bag.size() == 2);
    CHECK(bag.at("w1:a") == 2);
    CHECK(bag.at("w1:b") == 1);

    set.enabled[tokenizer_index("c1")] = true;
    bag = tokenize(set, "ab");
    CHECK(bag.at("w1:ab") == 1);
    CHECK(bag.at("c1:a") == 1);
    CHECK(bag.at("c1:b") == 1);
}

TEST_CASE("empty tokenizer set is rejected") {
    TokenizerSet set;
    CHECK_THROWS_AS(tokenize(set, "anything"), std::invalid_argument);
}

TEST_CASE("union multiplicities are the per-family sums") {
    std::mt19937_64 rng(21);
    static const char* words[] = {"red", "car", "the", "a"};
    for (int iter = 0; iter < 50; ++iter) {
        std::string text;
        const int m = 1 + static_cast<int>(rng() % 8);
        for (int i = 0; i < m; ++i) {
            if (!text.empty()) text += ' ';
            text += words[rng() % 4];
        }
        TokenizerSet set;
        while (!set.any()) {
            for (int t = 0; t < kTokenizerCount; ++t) set.enabled[t] = rng() % 2 == 0;
        }
        const BagOfTokens bag = tokenize(set, text);
        BagOfTokens manual;
        const auto& ids = all_tokenizers();
        const auto& names = tokenizer_names();
        std::size_t total = 0;
        for (int t = 0; t < kTokenizerCount; ++t) {
            if (!set.enabled[t]) continue;
            std::vector<std::string> toks;
            switch (ids[t].family) {
                case TokenizerFamily::WordNgram: toks = word_ngrams(ids[t].n, text); break;
                case TokenizerFamily::CharNgram: toks = char_ngrams(ids[t].n, text); break;
                case TokenizerFamily::SkipGram: toks = skip_grams(ids[t].n, ids[t].skip, text); break;
            }
            total += toks.size();
            for (const auto& tok : toks) manual[names[t] + ":" + tok] += 1;
        }
        CHECK(bag == manual);
        std::size_t bag_total = 0;
        for (const auto& [tok, count] : bag) bag_total += count;
        CHECK(bag_total == total);
    }
}

TEST_CASE("determinism") {
    TokenizerSet set;
    set.enabled[tokenizer_index("c3")] = true;
    set.enabled[tokenizer_index("s2.1")] = true;
    CHECK(tokenize(set, "the red car is fast") == tokenize(set, "the red car is fast"));
}

TEST_CASE("tokenizer set JSON round trip") {
    TokenizerSet set;
    set.enabled[tokenizer_index("w1")] = true;
    set.enabled[tokenizer_index("w2")] = true;
    set.enabled[tokenizer_index("c3")] = true;
    set.enabled[tokenizer_index("s2.1")] = true;
    const auto j = tokenizer_set_to_json(set);
    CHECK(j == nlohmann::ordered_json::parse(R"(["w1","w2","c3","s2.1"])"));
    CHECK(tokenizer_set_from_json(j) == set);
    CHECK_THROWS_AS(tokenizer_set_from_json(nlohmann::json::parse(R"(["zz"])")),
                    std::invalid_argument);
}

TEST_CASE("exactly 15 tokenizers exist") {
    CHECK(all_tokenizers().size() == 15);
    CHECK(tokenizer_names().size() == 15);
}
