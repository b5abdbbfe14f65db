#include "doctest.h"

#include <random>

#include "autotext/text_transform.hpp"
#include "autotext/utf8.hpp"

using namespace autotext;

TEST_CASE("all-identity chain leaves text unchanged") {
    PreprocessConfig cfg;
    CHECK(apply_transform_chain(cfg, "Hola #mundo") == "Hola #mundo");
    CHECK(apply_transform_chain(cfg, "") == "");
}

TEST_CASE("hashtag grouping substitutes the sentinel") {
    PreprocessConfig cfg;
    cfg.hashtag = PatternMode::Group;
    CHECK(apply_transform_chain(cfg, "go #rust now") == "go _htag now");
}

TEST_CASE("lowercase plus diacritic removal") {
    PreprocessConfig cfg;
    cfg.case_fold = ToggleMode::Apply;
    cfg.diacritic = ToggleMode::Apply;
    CHECK(apply_transform_chain(cfg, "Árbol") == "arbol");
}

TEST_CASE("pattern handlers") {
    CHECK(handle_pattern(PatternKind::Number, PatternMode::Group, "won 42 times") ==
          "won _num times");
    CHECK(handle_pattern(PatternKind::User, PatternMode::Remove, "cc @bob thanks") ==
          "cc  thanks");
    CHECK(handle_pattern(PatternKind::Url, PatternMode::Identity, "see http://x.io") ==
          "see http://x.io");
    CHECK(handle_pattern(PatternKind::Url, PatternMode::Group, "see http://x.io now") ==
          "see _url now");
    CHECK(handle_pattern(PatternKind::Url, PatternMode::Remove, "at www.ex.com end") ==
          "at  end");
    CHECK(handle_pattern(PatternKind::Hashtag, PatternMode::Remove, "a #b c") == "a  c");
    CHECK(handle_pattern(PatternKind::Number, PatternMode::Group, "pi is 3.14") ==
          "pi is _num");
    CHECK(handle_pattern(PatternKind::Number, PatternMode::Group, "cold -5 deg") ==
          "cold _num deg");
}

TEST_CASE("diacritic removal") {
    CHECK(remove_diacritics("á ä ã â à") == "a a a a a");
    CHECK(remove_diacritics("abc") == "abc");
    CHECK(remove_diacritics("señor café") == "senor cafe");
    // combining mark form (a + U+0301)
    CHECK(remove_diacritics("a\xcc\x81") == "a");
}

TEST_CASE("duplicate collapse") {
    CHECK(remove_duplicates("goool!!!") == "gol!");
    CHECK(remove_duplicates("abab") == "abab");
    CHECK(remove_duplicates("") == "");
}

TEST_CASE("punctuation removal uses the frozen set") {
    CHECK(remove_punctuation("wow!! (really?)") == "wow really");
    CHECK(remove_punctuation("abc") == "abc");
    CHECK(remove_punctuation("#tag") == "#tag");
    CHECK(remove_punctuation("\xc2\xbfqu\xc3\xa9?") == "qu\xc3\xa9");  // inverted marks
}

TEST_CASE("chain applies pattern handlers before punctuation stripping") {
    PreprocessConfig cfg;
    cfg.url = PatternMode::Group;
    cfg.punctuation = ToggleMode::Apply;
    CHECK(apply_transform_chain(cfg, "see http://x.io!") == "see _url");
}

namespace {

std::string random_text(std::mt19937_64& rng) {
    static const char* pieces[] = {"Hola", "#tag", "@usr", "42", "gooo", "café",
                                   "http://x.io", "!!", "a", " ", "Árbol", "-3.5"};
    std::string text;
    const int n = static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i) {
        text += pieces[rng() % (sizeof(pieces) / sizeof(pieces[0]))];
        text += ' ';
    }
    return text;
}

}  // namespace

TEST_CASE("single handlers are idempotent") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        const std::string text = random_text(rng);
        for (PatternKind kind : {PatternKind::Hashtag, PatternKind::Number, PatternKind::Url,
                                 PatternKind::User}) {
            for (PatternMode mode : {PatternMode::Remove, PatternMode::Group}) {
                const std::string once = handle_pattern(kind, mode, text);
                CHECK(handle_pattern(kind, mode, once) == once);
            }
        }
        CHECK(remove_diacritics(remove_diacritics(text)) == remove_diacritics(text));
        CHECK(remove_duplicates(remove_duplicates(text)) == remove_duplicates(text));
        CHECK(remove_punctuation(remove_punctuation(text)) == remove_punctuation(text));
        CHECK(lower_case(lower_case(text)) == lower_case(text));
    }
}

TEST_CASE("duplicate collapse leaves no equal adjacent code points") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 200; ++iter) {
        const auto cps = utf8::decode(remove_duplicates(random_text(rng)));
        for (std::size_t i = 1; i < cps.size(); ++i) CHECK(cps[i] != cps[i - 1]);
    }
}

TEST_CASE("diacritic removal leaves no combining marks") {
    std::mt19937_64 rng(4);
    for (int iter = 0; iter < 200; ++iter) {
        for (char32_t cp : utf8::decode(remove_diacritics(random_text(rng)))) {
            CHECK(!utf8::is_combining_mark(cp));
        }
    }
}

TEST_CASE("chain output is deterministic") {
    PreprocessConfig cfg;
    cfg.hashtag = PatternMode::Group;
    cfg.diacritic = ToggleMode::Apply;
    cfg.case_fold = ToggleMode::Apply;
    const std::string text = "Vé #allí AHORA!!";
    CHECK(apply_transform_chain(cfg, text) == apply_transform_chain(cfg, text));
}

TEST_CASE("preprocess config JSON round trip") {
    PreprocessConfig cfg;
    cfg.number = PatternMode::Remove;
    cfg.duplication = ToggleMode::Apply;
    const auto j = preprocess_to_json(cfg);
    CHECK(j["number"] == "remove");
    CHECK(j["duplication"] == "apply");
    CHECK(preprocess_from_json(j) == cfg);
    // slot order is part of the format
    auto it = j.begin();
    CHECK(it.key() == "hashtag");
}
