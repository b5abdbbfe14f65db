#include "autotext/text_transform.hpp"

#include <cctype>
#include <stdexcept>

#include "autotext/utf8.hpp"

namespace autotext {
namespace {

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_space(char c) {
    return std::isspace(static_cast<unsigned char>(c));
}

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

// Returns the match length of the given pattern kind at position i, or 0.
std::size_t match_at(PatternKind kind, std::string_view text, std::size_t i) {
    const std::size_t n = text.size();
    switch (kind) {
        case PatternKind::Hashtag:
        case PatternKind::User: {
            const char lead = kind == PatternKind::Hashtag ? '#' : '@';
            if (text[i] != lead || i + 1 >= n || !is_word_char(text[i + 1])) return 0;
            std::size_t j = i + 1;
            while (j < n && is_word_char(text[j])) ++j;
            return j - i;
        }
        case PatternKind::Number: {
            std::size_t j = i;
            const bool sign_ok = i == 0 || !is_word_char(text[i - 1]);
            if (sign_ok && (text[j] == '+' || text[j] == '-') && j + 1 < n && is_digit(text[j + 1])) ++j;
            if (j >= n || !is_digit(text[j])) return 0;
            while (j < n && is_digit(text[j])) ++j;
            if (j + 1 < n && text[j] == '.' && is_digit(text[j + 1])) {
                ++j;
                while (j < n && is_digit(text[j])) ++j;
            }
            return j - i;
        }
        case PatternKind::Url: {
            std::size_t start = 0;
            if (text.substr(i, 7) == "http://") start = 7;
            else if (text.substr(i, 8) == "https://") start = 8;
            else if (text.substr(i, 4) == "www.") start = 4;
            if (start == 0) return 0;
            std::size_t j = i + start;
            while (j < n && !is_space(text[j])) ++j;
            return j - i;
        }
    }
    return 0;
}

const char* sentinel(PatternKind kind) {
    switch (kind) {
        case PatternKind::Hashtag: return "_htag";
        case PatternKind::Number: return "_num";
        case PatternKind::Url: return "_url";
        case PatternKind::User: return "_usr";
    }
    return "";
}

}  // namespace

std::string handle_pattern(PatternKind kind, PatternMode mode, std::string_view text) {
    if (mode == PatternMode::Identity) return std::string(text);
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        const std::size_t len = match_at(kind, text, i);
        if (len > 0) {
            if (mode == PatternMode::Group) out += sentinel(kind);
            i += len;
        } else {
            out.push_back(text[i]);
            ++i;
        }
    }
    return out;
}

std::string remove_diacritics(std::string_view text) {
    const auto cps = utf8::decode(text);
    std::string out;
    out.reserve(text.size());
    for (char32_t cp : cps) {
        if (utf8::is_combining_mark(cp)) continue;
        utf8::append(utf8::strip_diacritic(cp), out);
    }
    return out;
}

std::string remove_duplicates(std::string_view text) {
    const auto cps = utf8::decode(text);
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < cps.size(); ++i) {
        if (i > 0 && cps[i] == cps[i - 1]) continue;
        utf8::append(cps[i], out);
    }
    return out;
}

std::string remove_punctuation(std::string_view text) {
    // Frozen punctuation set: ; : . , - ' " ( ) [ ] { } ~ < > ? ! plus the
    // inverted marks U+00A1 and U+00BF. '#' and '@' are reserved for the
    // pattern handlers and stay untouched.
    static constexpr std::string_view kAscii = ";:.,-'\"()[]{}~<>?!";
    const auto cps = utf8::decode(text);
    std::string out;
    out.reserve(text.size());
    for (char32_t cp : cps) {
        if (cp < 0x80 && kAscii.find(static_cast<char>(cp)) != std::string_view::npos) continue;
        if (cp == 0x00A1 || cp == 0x00BF) continue;
        utf8::append(cp, out);
    }
    return out;
}

std::string lower_case(std::string_view text) {
    const auto cps = utf8::decode(text);
    std::string out;
    out.reserve(text.size());
    for (char32_t cp : cps) utf8::append(utf8::to_lower(cp), out);
    return out;
}

std::string apply_transform_chain(const PreprocessConfig& cfg, std::string_view text) {
    std::string s = handle_pattern(PatternKind::Hashtag, cfg.hashtag, text);
    s = handle_pattern(PatternKind::Number, cfg.number, s);
    s = handle_pattern(PatternKind::Url, cfg.url, s);
    s = handle_pattern(PatternKind::User, cfg.user, s);
    if (cfg.diacritic == ToggleMode::Apply) s = remove_diacritics(s);
    if (cfg.duplication == ToggleMode::Apply) s = remove_duplicates(s);
    if (cfg.punctuation == ToggleMode::Apply) s = remove_punctuation(s);
    if (cfg.case_fold == ToggleMode::Apply) s = lower_case(s);
    return s;
}

const char* pattern_mode_name(PatternMode mode) {
    switch (mode) {
        case PatternMode::Remove: return "remove";
        case PatternMode::Group: return "group";
        case PatternMode::Identity: return "identity";
    }
    return "";
}

const char* toggle_mode_name(ToggleMode mode) {
    return mode == ToggleMode::Apply ? "apply" : "identity";
}

PatternMode parse_pattern_mode(const std::string& name) {
    if (name == "remove") return PatternMode::Remove;
    if (name == "group") return PatternMode::Group;
    if (name == "identity") return PatternMode::Identity;
    throw std::invalid_argument("unknown pattern mode: " + name);
}

ToggleMode parse_toggle_mode(const std::string& name) {
    if (name == "apply") return ToggleMode::Apply;
    if (name == "identity") return ToggleMode::Identity;
    throw std::invalid_argument("unknown toggle mode: " + name);
}

nlohmann::ordered_json preprocess_to_json(const PreprocessConfig& cfg) {
    nlohmann::ordered_json j;
    j["hashtag"] = pattern_mode_name(cfg.hashtag);
    j["number"] = pattern_mode_name(cfg.number);
    j["url"] = pattern_mode_name(cfg.url);
    j["user"] = pattern_mode_name(cfg.user);
    j["diacritic"] = toggle_mode_name(cfg.diacritic);
    j["duplication"] = toggle_mode_name(cfg.duplication);
    j["punctuation"] = toggle_mode_name(cfg.punctuation);
    j["case"] = toggle_mode_name(cfg.case_fold);
    return j;
}

PreprocessConfig preprocess_from_json(const nlohmann::json& j) {
    PreprocessConfig cfg;
    cfg.hashtag = parse_pattern_mode(j.at("hashtag").get<std::string>());
    cfg.number = parse_pattern_mode(j.at("number").get<std::string>());
    cfg.url = parse_pattern_mode(j.at("url").get<std::string>());
    cfg.user = parse_pattern_mode(j.at("user").get<std::string>());
    cfg.diacritic = parse_toggle_mode(j.at("diacritic").get<std::string>());
    cfg.duplication = parse_toggle_mode(j.at("duplication").get<std::string>());
    cfg.punctuation = parse_toggle_mode(j.at("punctuation").get<std::string>());
    cfg.case_fold = parse_toggle_mode(j.at("case").get<std::string>());
    return cfg;
}

}  // namespace autotext
