#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

namespace autotext {

// Pattern-oriented handlers (hashtag/number/url/user) support three modes,
// the remaining handlers (diacritic/duplication/punctuation/case) two.
enum class PatternKind { Hashtag, Number, Url, User };
enum class PatternMode { Remove, Group, Identity };
enum class ToggleMode { Apply, Identity };

struct PreprocessConfig {
    PatternMode hashtag = PatternMode::Identity;
    PatternMode number = PatternMode::Identity;
    PatternMode url = PatternMode::Identity;
    PatternMode user = PatternMode::Identity;
    ToggleMode diacritic = ToggleMode::Identity;
    ToggleMode duplication = ToggleMode::Identity;
    ToggleMode punctuation = ToggleMode::Identity;
    ToggleMode case_fold = ToggleMode::Identity;

    bool operator==(const PreprocessConfig&) const = default;
};

// Number of distinct PreprocessConfig values: 3^4 * 2^4 = 1296.
inline constexpr int kPreprocessConfigCount = 1296;

// Slot names in the fixed application order; part of the serialized format.
inline constexpr const char* kPreprocessSlotNames[8] = {
    "hashtag", "number", "url", "user", "diacritic", "duplication", "punctuation", "case"};

// Applies one pattern handler: Remove deletes matches, Group substitutes the
// kind's sentinel token (_htag, _num, _url, _usr), Identity returns the input.
std::string handle_pattern(PatternKind kind, PatternMode mode, std::string_view text);

std::string remove_diacritics(std::string_view text);
std::string remove_duplicates(std::string_view text);
std::string remove_punctuation(std::string_view text);
std::string lower_case(std::string_view text);

// Full chain f = f_case o f_punc o f_dup o f_diac o f_usr o f_url o f_num o f_htag.
std::string apply_transform_chain(const PreprocessConfig& cfg, std::string_view text);

const char* pattern_mode_name(PatternMode mode);
const char* toggle_mode_name(ToggleMode mode);
PatternMode parse_pattern_mode(const std::string& name);
ToggleMode parse_toggle_mode(const std::string& name);

nlohmann::ordered_json preprocess_to_json(const PreprocessConfig& cfg);
PreprocessConfig preprocess_from_json(const nlohmann::json& j);

}  // namespace autotext
