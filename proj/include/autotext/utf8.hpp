#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace autotext::utf8 {

// Decodes a UTF-8 string into code points. Invalid bytes are interpreted
// as Latin-1 so that arbitrary byte streams never abort the pipeline.
std::vector<char32_t> decode(std::string_view text);

void append(char32_t cp, std::string& out);
std::string encode(const std::vector<char32_t>& cps);

// Maps a precomposed Latin letter to its unaccented base (Á -> A, ñ -> n);
// returns the input unchanged when no mapping applies.
char32_t strip_diacritic(char32_t cp);

// True for combining marks (U+0300..U+036F and friends).
bool is_combining_mark(char32_t cp);

// Simple case folding for ASCII, Latin-1 and Latin Extended ranges.
char32_t to_lower(char32_t cp);

}  // namespace autotext::utf8
