#pragma once

#include <string>
#include <string_view>

#include "autotext/linear_classifier.hpp"
#include "autotext/text_transform.hpp"
#include "autotext/tokenizer.hpp"
#include "autotext/vector_space.hpp"

namespace autotext {

// The deployable artifact: preprocessing + tokenizers + fitted vocabulary
// and weighting statistics + trained classifier.
struct TextModel {
    int format_version = 1;
    PreprocessConfig prep;
    TokenizerSet tokenizers;
    WeightingConfig weighting;
    Vocabulary vocab;
    LinearModel classifier;
};

SparseVector model_vectorize(const TextModel& model, std::string_view text);
const std::string& model_predict(const TextModel& model, std::string_view text);

}  // namespace autotext
