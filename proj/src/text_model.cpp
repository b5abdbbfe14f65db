#include "autotext/text_model.hpp"

namespace autotext {

SparseVector model_vectorize(const TextModel& model, std::string_view text) {
    const std::string transformed = apply_transform_chain(model.prep, text);
    const BagOfTokens bag = tokenize(model.tokenizers, transformed);
    return vectorize(model.vocab, model.weighting, bag);
}

const std::string& model_predict(const TextModel& model, std::string_view text) {
    return predict(model.classifier, model_vectorize(model, text));
}

}  // namespace autotext
