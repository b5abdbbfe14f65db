#include "autotext/dataset_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace autotext {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, std::size_t line, const std::string& what) {
    throw std::runtime_error(path + ": " + what + " at line " + std::to_string(line));
}

// One RFC-4180 row; returns false on EOF. Quoted fields may span lines.
bool read_csv_row(std::istream& in, std::vector<std::string>& fields, std::size_t& line) {
    fields.clear();
    int c = in.get();
    if (c == EOF) return false;
    std::string field;
    bool quoted = false;
    while (true) {
        if (c == EOF) {
            fields.push_back(std::move(field));
            return true;
        }
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    field.push_back('"');
                    in.get();
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(static_cast<char>(c));
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            fields.push_back(std::move(field));
            return true;
        } else {
            field.push_back(static_cast<char>(c));
        }
        c = in.get();
    }
}

LabeledDataset load_jsonlines(std::istream& in, const std::string& path, bool require_label) {
    LabeledDataset data;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            fail(path, lineno, std::string("malformed JSON (") + e.what() + ")");
        }
        if (!j.is_object() || !j.contains("text") || !j["text"].is_string()) {
            fail(path, lineno, "missing field: text");
        }
        DatasetRecord rec;
        rec.text = j["text"].get<std::string>();
        if (j.contains("label") && j["label"].is_string()) {
            rec.label = j["label"].get<std::string>();
        } else if (require_label) {
            fail(path, lineno, "missing field: label");
        }
        if (require_label && rec.label.empty()) fail(path, lineno, "empty label");
        data.items.push_back(std::move(rec));
    }
    return data;
}

LabeledDataset load_csv(std::istream& in, const std::string& path, bool require_label) {
    LabeledDataset data;
    std::vector<std::string> fields;
    std::size_t line = 1;
    if (!read_csv_row(in, fields, line)) {
        throw std::runtime_error(path + ": empty file");
    }
    std::size_t text_col = fields.size(), label_col = fields.size();
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i] == "text") text_col = i;
        if (fields[i] == "label") label_col = i;
    }
    if (text_col == fields.size()) fail(path, 1, "missing column: text");
    if (label_col == fields.size() && require_label) fail(path, 1, "missing column: label");
    while (true) {
        ++line;
        const std::size_t record_line = line;
        if (!read_csv_row(in, fields, line)) break;
        if (fields.size() == 1 && fields[0].empty()) continue;
        if (text_col >= fields.size()) fail(path, record_line, "missing field: text");
        DatasetRecord rec;
        rec.text = fields[text_col];
        if (label_col < fields.size()) rec.label = fields[label_col];
        if (require_label && rec.label.empty()) fail(path, record_line, "empty label");
        data.items.push_back(std::move(rec));
    }
    return data;
}

}  // namespace

int LabeledDataset::distinct_labels() const {
    std::set<std::string> labels;
    for (const auto& item : items) labels.insert(item.label);
    return static_cast<int>(labels.size());
}

DatasetFormat parse_dataset_format(const std::string& name) {
    if (name == "jsonlines") return DatasetFormat::JsonLines;
    if (name == "csv") return DatasetFormat::Csv;
    throw std::invalid_argument("unknown dataset format: " + name);
}

LabeledDataset load_dataset(const std::string& path, DatasetFormat format, bool require_label) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);
    LabeledDataset data = format == DatasetFormat::JsonLines
                              ? load_jsonlines(in, path, require_label)
                              : load_csv(in, path, require_label);
    if (data.items.empty()) throw std::runtime_error(path + ": empty dataset");
    return data;
}

void save_model(const TextModel& model, const std::string& path) {
    ordered_json j;
    j["format_version"] = model.format_version;
    j["prep"] = preprocess_to_json(model.prep);
    j["tokenizers"] = tokenizer_set_to_json(model.tokenizers);
    j["weighting"] = {{"alpha", model.weighting.max_filter_alpha},
                      {"min_freq", model.weighting.min_filter_freq},
                      {"scheme", weighting_scheme_name(model.weighting.scheme)}};
    ordered_json vocab;
    vocab["n_docs"] = model.vocab.n_docs;
    ordered_json tokens = ordered_json::array();
    for (const auto& [token, st] : model.vocab.tokens) {
        tokens.push_back({token, st.collection_freq, st.doc_freq});
    }
    vocab["tokens"] = std::move(tokens);  // id order == array order
    j["vocab"] = std::move(vocab);
    ordered_json clf;
    clf["classes"] = model.classifier.classes;
    clf["dim"] = model.classifier.dim;
    clf["hyper_c"] = model.classifier.hyper_c;
    clf["bias"] = model.classifier.bias;
    clf["weights"] = model.classifier.weights;
    j["classifier"] = std::move(clf);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write model file: " + path);
    out << j.dump() << '\n';
    if (!out) throw std::runtime_error("failed writing model file: " + path);
}

TextModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open model file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": corrupted model file (" + e.what() + ")");
    }
    TextModel model;
    model.format_version = j.at("format_version").get<int>();
    if (model.format_version != 1) {
        throw std::runtime_error(path + ": unsupported model format version " +
                                 std::to_string(model.format_version));
    }
    model.prep = preprocess_from_json(j.at("prep"));
    model.tokenizers = tokenizer_set_from_json(j.at("tokenizers"));
    model.weighting.max_filter_alpha = j.at("weighting").at("alpha").get<double>();
    model.weighting.min_filter_freq = j.at("weighting").at("min_freq").get<int>();
    model.weighting.scheme = parse_weighting_scheme(j.at("weighting").at("scheme").get<std::string>());
    model.vocab.n_docs = j.at("vocab").at("n_docs").get<int>();
    std::uint32_t id = 0;
    for (const auto& entry : j.at("vocab").at("tokens")) {
        Vocabulary::Stats st;
        st.id = id++;
        st.collection_freq = entry.at(1).get<std::int64_t>();
        st.doc_freq = entry.at(2).get<int>();
        model.vocab.tokens.emplace(entry.at(0).get<std::string>(), st);
    }
    const auto& clf = j.at("classifier");
    model.classifier.classes = clf.at("classes").get<std::vector<std::string>>();
    model.classifier.dim = clf.at("dim").get<std::size_t>();
    model.classifier.hyper_c = clf.at("hyper_c").get<double>();
    model.classifier.bias = clf.at("bias").get<std::vector<double>>();
    model.classifier.weights = clf.at("weights").get<std::vector<std::vector<double>>>();
    if (model.classifier.dim != model.vocab.size()) {
        throw std::runtime_error(path + ": vocabulary/classifier dimension mismatch");
    }
    return model;
}

}  // namespace autotext
