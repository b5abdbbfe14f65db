#pragma once

#include <string>
#include <vector>

#include "autotext/text_model.hpp"

namespace autotext {

struct DatasetRecord {
    std::string text;
    std::string label;
};

struct LabeledDataset {
    std::vector<DatasetRecord> items;

    std::size_t size() const { return items.size(); }
    int distinct_labels() const;
};

enum class DatasetFormat { JsonLines, Csv };

DatasetFormat parse_dataset_format(const std::string& name);

// jsonlines: one {"text":..., "label":...} object per line.
// csv: header row naming text,label with RFC-4180 quoting.
// Errors carry the 1-based line number of the first offending record.
// With require_label=false a missing label is tolerated (prediction input).
LabeledDataset load_dataset(const std::string& path, DatasetFormat format,
                            bool require_label = true);

// Canonical single-document JSON model file; saving the same model twice
// yields byte-identical output.
void save_model(const TextModel& model, const std::string& path);
TextModel load_model(const std::string& path);

}  // namespace autotext
