#pragma once

#include <string>
#include <vector>

namespace autotext {

enum class MetricKind { Accuracy, MacroF1, MicroF1, Precision, Recall };

const char* metric_name(MetricKind kind);
MetricKind parse_metric(const std::string& name);

struct ConfusionCounts {
    struct PerClass {
        std::string label;
        long tp = 0;
        long fp = 0;
        long fn = 0;
        long support = 0;  // occurrences in the true labels
    };
    std::vector<PerClass> classes;  // sorted by label
    long total = 0;
};

// Per-class counts over the union of labels seen in either list.
// Throws std::invalid_argument on empty or mismatched lists.
ConfusionCounts confusion(const std::vector<std::string>& true_labels,
                          const std::vector<std::string>& pred_labels);

// Accuracy, macro/micro F1, macro-averaged precision/recall. Macro averages
// run over classes present in the true labels; 0/0 components count as 0.
double evaluate(MetricKind kind, const ConfusionCounts& counts);

}  // namespace autotext
