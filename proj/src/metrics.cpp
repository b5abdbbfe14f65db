#include "autotext/metrics.hpp"

#include <map>
#include <stdexcept>

namespace autotext {
namespace {

double safe_div(double num, double den) {
    return den == 0.0 ? 0.0 : num / den;
}

double f1(double p, double r) {
    return safe_div(2.0 * p * r, p + r);
}

}  // namespace

const char* metric_name(MetricKind kind) {
    switch (kind) {
        case MetricKind::Accuracy: return "accuracy";
        case MetricKind::MacroF1: return "macro_f1";
        case MetricKind::MicroF1: return "micro_f1";
        case MetricKind::Precision: return "precision";
        case MetricKind::Recall: return "recall";
    }
    return "";
}

MetricKind parse_metric(const std::string& name) {
    if (name == "accuracy") return MetricKind::Accuracy;
    if (name == "macro_f1") return MetricKind::MacroF1;
    if (name == "micro_f1") return MetricKind::MicroF1;
    if (name == "precision") return MetricKind::Precision;
    if (name == "recall") return MetricKind::Recall;
    throw std::invalid_argument("unknown metric: " + name);
}

ConfusionCounts confusion(const std::vector<std::string>& true_labels,
                          const std::vector<std::string>& pred_labels) {
    if (true_labels.empty()) throw std::invalid_argument("empty label lists");
    if (true_labels.size() != pred_labels.size()) {
        throw std::invalid_argument("label list length mismatch");
    }
    std::map<std::string, ConfusionCounts::PerClass> by_label;
    for (std::size_t i = 0; i < true_labels.size(); ++i) {
        const auto& t = true_labels[i];
        const auto& p = pred_labels[i];
        by_label[t].support += 1;
        if (t == p) {
            by_label[t].tp += 1;
        } else {
            by_label[t].fn += 1;
            by_label[p].fp += 1;
        }
    }
    ConfusionCounts counts;
    counts.total = static_cast<long>(true_labels.size());
    for (auto& [label, pc] : by_label) {
        pc.label = label;
        counts.classes.push_back(pc);
    }
    return counts;
}

double evaluate(MetricKind kind, const ConfusionCounts& counts) {
    long tp_sum = 0, fp_sum = 0, fn_sum = 0;
    double macro_f1 = 0.0, macro_p = 0.0, macro_r = 0.0;
    int present = 0;
    for (const auto& pc : counts.classes) {
        tp_sum += pc.tp;
        fp_sum += pc.fp;
        fn_sum += pc.fn;
        if (pc.support == 0) continue;  // predicted-only class, not macro-averaged
        ++present;
        const double p = safe_div(static_cast<double>(pc.tp), static_cast<double>(pc.tp + pc.fp));
        const double r = safe_div(static_cast<double>(pc.tp), static_cast<double>(pc.tp + pc.fn));
        macro_p += p;
        macro_r += r;
        macro_f1 += f1(p, r);
    }
    switch (kind) {
        case MetricKind::Accuracy:
            return safe_div(static_cast<double>(tp_sum), static_cast<double>(counts.total));
        case MetricKind::MacroF1:
            return safe_div(macro_f1, present);
        case MetricKind::MicroF1: {
            const double p = safe_div(static_cast<double>(tp_sum), static_cast<double>(tp_sum + fp_sum));
            const double r = safe_div(static_cast<double>(tp_sum), static_cast<double>(tp_sum + fn_sum));
            return f1(p, r);
        }
        case MetricKind::Precision:
            return safe_div(macro_p, present);
        case MetricKind::Recall:
            return safe_div(macro_r, present);
    }
    return 0.0;
}

}  // namespace autotext
