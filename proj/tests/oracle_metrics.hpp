#pragma once

// Brute-force metric recomputation straight from raw label lists; kept
// independent of the ConfusionCounts path it checks.

#include <set>
#include <string>
#include <vector>

namespace autotext::testing {

inline double oracle_accuracy(const std::vector<std::string>& t, const std::vector<std::string>& p) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < t.size(); ++i) hits += t[i] == p[i];
    return static_cast<double>(hits) / static_cast<double>(t.size());
}

inline double oracle_macro_f1(const std::vector<std::string>& t, const std::vector<std::string>& p) {
    std::set<std::string> classes(t.begin(), t.end());
    double sum = 0.0;
    for (const auto& cls : classes) {
        std::size_t tp = 0, in_pred = 0, in_true = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (p[i] == cls) ++in_pred;
            if (t[i] == cls) ++in_true;
            if (t[i] == cls && p[i] == cls) ++tp;
        }
        const double prec = in_pred == 0 ? 0.0 : static_cast<double>(tp) / in_pred;
        const double rec = in_true == 0 ? 0.0 : static_cast<double>(tp) / in_true;
        sum += (prec + rec) == 0.0 ? 0.0 : 2.0 * prec * rec / (prec + rec);
    }
    return sum / static_cast<double>(classes.size());
}

inline double oracle_micro_f1(const std::vector<std::string>& t, const std::vector<std::string>& p) {
    std::set<std::string> classes(t.begin(), t.end());
    for (const auto& label : p) classes.insert(label);
    std::size_t tp = 0, fp = 0, fn = 0;
    for (const auto& cls : classes) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] == cls && p[i] == cls) ++tp;
            else if (p[i] == cls) ++fp;
            else if (t[i] == cls) ++fn;
        }
    }
    const double prec = (tp + fp) == 0 ? 0.0 : static_cast<double>(tp) / (tp + fp);
    const double rec = (tp + fn) == 0 ? 0.0 : static_cast<double>(tp) / (tp + fn);
    return (prec + rec) == 0.0 ? 0.0 : 2.0 * prec * rec / (prec + rec);
}

}  // namespace autotext::testing
