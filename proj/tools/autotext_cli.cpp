// autotext: builds text classifiers by searching a combinatorial space of
// preprocessing, tokenizer, and weighting choices.
//
// Subcommands: optimize, train, predict, evaluate, space.
// Exit codes: 0 success, 1 runtime failure, 2 usage/validation error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "autotext/config_space.hpp"
#include "autotext/dataset_io.hpp"
#include "autotext/model_selection.hpp"

namespace {

using namespace autotext;

struct CommonFlags {
    std::string data_path;
    std::string format = "jsonlines";
    std::string metric = "macro_f1";
};

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing file: " + path);
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return nlohmann::json::parse(in);
}

std::uint64_t effective_seed(const CLI::App* cmd, std::uint64_t flag_seed) {
    if (cmd->count("--seed") > 0) return flag_seed;
    if (const char* env = std::getenv("AUTOTEXT_SEED")) {
        return static_cast<std::uint64_t>(std::strtoull(env, nullptr, 10));
    }
    return flag_seed;
}

int run_optimize(const CLI::App* cmd, const CommonFlags& common, const std::string& scheme_name,
                 int k, double beta, int samples, std::uint64_t seed, int threads,
                 const std::string& out_config, const std::string& report_path) {
    const auto data = load_dataset(common.data_path, parse_dataset_format(common.format));
    if (data.distinct_labels() < 2) {
        std::cerr << "error: dataset needs at least 2 distinct labels\n";
        return 2;
    }
    ValidationScheme scheme;
    scheme.kind = scheme_name == "kfold" ? ValidationScheme::Kind::KFold
                                         : ValidationScheme::Kind::BinaryPartition;
    scheme.k = k;
    scheme.beta = beta;
    scheme.seed = effective_seed(cmd, seed);

    const SpaceDescriptor desc = default_space();
    OptimizeOptions opts;
    opts.samples = samples;
    opts.seed = scheme.seed;
    opts.threads = threads;

    SearchState state;
    const ConfigValues best =
        optimize(desc, data, scheme, parse_metric(common.metric), opts, state);

    if (!out_config.empty()) {
        write_text_file(out_config, config_to_json(desc, best).dump(2) + "\n");
    }
    if (!report_path.empty()) {
        write_text_file(report_path, search_report(desc, state).dump(2) + "\n");
    }
    std::cout << std::fixed << std::setprecision(6)
              << state.memo.at(canonical_encoding(desc, best)) << "\n";
    return 0;
}

int run_train(const std::string& data_path, const std::string& format,
              const std::string& config_path, const std::string& out_model) {
    const auto data = load_dataset(data_path, parse_dataset_format(format));
    const SpaceDescriptor desc = default_space();
    const ConfigValues values = config_from_json(desc, read_json_file(config_path));
    const TextModel model = fit_final(decode_pipeline(desc, values), data);
    save_model(model, out_model);
    return 0;
}

int run_predict(const std::string& model_path, const std::string& data_path,
                const std::string& format, const std::string& out_path) {
    const TextModel model = load_model(model_path);
    const auto data = load_dataset(data_path, parse_dataset_format(format), false);
    std::string out;
    for (const auto& item : data.items) {
        nlohmann::ordered_json j;
        j["text"] = item.text;
        j["predicted"] = model_predict(model, item.text);
        out += j.dump();
        out += '\n';
    }
    write_text_file(out_path, out);
    return 0;
}

int run_evaluate(const std::string& model_path, const std::string& data_path,
                 const std::string& format, const std::string& metric) {
    const TextModel model = load_model(model_path);
    const auto data = load_dataset(data_path, parse_dataset_format(format));
    std::vector<std::string> truth, preds;
    for (const auto& item : data.items) {
        truth.push_back(item.label);
        preds.push_back(model_predict(model, item.text));
    }
    const double value = evaluate(parse_metric(metric), confusion(truth, preds));
    std::cout << std::fixed << std::setprecision(6) << value << "\n";
    return 0;
}

int run_space(bool describe, bool size, const std::string& neighbors_path) {
    const SpaceDescriptor desc = default_space();
    if (describe) {
        for (const auto& slot : desc.slots) {
            std::cout << slot.name << ":";
            for (const auto& v : slot.domain) std::cout << " " << v;
            std::cout << "\n";
        }
        return 0;
    }
    if (size) {
        std::cout << space_size(desc) << "\n";
        return 0;
    }
    if (!neighbors_path.empty()) {
        const ConfigValues c = config_from_json(desc, read_json_file(neighbors_path));
        for (const auto& nb : neighborhood(desc, c, 1)) {
            std::cout << config_to_json(desc, nb).dump() << "\n";
        }
        return 0;
    }
    std::cerr << "error: one of --describe, --size, --neighbors is required\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"autotext: automatic text classifier construction"};
    app.require_subcommand(1);

    CommonFlags common;
    std::string scheme_name = "kfold";
    int k = 3;
    double beta = 0.7;
    int samples = 32;
    std::uint64_t seed = 0;
    int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::string out_config, report_path, config_path, model_path, out_model, out_path;
    bool describe = false, size_flag = false;
    std::string neighbors_path;

    auto* opt = app.add_subcommand("optimize", "search for the best configuration");
    opt->add_option("--data", common.data_path)->required();
    opt->add_option("--format", common.format)->check(CLI::IsMember({"jsonlines", "csv"}));
    opt->add_option("--metric", common.metric)
        ->check(CLI::IsMember({"macro_f1", "micro_f1", "accuracy", "precision", "recall"}));
    opt->add_option("--scheme", scheme_name)->check(CLI::IsMember({"kfold", "binary"}));
    opt->add_option("--k", k)->check(CLI::Range(2, 1000000));
    opt->add_option("--beta", beta)->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)));
    opt->add_option("--samples", samples)->check(CLI::PositiveNumber);
    opt->add_option("--seed", seed);
    opt->add_option("--threads", threads)->check(CLI::PositiveNumber);
    opt->add_option("--out-config", out_config);
    opt->add_option("--report", report_path);

    auto* train_cmd = app.add_subcommand("train", "train a final model from a configuration");
    train_cmd->add_option("--data", common.data_path)->required();
    train_cmd->add_option("--format", common.format)->check(CLI::IsMember({"jsonlines", "csv"}));
    train_cmd->add_option("--config", config_path)->required()->check(CLI::ExistingFile);
    train_cmd->add_option("--out-model", out_model)->required();

    auto* predict_cmd = app.add_subcommand("predict", "predict labels for a dataset");
    predict_cmd->add_option("--model", model_path)->required()->check(CLI::ExistingFile);
    predict_cmd->add_option("--data", common.data_path)->required();
    predict_cmd->add_option("--format", common.format)->check(CLI::IsMember({"jsonlines", "csv"}));
    predict_cmd->add_option("--out", out_path)->required();

    auto* eval_cmd = app.add_subcommand("evaluate", "evaluate a model against gold labels");
    eval_cmd->add_option("--model", model_path)->required()->check(CLI::ExistingFile);
    eval_cmd->add_option("--data", common.data_path)->required();
    eval_cmd->add_option("--format", common.format)->check(CLI::IsMember({"jsonlines", "csv"}));
    eval_cmd->add_option("--metric", common.metric)
        ->check(CLI::IsMember({"macro_f1", "micro_f1", "accuracy", "precision", "recall"}));

    auto* space_cmd = app.add_subcommand("space", "inspect the configuration space");
    space_cmd->add_flag("--describe", describe);
    space_cmd->add_flag("--size", size_flag);
    space_cmd->add_option("--neighbors", neighbors_path)->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (opt->parsed()) {
            return run_optimize(opt, common, scheme_name, k, beta, samples, seed, threads,
                                out_config, report_path);
        }
        if (train_cmd->parsed()) {
            return run_train(common.data_path, common.format, config_path, out_model);
        }
        if (predict_cmd->parsed()) {
            return run_predict(model_path, common.data_path, common.format, out_path);
        }
        if (eval_cmd->parsed()) {
            return run_evaluate(model_path, common.data_path, common.format, common.metric);
        }
        if (space_cmd->parsed()) {
            return run_space(describe, size_flag, neighbors_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
