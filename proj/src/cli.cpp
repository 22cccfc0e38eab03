/* Copyright 2026 The qunit-classifier authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "qunit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "qunit/core.hpp"
#include "qunit/errors.hpp"
#include "qunit/euler.hpp"
#include "qunit/io.hpp"

namespace qunit::cli {

namespace {

namespace fs = std::filesystem;

const std::set<std::string> kKnownKeys = {
    "dataset",       "data_file",         "model",
    "runs",          "seed",              "out",
    "lr",            "epochs",            "hidden",
    "init",          "convergence_window", "convergence_delta",
    "gradient_mode", "per_class_train",   "label_column",
    "feature_columns", "label_names",     "has_header",
    "drop_unlisted_labels",
};

std::string get_or(const std::map<std::string, std::string>& settings,
                   const std::string& key, const std::string& fallback) {
    const auto it = settings.find(key);
    return it == settings.end() ? fallback : it->second;
}

bool has_key(const std::map<std::string, std::string>& settings,
             const std::string& key) {
    return settings.find(key) != settings.end();
}

long parse_long(const std::string& value, const std::string& key) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(value, &pos);
        if (pos == value.size()) return v;
    } catch (const std::exception&) {
    }
    throw InvalidInputError("config key '" + key + "': expected an integer, got '" +
                            value + "'");
}

double parse_real(const std::string& value, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos == value.size() && std::isfinite(v)) return v;
    } catch (const std::exception&) {
    }
    throw InvalidInputError("config key '" + key + "': expected a number, got '" +
                            value + "'");
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        items.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
    }
    return items;
}

std::string run_file(const std::string& dir, int run_index, const char* kind) {
    char name[64];
    std::snprintf(name, sizeof(name), "run_%03d_%s", run_index, kind);
    return dir + "/" + name;
}

void accumulate_stats(const std::vector<RunResult>& results, RunSummary& summary) {
    double sum_tr = 0, sum_tr2 = 0, sum_te = 0, sum_te2 = 0;
    int completed = 0;
    for (const auto& r : results) {
        if (r.diverged) continue;
        ++completed;
        sum_tr += r.train_accuracy;
        sum_tr2 += r.train_accuracy * r.train_accuracy;
        sum_te += r.test_accuracy;
        sum_te2 += r.test_accuracy * r.test_accuracy;
    }
    if (completed == 0) return;
    summary.mean_train = sum_tr / completed;
    summary.mean_test = sum_te / completed;
    summary.stddev_train =
        std::sqrt(std::max(0.0, sum_tr2 / completed - summary.mean_train * summary.mean_train));
    summary.stddev_test =
        std::sqrt(std::max(0.0, sum_te2 / completed - summary.mean_test * summary.mean_test));
}

void write_summary_file(const std::string& path, const RunSummary& summary,
                        std::uint64_t base_seed) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write summary file '" + path + "'");
    out << "qunit-summary 1\n";
    out << "dataset " << summary.dataset << '\n';
    out << "model " << summary.model << '\n';
    out << "runs " << summary.runs << '\n';
    out << "base_seed " << base_seed << '\n';
    out << "parameter_count " << summary.parameter_count << '\n';
    for (const auto& r : summary.results) {
        out << "run " << r.run_index << " seed " << r.seed;
        if (r.diverged) {
            out << " diverged 1 message " << r.message << '\n';
            continue;
        }
        out << " train_accuracy " << format_double(r.train_accuracy)
            << " test_accuracy " << format_double(r.test_accuracy) << " final_error "
            << format_double(r.final_error) << " epochs " << r.epochs << " converged "
            << (r.converged ? 1 : 0) << '\n';
    }
    out << "mean_train_accuracy " << format_double(summary.mean_train) << '\n';
    out << "stddev_train_accuracy " << format_double(summary.stddev_train) << '\n';
    out << "mean_test_accuracy " << format_double(summary.mean_test) << '\n';
    out << "stddev_test_accuracy " << format_double(summary.stddev_test) << '\n';
}

void print_summary(const RunSummary& summary, std::ostream& out) {
    out << summary.dataset << " / " << summary.model << ": " << summary.runs
        << " run(s), " << summary.parameter_count << " trainable parameters\n";
    char line[160];
    std::snprintf(line, sizeof(line),
                  "  train accuracy %6.2f%% +- %.2f   test accuracy %6.2f%% +- %.2f\n",
                  summary.mean_train, summary.stddev_train, summary.mean_test,
                  summary.stddev_test);
    out << line;
    int diverged = 0;
    for (const auto& r : summary.results) diverged += r.diverged ? 1 : 0;
    if (diverged > 0) {
        out << "  " << diverged << " of " << summary.runs << " runs diverged\n";
    }
}

} // namespace

BenchmarkDefaults benchmark_defaults(const std::string& dataset_name) {
    BenchmarkDefaults defaults;
    if (dataset_name == "IRIS") {
        defaults.qunit_max_epochs = 12000;
    } else if (dataset_name == "IRIS2") {
        defaults.qunit_max_epochs = 2000;
    } else if (dataset_name == "CANCER") {
        defaults.qunit_max_epochs = 5000;
    } else if (dataset_name == "SONAR") {
        defaults.qunit_max_epochs = 10000;
    }
    return defaults;
}

RunConfig make_run_config(const std::map<std::string, std::string>& settings,
                          const std::string& base_dir) {
    for (const auto& [key, value] : settings) {
        if (!kKnownKeys.count(key)) {
            throw InvalidInputError("unknown config key '" + key + "'");
        }
    }

    RunConfig config;
    config.base_dir = base_dir;

    const std::string dataset = get_or(settings, "dataset", "");
    if (dataset.empty()) {
        throw InvalidInputError("config must name a dataset");
    }

    const bool in_registry = [&] {
        for (const auto& entry : dataset_registry()) {
            if (entry.name == dataset) return true;
        }
        return false;
    }();

    if (in_registry) {
        config.entry = registry_entry(dataset);
    } else {
        // custom dataset: the schema must be spelled out
        config.entry.name = dataset;
        if (!has_key(settings, "data_file") || !has_key(settings, "label_column") ||
            !has_key(settings, "feature_columns") || !has_key(settings, "label_names") ||
            !has_key(settings, "per_class_train")) {
            throw InvalidInputError(
                "custom dataset '" + dataset +
                "' needs data_file, label_column, feature_columns, label_names, "
                "per_class_train");
        }
        for (const auto& c : split_list(settings.at("feature_columns"))) {
            config.entry.schema.feature_columns.push_back(
                static_cast<int>(parse_long(c, "feature_columns")));
        }
        config.entry.schema.label_names = split_list(settings.at("label_names"));
        config.entry.expected_d =
            static_cast<int>(config.entry.schema.feature_columns.size());
        config.entry.expected_n =
            static_cast<int>(config.entry.schema.label_names.size());
        if (config.entry.expected_n < 2) {
            throw InvalidInputError("custom dataset needs at least two label names");
        }
    }

    if (has_key(settings, "data_file")) {
        config.entry.file_path = settings.at("data_file");
    }
    if (has_key(settings, "label_column")) {
        config.entry.schema.label_column =
            static_cast<int>(parse_long(settings.at("label_column"), "label_column"));
    }
    if (has_key(settings, "has_header")) {
        config.entry.schema.has_header =
            parse_long(settings.at("has_header"), "has_header") != 0;
    }
    if (has_key(settings, "drop_unlisted_labels")) {
        config.entry.schema.drop_unlisted_labels =
            parse_long(settings.at("drop_unlisted_labels"), "drop_unlisted_labels") != 0;
    }

    if (has_key(settings, "per_class_train")) {
        config.per_class_train = static_cast<int>(
            parse_long(settings.at("per_class_train"), "per_class_train"));
        config.entry.train_count = config.per_class_train * config.entry.expected_n;
    } else {
        config.per_class_train = config.entry.train_count / config.entry.expected_n;
    }
    if (config.per_class_train < 1) {
        throw InvalidInputError("per_class_train must be at least 1");
    }

    config.model = get_or(settings, "model", "qunit");
    if (config.model != "qunit" && config.model != "fcnn") {
        throw InvalidInputError("model must be 'qunit' or 'fcnn', got '" +
                                config.model + "'");
    }

    const BenchmarkDefaults defaults = benchmark_defaults(config.entry.name);
    config.runs = config.model == "qunit" ? 100 : 5;
    if (has_key(settings, "runs")) {
        config.runs = static_cast<int>(parse_long(settings.at("runs"), "runs"));
    }
    if (config.runs < 1) throw InvalidInputError("runs must be at least 1");

    if (has_key(settings, "seed")) {
        config.seed =
            static_cast<std::uint64_t>(parse_long(settings.at("seed"), "seed"));
    }
    config.out_dir = get_or(settings, "out", "");

    // qunit training settings
    config.train.max_epochs = defaults.qunit_max_epochs;
    if (has_key(settings, "lr")) {
        config.train.learning_rate = parse_real(settings.at("lr"), "lr");
        config.fcnn.learning_rate = config.train.learning_rate;
    }
    if (has_key(settings, "epochs")) {
        const int epochs = static_cast<int>(parse_long(settings.at("epochs"), "epochs"));
        config.train.max_epochs = epochs;
        config.fcnn.epochs = epochs;
    }
    if (has_key(settings, "convergence_window")) {
        config.train.convergence_window = static_cast<int>(
            parse_long(settings.at("convergence_window"), "convergence_window"));
    }
    if (has_key(settings, "convergence_delta")) {
        config.train.convergence_delta =
            parse_real(settings.at("convergence_delta"), "convergence_delta");
    }
    if (has_key(settings, "init")) {
        const std::string init = settings.at("init");
        if (init == "zeros") {
            config.train.init_scheme = InitScheme::kZeros;
        } else if (init == "uniform_small") {
            config.train.init_scheme = InitScheme::kUniformSmall;
        } else {
            throw InvalidInputError("init must be 'zeros' or 'uniform_small'");
        }
    }
    if (has_key(settings, "gradient_mode")) {
        const std::string mode = settings.at("gradient_mode");
        if (mode == "analytic") {
            config.train.gradient_mode = GradientMode::kAnalytic;
        } else if (mode == "finite_difference") {
            config.train.gradient_mode = GradientMode::kFiniteDifference;
        } else {
            throw InvalidInputError(
                "gradient_mode must be 'analytic' or 'finite_difference'");
        }
    }

    // fcnn settings
    if (has_key(settings, "hidden")) {
        config.fcnn.hidden_dim =
            static_cast<int>(parse_long(settings.at("hidden"), "hidden"));
        if (config.fcnn.hidden_dim < 0) {
            throw InvalidInputError("hidden must be ≥ 0");
        }
    }
    if (!has_key(settings, "epochs")) {
        config.fcnn.epochs = config.fcnn.hidden_dim == 0
                                 ? defaults.fcnn_epochs_zero_hidden
                                 : defaults.fcnn_epochs_hidden;
    }
    return config;
}

RunSummary run_experiment(const RunConfig& config, const LabeledDataset& dataset) {
    RunSummary summary;
    summary.dataset = config.entry.name;
    summary.model = config.model;
    summary.runs = config.runs;
    const auto counts = parameter_counts(config.entry.expected_d,
                                         config.entry.expected_n,
                                         config.fcnn.hidden_dim);
    summary.parameter_count =
        config.model == "qunit" ? counts.quantum : counts.classical;

    const bool persist = !config.out_dir.empty();
    if (persist) fs::create_directories(config.out_dir);

    for (int r = 0; r < config.runs; ++r) {
        RunResult result;
        result.run_index = r;
        result.seed = config.seed + static_cast<std::uint64_t>(r);

        SplitSpec spec;
        spec.per_class_train = config.per_class_train;
        spec.train_count = config.per_class_train * dataset.class_count;
        spec.seed = result.seed;
        const auto [train_split, test_split] = balanced_split(dataset, spec);

        try {
            if (config.model == "qunit") {
                TrainConfig train_cfg = config.train;
                train_cfg.seed = result.seed;
                const TrainLog log = train(train_split, dataset.class_count, train_cfg);
                result.train_accuracy = log.records.back().train_accuracy;
                result.test_accuracy =
                    evaluate(test_split, log.final_params, dataset.class_count).percent;
                result.final_error = log.records.back().error;
                result.epochs = static_cast<int>(log.records.size());
                result.converged = log.converged;
                if (persist) {
                    write_error_curve(run_file(config.out_dir, r, "curve.csv"),
                                      log.records);
                    SavedParameters saved;
                    saved.dataset = config.entry.name;
                    saved.n = dataset.class_count;
                    saved.d = dataset.feature_dim;
                    saved.params = log.final_params;
                    save_parameters(run_file(config.out_dir, r, "params.txt"), saved);
                }
            } else {
                FcnnConfig fcnn_cfg = config.fcnn;
                fcnn_cfg.seed = result.seed;
                std::vector<EpochRecord> records;
                const FcnnModel model =
                    fcnn_train(train_split, fcnn_cfg, persist ? &records : nullptr);
                result.train_accuracy = fcnn_evaluate(model, train_split);
                result.test_accuracy = fcnn_evaluate(model, test_split);
                result.final_error = records.empty() ? 0.0 : records.back().error;
                result.epochs = fcnn_cfg.epochs;
                if (persist) {
                    write_error_curve(run_file(config.out_dir, r, "curve.csv"), records);
                }
            }
        } catch (const DivergedError& e) {
            result.diverged = true;
            result.message = e.what();
        }
        summary.results.push_back(std::move(result));
    }

    accumulate_stats(summary.results, summary);
    if (persist) {
        write_summary_file(config.out_dir + "/summary.txt", summary, config.seed);
    }
    return summary;
}

int cmd_train(const std::map<std::string, std::string>& settings,
              const std::string& base_dir, std::ostream& out, std::ostream& err) {
    RunConfig config;
    try {
        config = make_run_config(settings, base_dir);
    } catch (const std::exception& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    }

    LabeledDataset dataset;
    try {
        dataset = load_registry_dataset(config.entry, config.base_dir);
    } catch (const std::exception& e) {
        err << "data error: " << e.what() << '\n';
        return kExitDataError;
    }

    RunSummary summary;
    try {
        summary = run_experiment(config, dataset);
    } catch (const DataError& e) {
        err << "data error: " << e.what() << '\n';
        return kExitDataError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    }

    print_summary(summary, out);
    const bool all_diverged = std::all_of(summary.results.begin(),
                                          summary.results.end(),
                                          [](const RunResult& r) { return r.diverged; });
    if (all_diverged) {
        err << "all " << summary.runs << " runs diverged\n";
        return kExitDiverged;
    }
    return kExitOk;
}

int cmd_evaluate(const std::string& params_path,
                 const std::map<std::string, std::string>& settings,
                 const std::string& base_dir, const std::string& which_split,
                 std::ostream& out, std::ostream& err) {
    SavedParameters saved;
    try {
        saved = load_parameters(params_path);
    } catch (const std::exception& e) {
        err << "data error: " << e.what() << '\n';
        return kExitDataError;
    }

    RunConfig config;
    try {
        config = make_run_config(settings, base_dir);
    } catch (const std::exception& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    }

    if (saved.d != config.entry.expected_d || saved.n != config.entry.expected_n) {
        err << "shape mismatch: dataset '" << config.entry.name << "' expects (d="
            << config.entry.expected_d << ", N=" << config.entry.expected_n
            << "), parameter file has (d=" << saved.d << ", N=" << saved.n << ")\n";
        return kExitConfigError;
    }

    LabeledDataset dataset;
    try {
        dataset = load_registry_dataset(config.entry, config.base_dir);
    } catch (const std::exception& e) {
        err << "data error: " << e.what() << '\n';
        return kExitDataError;
    }

    const LabeledDataset* target = &dataset;
    LabeledDataset train_split, test_split;
    if (which_split == "train" || which_split == "test") {
        SplitSpec spec;
        spec.per_class_train = config.per_class_train;
        spec.train_count = config.per_class_train * dataset.class_count;
        spec.seed = saved.params.seed; // the split the run was trained on
        std::tie(train_split, test_split) = balanced_split(dataset, spec);
        target = which_split == "train" ? &train_split : &test_split;
    } else if (which_split != "full") {
        err << "config error: split must be full, train, or test\n";
        return kExitConfigError;
    }

    const AccuracyReport report = evaluate(*target, saved.params, saved.n);
    out << config.entry.name << " (" << which_split << ", "
        << target->sample_count() << " samples): accuracy "
        << format_double(report.percent) << "%\n";
    for (int k = 0; k < saved.n; ++k) {
        out << "  class " << k << " (" << dataset.label_names[k]
            << "): " << format_double(report.per_class_percent(k)) << "%\n";
    }
    return kExitOk;
}

int cmd_compare(const std::map<std::string, std::string>& settings_a,
                const std::map<std::string, std::string>& settings_b,
                const std::string& base_dir, std::ostream& out, std::ostream& err) {
    RunConfig config_a, config_b;
    try {
        config_a = make_run_config(settings_a, base_dir);
        config_b = make_run_config(settings_b, base_dir);
    } catch (const std::exception& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    }

    if (config_a.entry.name != config_b.entry.name ||
        config_a.entry.file_path != config_b.entry.file_path) {
        err << "config error: compare requires both configs to use the same dataset\n";
        return kExitConfigError;
    }
    if (config_a.seed != config_b.seed) {
        err << "config error: compare requires both configs to share the split seed\n";
        return kExitConfigError;
    }
    if (config_a.model == config_b.model) {
        err << "config error: compare needs one qunit config and one fcnn config\n";
        return kExitConfigError;
    }

    LabeledDataset dataset;
    try {
        dataset = load_registry_dataset(config_a.entry, base_dir);
    } catch (const std::exception& e) {
        err << "data error: " << e.what() << '\n';
        return kExitDataError;
    }

    const RunConfig& quantum = config_a.model == "qunit" ? config_a : config_b;
    const RunConfig& classical = config_a.model == "qunit" ? config_b : config_a;
    const RunSummary summary_q = run_experiment(quantum, dataset);
    const RunSummary summary_c = run_experiment(classical, dataset);

    char line[160];
    out << "dataset " << dataset.name << " (d=" << dataset.feature_dim
        << ", N=" << dataset.class_count << "), split seed " << quantum.seed << "\n";
    std::snprintf(line, sizeof(line), "%-12s %6s %18s %18s %12s\n", "model", "runs",
                  "train accuracy", "test accuracy", "parameters");
    out << line;
    const auto row = [&](const RunSummary& s, const std::string& label) {
        std::snprintf(line, sizeof(line),
                      "%-12s %6d %10.2f +- %-5.2f %10.2f +- %-5.2f %12ld\n",
                      label.c_str(), s.runs, s.mean_train, s.stddev_train, s.mean_test,
                      s.stddev_test, s.parameter_count);
        out << line;
    };
    row(summary_q, "qunit");
    row(summary_c, "fcnn(h=" + std::to_string(classical.fcnn.hidden_dim) + ")");
    return kExitOk;
}

int cmd_inspect(const std::string& params_path, std::ostream& out,
                std::ostream& err) {
    SavedParameters saved;
    try {
        saved = load_parameters(params_path);
    } catch (const std::exception& e) {
        err << "data error: " << e.what() << '\n';
        return kExitDataError;
    }

    out << "parameter file: " << params_path << '\n';
    out << "dataset " << saved.dataset << ", d=" << saved.d << ", N=" << saved.n
        << ", seed " << saved.params.seed << '\n';
    out << "w:";
    for (int j = 0; j < saved.params.w.size(); ++j) {
        out << ' ' << format_double(saved.params.w(j));
    }
    out << "\nalpha:";
    for (int s = 0; s < saved.params.alpha.size(); ++s) {
        out << ' ' << format_double(saved.params.alpha(s));
    }
    out << '\n';

    const auto parameterization = build_parameterization(saved.n);
    const ComplexMatrix u = evaluate(parameterization, saved.params.alpha);
    out << "SU(" << saved.n << ") at alpha:\n";
    for (int i = 0; i < saved.n; ++i) {
        out << "  ";
        for (int j = 0; j < saved.n; ++j) {
            char cell[64];
            std::snprintf(cell, sizeof(cell), "(%+.6f%+.6fi) ", u(i, j).real(),
                          u(i, j).imag());
            out << cell;
        }
        out << '\n';
    }
    out << "unitarity residual: " << format_double(unitarity_residual(u)) << '\n';
    return kExitOk;
}

} // namespace qunit::cli
