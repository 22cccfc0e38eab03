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

#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <string>

#include "qunit/cli.hpp"
#include "qunit/errors.hpp"
#include "qunit/io.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string dataset;
    std::string model;
    std::string out_dir;
    int runs = -1;
    long long seed = -1;
    double lr = -1.0;
    int epochs = -1;
    int hidden = -1;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "flat key = value config file");
    cmd->add_option("--dataset", flags.dataset, "registry dataset name");
    cmd->add_option("--model", flags.model, "qunit or fcnn");
    cmd->add_option("--runs", flags.runs, "number of seeded repetitions");
    cmd->add_option("--seed", flags.seed, "base seed (run r uses seed + r)");
    cmd->add_option("--out", flags.out_dir, "artifact output directory");
    cmd->add_option("--lr", flags.lr, "learning rate");
    cmd->add_option("--epochs", flags.epochs, "epoch budget");
    cmd->add_option("--hidden", flags.hidden, "fcnn hidden layer width");
}

/// Config file settings first, command-line flags on top.
std::map<std::string, std::string> merge_settings(const CommonFlags& flags) {
    std::map<std::string, std::string> settings;
    if (!flags.config_path.empty()) {
        settings = qunit::parse_config_file(flags.config_path);
    }
    if (!flags.dataset.empty()) settings["dataset"] = flags.dataset;
    if (!flags.model.empty()) settings["model"] = flags.model;
    if (!flags.out_dir.empty()) settings["out"] = flags.out_dir;
    if (flags.runs >= 0) settings["runs"] = std::to_string(flags.runs);
    if (flags.seed >= 0) settings["seed"] = std::to_string(flags.seed);
    if (flags.lr >= 0) settings["lr"] = qunit::format_double(flags.lr);
    if (flags.epochs >= 0) settings["epochs"] = std::to_string(flags.epochs);
    if (flags.hidden >= 0) settings["hidden"] = std::to_string(flags.hidden);
    return settings;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-quNit variational classifier: train, evaluate, compare, inspect"};
    app.require_subcommand(1);

    CommonFlags train_flags;
    auto* train_cmd =
        app.add_subcommand("train", "run seeded training repetitions and persist artifacts");
    add_common_flags(train_cmd, train_flags);

    CommonFlags eval_flags;
    std::string params_path, which_split = "full";
    auto* eval_cmd =
        app.add_subcommand("evaluate", "score a frozen parameter file on a dataset");
    eval_cmd->add_option("params", params_path, "parameter file from a training run")
        ->required();
    add_common_flags(eval_cmd, eval_flags);
    eval_cmd->add_option("--split", which_split, "full, train, or test");

    CommonFlags cmp_a, cmp_b;
    std::string config_b_path;
    auto* cmp_cmd = app.add_subcommand(
        "compare", "side-by-side qunit vs fcnn accuracy and parameter counts");
    add_common_flags(cmp_cmd, cmp_a);
    cmp_cmd->add_option("--config2", config_b_path, "second config file")->required();

    std::string inspect_path;
    auto* inspect_cmd =
        app.add_subcommand("inspect", "dump a parameter file and its SU(N) matrix");
    inspect_cmd->add_option("params", inspect_path, "parameter file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (train_cmd->parsed()) {
            return qunit::cli::cmd_train(merge_settings(train_flags), "", std::cout,
                                         std::cerr);
        }
        if (eval_cmd->parsed()) {
            return qunit::cli::cmd_evaluate(params_path, merge_settings(eval_flags), "",
                                            which_split, std::cout, std::cerr);
        }
        if (cmp_cmd->parsed()) {
            cmp_b.config_path = config_b_path;
            return qunit::cli::cmd_compare(merge_settings(cmp_a), merge_settings(cmp_b),
                                           "", std::cout, std::cerr);
        }
        if (inspect_cmd->parsed()) {
            return qunit::cli::cmd_inspect(inspect_path, std::cout, std::cerr);
        }
    } catch (const qunit::DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return qunit::cli::kExitDataError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return qunit::cli::kExitConfigError;
    }
    return qunit::cli::kExitConfigError;
}
