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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qunit/dataset.hpp"
#include "qunit/fcnn.hpp"
#include "qunit/trainer.hpp"

namespace qunit::cli {

/// Process exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitDataError = 2;
inline constexpr int kExitDiverged = 3;

/// Fully resolved run description: dataset source, model, repetition count,
/// seeding, output directory, and the model's training configuration.
struct RunConfig {
    DatasetRegistryEntry entry;
    int per_class_train = 0;
    std::string model = "qunit"; // qunit | fcnn
    int runs = 1;
    std::uint64_t seed = 1;
    std::string out_dir;  // empty = do not persist artifacts
    std::string base_dir; // resolves relative data paths
    TrainConfig train;
    FcnnConfig fcnn;
};

struct RunResult {
    int run_index = 0;
    std::uint64_t seed = 0;
    double train_accuracy = 0.0;
    double test_accuracy = 0.0;
    double final_error = 0.0;
    int epochs = 0;
    bool converged = false;
    bool diverged = false;
    std::string message;
};

struct RunSummary {
    std::string dataset;
    std::string model;
    int runs = 0;
    std::vector<RunResult> results;
    double mean_train = 0.0, stddev_train = 0.0;
    double mean_test = 0.0, stddev_test = 0.0;
    long parameter_count = 0;
};

/// Benchmark protocol defaults per registry dataset (epoch budgets and the
/// hidden-layer width the comparison tables use). Values are what the
/// shipped configs/ files and the acceptance suite run with.
struct BenchmarkDefaults {
    int qunit_max_epochs = 2000;
    int fcnn_hidden = 0;
    int fcnn_epochs_zero_hidden = 50;
    int fcnn_epochs_hidden = 2000;
};
BenchmarkDefaults benchmark_defaults(const std::string& dataset_name);

/// Build a RunConfig from flat key/value settings (config file merged with
/// command-line overrides). Throws InvalidInputError on bad settings.
RunConfig make_run_config(const std::map<std::string, std::string>& settings,
                          const std::string& base_dir = "");

/// Execute R seeded repetitions (seed + run_index each): split, train,
/// evaluate. Persists per-run error curves and frozen parameters plus one
/// summary file when out_dir is set.
RunSummary run_experiment(const RunConfig& config, const LabeledDataset& dataset);

int cmd_train(const std::map<std::string, std::string>& settings,
              const std::string& base_dir, std::ostream& out, std::ostream& err);

int cmd_evaluate(const std::string& params_path,
                 const std::map<std::string, std::string>& settings,
                 const std::string& base_dir, const std::string& which_split,
                 std::ostream& out, std::ostream& err);

int cmd_compare(const std::map<std::string, std::string>& settings_a,
                const std::map<std::string, std::string>& settings_b,
                const std::string& base_dir, std::ostream& out, std::ostream& err);

int cmd_inspect(const std::string& params_path, std::ostream& out,
                std::ostream& err);

} // namespace qunit::cli
