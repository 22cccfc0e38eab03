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
#include <string>
#include <utility>
#include <vector>

#include "qunit/types.hpp"

namespace qunit {

struct LabeledDataset {
    std::string name;
    int feature_dim = 0; // d
    int class_count = 0; // N
    RealMatrix features; // one row per sample
    std::vector<int> labels;
    std::vector<std::string> label_names;

    int sample_count() const { return static_cast<int>(labels.size()); }
    std::vector<int> class_counts() const;
};

/// Balanced train split: exactly per_class_train samples from every class.
struct SplitSpec {
    int train_count = 0;     // N · per_class_train
    int per_class_train = 0; // m, equal across classes
    std::uint64_t seed = 0;
};

/// Column layout of a CSV source. Feature columns are selected explicitly so
/// the selection can be reconciled against any copy of the data.
struct DatasetSchema {
    std::vector<int> feature_columns;
    int label_column = 0;
    bool has_header = false;
    std::vector<std::string> label_names; // order defines class indices
    bool drop_unlisted_labels = false;    // keep only the named classes
};

struct DatasetRegistryEntry {
    std::string name;
    int expected_d = 0;
    int expected_n = 0;
    int train_count = 0;
    std::string file_path;
    DatasetSchema schema;
};

/// Parse a CSV file per the schema. Rows keep file order; no value is
/// normalized or otherwise transformed.
LabeledDataset load_csv(const std::string& path, const DatasetSchema& schema,
                        const std::string& name = "");

/// Load a registry entry and validate (d, N) against its pinned values.
LabeledDataset load_registry_dataset(const DatasetRegistryEntry& entry,
                                     const std::string& base_dir = "");

/// Seeded balanced split: per class, a shuffled draw of per_class_train rows
/// goes to train and the remainder to test. Train ∪ test = input, disjoint.
std::pair<LabeledDataset, LabeledDataset> balanced_split(const LabeledDataset& ds,
                                                         const SplitSpec& spec);

/// The four benchmark configurations.
const std::vector<DatasetRegistryEntry>& dataset_registry();
const DatasetRegistryEntry& registry_entry(const std::string& name);

} // namespace qunit
