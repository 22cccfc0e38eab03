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

#include "qunit/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "qunit/errors.hpp"
#include "qunit/rng.hpp"

namespace qunit {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_feature(const std::string& field, int row, int column) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(field, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != field.size() || field.empty() || !std::isfinite(value)) {
        throw DataError("malformed row " + std::to_string(row) + ": column " +
                        std::to_string(column) + " is not a finite number ('" +
                        field + "')");
    }
    return value;
}

LabeledDataset subset(const LabeledDataset& ds, const std::vector<int>& rows,
                      const std::string& suffix) {
    LabeledDataset out;
    out.name = ds.name.empty() ? suffix : ds.name + "/" + suffix;
    out.feature_dim = ds.feature_dim;
    out.class_count = ds.class_count;
    out.label_names = ds.label_names;
    out.features.resize(rows.size(), ds.feature_dim);
    out.labels.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.features.row(i) = ds.features.row(rows[i]);
        out.labels.push_back(ds.labels[rows[i]]);
    }
    return out;
}

} // namespace

std::vector<int> LabeledDataset::class_counts() const {
    std::vector<int> counts(class_count, 0);
    for (int label : labels) ++counts[label];
    return counts;
}

LabeledDataset load_csv(const std::string& path, const DatasetSchema& schema,
                        const std::string& name) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open dataset file '" + path + "'");
    if (schema.feature_columns.empty() || schema.label_names.empty()) {
        throw DataError("schema for '" + path + "' has no feature columns or labels");
    }

    LabeledDataset ds;
    ds.name = name;
    ds.feature_dim = static_cast<int>(schema.feature_columns.size());
    ds.class_count = static_cast<int>(schema.label_names.size());
    ds.label_names = schema.label_names;

    std::vector<RealVector> rows;
    std::string line;
    int file_row = 0;
    bool skipped_header = false;
    while (std::getline(in, line)) {
        ++file_row;
        if (schema.has_header && !skipped_header) {
            skipped_header = true;
            continue;
        }
        if (trimmed(line).empty()) continue;
        const auto fields = split_fields(line);
        const int needed = std::max(schema.label_column,
                                    *std::max_element(schema.feature_columns.begin(),
                                                      schema.feature_columns.end()));
        if (static_cast<int>(fields.size()) <= needed) {
            throw DataError("malformed row " + std::to_string(file_row) + ": has " +
                            std::to_string(fields.size()) + " columns, schema needs " +
                            std::to_string(needed + 1));
        }

        const std::string label = trimmed(fields[schema.label_column]);
        const auto it = std::find(ds.label_names.begin(), ds.label_names.end(), label);
        if (it == ds.label_names.end()) {
            if (schema.drop_unlisted_labels) continue;
            throw DataError("row " + std::to_string(file_row) + ": unknown label '" +
                            label + "'");
        }

        RealVector x(ds.feature_dim);
        for (int c = 0; c < ds.feature_dim; ++c) {
            x(c) = parse_feature(trimmed(fields[schema.feature_columns[c]]), file_row,
                                 schema.feature_columns[c]);
        }
        rows.push_back(std::move(x));
        ds.labels.push_back(static_cast<int>(it - ds.label_names.begin()));
    }

    ds.features.resize(rows.size(), ds.feature_dim);
    for (std::size_t i = 0; i < rows.size(); ++i) ds.features.row(i) = rows[i];
    return ds;
}

LabeledDataset load_registry_dataset(const DatasetRegistryEntry& entry,
                                     const std::string& base_dir) {
    std::string path = entry.file_path;
    if (!base_dir.empty() && !path.empty() && path.front() != '/') {
        path = base_dir + "/" + path;
    }
    LabeledDataset ds = load_csv(path, entry.schema, entry.name);
    if (ds.feature_dim != entry.expected_d || ds.class_count != entry.expected_n) {
        throw DataError(entry.name + ": loaded (d=" + std::to_string(ds.feature_dim) +
                        ", N=" + std::to_string(ds.class_count) + "), registry pins (d=" +
                        std::to_string(entry.expected_d) + ", N=" +
                        std::to_string(entry.expected_n) + ")");
    }
    return ds;
}

std::pair<LabeledDataset, LabeledDataset> balanced_split(const LabeledDataset& ds,
                                                         const SplitSpec& spec) {
    const int m = spec.per_class_train;
    if (m < 1 || spec.train_count != m * ds.class_count) {
        throw InvalidInputError("split spec: train_count must equal N · per_class_train");
    }
    const auto counts = ds.class_counts();
    for (int k = 0; k < ds.class_count; ++k) {
        if (counts[k] < m) {
            throw InsufficientSamplesError(
                "class " + std::to_string(k) + " has " + std::to_string(counts[k]) +
                " samples, split needs " + std::to_string(m) + " per class");
        }
    }

    Rng rng(spec.seed);
    std::vector<int> train_rows, test_rows;
    for (int k = 0; k < ds.class_count; ++k) {
        std::vector<int> rows;
        for (int i = 0; i < ds.sample_count(); ++i) {
            if (ds.labels[i] == k) rows.push_back(i);
        }
        rng.shuffle(rows);
        train_rows.insert(train_rows.end(), rows.begin(), rows.begin() + m);
        test_rows.insert(test_rows.end(), rows.begin() + m, rows.end());
    }
    return {subset(ds, train_rows, "train"), subset(ds, test_rows, "test")};
}

const std::vector<DatasetRegistryEntry>& dataset_registry() {
    static const std::vector<DatasetRegistryEntry> registry = [] {
        std::vector<DatasetRegistryEntry> r;

        DatasetRegistryEntry cancer;
        cancer.name = "CANCER";
        cancer.expected_d = 27;
        cancer.expected_n = 2;
        cancer.train_count = 360;
        cancer.file_path = "data/cancer.data";
        cancer.schema.label_column = 0;
        cancer.schema.feature_columns.resize(27);
        for (int c = 0; c < 27; ++c) cancer.schema.feature_columns[c] = c + 1;
        cancer.schema.label_names = {"M", "B"};
        r.push_back(cancer);

        DatasetRegistryEntry sonar;
        sonar.name = "SONAR";
        sonar.expected_d = 60;
        sonar.expected_n = 2;
        sonar.train_count = 140;
        sonar.file_path = "data/sonar.all-data";
        sonar.schema.label_column = 60;
        sonar.schema.feature_columns.resize(60);
        for (int c = 0; c < 60; ++c) sonar.schema.feature_columns[c] = c;
        sonar.schema.label_names = {"R", "M"};
        r.push_back(sonar);

        DatasetRegistryEntry iris;
        iris.name = "IRIS";
        iris.expected_d = 4;
        iris.expected_n = 3;
        iris.train_count = 105;
        iris.file_path = "data/iris.data";
        iris.schema.label_column = 4;
        iris.schema.feature_columns = {0, 1, 2, 3};
        iris.schema.label_names = {"Iris-setosa", "Iris-versicolor", "Iris-virginica"};
        r.push_back(iris);

        DatasetRegistryEntry iris2 = iris;
        iris2.name = "IRIS2";
        iris2.expected_n = 2;
        iris2.train_count = 70;
        iris2.schema.label_names = {"Iris-setosa", "Iris-virginica"};
        iris2.schema.drop_unlisted_labels = true;
        r.push_back(iris2);

        return r;
    }();
    return registry;
}

const DatasetRegistryEntry& registry_entry(const std::string& name) {
    for (const auto& entry : dataset_registry()) {
        if (entry.name == name) return entry;
    }
    throw DataError("unknown dataset '" + name +
                    "' (registry: CANCER, SONAR, IRIS, IRIS2)");
}

} // namespace qunit
