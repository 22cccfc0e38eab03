#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "qunit/dataset.hpp"
#include "qunit/errors.hpp"

using namespace qunit;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

} // namespace

TEST_CASE("IRIS loads with 150 rows, 50 per class") {
    const auto ds = load_registry_dataset(registry_entry("IRIS"));
    CHECK(ds.feature_dim == 4);
    CHECK(ds.class_count == 3);
    CHECK(ds.sample_count() == 150);
    const auto counts = ds.class_counts();
    CHECK(counts[0] == 50);
    CHECK(counts[1] == 50);
    CHECK(counts[2] == 50);
}

TEST_CASE("IRIS2 keeps only setosa and virginica") {
    const auto ds = load_registry_dataset(registry_entry("IRIS2"));
    CHECK(ds.feature_dim == 4);
    CHECK(ds.class_count == 2);
    CHECK(ds.sample_count() == 100);
    CHECK(ds.label_names[0] == "Iris-setosa");
    CHECK(ds.label_names[1] == "Iris-virginica");
}

TEST_CASE("CANCER loads the 27-column schema") {
    const auto ds = load_registry_dataset(registry_entry("CANCER"));
    CHECK(ds.feature_dim == 27);
    CHECK(ds.class_count == 2);
    CHECK(ds.sample_count() == 569);
    const auto counts = ds.class_counts();
    CHECK(counts[0] == 212); // malignant
    CHECK(counts[1] == 357); // benign
}

TEST_CASE("registry pins the paper's (name, d, N) table") {
    const std::set<std::tuple<std::string, int, int>> expected = {
        {"CANCER", 27, 2}, {"SONAR", 60, 2}, {"IRIS", 4, 3}, {"IRIS2", 4, 2}};
    std::set<std::tuple<std::string, int, int>> got;
    for (const auto& entry : dataset_registry()) {
        got.insert({entry.name, entry.expected_d, entry.expected_n});
    }
    CHECK(got == expected);
    CHECK_THROWS_AS(registry_entry("MNIST"), DataError);
}

TEST_CASE("malformed rows report their position") {
    const auto path = write_temp("qunit_bad_row.csv",
                                 "1.0,2.0,A\n"
                                 "1.5,oops,B\n");
    DatasetSchema schema;
    schema.feature_columns = {0, 1};
    schema.label_column = 2;
    schema.label_names = {"A", "B"};
    CHECK_THROWS_WITH_AS(load_csv(path, schema),
                         doctest::Contains("malformed row 2"), DataError);
}

TEST_CASE("unknown labels are an error unless the schema filters them") {
    const auto path = write_temp("qunit_bad_label.csv",
                                 "1.0,2.0,A\n"
                                 "1.5,2.5,C\n");
    DatasetSchema schema;
    schema.feature_columns = {0, 1};
    schema.label_column = 2;
    schema.label_names = {"A", "B"};
    CHECK_THROWS_WITH_AS(load_csv(path, schema), doctest::Contains("unknown label"),
                         DataError);

    schema.drop_unlisted_labels = true;
    const auto ds = load_csv(path, schema);
    CHECK(ds.sample_count() == 1);
}

TEST_CASE("missing files and short rows are errors") {
    DatasetSchema schema;
    schema.feature_columns = {0, 1, 2};
    schema.label_column = 3;
    schema.label_names = {"A", "B"};
    CHECK_THROWS_AS(load_csv("/nonexistent/file.csv", schema), DataError);

    const auto path = write_temp("qunit_short_row.csv", "1.0,2.0\n");
    CHECK_THROWS_AS(load_csv(path, schema), DataError);
}

TEST_CASE("balanced split sizes for IRIS and IRIS2 match the protocol") {
    const auto iris = load_registry_dataset(registry_entry("IRIS"));
    const auto [train, test] = balanced_split(iris, {105, 35, 7});
    CHECK(train.sample_count() == 105);
    CHECK(test.sample_count() == 45);
    for (int count : train.class_counts()) CHECK(count == 35);

    const auto iris2 = load_registry_dataset(registry_entry("IRIS2"));
    const auto [train2, test2] = balanced_split(iris2, {70, 35, 7});
    CHECK(train2.sample_count() == 70);
    CHECK(test2.sample_count() == 30);
    for (int count : train2.class_counts()) CHECK(count == 35);
}

TEST_CASE("splits are deterministic in the seed and partition the dataset") {
    const auto iris = load_registry_dataset(registry_entry("IRIS"));
    const auto [a_train, a_test] = balanced_split(iris, {105, 35, 99});
    const auto [b_train, b_test] = balanced_split(iris, {105, 35, 99});
    CHECK(a_train.features == b_train.features);
    CHECK(a_test.features == b_test.features);
    CHECK(a_train.labels == b_train.labels);

    const auto [c_train, c_test] = balanced_split(iris, {105, 35, 100});
    CHECK(a_train.features != c_train.features);

    // round-trip: every source row lands in exactly one side
    std::multiset<std::string> combined;
    const auto row_key = [](const LabeledDataset& ds, int i) {
        std::string key;
        for (int c = 0; c < ds.feature_dim; ++c) {
            key += std::to_string(ds.features(i, c)) + "|";
        }
        return key + std::to_string(ds.labels[i]);
    };
    for (int i = 0; i < a_train.sample_count(); ++i) {
        combined.insert(row_key(a_train, i));
    }
    for (int i = 0; i < a_test.sample_count(); ++i) {
        combined.insert(row_key(a_test, i));
    }
    std::multiset<std::string> source;
    for (int i = 0; i < iris.sample_count(); ++i) source.insert(row_key(iris, i));
    CHECK(combined == source);
}

TEST_CASE("oversized splits are rejected") {
    const auto iris = load_registry_dataset(registry_entry("IRIS"));
    CHECK_THROWS_AS(balanced_split(iris, {153, 51, 7}), InsufficientSamplesError);
    CHECK_THROWS_AS(balanced_split(iris, {100, 35, 7}), InvalidInputError);
}

TEST_CASE("loading is pure: identical bytes give identical datasets") {
    const auto a = load_registry_dataset(registry_entry("IRIS"));
    const auto b = load_registry_dataset(registry_entry("IRIS"));
    CHECK(a.features == b.features);
    CHECK(a.labels == b.labels);
}
