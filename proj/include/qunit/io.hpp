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

#include <map>
#include <string>
#include <vector>

#include "qunit/classifier.hpp"
#include "qunit/trainer.hpp"

namespace qunit {

/// Shortest round-trip-exact decimal form of a double.
std::string format_double(double value);

/// CSV with header epoch,error,train_accuracy and one row per completed
/// epoch. Byte-identical for identical records.
void write_error_curve(const std::string& path,
                       const std::vector<EpochRecord>& records);

struct SavedParameters {
    std::string dataset;
    int n = 0;
    int d = 0;
    ParameterState params;
};

/// Line-delimited parameter file with a leading version field.
void save_parameters(const std::string& path, const SavedParameters& saved);
SavedParameters load_parameters(const std::string& path);

/// Flat key = value config text. '#' starts a comment; blank lines ignored.
std::map<std::string, std::string> parse_config_text(const std::string& text);
std::map<std::string, std::string> parse_config_file(const std::string& path);

} // namespace qunit
