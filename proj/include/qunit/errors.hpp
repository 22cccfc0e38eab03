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

#include <stdexcept>
#include <string>

namespace qunit {

/// Dimension precondition failed (N < 2, length mismatch, shape mismatch).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input values violate a precondition (NaN/Inf components, bad ranges).
struct InvalidInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A class required by the operation has no samples.
struct EmptyClassError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A split requests more samples per class than the dataset provides.
struct InsufficientSamplesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// CSV, config, or artifact file could not be read or parsed.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Training produced a non-finite error or gradient.
class DivergedError : public std::runtime_error {
  public:
    DivergedError(const std::string& msg, int epoch)
        : std::runtime_error(msg + " (epoch " + std::to_string(epoch) + ")"),
          epoch_(epoch) {}
    int epoch() const { return epoch_; }

  private:
    int epoch_;
};

} // namespace qunit
