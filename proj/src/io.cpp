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

#include "qunit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qunit/errors.hpp"

namespace qunit {

namespace {

constexpr const char* kParamsMagic = "qunit-params";
constexpr int kParamsVersion = 1;

std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double_or_throw(const std::string& token, const std::string& where) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != token.size() || token.empty()) {
        throw DataError(where + ": expected a number, got '" + token + "'");
    }
    return value;
}

} // namespace

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_error_curve(const std::string& path,
                       const std::vector<EpochRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write error curve '" + path + "'");
    out << "epoch,error,train_accuracy\n";
    for (const auto& r : records) {
        out << r.epoch << ',' << format_double(r.error) << ','
            << format_double(r.train_accuracy) << '\n';
    }
}

void save_parameters(const std::string& path, const SavedParameters& saved) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write parameter file '" + path + "'");
    out << kParamsMagic << ' ' << kParamsVersion << '\n';
    out << "dataset " << saved.dataset << '\n';
    out << "n " << saved.n << '\n';
    out << "d " << saved.d << '\n';
    out << "seed " << saved.params.seed << '\n';
    out << "w";
    for (int j = 0; j < saved.params.w.size(); ++j) {
        out << ' ' << format_double(saved.params.w(j));
    }
    out << '\n' << "alpha";
    for (int s = 0; s < saved.params.alpha.size(); ++s) {
        out << ' ' << format_double(saved.params.alpha(s));
    }
    out << '\n';
}

SavedParameters load_parameters(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open parameter file '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw DataError(path + ": empty parameter file");
    std::istringstream head(line);
    std::string magic;
    int version = 0;
    head >> magic >> version;
    if (magic != kParamsMagic || version != kParamsVersion) {
        throw DataError(path + ": not a qunit parameter file (bad header '" + line +
                        "')");
    }

    SavedParameters saved;
    bool have_w = false, have_alpha = false;
    while (std::getline(in, line)) {
        if (trimmed(line).empty()) continue;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "dataset") {
            ss >> saved.dataset;
        } else if (key == "n") {
            ss >> saved.n;
        } else if (key == "d") {
            ss >> saved.d;
        } else if (key == "seed") {
            ss >> saved.params.seed;
        } else if (key == "w" || key == "alpha") {
            std::vector<double> values;
            std::string token;
            while (ss >> token) {
                values.push_back(parse_double_or_throw(token, path));
            }
            RealVector v(values.size());
            for (std::size_t i = 0; i < values.size(); ++i) v(i) = values[i];
            if (key == "w") {
                saved.params.w = v;
                have_w = true;
            } else {
                saved.params.alpha = v;
                have_alpha = true;
            }
        } else {
            throw DataError(path + ": unrecognized field '" + key + "'");
        }
    }
    if (!have_w || !have_alpha || saved.n < 2 || saved.d < 1) {
        throw DataError(path + ": truncated parameter file");
    }
    if (saved.params.w.size() != saved.d ||
        saved.params.alpha.size() != saved.n * saved.n - 1) {
        throw DataError(path + ": parameter blocks do not match declared (d, n)");
    }
    return saved;
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
    std::map<std::string, std::string> config;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trimmed(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw DataError("config line " + std::to_string(line_no) +
                            ": expected key = value, got '" + line + "'");
        }
        const std::string key = trimmed(line.substr(0, eq));
        const std::string value = trimmed(line.substr(eq + 1));
        if (key.empty()) {
            throw DataError("config line " + std::to_string(line_no) + ": empty key");
        }
        config[key] = value;
    }
    return config;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open config file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

} // namespace qunit
