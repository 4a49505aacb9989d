// Copyright 2026 The qgo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * File formats.
 *
 * Instance files:
 *
 *     {"n": 3, "couplings": [[0, 1, J01], [0, 2, J02], [1, 2, J12]],
 *      "fields": [h0, h1, h2], "seed": 42}
 *
 * couplings sorted lexicographically, "seed" may be null. Readers reject
 * unknown keys. Doubles are written in shortest round-trip form, so
 * write/read is bit-exact.
 *
 * Schedule files: {"a": 1, "b": 1.2, "c": [...], "T": 1, "dt": 0.1}; "a"
 * is optional and defaults to 1.
 */

#pragma once

#include "qgo/ising.hpp"
#include "qgo/schedule.hpp"

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>

#include "json.hpp"

namespace qgo {

std::string read_text_file(const std::filesystem::path &path);

/// Creates parent directories as needed.
void write_text_file(const std::filesystem::path &path,
                     std::string_view contents);

nlohmann::json read_json_file(const std::filesystem::path &path);

/// Throws std::invalid_argument naming the first key of `j` not in
/// `allowed`.
void reject_unknown_keys(const nlohmann::json &j,
                         std::initializer_list<std::string_view> allowed,
                         std::string_view what);

nlohmann::json instance_to_json(const IsingInstance &instance);
IsingInstance instance_from_json(const nlohmann::json &j);

IsingInstance read_instance_file(const std::filesystem::path &path);
void write_instance_file(const std::filesystem::path &path,
                         const IsingInstance &instance);

nlohmann::json schedule_to_json(const AnnealSchedule &sched);
AnnealSchedule schedule_from_json(const nlohmann::json &j);
AnnealSchedule read_schedule_file(const std::filesystem::path &path);

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

} // namespace qgo
