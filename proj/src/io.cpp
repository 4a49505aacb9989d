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

#include "qgo/io.hpp"

#include "qgo/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qgo {

using nlohmann::json;

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string() + " for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) {
        throw IoError("error while reading " + path.string());
    }
    return ss.str();
}

void write_text_file(const std::filesystem::path &path,
                     std::string_view contents) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw IoError("cannot create directory " +
                          path.parent_path().string() + ": " + ec.message());
        }
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
        throw IoError("error while writing " + path.string());
    }
}

json read_json_file(const std::filesystem::path &path) {
    const std::string text = read_text_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

void reject_unknown_keys(const json &j,
                         std::initializer_list<std::string_view> allowed,
                         std::string_view what) {
    if (!j.is_object()) {
        throw std::invalid_argument(std::string(what) +
                                    " must be a JSON object");
    }
    for (const auto &item : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) ==
            allowed.end()) {
            throw std::invalid_argument("unknown key \"" + item.key() +
                                        "\" in " + std::string(what));
        }
    }
}

json instance_to_json(const IsingInstance &instance) {
    json couplings = json::array();
    for (const Coupling &c : instance.couplings()) {
        couplings.push_back(json::array({c.i, c.j, c.value}));
    }
    json j;
    j["n"] = instance.size();
    j["couplings"] = std::move(couplings);
    j["fields"] = std::vector<double>(instance.fields().begin(),
                                      instance.fields().end());
    if (instance.seed()) {
        j["seed"] = *instance.seed();
    } else {
        j["seed"] = nullptr;
    }
    return j;
}

IsingInstance instance_from_json(const json &j) {
    reject_unknown_keys(j, {"n", "couplings", "fields", "seed"},
                        "instance file");
    try {
        const auto n = j.at("n").get<unsigned>();
        std::vector<Coupling> couplings;
        for (const json &c : j.at("couplings")) {
            if (!c.is_array() || c.size() != 3) {
                throw std::invalid_argument(
                    "each coupling must be [i, j, J]");
            }
            couplings.push_back({c[0].get<unsigned>(), c[1].get<unsigned>(),
                                 c[2].get<double>()});
        }
        auto fields = j.at("fields").get<std::vector<double>>();
        std::optional<std::uint64_t> seed;
        if (j.contains("seed") && !j.at("seed").is_null()) {
            seed = j.at("seed").get<std::uint64_t>();
        }
        return IsingInstance(n, std::move(couplings), std::move(fields), seed);
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed instance: ") +
                                    e.what());
    }
}

IsingInstance read_instance_file(const std::filesystem::path &path) {
    try {
        return instance_from_json(read_json_file(path));
    } catch (const std::invalid_argument &e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

void write_instance_file(const std::filesystem::path &path,
                         const IsingInstance &instance) {
    write_text_file(path, instance_to_json(instance).dump() + "\n");
}

json schedule_to_json(const AnnealSchedule &sched) {
    return json{{"a", sched.a},
                {"b", sched.b},
                {"c", sched.c},
                {"T", sched.T},
                {"dt", sched.dt}};
}

AnnealSchedule schedule_from_json(const json &j) {
    reject_unknown_keys(j, {"a", "b", "c", "T", "dt"}, "schedule file");
    AnnealSchedule s;
    try {
        s.a = j.value("a", 1.0);
        s.b = j.at("b").get<double>();
        s.c = j.at("c").get<std::vector<double>>();
        s.T = j.at("T").get<double>();
        s.dt = j.at("dt").get<double>();
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed schedule: ") +
                                    e.what());
    }
    s.validate();
    return s;
}

AnnealSchedule read_schedule_file(const std::filesystem::path &path) {
    try {
        return schedule_from_json(read_json_file(path));
    } catch (const std::invalid_argument &e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace qgo
