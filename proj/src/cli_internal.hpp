// Copyright 2026 The recurrence-lab Authors
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

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "reclab/arith.hpp"
#include "reclab/window.hpp"

namespace reclab::cli {

using Json = nlohmann::ordered_json;

struct Flag {
    std::string name;  // without the leading "--"
    std::string def;
    std::string help;
};

struct CommandSpec {
    std::string name;
    std::string help;
    std::vector<std::string> modes;  // empty: no positional mode
    std::string default_mode;
    std::vector<Flag> flags;
};

const std::vector<CommandSpec>& command_specs();
const CommandSpec* find_spec(const std::string& name);

// Resolved configuration: every flag of the command, plus command, mode,
// threads and seed, in a fixed order.
class Params {
public:
    explicit Params(Json config) : cfg_(std::move(config)) {}

    const Json& json() const { return cfg_; }
    std::string str(const std::string& key) const;
    bool has(const std::string& key) const { return !str(key).empty(); }
    u64 count(const std::string& key) const;
    i64 integer(const std::string& key) const;
    double real(const std::string& key) const;
    Rational rational(const std::string& key) const;
    std::vector<u64> u64_list(const std::string& key) const;
    std::vector<i64> i64_list(const std::string& key) const;

private:
    Json cfg_;
};

struct Outcome {
    Json result = Json::object();
    bool complete = true;  // false when a search came back empty-handed
};

Outcome compute(const std::string& command, const std::string& mode, const Params& p);

// Hard invariants recomputed from the result's raw data; array of
// {"name", "passed", "detail"}.
Json check(const std::string& command, const std::string& mode, const Params& p, const Json& result);

Json window_json(const Window& w);
Window window_from_json(const Json& j);

Json rational_json(const Rational& r);  // "p/q"
Rational rational_from_json(const Json& j);

// "all", "evens", "odds", "multiples:c", "family:<name>", "range:a..b" or an
// explicit comma list, restricted to [lo, hi].
Window parse_set_expr(const std::string& expr, u64 lo, u64 hi);

std::vector<u64> parse_u64_list(const std::string& text);
std::vector<i64> parse_i64_list(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace reclab::cli
