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

#include "reclab/arith.hpp"

namespace reclab {

// Strictly increasing integer-argument functions, used for both f and g.
//   pow:p/q     x -> x^(p/q), real valued, compared exactly
//   exp:b       x -> b^x
//   tower:L     x -> 2^2^...^x (L twos)
//   table:v1,.. k -> v_k for k = 1..n
// Values of exp and tower saturate at 2^64; anything that large is beyond
// every window this library handles.
class GrowthFn {
public:
    enum class Kind { Power, Exponential, Tower, Table };

    static GrowthFn power(Rational exponent);
    static GrowthFn exponential(u64 base);
    static GrowthFn tower(unsigned levels);
    static GrowthFn table(std::vector<u64> values);
    static GrowthFn parse(const std::string& text);

    Kind kind() const { return kind_; }
    std::string name() const;
    const std::vector<u64>& table_values() const { return table_; }

    // Number of tabulated points for tables; unbounded otherwise.
    bool bounded_domain() const { return kind_ == Kind::Table; }
    u64 domain_size() const { return table_.size(); }

    // floor(f(x)).
    BigInt value(u64 x) const;
    // y <= f(x), exactly.
    bool at_most(const BigInt& y, u64 x) const;
    // Largest x in the domain with f(x) <= y; 0 when there is none (tables
    // start at 1).
    u64 inverse_floor(const BigInt& y) const;
    // Smallest x with f(x) >= y.
    u64 least_reaching(const BigInt& y) const;

private:
    Kind kind_ = Kind::Power;
    Rational exponent_ = 1;
    u64 base_ = 2;
    unsigned levels_ = 1;
    std::vector<u64> table_;
};

}  // namespace reclab
