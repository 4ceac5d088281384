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

#include <set>

#include "reclab/witness.hpp"

namespace reclab {

bool verify_witness(const std::vector<u64>& S, const Witness& w) {
    const std::set<unsigned long long> B(w.B.begin(), w.B.end());
    const std::set<unsigned long long> steps(S.begin(), S.end());
    if (B.size() != w.B.size()) return false;
    if (!(Rational(B.size()) > w.delta * Rational(w.m))) return false;
    auto inside = [&](unsigned long long x) { return x >= w.frame_lo && x <= w.m; };
    for (unsigned long long b : B) {
        if (!inside(b)) return false;
        for (unsigned long long s : steps) {
            if (b + s < b || !inside(b + s)) return false;
            if (B.count(b + s)) return false;
            for (unsigned long long t : steps)
                if (b + s + t < b + s || !inside(b + s + t)) return false;
        }
    }
    return true;
}

}  // namespace reclab
