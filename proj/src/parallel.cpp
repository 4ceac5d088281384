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

#include "reclab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace reclab {

namespace {

int env_threads() {
    const char* v = std::getenv("RECURRENCE_LAB_THREADS");
    if (!v) return 1;
    try {
        const int t = std::stoi(v);
        return t > 0 ? t : 1;
    } catch (...) {
        return 1;
    }
}

std::atomic<int>& cap_slot() {
    static std::atomic<int> cap{env_threads()};
    return cap;
}

}  // namespace

int thread_cap() { return cap_slot().load(); }

void set_thread_cap(int threads) { cap_slot().store(threads > 0 ? threads : 1); }

ThreadCapScope::ThreadCapScope(int threads) : previous_(thread_cap()) { set_thread_cap(threads); }

ThreadCapScope::~ThreadCapScope() { set_thread_cap(previous_); }

}  // namespace reclab
