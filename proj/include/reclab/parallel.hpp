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

namespace reclab {

// Upper bound on OpenMP threads used by every parallel kernel. Defaults to
// the RECURRENCE_LAB_THREADS environment variable, else 1.
int thread_cap();
void set_thread_cap(int threads);

// RAII override, restores the previous cap on scope exit.
class ThreadCapScope {
public:
    explicit ThreadCapScope(int threads);
    ~ThreadCapScope();
    ThreadCapScope(const ThreadCapScope&) = delete;
    ThreadCapScope& operator=(const ThreadCapScope&) = delete;

private:
    int previous_;
};

}  // namespace reclab
