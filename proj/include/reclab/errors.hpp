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

#include <stdexcept>
#include <string>

namespace reclab {

// Base for every error the library raises on purpose. The CLI maps these to
// exit code 1 (usage/domain) unless noted otherwise.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class BudgetError : public Error {
public:
    BudgetError(const std::string& what, unsigned long long largest_feasible)
        : Error(what), largest_feasible_(largest_feasible) {}
    unsigned long long largest_feasible() const { return largest_feasible_; }

private:
    unsigned long long largest_feasible_;
};

// Raised when a growth function (g for the thick set, f for the gap
// coloring) is too slow for the construction to be valid on the window.
class GrowthTooSlow : public Error {
public:
    using Error::Error;
};

class SearchFailed : public Error {
public:
    using Error::Error;
};

// A hard invariant failed. The CLI maps this to exit code 2.
class VerificationError : public Error {
public:
    using Error::Error;
};

}  // namespace reclab
