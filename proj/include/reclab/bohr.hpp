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

#include <optional>
#include <string>
#include <vector>

#include "reclab/generators.hpp"

namespace reclab {

// Residues mod c that the family avoids, apart from finitely many declared
// exceptions (the prime p itself in class 0 mod p, for instance).
struct BlockedModulus {
    u64 c = 0;
    std::vector<u64> blocked;
    std::vector<u64> exceptions;
    std::string provenance;
};

u64 poly_root_count(const std::vector<i64>& coeffs, u64 p);

// F(x, y) = a x^2 + b x y + c y^2 with D = b^2 - 4ac.
struct QuadraticForm {
    i64 a = 0, b = 0, c = 0;
    i64 discriminant() const { return b * b - 4 * a * c; }
};

// Modulus q^2 blocking the multiples q, 2q, ..., (q-1)q when D is a
// non-residue mod q; empty otherwise. Requires q odd, q not dividing 4aD,
// D not a perfect square.
std::optional<BlockedModulus> blocked_for_quadratic_form(const QuadraticForm& f, u64 q);

struct InertTest {
    bool inert_like = false;
    u64 multiples_seen = 0;  // members divisible by q
    bool weak = false;       // no multiple of q in the sample
    std::optional<u64> counterexample;  // divisible by q but not by q^2
};

InertTest empirical_inert_test(const std::vector<u64>& values, u64 q);

// prod (1 - |blocked_i| / c_i) over pairwise coprime moduli.
Rational haar_upper_bound(const std::vector<BlockedModulus>& list);

// Positive values of x^3 + 2y^3 + 4z^3 - 6xyz (the norm from Q(2^{1/3})) with
// |x|, |y|, |z| <= radius, ascending and distinct.
std::vector<u64> cubic_norm_values(i64 radius);

// Positive values of F with |x|, |y| <= radius that are at most `bound`.
std::vector<u64> quadratic_form_values(const QuadraticForm& f, u64 bound, i64 radius);

// "primes", "poly:1,0,1", "qform:1,0,1", "norm:cubic2".
struct BohrTarget {
    enum class Kind { Primes, Polynomial, QuadraticForm, CubicNorm } kind = Kind::Primes;
    std::vector<i64> coeffs;
    QuadraticForm form;

    static BohrTarget parse(const std::string& text);
    std::string name() const;
};

struct BohrReport {
    std::string family;
    std::vector<BlockedModulus> moduli;
    std::vector<Rational> trail;  // bound after each modulus
    Rational final_bound = 1;
    u64 check_bound = 0;          // members up to this were scanned for each modulus
    std::vector<std::string> notes;
};

BohrReport bohr_pipeline(const BohrTarget& target, u64 prime_bound);

// Exceptions must match the members found in blocked classes exactly.
void validate_blocked(const BlockedModulus& bm, const std::vector<u64>& members);

}  // namespace reclab
