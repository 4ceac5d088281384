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

#include "reclab/chen.hpp"

#include <cmath>
#include <sstream>

#include "reclab/errors.hpp"
#include "reclab/generators.hpp"
#include "reclab/kernels.hpp"

namespace reclab {

double theta(u64 n) {
    if (n < 2) throw DomainError("theta needs n >= 2");
    if (!is_prime(n) || !is_chen(n, true)) return 0.0;
    const double l = std::log(static_cast<double>(n));
    return l * l;
}

ChenSum chen_sum(u64 N) {
    if (N > 10'000'000) throw BudgetError("N above 10^7", 10'000'000);
    ChenSum s;
    s.N = N;
    if (N < 2) return s;
    const Window chen = family_window(SetFamily::chen(true), 2, N);
    chen.for_each([&](u64 n) {
        const double l = std::log(static_cast<double>(n));
        s.sum += l * l;
        ++s.support;
    });
    s.ratio = s.sum / static_cast<double>(N);
    return s;
}

ChenWeights::ChenWeights(u64 w_, i64 b_, u64 n_max) : w(w_), b(b_) {
    for (u64 p : primes_up_to(w == 0 ? 0 : w - 1)) {
        if (W > UINT64_MAX / p) throw RangeError("W overflows 64 bits");
        W *= p;
        phi_W *= p - 1;
    }
    if (gcd_u64(static_cast<u64>(floor_mod(b, static_cast<i64>(W))), W) != 1 && W > 1)
        throw DomainError("b must be coprime to W");
    if (n_max > 10'000'000) throw BudgetError("window above 10^7", 10'000'000);
    values.reserve(n_max);
    for (u64 n = 1; n <= n_max; ++n) values.push_back(at(n));
}

double ChenWeights::at(u64 n) const {
    const i64 m = static_cast<i64>(W * n) + b;
    if (m < 2) return 0.0;
    const double scale = static_cast<double>(phi_W) / static_cast<double>(W);
    return scale * scale * theta(static_cast<u64>(m));
}

GowersResult gowers_norm(const std::vector<Complex>& f, int k) {
    if (k < 1 || k > 3) throw DomainError("k must lie in {1, 2, 3}");
    const u64 N = f.size();
    if (N == 0) throw DomainError("empty function");
    long double cost = 1;
    for (int i = 0; i <= k; ++i) cost *= static_cast<long double>(N);
    if (cost > 1e9L) throw BudgetError("N^(k+1) above the 10^9 enumeration budget", 0);
    const Complex total = kernels::gowers_sum(f, k);
    GowersResult r;
    r.raw = total.real() / static_cast<double>(cost);
    if (r.raw < -1e-12) throw VerificationError("Gowers average is negative beyond rounding");
    if (r.raw < 0) {
        r.clamped = true;
        r.raw = 0;
    }
    r.norm = std::pow(r.raw, 1.0 / static_cast<double>(1 << k));
    return r;
}

std::vector<Complex> named_function(const std::string& spec, u64 N) {
    if (N == 0 || N > 1'000'000) throw DomainError("N must lie in [1, 10^6]");
    std::vector<Complex> f(N, 0.0);
    if (spec.rfind("constant:", 0) == 0) {
        const double c = std::stod(spec.substr(9));
        for (auto& v : f) v = c;
    } else if (spec == "indicator:primes" || spec == "indicator:chen") {
        const SetFamily fam = spec == "indicator:primes" ? SetFamily::primes() : SetFamily::chen(false);
        family_window(fam, 0, N - 1).for_each([&](u64 n) { f[n] = 1.0; });
    } else if (spec.rfind("theta:", 0) == 0) {
        const ChenWeights cw(parse_count(spec.substr(6)), -1, N);
        for (u64 n = 1; n < N; ++n) f[n] = cw.values[n - 1];
    } else {
        throw DomainError("unknown function '" + spec + "' (constant:c, indicator:primes, indicator:chen, theta:w)");
    }
    return f;
}

std::vector<Complex> load_function_text(const std::string& text, u64 N) {
    if (N == 0 || N > 1'000'000) throw DomainError("N must lie in [1, 10^6]");
    std::vector<Complex> f(N, 0.0);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        u64 n;
        double re, im = 0;
        if (!(ls >> n)) continue;
        if (!(ls >> re)) throw DomainError("function line lacks a value");
        ls >> im;
        if (n >= N) throw DomainError("index " + std::to_string(n) + " outside Z_N");
        f[n] = Complex(re, im);
    }
    return f;
}

std::optional<RecurrenceHit> recurrence_search(const Window& A, unsigned k) {
    if (k < 1 || k > 2) throw DomainError("k must be 1 or 2");
    A.for_each([](u64 a) {
        if (!is_prime(a)) throw DomainError(std::to_string(a) + " in A is not prime");
    });
    const auto first = A.first();
    const auto last = A.last();
    if (!first || *last - *first < k * 4u) return std::nullopt;
    const u64 p_max = (*last - *first) / k - 1;
    const Window chen = family_window(SetFamily::chen(false), 3, std::max<u64>(p_max, 3));
    std::optional<RecurrenceHit> hit;
    chen.for_each([&](u64 p) {
        if (hit || p > p_max) return;
        A.for_each([&](u64 a) {
            if (hit) return;
            for (unsigned j = 1; j <= k; ++j)
                if (!A.contains(a + j * (p + 1))) return;
            hit = RecurrenceHit{a, p, {}};
        });
    });
    if (!hit) return hit;
    for (unsigned j = 0; j <= k; ++j) hit->terms.push_back(hit->a + j * (hit->p + 1));
    // recheck by direct primality and Chen tests
    bool ok = is_prime(hit->p) && hit->p % 2 == 1 && is_chen(hit->p, false);
    for (u64 t : hit->terms) ok = ok && is_prime(t) && A.contains(t);
    if (!ok) throw VerificationError("recurrence hit failed the independent recheck");
    return hit;
}

}  // namespace reclab
