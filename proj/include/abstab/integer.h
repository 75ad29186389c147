// Copyright 2026 The abstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ABSTAB_INTEGER_H
#define ABSTAB_INTEGER_H

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

namespace abstab {

using Integer = mpz_class;

/// Residue of a modulo m in [0, m). m must be positive.
Integer floor_mod(const Integer &a, const Integer &m);

Integer gcd(const Integer &a, const Integer &b);
Integer lcm(const Integer &a, const Integer &b);

/// s*a + t*b == g with g = gcd(a, b) >= 0.
struct ExtGcd {
    Integer g;
    Integer s;
    Integer t;
};
ExtGcd ext_gcd(const Integer &a, const Integer &b);

/// Inverse of a modulo m, if gcd(a, m) == 1.
std::optional<Integer> inverse_mod(const Integer &a, const Integer &m);

/// Strict decimal parse. Accepts an optional leading '-'.
Integer parse_integer(std::string_view text);
std::string to_string(const Integer &value);

/// Uniform draw from [0, n) driven by the given engine. n must be positive.
Integer uniform_below(const Integer &n, std::mt19937_64 &rng);

/// n*(n-1)/2.
Integer choose2(const Integer &n);

}  // namespace abstab

#endif
