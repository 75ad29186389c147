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

#include "abstab/integer.h"

#include <stdexcept>

namespace abstab {

Integer floor_mod(const Integer &a, const Integer &m) {
    if (sgn(m) <= 0) {
        throw std::invalid_argument("floor_mod: modulus must be positive");
    }
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer gcd(const Integer &a, const Integer &b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer &a, const Integer &b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

ExtGcd ext_gcd(const Integer &a, const Integer &b) {
    ExtGcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::optional<Integer> inverse_mod(const Integer &a, const Integer &m) {
    if (m == 1) {
        return Integer(0);
    }
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    return r;
}

Integer parse_integer(std::string_view text) {
    size_t start = 0;
    if (!text.empty() && text[0] == '-') {
        start = 1;
    }
    if (start == text.size()) {
        throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    }
    for (size_t k = start; k < text.size(); k++) {
        if (text[k] < '0' || text[k] > '9') {
            throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
        }
    }
    return Integer(std::string(text), 10);
}

std::string to_string(const Integer &value) {
    return value.get_str(10);
}

Integer uniform_below(const Integer &n, std::mt19937_64 &rng) {
    if (sgn(n) <= 0) {
        throw std::invalid_argument("uniform_below: bound must be positive");
    }
    if (n == 1) {
        return 0;
    }
    Integer top = n - 1;
    size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
    size_t words = (bits + 63) / 64;
    size_t spare = words * 64 - bits;
    // Rejection sampling over the smallest covering power of two.
    while (true) {
        Integer candidate = 0;
        for (size_t w = 0; w < words; w++) {
            uint64_t chunk = rng();
            if (w == 0 && spare > 0) {
                chunk >>= spare;
            }
            candidate <<= 64;
            Integer part;
            mpz_import(part.get_mpz_t(), 1, 1, sizeof(chunk), 0, 0, &chunk);
            candidate += part;
        }
        if (candidate < n) {
            return candidate;
        }
    }
}

Integer choose2(const Integer &n) {
    Integer r = n * (n - 1);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), 2);
    return r;
}

}  // namespace abstab
