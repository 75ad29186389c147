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

#ifndef ABSTAB_SELFTEST_H
#define ABSTAB_SELFTEST_H

#include <cstdint>
#include <string>
#include <vector>

namespace abstab {

struct SelfTestResult {
    std::string name;
    uint64_t trials = 0;
    uint64_t failures = 0;
    std::string first_failure;

    bool passed() const {
        return failures == 0;
    }
};

/// Randomized comparison of the symbolic engine against brute force and the dense oracle on
/// groups of order at most max_order.
std::vector<SelfTestResult> run_selftest(uint64_t max_order, uint64_t seed, uint64_t trials);

}  // namespace abstab

#endif
