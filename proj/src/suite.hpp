// Copyright 2026 The yaxter Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * The acceptance battery shared by `yaxter suite` and the acceptance test.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace yaxter {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    /// Largest residual met, in the criterion's own measure.
    double worst = 0;
    double tolerance = 0;
    std::string detail;
};

/// Criteria 1–10; criterion 11 reruns them and compares the serialized output.
std::vector<CriterionResult> run_suite(std::uint64_t seed);

io::json suite_json(const std::vector<CriterionResult> &results, std::uint64_t seed);

} // namespace yaxter
