// Copyright 2026 The hopfcone Authors
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


#ifndef HOPFCONE_GOLDEN_HPP
#define HOPFCONE_GOLDEN_HPP

#include <string>
#include <vector>

namespace hopfcone {

struct GoldenResult {
    std::string name;
    bool pass = false;
    /// What was computed, filled on failure.
    std::string detail;
};

/// Worked examples, recomputed and compared exactly.
std::vector<GoldenResult> golden_suite();

}  // namespace hopfcone

#endif  // HOPFCONE_GOLDEN_HPP
