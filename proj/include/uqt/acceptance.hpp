// Copyright 2026 The uqt Authors.
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

#pragma once

#include <functional>
#include <string>
#include <vector>

/// End-to-end checks shared by the acceptance binary and the verify command.
namespace uqt::acceptance {

struct Outcome {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs every check in order; on_result (if set) fires as each finishes.
std::vector<Outcome> run_all(const std::function<void(const Outcome &)> &on_result = {});

std::string format_line(const Outcome &o);

} // namespace uqt::acceptance
