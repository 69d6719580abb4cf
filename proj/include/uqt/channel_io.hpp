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

#include <string>

#include "json.hpp"
#include "uqt/channels.hpp"

namespace uqt {

/// {"name": ..., "kraus": [[[re, im] x 4 row-major] x k], "params": {...}}
nlohmann::json channel_to_json(const QubitChannel &ch);
/// Parses and validates. Malformed documents raise ValidationError(Parse).
QubitChannel channel_from_json(const nlohmann::json &doc);

QubitChannel read_channel_file(const std::string &path);
void write_channel_file(const QubitChannel &ch, const std::string &path);

} // namespace uqt
