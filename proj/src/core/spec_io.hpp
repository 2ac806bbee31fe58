// Copyright 2026 The qtk Authors
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

// JSON method specs.
//
//   {"method": "sign", "n": 3, "oracle": {"type": "builtin", "name": "parity"}}
//
// Oracle fragments are either {"type": "table", "input_bits", "output_bits",
// "values"} or {"type": "builtin", "name", "params"}. Builtins take their
// input width from the spec's n unless params.input_bits says otherwise.
// Complex numbers are a real, an [re, im] pair or {"turns": t} for
// exp(2 pi i t).

#pragma once

#include <optional>
#include <string>

#include "core/method.hpp"
#include "json.hpp"

namespace qtk {

/// Throws ParseError for malformed JSON, unknown names or missing fields, and
/// ValidationError when the instance itself is inconsistent. A given
/// n_override replaces the spec's "n".
MethodSpec parse_method_spec(const nlohmann::json &doc, std::optional<int> n_override = std::nullopt);
MethodSpec parse_method_spec_text(const std::string &text, std::optional<int> n_override = std::nullopt);

ClassicalOracle parse_oracle(const nlohmann::json &fragment, int default_input_bits);

/// Explicit phases from {"phases": [...]}; used by the decompose command.
std::vector<Complex> parse_phase_list(const nlohmann::json &doc);

Complex parse_complex(const nlohmann::json &value);
nlohmann::json complex_to_json(Complex value);

nlohmann::json report_to_json(const ResourceReport &report);

}  // namespace qtk
