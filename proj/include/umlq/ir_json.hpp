// Copyright 2026 The umlq Authors
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

// JSON form of the IR:
//
//   { "ir_version": 1,
//     "system":  { "packages": [...], ["classes": [...],] "associations": [...] },
//     "circuit": { "n_qubits", "n_clbits", "qubit_names", "clbit_names",
//                  "ops": [ {"kind":"gate","name","params","controls","targets"}
//                         | {"kind":"measure","qubit","clbit"}
//                         | {"kind":"cond","clbit","value","body":[...]} ] } }
//
// "classes" in "system" holds classes declared outside any package and is omitted
// when empty.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "json.hpp"
#include "umlq/ir.hpp"

namespace umlq {

/// Schema violation while reading IR JSON; `pointer()` is an RFC 6901 JSON pointer.
class IrFormatError : public std::runtime_error {
public:
    IrFormatError(std::string pointer, const std::string& message);
    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

nlohmann::ordered_json system_to_json(const SystemIr& system);
nlohmann::ordered_json circuit_to_json(const CircuitIr& circuit);
nlohmann::ordered_json report_to_json(const ValidationReport& report);

std::string serialize_ir(const SystemIr& system, const CircuitIr& circuit);
std::pair<SystemIr, CircuitIr> deserialize_ir(std::string_view text);

}  // namespace umlq
