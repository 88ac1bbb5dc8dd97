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

// Emits an executable program for one quantum SDK from a CircuitIr.
//
// Every program has the same layout: imports, helper definitions for non-native
// gates, register allocation, one statement per op in IR order, and an epilogue
// that runs the vendor's local simulator and prints `{"bitstring": count, ...}`
// with keys sorted and classical bit 0 as the rightmost character.
//
// Pinned SDK majors: qiskit 1.x + qiskit-aer 0.x, cirq 1.x, amazon-braket-sdk 1.x,
// and the modern Q# toolchain (qsharp 1.x).

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "umlq/ir.hpp"

namespace umlq {

enum class TargetQpl { Qiskit, Cirq, QSharp, Braket };

const std::array<TargetQpl, 4>& all_targets();
std::string_view target_name(TargetQpl target);  // qiskit, cirq, qsharp, braket
std::optional<TargetQpl> target_from_name(std::string_view name);
/// File suffix after the stem: `qiskit.py`, `cirq.py`, `qs`, `braket.py`.
std::string_view target_extension(TargetQpl target);

struct CapabilityRow {
    TargetQpl target;
    bool supports_conditionals = false;
    std::set<GateKind> native_gates;
    std::set<GateKind> placeholder_gates;  // emitted through a helper definition
};

CapabilityRow capabilities(TargetQpl target);

class CodegenError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The circuit uses a construct (conditionals, repeated measurement) the target cannot express.
class UnsupportedFeature : public CodegenError {
public:
    using CodegenError::CodegenError;
};

/// The gate has no native form on the target and placeholders are disabled.
class UnsupportedGate : public CodegenError {
public:
    using CodegenError::CodegenError;
};

struct GenOptions {
    std::uint64_t shots = 1024;
    std::optional<std::uint64_t> seed;
    bool allow_placeholders = true;
};

struct Manifest {
    std::size_t qubit_decls = 0;
    std::size_t clbit_decls = 0;
    std::size_t gate_ops = 0;
    std::size_t measures = 0;
    std::size_t conditionals = 0;
    std::size_t placeholders = 0;
    bool operator==(const Manifest&) const = default;
};

struct TargetProgram {
    std::string source;
    TargetQpl target = TargetQpl::Qiskit;
    Manifest manifest;
    std::vector<std::string> warnings;
};

enum class HelperKind {
    Decomposition,  // working helper built from native rotations
    FailingStub,    // callable placeholder the developer must implement
};

struct HelperRequirement {
    GateKind gate;
    HelperKind kind;
    bool operator==(const HelperRequirement&) const = default;
};

struct GateMapping {
    std::string expression;  // the gate application as it appears in any context
    std::string statement;   // complete unconditional statement
    std::optional<HelperRequirement> helper;
};

GateMapping map_gate(const GateOp& gate, TargetQpl target);

TargetProgram generate_quantum(const CircuitIr& circuit, TargetQpl target, const GenOptions& options = {});

}  // namespace umlq
