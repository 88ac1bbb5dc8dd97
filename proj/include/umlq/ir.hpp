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

// Intermediate representation shared by every generator.
//
// SystemIr is the structural view lowered from a class diagram; CircuitIr is the
// behavioral view lowered from a sequence diagram. Both are plain values.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "umlq/gates.hpp"
#include "umlq/uml_parser.hpp"

namespace umlq {

inline constexpr int kIrVersion = 1;

/// Maximum nesting of conditional blocks accepted by validation.
inline constexpr std::size_t kMaxConditionalDepth = 3;

// ---------------------------------------------------------------------------
// Structural view

struct IrParameter {
    std::string name;
    std::string type;
    bool operator==(const IrParameter&) const = default;
};

struct IrAttribute {
    std::string name;
    std::string type;
    Visibility visibility = Visibility::Unspecified;
    bool operator==(const IrAttribute&) const = default;
};

struct IrOperation {
    std::string name;
    std::vector<IrParameter> params;
    std::string return_type;
    Visibility visibility = Visibility::Unspecified;
    bool operator==(const IrOperation&) const = default;
};

struct IrClass {
    std::string name;
    bool quantum = false;  // own stereotype or inherited from an enclosing quantum package
    std::vector<IrAttribute> attributes;
    std::vector<IrOperation> operations;
    bool operator==(const IrClass&) const = default;
};

struct IrPackage {
    std::string name;
    bool quantum = false;
    std::vector<IrPackage> packages;
    std::vector<IrClass> classes;
    bool operator==(const IrPackage&) const = default;
};

struct IrAssociation {
    std::string source;
    std::string target;
    std::string label;
    bool operator==(const IrAssociation&) const = default;
};

struct SystemIr {
    std::vector<IrPackage> packages;
    std::vector<IrClass> classes;  // outside any package
    std::vector<IrAssociation> associations;
    bool operator==(const SystemIr&) const = default;
};

struct ElementCounts {
    std::size_t packages = 0;
    std::size_t classes = 0;
    std::size_t operations = 0;
    std::size_t attributes = 0;
    std::size_t associations = 0;
    bool operator==(const ElementCounts&) const = default;
};

ElementCounts count_elements(const SystemIr& system);
ElementCounts count_elements(const ClassModel& model);

SystemIr lower_class_model(const ClassModel& model);

// ---------------------------------------------------------------------------
// Behavioral view

struct GateOp {
    GateKind gate = GateKind::H;
    std::vector<double> params;  // radians
    std::vector<std::size_t> controls;
    std::vector<std::size_t> targets;
    bool operator==(const GateOp&) const = default;
};

struct MeasureOp {
    std::size_t qubit = 0;
    std::size_t clbit = 0;
    bool operator==(const MeasureOp&) const = default;
};

struct CircuitOp;

/// Body executes iff classical bit `clbit` currently holds `value`.
struct ConditionalBlock {
    std::size_t clbit = 0;
    int value = 1;
    std::vector<CircuitOp> body;
    bool operator==(const ConditionalBlock&) const = default;
};

struct CircuitOp {
    std::variant<GateOp, MeasureOp, ConditionalBlock> op;
    bool operator==(const CircuitOp&) const = default;
};

struct CircuitIr {
    std::size_t n_qubits = 0;
    std::size_t n_clbits = 0;
    std::vector<std::string> qubit_names;
    std::vector<std::string> clbit_names;
    std::vector<CircuitOp> ops;
    bool operator==(const CircuitIr&) const = default;
};

/// Totals over the circuit with conditional bodies flattened.
struct OpCounts {
    std::size_t gates = 0;
    std::size_t measures = 0;
    std::size_t conditionals = 0;
    bool operator==(const OpCounts&) const = default;
};

OpCounts count_ops(const CircuitIr& circuit);

/// True when some qubit is touched after it was measured, or the circuit branches on
/// a classical bit. Such circuits need per-shot simulation.
bool is_dynamic(const CircuitIr& circuit);

// ---------------------------------------------------------------------------
// Validation

struct Finding {
    std::size_t op_index;  // pre-order index over the flattened op list
    std::string rule;
    std::string message;
    bool operator==(const Finding&) const = default;
};

struct ValidationReport {
    std::vector<Finding> errors;
    std::vector<Finding> warnings;

    bool ok() const { return errors.empty(); }
    bool operator==(const ValidationReport&) const = default;
};

struct ValidationOptions {
    /// Accept gates and measurements on a qubit after it has been measured.
    bool allow_mid_circuit = false;
};

ValidationReport validate_circuit(const CircuitIr& circuit, const ValidationOptions& options = {});

struct CircuitLowering {
    std::optional<CircuitIr> circuit;  // set iff report.ok()
    ValidationReport report;
};

CircuitLowering lower_sequence_model(const SequenceModel& model, const ValidationOptions& options = {});

}  // namespace umlq
