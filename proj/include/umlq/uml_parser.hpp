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

// Parser for the textual UML subset used to describe hybrid systems.
//
// Class diagrams:
//
//   package NAME [<<Quantum>>] { ... }
//   class NAME [<<Quantum>>] { [+|-|#]attr: type   [+|-|#]op(p: type, ...): rettype }
//   A --> B [: label]
//
// Sequence diagrams:
//
//   participant "NAME" as ALIAS <<qubit|classical_bit>>
//   ALIAS -> ALIAS : name[(p1, p2, ...)]
//   group NAME[(p1, ...)] ... end
//   alt ALIAS == 0|1 ... end
//
// Line comments start with `'`. `@startuml` / `@enduml` are accepted and ignored.
// Models carry no source positions, so a model compares equal to the model obtained
// by re-parsing its pretty-printed form.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace umlq {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, std::string expected, std::string found);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string expected_;
    std::string found_;
};

// ---------------------------------------------------------------------------
// Class diagrams

enum class Visibility { Unspecified, Public, Private, Protected };

struct ParameterNode {
    std::string name;
    std::string type;
    bool operator==(const ParameterNode&) const = default;
};

struct AttributeNode {
    std::string name;
    std::string type;
    Visibility visibility = Visibility::Unspecified;
    bool operator==(const AttributeNode&) const = default;
};

struct OperationNode {
    std::string name;
    std::vector<ParameterNode> params;
    std::string return_type;  // empty when the declaration omits it
    Visibility visibility = Visibility::Unspecified;
    bool operator==(const OperationNode&) const = default;
};

/// True iff `<<Quantum>>` is among the stereotypes.
bool has_quantum_stereotype(const std::vector<std::string>& stereotypes);

struct ClassNode {
    std::string name;
    std::vector<std::string> stereotypes;  // verbatim, without the angle brackets
    std::vector<AttributeNode> attributes;
    std::vector<OperationNode> operations;
    bool operator==(const ClassNode&) const = default;
};

struct PackageNode {
    std::string name;
    std::vector<std::string> stereotypes;
    std::vector<PackageNode> packages;
    std::vector<ClassNode> classes;
    bool operator==(const PackageNode&) const = default;
};

struct AssociationNode {
    std::string source;
    std::string target;
    std::string label;
    bool operator==(const AssociationNode&) const = default;
};

struct ClassModel {
    std::vector<PackageNode> packages;
    std::vector<ClassNode> classes;  // declared outside any package
    std::vector<AssociationNode> associations;
    bool operator==(const ClassModel&) const = default;
};

ClassModel parse_class_diagram(std::string_view source);
std::string print_class_model(const ClassModel& model);

// ---------------------------------------------------------------------------
// Sequence diagrams

enum class ParticipantKind { Qubit, ClassicalBit };

struct Participant {
    std::string name;
    std::string alias;
    ParticipantKind kind = ParticipantKind::Qubit;
    bool operator==(const Participant&) const = default;
};

enum class MessageKind {
    SelfMessage,  // single-qubit gate
    Measure,      // qubit -> classical bit, named `measure`
    Cross,        // any other message between two participants
};

struct MessageNode {
    MessageKind kind = MessageKind::SelfMessage;
    std::string sender;
    std::string receiver;
    std::string name;  // may be empty inside a group
    std::vector<double> params;
    bool control = false;     // `<<control>>`
    bool controlled = false;  // `<<controlled>>`
    bool operator==(const MessageNode&) const = default;
};

struct GroupNode {
    std::string name;
    std::vector<double> params;
    std::vector<MessageNode> messages;
    bool operator==(const GroupNode&) const = default;
};

struct EventNode;

struct AltNode {
    std::string clbit;  // alias of a classical_bit participant
    int value = 1;
    std::vector<EventNode> events;
    bool operator==(const AltNode&) const = default;
};

struct EventNode {
    std::variant<MessageNode, GroupNode, AltNode> node;
    bool operator==(const EventNode&) const = default;
};

struct SequenceModel {
    std::vector<Participant> participants;
    std::vector<EventNode> events;
    bool operator==(const SequenceModel&) const = default;
};

SequenceModel parse_sequence_diagram(std::string_view source);
std::string print_sequence_model(const SequenceModel& model);

/// Shortest decimal text that reads back to exactly `value`.
std::string format_real(double value);

}  // namespace umlq
