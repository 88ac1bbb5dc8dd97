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

// Python class skeletons for the structural model.
//
// Each package becomes a lower_snake_case directory holding an `__init__.py`; each
// class becomes `<snake_name>.py` in its package directory (top-level classes sit at
// the tree root). A class file contains a constructor that initializes every
// attribute to a neutral value and one `pass`-bodied method per model operation.
// Associations are written as comments in the file of their source class.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "umlq/ir.hpp"

namespace umlq {

struct GeneratedFile {
    std::string path;  // relative, '/'-separated
    std::string text;
    bool operator==(const GeneratedFile&) const = default;
};

struct FileTree {
    std::vector<GeneratedFile> files;  // sorted by path
    bool operator==(const FileTree&) const = default;
};

/// Two model elements map to the same generated path or identifier.
class NameCollision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ClassicalOptions {
    /// Quantum-flagged classes `import <quantum_stem>_circuit`.
    std::string quantum_stem = "quantum";
};

/// lower_snake_case identifier; Python keywords get a trailing underscore.
std::string snake_case(const std::string& name);

struct PythonType {
    std::string annotation;  // empty when the model gave no type
    std::string neutral;     // constructor initializer
    bool known = true;
};

/// UML type name to Python annotation and neutral value.
PythonType map_type(const std::string& uml_type);

FileTree generate_classical(const SystemIr& system, const ClassicalOptions& options = {});

struct CategoryReport {
    std::size_t model_count = 0;
    std::size_t generated_count = 0;
    std::size_t relevant = 0;
    std::size_t irrelevant = 0;
    std::size_t missing = 0;
    bool operator==(const CategoryReport&) const = default;
};

struct ElementReport {
    CategoryReport packages;
    CategoryReport classes;
    CategoryReport operations;  // irrelevant holds the generated constructors
    CategoryReport attributes;
    CategoryReport associations;
    std::size_t relevant = 0;
    std::size_t irrelevant = 0;
    std::size_t missing = 0;
    double precision = 1.0;
    double recall = 1.0;
    double precision_without_constructors = 1.0;
};

/// Counts elements by re-scanning the generated text and compares them with the model.
ElementReport element_report(const SystemIr& system, const FileTree& files);

nlohmann::ordered_json element_report_to_json(const ElementReport& report);

}  // namespace umlq
