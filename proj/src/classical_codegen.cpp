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

#include "umlq/classical_codegen.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace umlq {

namespace {

const std::set<std::string>& python_keywords() {
    static const std::set<std::string> kw{
        "False",  "None",   "True",    "and",      "as",       "assert", "async", "await",
        "break",  "class",  "continue", "def",     "del",      "elif",   "else",  "except",
        "finally", "for",   "from",    "global",   "if",       "import", "in",    "is",
        "lambda", "nonlocal", "not",   "or",       "pass",     "raise",  "return", "try",
        "while",  "with",   "yield"};
    return kw;
}

// Identifier usable verbatim in Python source.
std::string python_identifier(const std::string& name) {
    std::string out;
    for (char ch : name) {
        out += (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') ? ch : '_';
    }
    if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0]))) out.insert(0, "_");
    if (python_keywords().count(out)) out += "_";
    return out;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

const char* kHeader = "# Generated by umlq (IR version ";

class TreeBuilder {
public:
    TreeBuilder(const SystemIr& system, const ClassicalOptions& options) : system_(system), options_(options) {
        for (const auto& a : system.associations) by_source_[a.source].push_back(&a);
    }

    FileTree build() {
        std::set<std::string> root_names;
        for (const auto& p : system_.packages) package(p, "", root_names);
        for (const auto& c : system_.classes) klass(c, "", "", root_names);
        for (const auto& [source, list] : by_source_) {
            if (!placed_.count(source)) {
                throw std::invalid_argument("association source '" + source + "' is not a declared class");
            }
        }
        std::sort(tree_.files.begin(), tree_.files.end(),
                  [](const GeneratedFile& a, const GeneratedFile& b) { return a.path < b.path; });
        return std::move(tree_);
    }

private:
    void claim(std::set<std::string>& names, const std::string& entry, const std::string& dir,
               const std::string& what) {
        if (!names.insert(entry).second) {
            throw NameCollision(what + " maps to '" + (dir.empty() ? "" : dir + "/") + entry +
                                "', which is already generated for another element");
        }
    }

    void package(const IrPackage& p, const std::string& dir, std::set<std::string>& siblings) {
        const std::string name = snake_case(p.name);
        claim(siblings, name, dir, "package '" + p.name + "'");
        const std::string path = dir.empty() ? name : dir + "/" + name;
        std::ostringstream os;
        os << kHeader << kIrVersion << ") for package " << p.name << ".\n";
        if (p.quantum) os << "# Stereotype: <<Quantum>>\n";
        tree_.files.push_back({path + "/__init__.py", os.str()});

        std::set<std::string> children;
        for (const auto& sub : p.packages) package(sub, path, children);
        for (const auto& c : p.classes) klass(c, path, p.name, children);
    }

    void klass(const IrClass& c, const std::string& dir, const std::string& package_name,
               std::set<std::string>& siblings) {
        const std::string stem = snake_case(c.name);
        claim(siblings, stem, dir, "class '" + c.name + "'");

        std::ostringstream os;
        os << kHeader << kIrVersion << ") from class " << c.name;
        if (!package_name.empty()) os << " in package " << package_name;
        os << ".\n";
        // An association is emitted once, with the first class carrying its source name.
        if (placed_.insert(c.name).second) {
            auto it = by_source_.find(c.name);
            if (it != by_source_.end()) {
                for (const auto* a : it->second) {
                    os << "# association: " << a->source << " --> " << a->target;
                    if (!a->label.empty()) os << " : " << a->label;
                    os << "\n";
                }
            }
        }
        if (c.quantum) {
            os << "\nimport " << python_identifier(options_.quantum_stem + "_circuit") << "  # quantum module generated from the sequence diagram\n";
        }

        os << "\n\nclass " << python_identifier(c.name) << ":\n";
        std::set<std::string> members{"__init__"};
        os << "    def __init__(self):\n";
        if (c.attributes.empty()) os << "        pass\n";
        for (const auto& a : c.attributes) {
            const std::string name = python_identifier(a.name);
            if (!members.insert(name).second) {
                throw NameCollision("attribute '" + a.name + "' of class '" + c.name + "' collides with another member");
            }
            const PythonType t = map_type(a.type);
            os << "        self." << name;
            if (!t.annotation.empty()) os << ": " << t.annotation;
            os << " = " << t.neutral;
            if (!t.known) os << "  # " << a.type;
            os << "\n";
        }
        for (const auto& op : c.operations) {
            const std::string name = python_identifier(op.name);
            if (!members.insert(name).second) {
                throw NameCollision("operation '" + op.name + "' of class '" + c.name + "' collides with another member");
            }
            os << "\n    def " << name << "(self";
            std::set<std::string> params{"self"};
            for (const auto& p : op.params) {
                std::string pname = python_identifier(p.name);
                while (!params.insert(pname).second) pname += "_";
                os << ", " << pname;
                const PythonType t = map_type(p.type);
                if (!t.annotation.empty()) os << ": " << t.annotation;
            }
            os << ")";
            const PythonType ret = map_type(op.return_type);
            if (!ret.annotation.empty()) os << " -> " << ret.annotation;
            os << ":\n        pass\n";
        }
        const std::string path = dir.empty() ? stem + ".py" : dir + "/" + stem + ".py";
        tree_.files.push_back({path, os.str()});
    }

    const SystemIr& system_;
    const ClassicalOptions& options_;
    std::map<std::string, std::vector<const IrAssociation*>> by_source_;
    std::set<std::string> placed_;
    FileTree tree_;
};

struct Scan {
    std::size_t packages = 0;
    std::size_t classes = 0;
    std::size_t methods = 0;
    std::size_t constructors = 0;
    std::size_t attributes = 0;
    std::size_t associations = 0;
};

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

Scan scan(const FileTree& tree) {
    Scan out;
    for (const auto& f : tree.files) {
        const bool marker = f.path == "__init__.py" || (f.path.size() > 12 && f.path.ends_with("/__init__.py"));
        if (marker) {
            ++out.packages;
            continue;
        }
        std::istringstream in(f.text);
        std::string line;
        bool in_constructor = false;
        while (std::getline(in, line)) {
            if (starts_with(line, "# association: ")) {
                ++out.associations;
            } else if (starts_with(line, "class ")) {
                ++out.classes;
            } else if (starts_with(line, "    def ")) {
                in_constructor = starts_with(line, "    def __init__(");
                (in_constructor ? out.constructors : out.methods) += 1;
            } else if (in_constructor && starts_with(line, "        self.")) {
                ++out.attributes;
            }
        }
    }
    return out;
}

CategoryReport category(std::size_t model, std::size_t found) {
    CategoryReport r;
    r.model_count = model;
    r.generated_count = found;
    r.relevant = std::min(model, found);
    r.irrelevant = found - r.relevant;
    r.missing = model - r.relevant;
    return r;
}

double ratio(std::size_t num, std::size_t den) { return den == 0 ? 1.0 : static_cast<double>(num) / den; }

nlohmann::ordered_json category_json(const CategoryReport& c) {
    return {{"model", c.model_count},
            {"generated", c.generated_count},
            {"relevant", c.relevant},
            {"irrelevant", c.irrelevant},
            {"missing", c.missing}};
}

}  // namespace

std::string snake_case(const std::string& name) {
    std::string out;
    for (std::size_t i = 0; i < name.size(); ++i) {
        const auto ch = static_cast<unsigned char>(name[i]);
        if (!std::isalnum(ch)) {
            if (!out.empty() && out.back() != '_') out += '_';
            continue;
        }
        if (std::isupper(ch) && i > 0 && !out.empty() && out.back() != '_') {
            const auto prev = static_cast<unsigned char>(name[i - 1]);
            const bool next_lower = i + 1 < name.size() && std::islower(static_cast<unsigned char>(name[i + 1]));
            if (std::islower(prev) || std::isdigit(prev) || (std::isupper(prev) && next_lower)) out += '_';
        }
        out += static_cast<char>(std::tolower(ch));
    }
    while (!out.empty() && out.back() == '_') out.pop_back();
    return python_identifier(out);
}

PythonType map_type(const std::string& uml_type) {
    if (uml_type.empty()) return {"", "None", true};
    if (uml_type.ends_with("[]")) return {"list", "[]", true};
    const std::string base = lower(uml_type.substr(0, uml_type.find('<')));
    static const std::map<std::string, PythonType> table{
        {"int", {"int", "0", true}},          {"integer", {"int", "0", true}},
        {"long", {"int", "0", true}},         {"short", {"int", "0", true}},
        {"byte", {"int", "0", true}},         {"float", {"float", "0.0", true}},
        {"double", {"float", "0.0", true}},   {"real", {"float", "0.0", true}},
        {"number", {"float", "0.0", true}},   {"complex", {"complex", "0j", true}},
        {"bool", {"bool", "False", true}},    {"boolean", {"bool", "False", true}},
        {"str", {"str", "\"\"", true}},       {"string", {"str", "\"\"", true}},
        {"char", {"str", "\"\"", true}},      {"void", {"None", "None", true}},
        {"none", {"None", "None", true}},     {"matrix", {"list", "[]", true}},
        {"vector", {"list", "[]", true}},     {"list", {"list", "[]", true}},
        {"array", {"list", "[]", true}},      {"set", {"set", "set()", true}},
        {"result", {"dict", "{}", true}},     {"map", {"dict", "{}", true}},
        {"dict", {"dict", "{}", true}},       {"dictionary", {"dict", "{}", true}},
    };
    auto it = table.find(base);
    if (it != table.end()) return it->second;
    return {"\"" + uml_type + "\"", "None", false};
}

FileTree generate_classical(const SystemIr& system, const ClassicalOptions& options) {
    return TreeBuilder(system, options).build();
}

ElementReport element_report(const SystemIr& system, const FileTree& files) {
    const ElementCounts model = count_elements(system);
    const Scan found = scan(files);
    ElementReport r;
    r.packages = category(model.packages, found.packages);
    r.classes = category(model.classes, found.classes);
    r.operations = category(model.operations, found.methods);
    r.operations.generated_count += found.constructors;
    r.operations.irrelevant += found.constructors;
    r.attributes = category(model.attributes, found.attributes);
    r.associations = category(model.associations, found.associations);
    for (const auto* c : {&r.packages, &r.classes, &r.operations, &r.attributes, &r.associations}) {
        r.relevant += c->relevant;
        r.irrelevant += c->irrelevant;
        r.missing += c->missing;
    }
    r.precision = ratio(r.relevant, r.relevant + r.irrelevant);
    r.recall = ratio(r.relevant, r.relevant + r.missing);
    r.precision_without_constructors = ratio(r.relevant, r.relevant + r.irrelevant - found.constructors);
    return r;
}

nlohmann::ordered_json element_report_to_json(const ElementReport& r) {
    return {{"packages", category_json(r.packages)},
            {"classes", category_json(r.classes)},
            {"operations", category_json(r.operations)},
            {"attributes", category_json(r.attributes)},
            {"associations", category_json(r.associations)},
            {"relevant", r.relevant},
            {"irrelevant", r.irrelevant},
            {"missing", r.missing},
            {"precision", r.precision},
            {"recall", r.recall},
            {"precision_without_constructors", r.precision_without_constructors}};
}

}  // namespace umlq
