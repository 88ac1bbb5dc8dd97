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

#include "umlq/ir_json.hpp"

#include <cmath>
#include <limits>

namespace umlq {

using ojson = nlohmann::ordered_json;

IrFormatError::IrFormatError(std::string pointer, const std::string& message)
    : std::runtime_error((pointer.empty() ? std::string("/") : pointer) + ": " + message),
      pointer_(std::move(pointer)) {}

namespace {

const char* visibility_name(Visibility v) {
    switch (v) {
        case Visibility::Public: return "public";
        case Visibility::Private: return "private";
        case Visibility::Protected: return "protected";
        case Visibility::Unspecified: break;
    }
    return "";
}

ojson class_to_json(const IrClass& c) {
    ojson attrs = ojson::array();
    for (const auto& a : c.attributes) {
        attrs.push_back({{"name", a.name}, {"type", a.type}, {"visibility", visibility_name(a.visibility)}});
    }
    ojson ops = ojson::array();
    for (const auto& op : c.operations) {
        ojson params = ojson::array();
        for (const auto& p : op.params) params.push_back({{"name", p.name}, {"type", p.type}});
        ops.push_back({{"name", op.name},
                       {"params", std::move(params)},
                       {"return_type", op.return_type},
                       {"visibility", visibility_name(op.visibility)}});
    }
    return {{"name", c.name}, {"quantum", c.quantum}, {"attributes", std::move(attrs)}, {"operations", std::move(ops)}};
}

ojson package_to_json(const IrPackage& p) {
    ojson pkgs = ojson::array();
    for (const auto& sub : p.packages) pkgs.push_back(package_to_json(sub));
    ojson classes = ojson::array();
    for (const auto& c : p.classes) classes.push_back(class_to_json(c));
    return {{"name", p.name}, {"quantum", p.quantum}, {"packages", std::move(pkgs)}, {"classes", std::move(classes)}};
}

ojson ops_to_json(const std::vector<CircuitOp>& ops) {
    ojson out = ojson::array();
    for (const auto& op : ops) {
        if (const auto* g = std::get_if<GateOp>(&op.op)) {
            out.push_back({{"kind", "gate"},
                           {"name", std::string(gate_name(g->gate))},
                           {"params", g->params},
                           {"controls", g->controls},
                           {"targets", g->targets}});
        } else if (const auto* m = std::get_if<MeasureOp>(&op.op)) {
            out.push_back({{"kind", "measure"}, {"qubit", m->qubit}, {"clbit", m->clbit}});
        } else {
            const auto& b = std::get<ConditionalBlock>(op.op);
            out.push_back({{"kind", "cond"}, {"clbit", b.clbit}, {"value", b.value}, {"body", ops_to_json(b.body)}});
        }
    }
    return out;
}

// Reader tracks the JSON pointer of the value it wraps so every error names its location.
class Reader {
public:
    Reader(const ojson& value, std::string pointer) : v_(value), ptr_(std::move(pointer)) {}

    [[noreturn]] void fail(const std::string& message) const { throw IrFormatError(ptr_, message); }

    const ojson& value() const { return v_; }
    const std::string& pointer() const { return ptr_; }

    Reader field(const std::string& key) const {
        if (!v_.is_object()) fail("expected an object");
        auto it = v_.find(key);
        if (it == v_.end()) throw IrFormatError(ptr_ + "/" + key, "missing required field");
        return Reader(*it, ptr_ + "/" + key);
    }

    bool has(const std::string& key) const { return v_.is_object() && v_.contains(key); }

    std::vector<Reader> items() const {
        if (!v_.is_array()) fail("expected an array");
        std::vector<Reader> out;
        for (std::size_t i = 0; i < v_.size(); ++i) out.emplace_back(v_[i], ptr_ + "/" + std::to_string(i));
        return out;
    }

    std::string str() const {
        if (!v_.is_string()) fail("expected a string");
        return v_.get<std::string>();
    }

    bool boolean() const {
        if (!v_.is_boolean()) fail("expected a boolean");
        return v_.get<bool>();
    }

    std::size_t index() const {
        if (!v_.is_number_unsigned() && !(v_.is_number_integer() && v_.get<long long>() >= 0)) {
            fail("expected a non-negative integer");
        }
        return v_.get<std::size_t>();
    }

    double real() const {
        if (!v_.is_number()) fail("expected a number");
        return v_.get<double>();
    }

    Visibility visibility() const {
        const std::string s = str();
        if (s == "public") return Visibility::Public;
        if (s == "private") return Visibility::Private;
        if (s == "protected") return Visibility::Protected;
        if (s.empty()) return Visibility::Unspecified;
        fail("unknown visibility '" + s + "'");
    }

private:
    const ojson& v_;
    std::string ptr_;
};

IrClass class_from_json(const Reader& r) {
    IrClass c;
    c.name = r.field("name").str();
    c.quantum = r.field("quantum").boolean();
    for (const auto& a : r.field("attributes").items()) {
        c.attributes.push_back({a.field("name").str(), a.field("type").str(), a.field("visibility").visibility()});
    }
    for (const auto& o : r.field("operations").items()) {
        IrOperation op;
        op.name = o.field("name").str();
        for (const auto& p : o.field("params").items()) op.params.push_back({p.field("name").str(), p.field("type").str()});
        op.return_type = o.field("return_type").str();
        op.visibility = o.field("visibility").visibility();
        c.operations.push_back(std::move(op));
    }
    return c;
}

IrPackage package_from_json(const Reader& r) {
    IrPackage p;
    p.name = r.field("name").str();
    p.quantum = r.field("quantum").boolean();
    for (const auto& sub : r.field("packages").items()) p.packages.push_back(package_from_json(sub));
    for (const auto& c : r.field("classes").items()) p.classes.push_back(class_from_json(c));
    return p;
}

std::vector<std::size_t> indices(const Reader& r) {
    std::vector<std::size_t> out;
    for (const auto& item : r.items()) out.push_back(item.index());
    return out;
}

std::vector<CircuitOp> ops_from_json(const Reader& r) {
    std::vector<CircuitOp> out;
    for (const auto& item : r.items()) {
        const std::string kind = item.field("kind").str();
        if (kind == "gate") {
            Reader name = item.field("name");
            auto gate = gate_from_name(name.str());
            if (!gate) name.fail("unknown gate '" + name.str() + "'");
            GateOp g;
            g.gate = *gate;
            for (const auto& p : item.field("params").items()) g.params.push_back(p.real());
            g.controls = indices(item.field("controls"));
            g.targets = indices(item.field("targets"));
            out.push_back(CircuitOp{std::move(g)});
        } else if (kind == "measure") {
            out.push_back(CircuitOp{MeasureOp{item.field("qubit").index(), item.field("clbit").index()}});
        } else if (kind == "cond") {
            ConditionalBlock b;
            b.clbit = item.field("clbit").index();
            Reader value = item.field("value");
            const std::size_t v = value.index();
            if (v > 1) value.fail("condition value must be 0 or 1");
            b.value = static_cast<int>(v);
            b.body = ops_from_json(item.field("body"));
            out.push_back(CircuitOp{std::move(b)});
        } else {
            item.field("kind").fail("unknown op kind '" + kind + "'");
        }
    }
    return out;
}

std::vector<std::string> strings(const Reader& r) {
    std::vector<std::string> out;
    for (const auto& item : r.items()) out.push_back(item.str());
    return out;
}

}  // namespace

ojson system_to_json(const SystemIr& system) {
    ojson pkgs = ojson::array();
    for (const auto& p : system.packages) pkgs.push_back(package_to_json(p));
    ojson out = {{"packages", std::move(pkgs)}};
    if (!system.classes.empty()) {
        ojson classes = ojson::array();
        for (const auto& c : system.classes) classes.push_back(class_to_json(c));
        out["classes"] = std::move(classes);
    }
    ojson assocs = ojson::array();
    for (const auto& a : system.associations) {
        assocs.push_back({{"source", a.source}, {"target", a.target}, {"label", a.label}});
    }
    out["associations"] = std::move(assocs);
    return out;
}

ojson circuit_to_json(const CircuitIr& circuit) {
    return {{"n_qubits", circuit.n_qubits},
            {"n_clbits", circuit.n_clbits},
            {"qubit_names", circuit.qubit_names},
            {"clbit_names", circuit.clbit_names},
            {"ops", ops_to_json(circuit.ops)}};
}

ojson report_to_json(const ValidationReport& report) {
    auto findings = [](const std::vector<Finding>& list) {
        ojson out = ojson::array();
        for (const auto& f : list) out.push_back({{"op", f.op_index}, {"rule", f.rule}, {"message", f.message}});
        return out;
    };
    return {{"ok", report.ok()}, {"errors", findings(report.errors)}, {"warnings", findings(report.warnings)}};
}

std::string serialize_ir(const SystemIr& system, const CircuitIr& circuit) {
    ojson doc = {{"ir_version", kIrVersion}, {"system", system_to_json(system)}, {"circuit", circuit_to_json(circuit)}};
    return doc.dump(2) + "\n";
}

std::pair<SystemIr, CircuitIr> deserialize_ir(std::string_view text) {
    ojson doc;
    try {
        doc = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw IrFormatError("", std::string("malformed JSON: ") + e.what());
    }
    Reader root(doc, "");
    Reader version = root.field("ir_version");
    if (version.index() != static_cast<std::size_t>(kIrVersion)) {
        version.fail("unsupported ir_version " + version.value().dump());
    }

    SystemIr system;
    Reader sys = root.field("system");
    for (const auto& p : sys.field("packages").items()) system.packages.push_back(package_from_json(p));
    if (sys.has("classes")) {
        for (const auto& c : sys.field("classes").items()) system.classes.push_back(class_from_json(c));
    }
    for (const auto& a : sys.field("associations").items()) {
        system.associations.push_back({a.field("source").str(), a.field("target").str(), a.field("label").str()});
    }

    CircuitIr circuit;
    Reader circ = root.field("circuit");
    circuit.n_qubits = circ.field("n_qubits").index();
    circuit.n_clbits = circ.field("n_clbits").index();
    circuit.qubit_names = strings(circ.field("qubit_names"));
    circuit.clbit_names = strings(circ.field("clbit_names"));
    circuit.ops = ops_from_json(circ.field("ops"));
    return {std::move(system), std::move(circuit)};
}

}  // namespace umlq
