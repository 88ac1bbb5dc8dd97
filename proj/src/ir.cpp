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

#include "umlq/ir.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string_view>

namespace umlq {

namespace {

// ---------------------------------------------------------------------------
// Structural lowering

IrClass lower_class(const ClassNode& node, bool in_quantum_package) {
    IrClass out;
    out.name = node.name;
    out.quantum = in_quantum_package || has_quantum_stereotype(node.stereotypes);
    for (const auto& a : node.attributes) out.attributes.push_back({a.name, a.type, a.visibility});
    for (const auto& op : node.operations) {
        IrOperation lowered{op.name, {}, op.return_type, op.visibility};
        for (const auto& p : op.params) lowered.params.push_back({p.name, p.type});
        out.operations.push_back(std::move(lowered));
    }
    return out;
}

IrPackage lower_package(const PackageNode& node, bool in_quantum_package) {
    IrPackage out;
    out.name = node.name;
    out.quantum = in_quantum_package || has_quantum_stereotype(node.stereotypes);
    for (const auto& p : node.packages) out.packages.push_back(lower_package(p, out.quantum));
    for (const auto& c : node.classes) out.classes.push_back(lower_class(c, out.quantum));
    return out;
}

template <typename Class>
void count_class(const Class& c, ElementCounts& counts) {
    ++counts.classes;
    counts.operations += c.operations.size();
    counts.attributes += c.attributes.size();
}

template <typename Package>
void count_package(const Package& p, ElementCounts& counts) {
    ++counts.packages;
    for (const auto& sub : p.packages) count_package(sub, counts);
    for (const auto& c : p.classes) count_class(c, counts);
}

// ---------------------------------------------------------------------------
// Circuit helpers

void count_ops_into(const std::vector<CircuitOp>& ops, OpCounts& counts) {
    for (const auto& op : ops) {
        if (std::holds_alternative<GateOp>(op.op)) {
            ++counts.gates;
        } else if (std::holds_alternative<MeasureOp>(op.op)) {
            ++counts.measures;
        } else {
            ++counts.conditionals;
            count_ops_into(std::get<ConditionalBlock>(op.op).body, counts);
        }
    }
}

bool dynamic_ops(const std::vector<CircuitOp>& ops, std::set<std::size_t>& measured) {
    for (const auto& op : ops) {
        if (const auto* g = std::get_if<GateOp>(&op.op)) {
            for (auto q : g->controls) {
                if (measured.count(q)) return true;
            }
            for (auto q : g->targets) {
                if (measured.count(q)) return true;
            }
        } else if (const auto* m = std::get_if<MeasureOp>(&op.op)) {
            if (!measured.insert(m->qubit).second) return true;
        } else {
            return true;
        }
    }
    return false;
}

std::string plural(std::size_t n, std::string_view word) {
    return std::to_string(n) + " " + std::string(word) + (n == 1 ? "" : "s");
}

// ---------------------------------------------------------------------------
// Validation

class Validator {
public:
    Validator(const CircuitIr& circuit, const ValidationOptions& options) : c_(circuit), opts_(options) {}

    ValidationReport run() {
        if (c_.qubit_names.size() != c_.n_qubits || c_.clbit_names.size() != c_.n_clbits) {
            error(0, "names", "qubit/clbit name lists do not match the declared counts");
        }
        walk(c_.ops, 0);
        return std::move(report_);
    }

private:
    void error(std::size_t index, std::string rule, std::string message) {
        report_.errors.push_back({index, std::move(rule), std::move(message)});
    }

    void check_qubit(std::size_t index, std::size_t q) {
        if (q >= c_.n_qubits) {
            error(index, "index-range", "qubit index " + std::to_string(q) + " out of range");
        } else if (!opts_.allow_mid_circuit && measured_.count(q)) {
            error(index, "post-measurement", "post-measurement use of qubit " + std::to_string(q));
        }
    }

    void check_gate(std::size_t index, const GateOp& g) {
        const GateInfo& info = gate_info(g.gate);
        if (g.params.size() != info.num_params) {
            error(index, "arity",
                  "arity mismatch: " + std::string(info.name) + " expects " + plural(info.num_params, "parameter"));
        }
        for (double p : g.params) {
            if (!std::isfinite(p)) error(index, "param-finite", "non-finite gate parameter");
        }
        if (g.controls.size() != info.num_controls || g.targets.size() != info.num_targets) {
            error(index, "operands",
                  std::string(info.name) + " expects " + plural(info.num_controls, "control") + " and " +
                      plural(info.num_targets, "target"));
        }
        std::set<std::size_t> controls(g.controls.begin(), g.controls.end());
        std::set<std::size_t> targets(g.targets.begin(), g.targets.end());
        if (controls.size() != g.controls.size() || targets.size() != g.targets.size()) {
            error(index, "duplicate-index", "repeated qubit index within " + std::string(info.name));
        }
        for (auto q : controls) {
            if (targets.count(q)) {
                error(index, "overlap", "overlapping control/target on qubit " + std::to_string(q));
                break;
            }
        }
        for (auto q : controls) check_qubit(index, q);
        for (auto q : targets) check_qubit(index, q);
    }

    void walk(const std::vector<CircuitOp>& ops, std::size_t depth) {
        for (const auto& op : ops) {
            const std::size_t index = next_index_++;
            if (const auto* g = std::get_if<GateOp>(&op.op)) {
                check_gate(index, *g);
            } else if (const auto* m = std::get_if<MeasureOp>(&op.op)) {
                check_qubit(index, m->qubit);
                if (m->clbit >= c_.n_clbits) {
                    error(index, "index-range", "clbit index " + std::to_string(m->clbit) + " out of range");
                }
                measured_.insert(m->qubit);
                written_.insert(m->clbit);
            } else {
                const auto& block = std::get<ConditionalBlock>(op.op);
                if (block.clbit >= c_.n_clbits) {
                    error(index, "index-range", "clbit index " + std::to_string(block.clbit) + " out of range");
                } else if (!written_.count(block.clbit)) {
                    error(index, "cond-unwritten",
                          "condition reads clbit " + std::to_string(block.clbit) + " before any measurement");
                }
                if (block.value != 0 && block.value != 1) {
                    error(index, "cond-value", "condition value must be 0 or 1");
                }
                if (depth + 1 > kMaxConditionalDepth) {
                    error(index, "cond-depth",
                          "conditional nesting deeper than " + std::to_string(kMaxConditionalDepth));
                }
                walk(block.body, depth + 1);
            }
        }
    }

    const CircuitIr& c_;
    ValidationOptions opts_;
    ValidationReport report_;
    std::set<std::size_t> measured_;
    std::set<std::size_t> written_;
    std::size_t next_index_ = 0;
};

// ---------------------------------------------------------------------------
// Behavioral lowering

class SequenceLowering {
public:
    explicit SequenceLowering(const SequenceModel& model) : model_(model) {
        for (const auto& p : model.participants) {
            if (p.kind == ParticipantKind::Qubit) {
                qubits_[p.alias] = circuit_.qubit_names.size();
                circuit_.qubit_names.push_back(p.name);
            } else {
                clbits_[p.alias] = circuit_.clbit_names.size();
                circuit_.clbit_names.push_back(p.name);
            }
        }
        circuit_.n_qubits = circuit_.qubit_names.size();
        circuit_.n_clbits = circuit_.clbit_names.size();
    }

    CircuitLowering run(const ValidationOptions& options) {
        circuit_.ops = lower_events(model_.events);
        CircuitLowering out;
        if (!errors_.empty()) {
            out.report.errors = std::move(errors_);
            return out;
        }
        out.report = validate_circuit(circuit_, options);
        if (out.report.ok()) out.circuit = std::move(circuit_);
        return out;
    }

private:
    void error(std::size_t index, std::string rule, std::string message) {
        errors_.push_back({index, std::move(rule), std::move(message)});
    }

    std::optional<std::size_t> qubit(std::size_t index, const std::string& alias) {
        auto it = qubits_.find(alias);
        if (it == qubits_.end()) {
            error(index, "classical-operand", "'" + alias + "' is a classical bit, not a qubit");
            return std::nullopt;
        }
        return it->second;
    }

    std::optional<GateKind> gate(std::size_t index, const std::string& name, const std::vector<double>& params) {
        auto kind = gate_from_name(name);
        if (!kind) {
            error(index, "unknown-gate", "unknown gate '" + name + "'");
            return std::nullopt;
        }
        const GateInfo& info = gate_info(*kind);
        if (params.size() != info.num_params) {
            error(index, "arity",
                  "arity mismatch: " + name + " expects " + plural(info.num_params, "parameter"));
            return std::nullopt;
        }
        return kind;
    }

    std::optional<CircuitOp> lower_message(std::size_t index, const MessageNode& m) {
        switch (m.kind) {
            case MessageKind::SelfMessage: {
                auto q = qubit(index, m.sender);
                auto kind = gate(index, m.name, m.params);
                if (!q || !kind) return std::nullopt;
                const GateInfo& info = gate_info(*kind);
                if (info.num_controls != 0 || info.num_targets != 1) {
                    error(index, "group-arity", "multi-qubit gate '" + m.name + "' must be modeled as a group");
                    return std::nullopt;
                }
                return CircuitOp{GateOp{*kind, m.params, {}, {*q}}};
            }
            case MessageKind::Measure: {
                auto q = qubit(index, m.sender);
                if (!q) return std::nullopt;
                return CircuitOp{MeasureOp{*q, clbits_.at(m.receiver)}};
            }
            case MessageKind::Cross:
                break;
        }
        error(index, "ungrouped-message",
              "message '" + m.name + "' between different participants outside a group");
        return std::nullopt;
    }

    static void push_unique(std::vector<std::size_t>& v, std::size_t q) {
        if (std::find(v.begin(), v.end(), q) == v.end()) v.push_back(q);
    }

    std::optional<CircuitOp> lower_group(std::size_t index, const GroupNode& g) {
        auto kind = gate(index, g.name, g.params);
        if (!kind) return std::nullopt;

        // Participants in order of appearance, and the subset sending a <<control>> message.
        std::vector<std::size_t> order;
        std::vector<std::size_t> senders;
        std::vector<std::size_t> receivers;
        std::optional<std::size_t> first_labeled_control;
        for (const auto& m : g.messages) {
            auto s = qubit(index, m.sender);
            auto r = qubit(index, m.receiver);
            if (!s || !r) return std::nullopt;
            push_unique(order, *s);
            push_unique(order, *r);
            push_unique(senders, *s);
            push_unique(receivers, *r);
            if (m.control && !first_labeled_control) first_labeled_control = *s;
        }

        GateOp op{*kind, g.params, {}, {}};
        if (*kind == GateKind::Swap) {
            op.targets = order;
        } else if (*kind == GateKind::Cswap) {
            const std::size_t control = first_labeled_control.value_or(order.front());
            op.controls = {control};
            for (auto q : order) {
                if (q != control) op.targets.push_back(q);
            }
        } else {
            op.controls = senders;
            op.targets = receivers;
        }

        const GateInfo& info = gate_info(*kind);
        if (op.controls.size() != info.num_controls || op.targets.size() != info.num_targets) {
            error(index, "group-arity",
                  "group '" + g.name + "' expects " + plural(info.num_controls, "control") + " and " +
                      plural(info.num_targets, "target") + ", got " + plural(op.controls.size(), "control") +
                      " and " + plural(op.targets.size(), "target"));
            return std::nullopt;
        }
        return CircuitOp{std::move(op)};
    }

    std::vector<CircuitOp> lower_events(const std::vector<EventNode>& events) {
        std::vector<CircuitOp> ops;
        for (const auto& e : events) {
            const std::size_t index = next_index_++;
            std::optional<CircuitOp> op;
            if (const auto* m = std::get_if<MessageNode>(&e.node)) {
                op = lower_message(index, *m);
            } else if (const auto* g = std::get_if<GroupNode>(&e.node)) {
                op = lower_group(index, *g);
            } else {
                const auto& alt = std::get<AltNode>(e.node);
                ConditionalBlock block;
                block.clbit = clbits_.at(alt.clbit);
                block.value = alt.value;
                block.body = lower_events(alt.events);
                op = CircuitOp{std::move(block)};
            }
            if (op) ops.push_back(std::move(*op));
        }
        return ops;
    }

    const SequenceModel& model_;
    CircuitIr circuit_;
    std::map<std::string, std::size_t> qubits_;
    std::map<std::string, std::size_t> clbits_;
    std::vector<Finding> errors_;
    std::size_t next_index_ = 0;
};

}  // namespace

ElementCounts count_elements(const SystemIr& system) {
    ElementCounts counts;
    for (const auto& p : system.packages) count_package(p, counts);
    for (const auto& c : system.classes) count_class(c, counts);
    counts.associations = system.associations.size();
    return counts;
}

ElementCounts count_elements(const ClassModel& model) {
    ElementCounts counts;
    for (const auto& p : model.packages) count_package(p, counts);
    for (const auto& c : model.classes) count_class(c, counts);
    counts.associations = model.associations.size();
    return counts;
}

SystemIr lower_class_model(const ClassModel& model) {
    SystemIr out;
    for (const auto& p : model.packages) out.packages.push_back(lower_package(p, false));
    for (const auto& c : model.classes) out.classes.push_back(lower_class(c, false));
    for (const auto& a : model.associations) out.associations.push_back({a.source, a.target, a.label});
    return out;
}

OpCounts count_ops(const CircuitIr& circuit) {
    OpCounts counts;
    count_ops_into(circuit.ops, counts);
    return counts;
}

bool is_dynamic(const CircuitIr& circuit) {
    std::set<std::size_t> measured;
    return dynamic_ops(circuit.ops, measured);
}

ValidationReport validate_circuit(const CircuitIr& circuit, const ValidationOptions& options) {
    return Validator(circuit, options).run();
}

CircuitLowering lower_sequence_model(const SequenceModel& model, const ValidationOptions& options) {
    return SequenceLowering(model).run(options);
}

}  // namespace umlq
