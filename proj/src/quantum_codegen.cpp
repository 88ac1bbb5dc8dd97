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

#include "umlq/quantum_codegen.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

namespace umlq {

namespace {

constexpr std::array<TargetQpl, 4> kTargets{TargetQpl::Qiskit, TargetQpl::Cirq, TargetQpl::QSharp, TargetQpl::Braket};

// Decimal literal valid as both a Python float and a Q# Double.
std::string real_literal(double value) {
    std::string s = format_real(value);
    const auto e = s.find_first_of("eE");
    const std::string mantissa = s.substr(0, e);
    if (mantissa.find('.') == std::string::npos) s.insert(e == std::string::npos ? s.size() : e, ".0");
    return s;
}

std::string qubit_ref(std::size_t q) { return "q[" + std::to_string(q) + "]"; }

std::vector<std::size_t> operands(const GateOp& g) {
    std::vector<std::size_t> out = g.controls;
    out.insert(out.end(), g.targets.begin(), g.targets.end());
    return out;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += parts[i];
    }
    return out;
}

std::string operand_list(const GateOp& g) {
    std::vector<std::string> parts;
    for (auto q : operands(g)) parts.push_back(qubit_ref(q));
    return join(parts);
}

std::string param_list(const std::vector<double>& params) {
    std::vector<std::string> parts;
    for (double p : params) parts.push_back(real_literal(p));
    return join(parts);
}

const std::string kHalfPi = real_literal(std::numbers::pi / 2);
const std::string kQuarterPi = real_literal(std::numbers::pi / 4);

// ---------------------------------------------------------------------------
// Per-target gate spelling

std::string qiskit_expression(const GateOp& g) {
    const auto name = std::string(gate_name(g.gate));
    switch (g.gate) {
        case GateKind::U2:
            return "qc.u(" + kHalfPi + ", " + param_list(g.params) + ", " + operand_list(g) + ")";
        case GateKind::U3:
            return "qc.u(" + param_list(g.params) + ", " + operand_list(g) + ")";
        case GateKind::Rx:
        case GateKind::Ry:
        case GateKind::Rz:
            return "qc." + name + "(" + param_list(g.params) + ", " + operand_list(g) + ")";
        default:
            return "qc." + name + "(" + operand_list(g) + ")";
    }
}

std::string cirq_expression(const GateOp& g) {
    std::string gate;
    switch (g.gate) {
        case GateKind::H: gate = "cirq.H"; break;
        case GateKind::X: gate = "cirq.X"; break;
        case GateKind::Y: gate = "cirq.Y"; break;
        case GateKind::Z: gate = "cirq.Z"; break;
        case GateKind::S: gate = "cirq.S"; break;
        case GateKind::Sdg: gate = "(cirq.S**-1)"; break;
        case GateKind::T: gate = "cirq.T"; break;
        case GateKind::Tdg: gate = "(cirq.T**-1)"; break;
        case GateKind::Rx: gate = "cirq.rx(" + param_list(g.params) + ")"; break;
        case GateKind::Ry: gate = "cirq.ry(" + param_list(g.params) + ")"; break;
        case GateKind::Rz: gate = "cirq.rz(" + param_list(g.params) + ")"; break;
        case GateKind::Cx: gate = "cirq.CNOT"; break;
        case GateKind::Cy: gate = "cirq.Y.controlled()"; break;
        case GateKind::Cz: gate = "cirq.CZ"; break;
        case GateKind::Ch: gate = "cirq.H.controlled()"; break;
        case GateKind::Swap: gate = "cirq.SWAP"; break;
        case GateKind::Ccx: gate = "cirq.CCX"; break;
        case GateKind::Cswap: gate = "cirq.CSWAP"; break;
        case GateKind::U2:
        case GateKind::U3:
            return std::string(gate_name(g.gate)) + "(" + param_list(g.params) + ", " + operand_list(g) + ")";
    }
    return gate + "(" + operand_list(g) + ")";
}

std::string braket_expression(const GateOp& g) {
    const std::string targets = operand_list(g);
    switch (g.gate) {
        case GateKind::Sdg: return "qc.si(" + targets + ")";
        case GateKind::Tdg: return "qc.ti(" + targets + ")";
        case GateKind::Rx:
        case GateKind::Ry:
        case GateKind::Rz:
            return "qc." + std::string(gate_name(g.gate)) + "(" + targets + ", " + param_list(g.params) + ")";
        case GateKind::Cx: return "qc.cnot(" + targets + ")";
        case GateKind::Ccx: return "qc.ccnot(" + targets + ")";
        case GateKind::Ch: return "ch(qc, " + targets + ")";
        case GateKind::U2:
        case GateKind::U3:
            return std::string(gate_name(g.gate)) + "(qc, " + param_list(g.params) + ", " + targets + ")";
        default: return "qc." + std::string(gate_name(g.gate)) + "(" + targets + ")";
    }
}

std::string qsharp_expression(const GateOp& g) {
    const std::string args = operand_list(g);
    auto controlled = [&](const std::string& op) {
        return "Controlled " + op + "([" + qubit_ref(g.controls[0]) + "], " + qubit_ref(g.targets[0]) + ")";
    };
    switch (g.gate) {
        case GateKind::H: return "H(" + args + ")";
        case GateKind::X: return "X(" + args + ")";
        case GateKind::Y: return "Y(" + args + ")";
        case GateKind::Z: return "Z(" + args + ")";
        case GateKind::S: return "S(" + args + ")";
        case GateKind::Sdg: return "Adjoint S(" + args + ")";
        case GateKind::T: return "T(" + args + ")";
        case GateKind::Tdg: return "Adjoint T(" + args + ")";
        case GateKind::Rx: return "Rx(" + param_list(g.params) + ", " + args + ")";
        case GateKind::Ry: return "Ry(" + param_list(g.params) + ", " + args + ")";
        case GateKind::Rz: return "Rz(" + param_list(g.params) + ", " + args + ")";
        case GateKind::U2: return "U2(" + param_list(g.params) + ", " + args + ")";
        case GateKind::U3: return "U3(" + param_list(g.params) + ", " + args + ")";
        case GateKind::Cx: return "CNOT(" + args + ")";
        case GateKind::Cy: return controlled("Y");
        case GateKind::Cz: return controlled("Z");
        case GateKind::Ch: return controlled("H");
        case GateKind::Swap: return "SWAP(" + args + ")";
        case GateKind::Ccx: return "CCNOT(" + args + ")";
        case GateKind::Cswap:
            return "Controlled SWAP([" + qubit_ref(g.controls[0]) + "], (" + qubit_ref(g.targets[0]) + ", " +
                   qubit_ref(g.targets[1]) + "))";
    }
    return {};
}

// ---------------------------------------------------------------------------
// Helper definitions for non-native gates

std::string helper_definition(TargetQpl target, GateKind gate) {
    std::ostringstream os;
    switch (target) {
        case TargetQpl::Cirq:
            if (gate == GateKind::U3) {
                os << "def u3(theta, phi, lam, qubit):\n"
                   << "    \"\"\"u3(theta, phi, lam) up to global phase: rz(lam), then ry(theta), then rz(phi).\"\"\"\n"
                   << "    return [cirq.rz(lam)(qubit), cirq.ry(theta)(qubit), cirq.rz(phi)(qubit)]\n";
            } else {
                os << "def u2(phi, lam, qubit):\n"
                   << "    \"\"\"u2(phi, lam) = u3(pi/2, phi, lam) up to global phase.\"\"\"\n"
                   << "    return [cirq.rz(lam)(qubit), cirq.ry(" << kHalfPi << ")(qubit), cirq.rz(phi)(qubit)]\n";
            }
            break;
        case TargetQpl::Braket:
            if (gate == GateKind::U3) {
                os << "def u3(circuit, theta, phi, lam, target):\n"
                   << "    \"\"\"u3(theta, phi, lam) up to global phase: rz(lam), then ry(theta), then rz(phi).\"\"\"\n"
                   << "    circuit.rz(target, lam).ry(target, theta).rz(target, phi)\n";
            } else if (gate == GateKind::U2) {
                os << "def u2(circuit, phi, lam, target):\n"
                   << "    \"\"\"u2(phi, lam) = u3(pi/2, phi, lam) up to global phase.\"\"\"\n"
                   << "    circuit.rz(target, lam).ry(target, " << kHalfPi << ").rz(target, phi)\n";
            } else {
                os << "def ch(circuit, control, target):\n"
                   << "    \"\"\"Controlled-H as ry(pi/4), cnot, ry(-pi/4) on the target.\"\"\"\n"
                   << "    circuit.ry(target, " << kQuarterPi << ").cnot(control, target).ry(target, -" << kQuarterPi
                   << ")\n";
            }
            break;
        case TargetQpl::QSharp: {
            const std::string name = gate == GateKind::U3 ? "U3" : "U2";
            const std::string params =
                gate == GateKind::U3 ? "theta : Double, phi : Double, lam : Double" : "phi : Double, lam : Double";
            os << "    // " << gate_name(gate) << " has no native Q# operation. Implement it before running.\n"
               << "    operation " << name << "(" << params << ", target : Qubit) : Unit {\n"
               << "        fail \"" << gate_name(gate) << " is a placeholder and has no implementation\";\n"
               << "    }\n";
            break;
        }
        case TargetQpl::Qiskit:
            break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Program emission

class Program {
public:
    Program(const CircuitIr& circuit, TargetQpl target, const GenOptions& options)
        : c_(circuit), t_(target), opts_(options), caps_(capabilities(target)) {}

    TargetProgram emit() {
        precheck(c_.ops);
        TargetProgram out;
        out.target = t_;
        const OpCounts counts = count_ops(c_);
        out.manifest = {c_.n_qubits, c_.n_clbits, counts.gates, counts.measures, counts.conditionals, helpers_.size()};
        for (const auto& h : helpers_) {
            out.warnings.push_back(std::string(gate_name(h.gate)) + " not native" +
                                   (h.kind == HelperKind::Decomposition ? "; emitted as a decomposition helper" : ""));
        }
        if (opts_.seed && (t_ == TargetQpl::QSharp || t_ == TargetQpl::Braket)) {
            out.warnings.push_back("seed ignored: the " + std::string(target_name(t_)) +
                                   " simulator is not seeded from the program");
        }
        switch (t_) {
            case TargetQpl::Qiskit: out.source = qiskit(); break;
            case TargetQpl::Cirq: out.source = cirq(); break;
            case TargetQpl::QSharp: out.source = qsharp(); break;
            case TargetQpl::Braket: out.source = braket(); break;
        }
        return out;
    }

private:
    void precheck(const std::vector<CircuitOp>& ops, std::size_t depth = 0) {
        for (const auto& op : ops) {
            // A skipped measurement leaves its Cirq key without a value for that shot.
            if (depth > 0 && t_ == TargetQpl::Cirq && std::holds_alternative<MeasureOp>(op.op)) {
                throw UnsupportedFeature("cirq cannot read back a measurement made inside a conditional block");
            }
            if (const auto* g = std::get_if<GateOp>(&op.op)) {
                GateMapping m = map_gate(*g, t_);
                if (!m.helper) continue;
                if (!opts_.allow_placeholders) {
                    throw UnsupportedGate(std::string(gate_name(g->gate)) + " is not native to " +
                                          std::string(target_name(t_)) + " and placeholders are disabled");
                }
                if (std::find(helpers_.begin(), helpers_.end(), *m.helper) == helpers_.end()) {
                    helpers_.push_back(*m.helper);
                }
            } else if (const auto* b = std::get_if<ConditionalBlock>(&op.op)) {
                if (!caps_.supports_conditionals) {
                    throw UnsupportedFeature(std::string(target_name(t_)) + " does not support conditional operations");
                }
                precheck(b->body, depth + 1);
            }
        }
        if (&ops == &c_.ops && t_ == TargetQpl::Braket && is_dynamic(c_)) {
            throw UnsupportedFeature("braket cannot keep using a qubit after measuring it");
        }
    }

    void legend(std::ostream& os, const char* comment) const {
        os << comment << " Generated by umlq (IR version " << kIrVersion << "), target: " << target_name(t_) << "\n";
        os << comment << " Model names:\n";
        for (std::size_t i = 0; i < c_.n_qubits; ++i) {
            os << comment << "   qubit " << i << ": " << c_.qubit_names[i] << "\n";
        }
        for (std::size_t i = 0; i < c_.n_clbits; ++i) {
            os << comment << "   clbit " << i << ": " << c_.clbit_names[i] << "\n";
        }
        if (c_.n_qubits + c_.n_clbits == 0) os << comment << "   (none)\n";
    }

    void python_helpers(std::ostream& os) const {
        for (const auto& h : helpers_) os << "\n\n" << helper_definition(t_, h.gate);
        if (!helpers_.empty()) os << "\n";
    }

    static void python_counts_print(std::ostream& os) {
        os << "print(json.dumps(dict(sorted(counts.items()))))\n";
    }

    // -- qiskit ---------------------------------------------------------------

    void qiskit_ops(std::ostream& os, const std::vector<CircuitOp>& ops, const std::string& indent) const {
        for (const auto& op : ops) {
            if (const auto* g = std::get_if<GateOp>(&op.op)) {
                os << indent << map_gate(*g, t_).statement << "\n";
            } else if (const auto* m = std::get_if<MeasureOp>(&op.op)) {
                os << indent << "qc.measure(" << qubit_ref(m->qubit) << ", cRegister[" << m->clbit << "])\n";
            } else {
                const auto& b = std::get<ConditionalBlock>(op.op);
                os << indent << "with qc.if_test((cRegister[" << b.clbit << "], " << b.value << ")):\n";
                if (b.body.empty()) os << indent << "    pass\n";
                qiskit_ops(os, b.body, indent + "    ");
            }
        }
    }

    std::string qiskit() const {
        std::ostringstream os;
        legend(os, "#");
        os << "\nimport json\n\n"
           << "from qiskit import ClassicalRegister, QuantumCircuit, QuantumRegister, transpile\n"
           << "from qiskit_aer import AerSimulator\n\n"
           << "SHOTS = " << opts_.shots << "\n";
        if (opts_.seed) os << "SEED = " << *opts_.seed << "\n";
        os << "\nq = QuantumRegister(" << c_.n_qubits << ", \"q\")\n"
           << "cRegister = ClassicalRegister(" << c_.n_clbits << ", \"c\")\n"
           << "qc = QuantumCircuit(q, cRegister)\n\n";
        qiskit_ops(os, c_.ops, "");
        if (!c_.ops.empty()) os << "\n";
        os << "simulator = AerSimulator(" << (opts_.seed ? "seed_simulator=SEED" : "") << ")\n"
           << "result = simulator.run(transpile(qc, simulator), shots=SHOTS).result()\n";
        if (count_ops(c_).measures == 0) {
            // Nothing is measured, so every shot reads all classical bits as 0.
            os << "counts = {\"" << std::string(c_.n_clbits, '0') << "\": SHOTS}\n";
        } else {
            os << "counts = result.get_counts(qc)\n";
        }
        python_counts_print(os);
        return os.str();
    }

    // -- cirq -----------------------------------------------------------------

    // Conditions in scope, as cirq condition expressions.
    void cirq_ops(std::ostream& os, const std::vector<CircuitOp>& ops, std::vector<std::string>& conditions,
                  std::vector<std::string>& clbit_keys, std::size_t& next_key) const {
        auto append = [&](const std::string& expr) {
            if (conditions.empty()) {
                os << "qc.append(" << expr << ")\n";
            } else {
                os << "qc.append(controlled_by(" << expr << ", " << join(conditions) << "))\n";
            }
        };
        for (const auto& op : ops) {
            if (const auto* g = std::get_if<GateOp>(&op.op)) {
                append(map_gate(*g, t_).expression);
            } else if (const auto* m = std::get_if<MeasureOp>(&op.op)) {
                const std::string key = "m" + std::to_string(next_key++);
                append("cirq.measure(" + qubit_ref(m->qubit) + ", key=\"" + key + "\")");
                clbit_keys[m->clbit] = key;
            } else {
                const auto& b = std::get<ConditionalBlock>(op.op);
                const std::string& key = clbit_keys[b.clbit];
                conditions.push_back(b.value == 1 ? "\"" + key + "\""
                                                  : "sympy.Eq(sympy.Symbol(\"" + key + "\"), 0)");
                cirq_ops(os, b.body, conditions, clbit_keys, next_key);
                conditions.pop_back();
            }
        }
    }

    static bool has_zero_condition(const std::vector<CircuitOp>& ops) {
        for (const auto& op : ops) {
            if (const auto* b = std::get_if<ConditionalBlock>(&op.op)) {
                if (b->value == 0 || has_zero_condition(b->body)) return true;
            }
        }
        return false;
    }

    std::string cirq() const {
        std::ostringstream body;
        std::vector<std::string> conditions;
        std::vector<std::string> clbit_keys(c_.n_clbits);
        std::size_t next_key = 0;
        cirq_ops(body, c_.ops, conditions, clbit_keys, next_key);
        const bool conditional = count_ops(c_).conditionals > 0;

        std::ostringstream os;
        legend(os, "#");
        os << "\nimport json\n\nimport cirq\n";
        if (has_zero_condition(c_.ops)) os << "import sympy\n";
        os << "\nSHOTS = " << opts_.shots << "\n";
        if (opts_.seed) os << "SEED = " << *opts_.seed << "\n";
        python_helpers(os);
        if (conditional) {
            os << "\n\ndef controlled_by(operations, *conditions):\n"
               << "    \"\"\"Attach the classical conditions to every operation.\"\"\"\n"
               << "    return [op.with_classical_controls(*conditions) for op in cirq.flatten_to_ops(operations)]\n\n";
        }
        os << "\nq = cirq.LineQubit.range(" << c_.n_qubits << ")\n"
           << "qc = cirq.Circuit()\n\n"
           << body.str();
        if (!c_.ops.empty()) os << "\n";

        // Each classical bit reads the last measurement key written to it.
        std::vector<std::string> keys;
        for (const auto& k : clbit_keys) keys.push_back(k.empty() ? "None" : "\"" + k + "\"");
        os << "CLBIT_KEYS = [" << join(keys) << "]\n"
           << "simulator = cirq.Simulator(" << (opts_.seed ? "seed=SEED" : "") << ")\n"
           << "result = simulator.run(qc, repetitions=SHOTS)\n"
           << "counts = {}\n"
           << "for shot in range(SHOTS):\n"
           << "    bits = \"\".join(\n"
           << "        \"0\" if key is None else str(int(result.measurements[key][shot][0]))\n"
           << "        for key in reversed(CLBIT_KEYS)\n"
           << "    )\n"
           << "    counts[bits] = counts.get(bits, 0) + 1\n";
        python_counts_print(os);
        return os.str();
    }

    // -- braket ---------------------------------------------------------------

    std::string braket() const {
        std::ostringstream os;
        legend(os, "#");
        os << "\nimport json\n\n"
           << "from braket.circuits import Circuit\n"
           << "from braket.devices import LocalSimulator\n\n"
           << "SHOTS = " << opts_.shots << "\n";
        python_helpers(os);
        os << "\nq = list(range(" << c_.n_qubits << "))\n"
           << "qc = Circuit()\n\n";
        std::vector<std::string> pairs;
        for (const auto& op : c_.ops) {
            if (const auto* g = std::get_if<GateOp>(&op.op)) {
                os << map_gate(*g, t_).statement << "\n";
            } else if (const auto* m = std::get_if<MeasureOp>(&op.op)) {
                os << "qc.measure(" << qubit_ref(m->qubit) << ")\n";
                pairs.push_back("(" + std::to_string(m->qubit) + ", " + std::to_string(m->clbit) + ")");
            }
        }
        if (!c_.ops.empty()) os << "\n";
        os << "N_CLBITS = " << c_.n_clbits << "\n";
        if (c_.ops.empty()) {
            os << "# Nothing to execute: every shot reads all classical bits as 0.\n"
               << "counts = {\"0\" * N_CLBITS: SHOTS}\n";
            python_counts_print(os);
            return os.str();
        }
        os << "# (qubit, clbit) pairs in program order; a clbit keeps the last qubit measured into it.\n"
           << "MEASUREMENTS = [" << join(pairs) << "]\n"
           << "device = LocalSimulator()\n"
           << "result = device.run(qc, shots=SHOTS).result()\n"
           << "columns = list(result.measured_qubits)\n"
           << "counts = {}\n"
           << "for row in result.measurements:\n"
           << "    bits = [\"0\"] * N_CLBITS\n"
           << "    for qubit, clbit in MEASUREMENTS:\n"
           << "        bits[N_CLBITS - 1 - clbit] = str(int(row[columns.index(qubit)]))\n"
           << "    key = \"\".join(bits)\n"
           << "    counts[key] = counts.get(key, 0) + 1\n";
        python_counts_print(os);
        return os.str();
    }

    // -- qsharp ---------------------------------------------------------------

    void qsharp_ops(std::ostream& os, const std::vector<CircuitOp>& ops, const std::string& indent) const {
        for (const auto& op : ops) {
            if (const auto* g = std::get_if<GateOp>(&op.op)) {
                os << indent << map_gate(*g, t_).statement << "\n";
            } else if (const auto* m = std::get_if<MeasureOp>(&op.op)) {
                os << indent << "set cRegister w/= " << m->clbit << " <- M(" << qubit_ref(m->qubit) << ");\n";
            } else {
                const auto& b = std::get<ConditionalBlock>(op.op);
                os << indent << "if cRegister[" << b.clbit << "] == " << (b.value == 1 ? "One" : "Zero") << " {\n";
                qsharp_ops(os, b.body, indent + "    ");
                os << indent << "}\n";
            }
        }
    }

    std::string qsharp() const {
        std::ostringstream os;
        legend(os, "//");
        os << "\nnamespace Umlq.Generated {\n"
           << "    open Microsoft.Quantum.Canon;\n"
           << "    open Microsoft.Quantum.Intrinsic;\n\n";
        for (const auto& h : helpers_) os << helper_definition(t_, h.gate) << "\n";
        os << "    operation RunCircuit() : Result[] {\n"
           << "        use q = Qubit[" << c_.n_qubits << "];\n"
           << "        mutable cRegister = [Zero, size = " << c_.n_clbits << "];\n";
        qsharp_ops(os, c_.ops, "        ");
        os << "        ResetAll(q);\n"
           << "        return cRegister;\n"
           << "    }\n\n"
           << "    @EntryPoint()\n"
           << "    operation Main() : Unit {\n"
           << "        let shots = " << opts_.shots << ";\n"
           << "        let nClbits = " << c_.n_clbits << ";\n"
           << "        mutable counts = [0, size = 1 <<< nClbits];\n"
           << "        for _ in 1..shots {\n"
           << "            let bits = RunCircuit();\n"
           << "            mutable index = 0;\n"
           << "            for i in 0..nClbits - 1 {\n"
           << "                if bits[i] == One {\n"
           << "                    set index += 1 <<< i;\n"
           << "                }\n"
           << "            }\n"
           << "            set counts w/= index <- counts[index] + 1;\n"
           << "        }\n"
           << "        mutable text = \"\";\n"
           << "        for index in 0..Length(counts) - 1 {\n"
           << "            if counts[index] > 0 {\n"
           << "                mutable key = \"\";\n"
           << "                for i in nClbits - 1..-1..0 {\n"
           << "                    set key += ((index >>> i) &&& 1) == 1 ? \"1\" | \"0\";\n"
           << "                }\n"
           << "                let separator = text == \"\" ? \"\" | \", \";\n"
           << "                set text += $\"{separator}\\\"{key}\\\": {counts[index]}\";\n"
           << "            }\n"
           << "        }\n"
           << "        Message(\"{\" + text + \"}\");\n"
           << "    }\n"
           << "}\n";
        return os.str();
    }

    const CircuitIr& c_;
    TargetQpl t_;
    GenOptions opts_;
    CapabilityRow caps_;
    std::vector<HelperRequirement> helpers_;
};

}  // namespace

const std::array<TargetQpl, 4>& all_targets() { return kTargets; }

std::string_view target_name(TargetQpl target) {
    switch (target) {
        case TargetQpl::Qiskit: return "qiskit";
        case TargetQpl::Cirq: return "cirq";
        case TargetQpl::QSharp: return "qsharp";
        case TargetQpl::Braket: return "braket";
    }
    return "";
}

std::optional<TargetQpl> target_from_name(std::string_view name) {
    for (auto t : kTargets) {
        if (target_name(t) == name) return t;
    }
    return std::nullopt;
}

std::string_view target_extension(TargetQpl target) {
    switch (target) {
        case TargetQpl::Qiskit: return "qiskit.py";
        case TargetQpl::Cirq: return "cirq.py";
        case TargetQpl::QSharp: return "qs";
        case TargetQpl::Braket: return "braket.py";
    }
    return "";
}

CapabilityRow capabilities(TargetQpl target) {
    CapabilityRow row{target, true, {}, {}};
    std::set<GateKind> helpers;
    switch (target) {
        case TargetQpl::Qiskit:
            break;
        case TargetQpl::Cirq:
        case TargetQpl::QSharp:
            helpers = {GateKind::U2, GateKind::U3};
            break;
        case TargetQpl::Braket:
            row.supports_conditionals = false;
            helpers = {GateKind::Ch, GateKind::U2, GateKind::U3};
            break;
    }
    for (const auto& g : gate_table()) {
        (helpers.count(g.kind) ? row.placeholder_gates : row.native_gates).insert(g.kind);
    }
    return row;
}

GateMapping map_gate(const GateOp& gate, TargetQpl target) {
    const CapabilityRow row = capabilities(target);
    GateMapping out;
    if (row.placeholder_gates.count(gate.gate)) {
        out.helper = HelperRequirement{gate.gate,
                                       target == TargetQpl::QSharp ? HelperKind::FailingStub : HelperKind::Decomposition};
    } else if (!row.native_gates.count(gate.gate)) {
        throw UnsupportedGate(std::string(gate_name(gate.gate)) + " has no mapping for " +
                              std::string(target_name(target)));
    }
    switch (target) {
        case TargetQpl::Qiskit:
            out.expression = qiskit_expression(gate);
            out.statement = out.expression;
            break;
        case TargetQpl::Cirq:
            out.expression = cirq_expression(gate);
            out.statement = "qc.append(" + out.expression + ")";
            break;
        case TargetQpl::Braket:
            out.expression = braket_expression(gate);
            out.statement = out.expression;
            break;
        case TargetQpl::QSharp:
            out.expression = qsharp_expression(gate);
            out.statement = out.expression + ";";
            break;
    }
    return out;
}

TargetProgram generate_quantum(const CircuitIr& circuit, TargetQpl target, const GenOptions& options) {
    if (options.shots < 1) throw std::invalid_argument("shots must be at least 1");
    const ValidationReport report = validate_circuit(circuit, {.allow_mid_circuit = true});
    if (!report.ok()) {
        throw std::invalid_argument("circuit is not valid: " + report.errors.front().message);
    }
    return Program(circuit, target, options).emit();
}

}  // namespace umlq
