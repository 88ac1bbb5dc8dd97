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

// Python bindings. Models cross the boundary as IR JSON text; distributions and
// counts as dicts keyed by bitstring.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "umlq/classical_codegen.hpp"
#include "umlq/ir_json.hpp"
#include "umlq/metrics.hpp"
#include "umlq/quantum_codegen.hpp"
#include "umlq/simulator.hpp"

namespace py = pybind11;
using namespace umlq;

namespace {

TargetQpl parse_target(const std::string& name) {
    auto t = target_from_name(name);
    if (!t) throw py::value_error("unknown target '" + name + "'");
    return *t;
}

std::pair<SystemIr, CircuitIr> load(const std::string& ir_json) { return deserialize_ir(ir_json); }

std::string compile_models(const std::string& class_diagram, const std::string& sequence_diagram,
                           bool allow_mid_circuit) {
    const SystemIr system = lower_class_model(parse_class_diagram(class_diagram));
    CircuitLowering lowered =
        lower_sequence_model(parse_sequence_diagram(sequence_diagram), {.allow_mid_circuit = allow_mid_circuit});
    if (!lowered.circuit) {
        const Finding& f = lowered.report.errors.front();
        throw py::value_error("op " + std::to_string(f.op_index) + ": [" + f.rule + "] " + f.message);
    }
    return serialize_ir(system, *lowered.circuit);
}

std::string validate(const std::string& ir_json, bool allow_mid_circuit) {
    return report_to_json(validate_circuit(load(ir_json).second, {.allow_mid_circuit = allow_mid_circuit})).dump();
}

py::dict generate(const std::string& ir_json, const std::string& target, std::uint64_t shots,
                  std::optional<std::uint64_t> seed, bool allow_placeholders) {
    GenOptions options;
    options.shots = shots;
    options.seed = seed;
    options.allow_placeholders = allow_placeholders;
    const TargetProgram p = generate_quantum(load(ir_json).second, parse_target(target), options);
    py::dict manifest;
    manifest["qubit_decls"] = p.manifest.qubit_decls;
    manifest["clbit_decls"] = p.manifest.clbit_decls;
    manifest["gate_ops"] = p.manifest.gate_ops;
    manifest["measures"] = p.manifest.measures;
    manifest["conditionals"] = p.manifest.conditionals;
    manifest["placeholders"] = p.manifest.placeholders;
    py::dict out;
    out["source"] = p.source;
    out["target"] = std::string(target_name(p.target));
    out["manifest"] = manifest;
    out["warnings"] = p.warnings;
    return out;
}

py::dict capability_row(const std::string& target) {
    const CapabilityRow row = capabilities(parse_target(target));
    auto names = [](const std::set<GateKind>& gates) {
        std::vector<std::string> out;
        for (auto g : gates) out.emplace_back(gate_name(g));
        return out;
    };
    py::dict out;
    out["supports_conditionals"] = row.supports_conditionals;
    out["native_gates"] = names(row.native_gates);
    out["placeholder_gates"] = names(row.placeholder_gates);
    return out;
}

std::map<std::string, std::string> classical_files(const std::string& ir_json, const std::string& quantum_stem) {
    ClassicalOptions options;
    options.quantum_stem = quantum_stem;
    std::map<std::string, std::string> out;
    for (const auto& f : generate_classical(load(ir_json).first, options).files) out[f.path] = f.text;
    return out;
}

std::string report(const std::string& ir_json) {
    const SystemIr system = load(ir_json).first;
    return element_report_to_json(element_report(system, generate_classical(system))).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "umlq compiler core";

    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    static py::exception<IrFormatError> ir_error(m, "IrFormatError", PyExc_ValueError);
    static py::exception<CodegenError> codegen_error(m, "CodegenError", PyExc_RuntimeError);
    static py::exception<UnsupportedFeature> feature_error(m, "UnsupportedFeature", codegen_error.ptr());
    static py::exception<UnsupportedGate> gate_error(m, "UnsupportedGate", codegen_error.ptr());
    static py::exception<SimulationError> sim_error(m, "SimulationError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            // args: (message, line, column)
            py::tuple args = py::make_tuple(e.what(), e.line(), e.column());
            PyErr_SetObject(parse_error.ptr(), args.ptr());
        } catch (const IrFormatError& e) {
            py::tuple args = py::make_tuple(e.what(), e.pointer());
            PyErr_SetObject(ir_error.ptr(), args.ptr());
        } catch (const UnsupportedFeature& e) {
            PyErr_SetString(feature_error.ptr(), e.what());
        } catch (const UnsupportedGate& e) {
            PyErr_SetString(gate_error.ptr(), e.what());
        } catch (const CodegenError& e) {
            PyErr_SetString(codegen_error.ptr(), e.what());
        } catch (const SimulationError& e) {
            PyErr_SetString(sim_error.ptr(), e.what());
        }
    });

    m.attr("IR_VERSION") = kIrVersion;
    m.def("targets", [] {
        std::vector<std::string> out;
        for (auto t : all_targets()) out.emplace_back(target_name(t));
        return out;
    });
    m.def("compile_models", &compile_models, py::arg("class_diagram") = "", py::arg("sequence_diagram") = "",
          py::arg("allow_mid_circuit") = false, "Parse and lower both diagrams; returns IR JSON text.");
    m.def("validate", &validate, py::arg("ir_json"), py::arg("allow_mid_circuit") = false,
          "Validation report of the IR circuit as JSON text.");
    m.def("generate", &generate, py::arg("ir_json"), py::arg("target"), py::arg("shots") = 1024,
          py::arg("seed") = std::nullopt, py::arg("allow_placeholders") = true);
    m.def("capabilities", &capability_row, py::arg("target"));
    m.def("classical_files", &classical_files, py::arg("ir_json"), py::arg("quantum_stem") = "quantum");
    m.def("element_report", &report, py::arg("ir_json"));
    m.def(
        "statevector", [](const std::string& ir_json) { return statevector(load(ir_json).second); },
        py::arg("ir_json"));
    m.def(
        "probabilities", [](const std::string& ir_json) { return probabilities(load(ir_json).second); },
        py::arg("ir_json"));
    m.def(
        "branch_distribution", [](const std::string& ir_json) { return branch_distribution(load(ir_json).second); },
        py::arg("ir_json"));
    m.def(
        "sample",
        [](const std::string& ir_json, std::uint64_t shots, std::uint64_t seed) {
            return sample(load(ir_json).second, shots, seed);
        },
        py::arg("ir_json"), py::arg("shots") = 1024, py::arg("seed") = 0);
    m.def("counts_to_json", &counts_to_json, py::arg("counts"));
    m.def(
        "kl_divergence",
        [](const Distribution& p, const Distribution& q, std::uint64_t shots) {
            const KlResult r = kl_divergence(p, q, shots);
            return py::make_tuple(r.value, r.smoothed);
        },
        py::arg("p"), py::arg("q"), py::arg("shots") = kDefaultShots);
    m.def(
        "equivalence_verdict",
        [](const Distribution& reference, const Distribution& candidate, double threshold, std::uint64_t shots) {
            return verdict_to_json(equivalence_verdict(reference, candidate, threshold, shots)).dump();
        },
        py::arg("reference"), py::arg("candidate"), py::arg("threshold") = kDefaultThreshold,
        py::arg("shots") = kDefaultShots);
}
