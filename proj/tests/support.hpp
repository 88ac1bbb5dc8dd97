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

// Helpers shared by the test executables.

#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "umlq/ir.hpp"

namespace umlq::testing {

inline std::filesystem::path corpus_dir() { return UMLQ_CORPUS_DIR; }
inline std::filesystem::path golden_dir() { return UMLQ_GOLDEN_DIR; }

inline std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream(path, std::ios::binary) << text;
}

/// Sorted `.puml` files of one corpus subdirectory.
inline std::vector<std::filesystem::path> corpus_files(const std::string& subdir) {
    std::vector<std::filesystem::path> out;
    for (const auto& entry : std::filesystem::directory_iterator(corpus_dir() / subdir)) {
        if (entry.path().extension() == ".puml") out.push_back(entry.path());
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool update_golden() {
    const char* v = std::getenv("UMLQ_UPDATE_GOLDEN");
    return v != nullptr && std::string(v) == "1";
}

/// Golden text for `name`; rewrites the file instead when UMLQ_UPDATE_GOLDEN=1.
inline std::string golden(const std::string& name, const std::string& actual) {
    const auto path = golden_dir() / name;
    if (update_golden()) write_text(path, actual);
    return read_text(path);
}

inline GateOp make_gate(GateKind kind, std::vector<double> params, std::vector<std::size_t> controls,
                        std::vector<std::size_t> targets) {
    return GateOp{kind, std::move(params), std::move(controls), std::move(targets)};
}

/// Random unitary-only circuit over the full canonical gate set that fits in `n_qubits`.
inline CircuitIr random_circuit(std::mt19937_64& rng, std::size_t n_qubits, std::size_t n_gates) {
    CircuitIr c;
    c.n_qubits = n_qubits;
    for (std::size_t i = 0; i < n_qubits; ++i) c.qubit_names.push_back("q" + std::to_string(i));
    std::vector<GateInfo> usable;
    for (const auto& g : gate_table()) {
        if (g.num_controls + g.num_targets <= n_qubits) usable.push_back(g);
    }
    std::uniform_real_distribution<double> angle(-6.5, 6.5);
    for (std::size_t k = 0; k < n_gates; ++k) {
        const GateInfo& g = usable[rng() % usable.size()];
        std::vector<std::size_t> qubits(n_qubits);
        for (std::size_t i = 0; i < n_qubits; ++i) qubits[i] = i;
        std::shuffle(qubits.begin(), qubits.end(), rng);
        GateOp op;
        op.gate = g.kind;
        for (std::size_t p = 0; p < g.num_params; ++p) op.params.push_back(angle(rng));
        op.controls.assign(qubits.begin(), qubits.begin() + g.num_controls);
        op.targets.assign(qubits.begin() + g.num_controls, qubits.begin() + g.num_controls + g.num_targets);
        c.ops.push_back(CircuitOp{op});
    }
    return c;
}

/// Appends a measurement of every qubit into the classical bit with the same index.
inline void measure_all(CircuitIr& c) {
    c.n_clbits = c.n_qubits;
    c.clbit_names.clear();
    for (std::size_t i = 0; i < c.n_qubits; ++i) {
        c.clbit_names.push_back("c" + std::to_string(i));
        c.ops.push_back(CircuitOp{MeasureOp{i, i}});
    }
}

}  // namespace umlq::testing
