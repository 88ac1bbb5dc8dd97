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

// Dense statevector reference simulator.
//
// Basis index bit i is qubit i (little-endian). Bitstrings are n_clbits long with
// classical bit 0 as the rightmost character; a bit never written by a measurement
// reads as 0.
//
// Sampling draws from std::mt19937_64 seeded with the given seed. Each uniform
// variate is the top 53 bits of one 64-bit output scaled by 2^-53, so counts are
// reproducible on every platform.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "umlq/ir.hpp"

namespace umlq {

inline constexpr std::size_t kMaxSimQubits = 20;

using Complex = std::complex<double>;
using StateVector = std::vector<Complex>;
using Distribution = std::map<std::string, double>;
using Counts = std::map<std::string, std::uint64_t>;

/// Row-major 2x2 matrix.
using Matrix2 = std::array<Complex, 4>;

class SimulationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CapacityExceeded : public SimulationError {
public:
    using SimulationError::SimulationError;
};

/// The circuit branches on measurement results or reuses a measured qubit.
class ExactModeUnsupported : public SimulationError {
public:
    using SimulationError::SimulationError;
};

/// Single-qubit unitary applied to the target(s) of `gate`; swap-type gates have none.
Matrix2 gate_unitary(GateKind gate, const std::vector<double>& params);

/// Applies one gate in place. `state` must have 2^n entries.
void apply_gate(StateVector& state, const GateOp& gate);

StateVector statevector(const CircuitIr& circuit);

/// Exact distribution over classical bitstrings for a static circuit.
Distribution probabilities(const CircuitIr& circuit);

/// Exact distribution for any valid circuit, enumerating every measurement branch.
/// Throws CapacityExceeded past `max_branches` live branches.
Distribution branch_distribution(const CircuitIr& circuit, std::size_t max_branches = 1u << 16);

Counts sample(const CircuitIr& circuit, std::uint64_t shots, std::uint64_t seed);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

/// `{"00": 512, "11": 512}` with keys sorted.
std::string counts_to_json(const Counts& counts);
std::string distribution_to_json(const Distribution& distribution);
Counts counts_from_json(std::string_view text);

}  // namespace umlq
