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

#include "umlq/gates.hpp"

namespace umlq {

namespace {

// Indexed by the GateKind enumerator value.
constexpr std::array<GateInfo, kGateCount> kGates{{
    {GateKind::H, "h", 0, 0, 1},
    {GateKind::X, "x", 0, 0, 1},
    {GateKind::Y, "y", 0, 0, 1},
    {GateKind::Z, "z", 0, 0, 1},
    {GateKind::S, "s", 0, 0, 1},
    {GateKind::Sdg, "sdg", 0, 0, 1},
    {GateKind::T, "t", 0, 0, 1},
    {GateKind::Tdg, "tdg", 0, 0, 1},
    {GateKind::Rx, "rx", 1, 0, 1},
    {GateKind::Ry, "ry", 1, 0, 1},
    {GateKind::Rz, "rz", 1, 0, 1},
    {GateKind::U2, "u2", 2, 0, 1},
    {GateKind::U3, "u3", 3, 0, 1},
    {GateKind::Cx, "cx", 0, 1, 1},
    {GateKind::Cy, "cy", 0, 1, 1},
    {GateKind::Cz, "cz", 0, 1, 1},
    {GateKind::Ch, "ch", 0, 1, 1},
    {GateKind::Swap, "swap", 0, 0, 2},
    {GateKind::Ccx, "ccx", 0, 2, 1},
    {GateKind::Cswap, "cswap", 0, 1, 2},
}};

}  // namespace

const std::array<GateInfo, kGateCount>& gate_table() { return kGates; }

const GateInfo& gate_info(GateKind kind) { return kGates[static_cast<std::size_t>(kind)]; }

std::string_view gate_name(GateKind kind) { return gate_info(kind).name; }

std::optional<GateKind> gate_from_name(std::string_view name) {
    for (const auto& g : kGates) {
        if (g.name == name) return g.kind;
    }
    return std::nullopt;
}

}  // namespace umlq
