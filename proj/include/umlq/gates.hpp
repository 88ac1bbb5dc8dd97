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

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace umlq {

/// The canonical gate set every front end lowers to and every back end emits from.
enum class GateKind {
    H,
    X,
    Y,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    Rx,
    Ry,
    Rz,
    U2,
    U3,
    Cx,
    Cy,
    Cz,
    Ch,
    Swap,
    Ccx,
    Cswap,
};

inline constexpr std::size_t kGateCount = 20;

/// Static shape of a canonical gate: how many parameters, controls and targets it takes.
struct GateInfo {
    GateKind kind;
    std::string_view name;
    std::size_t num_params;
    std::size_t num_controls;
    std::size_t num_targets;
};

const std::array<GateInfo, kGateCount>& gate_table();
const GateInfo& gate_info(GateKind kind);
std::string_view gate_name(GateKind kind);

/// Lookup by canonical lowercase name; nullopt for anything outside the canonical set.
std::optional<GateKind> gate_from_name(std::string_view name);

}  // namespace umlq
