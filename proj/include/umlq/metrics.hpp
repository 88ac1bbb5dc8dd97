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

// Distribution comparison.
//
// kl_divergence(p, q) = sum_i p(i) ln(p(i) / q(i)) in nats, with p the candidate and
// q the reference. Both inputs are normalized first. When q is zero somewhere p is
// not, those entries of q are set to 1 / (10 * shots) and q is renormalized.

#pragma once

#include <cstdint>
#include <stdexcept>

#include "json.hpp"
#include "umlq/simulator.hpp"

namespace umlq {

inline constexpr double kDefaultThreshold = 0.1;
inline constexpr std::uint64_t kDefaultShots = 1024;

/// Bitstrings of different lengths were compared.
class LengthMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct KlResult {
    double value = 0.0;
    bool smoothed = false;
};

Distribution normalize(const Counts& counts);

/// `shots` sets the smoothing epsilon.
KlResult kl_divergence(const Distribution& p, const Distribution& q, std::uint64_t shots = kDefaultShots);

struct Verdict {
    bool pass = false;
    double threshold = kDefaultThreshold;
    KlResult kl;
};

/// Passes iff kl_divergence(candidate, reference) < threshold.
Verdict equivalence_verdict(const Distribution& reference, const Distribution& candidate,
                            double threshold = kDefaultThreshold, std::uint64_t shots = kDefaultShots);

/// `{"kl", "threshold", "pass", "smoothed"}`
nlohmann::ordered_json verdict_to_json(const Verdict& verdict);

}  // namespace umlq
