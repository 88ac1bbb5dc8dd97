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

#include "umlq/metrics.hpp"

#include <cmath>
#include <optional>

namespace umlq {

namespace {

Distribution normalized(const Distribution& d, const char* which) {
    double total = 0.0;
    for (const auto& [key, p] : d) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw std::invalid_argument(std::string(which) + " has an invalid probability for '" + key + "'");
        }
        total += p;
    }
    if (total <= 0.0) throw std::invalid_argument(std::string(which) + " distribution is empty");
    Distribution out;
    for (const auto& [key, p] : d) out[key] = p / total;
    return out;
}

void check_lengths(const Distribution& p, const Distribution& q) {
    std::optional<std::size_t> length;
    for (const auto* d : {&p, &q}) {
        for (const auto& [key, value] : *d) {
            if (!length) length = key.size();
            if (key.size() != *length) {
                throw LengthMismatch("bitstring '" + key + "' has length " + std::to_string(key.size()) +
                                     ", expected " + std::to_string(*length));
            }
        }
    }
}

}  // namespace

Distribution normalize(const Counts& counts) {
    std::uint64_t total = 0;
    for (const auto& [key, n] : counts) total += n;
    if (total == 0) throw std::invalid_argument("counts are empty");
    Distribution out;
    for (const auto& [key, n] : counts) {
        if (n > 0) out[key] = static_cast<double>(n) / static_cast<double>(total);
    }
    return out;
}

KlResult kl_divergence(const Distribution& p_in, const Distribution& q_in, std::uint64_t shots) {
    if (shots == 0) throw std::invalid_argument("shots must be at least 1");
    check_lengths(p_in, q_in);
    const Distribution p = normalized(p_in, "candidate");
    Distribution q = normalized(q_in, "reference");

    KlResult result;
    const double epsilon = 1.0 / (10.0 * static_cast<double>(shots));
    for (const auto& [key, pi] : p) {
        if (pi > 0.0 && q[key] <= 0.0) {
            q[key] = epsilon;
            result.smoothed = true;
        }
    }
    if (result.smoothed) q = normalized(q, "reference");

    double sum = 0.0;
    for (const auto& [key, pi] : p) {
        if (pi > 0.0) sum += pi * std::log(pi / q.at(key));
    }
    result.value = std::max(0.0, sum);
    return result;
}

Verdict equivalence_verdict(const Distribution& reference, const Distribution& candidate, double threshold,
                            std::uint64_t shots) {
    if (!(threshold > 0.0)) throw std::invalid_argument("threshold must be positive");
    Verdict v;
    v.threshold = threshold;
    v.kl = kl_divergence(candidate, reference, shots);
    v.pass = v.kl.value < threshold;
    return v;
}

nlohmann::ordered_json verdict_to_json(const Verdict& verdict) {
    return {{"kl", verdict.kl.value},
            {"threshold", verdict.threshold},
            {"pass", verdict.pass},
            {"smoothed", verdict.kl.smoothed}};
}

}  // namespace umlq
