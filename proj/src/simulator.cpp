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

#include "umlq/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <optional>

#include "json.hpp"

namespace umlq {

namespace {

// Probabilities below this are treated as exact zeros when building distributions.
constexpr double kDropBelow = 1e-14;

using std::numbers::pi;

void require_valid(const CircuitIr& circuit) {
    if (circuit.n_qubits > kMaxSimQubits) {
        throw CapacityExceeded("circuit has " + std::to_string(circuit.n_qubits) + " qubits; the simulator supports " +
                               std::to_string(kMaxSimQubits));
    }
    const ValidationReport report = validate_circuit(circuit, {.allow_mid_circuit = true});
    if (!report.ok()) throw std::invalid_argument("circuit is not valid: " + report.errors.front().message);
}

void require_exact(const CircuitIr& circuit) {
    require_valid(circuit);
    if (is_dynamic(circuit)) {
        throw ExactModeUnsupported("circuit branches on measurement results or reuses a measured qubit; use sampling");
    }
}

StateVector zero_state(std::size_t n_qubits) {
    StateVector s(std::size_t{1} << n_qubits);
    s[0] = 1.0;
    return s;
}

void apply_controlled(StateVector& s, std::size_t cmask, std::size_t target, const Matrix2& u) {
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if ((i & tbit) || (i & cmask) != cmask) continue;
        const std::size_t j = i | tbit;
        const Complex a = s[i];
        const Complex b = s[j];
        s[i] = u[0] * a + u[1] * b;
        s[j] = u[2] * a + u[3] * b;
    }
}

void apply_controlled_swap(StateVector& s, std::size_t cmask, std::size_t a, std::size_t b) {
    const std::size_t abit = std::size_t{1} << a;
    const std::size_t bbit = std::size_t{1} << b;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if ((i & abit) && !(i & bbit) && (i & cmask) == cmask) std::swap(s[i], s[i ^ abit ^ bbit]);
    }
}

double probability_of_one(const StateVector& s, std::size_t qubit) {
    const std::size_t bit = std::size_t{1} << qubit;
    double p = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i & bit) p += std::norm(s[i]);
    }
    return p;
}

void collapse(StateVector& s, std::size_t qubit, int outcome, double p_outcome) {
    const std::size_t bit = std::size_t{1} << qubit;
    const double scale = 1.0 / std::sqrt(p_outcome);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const bool one = (i & bit) != 0;
        s[i] = (one == (outcome == 1)) ? s[i] * scale : Complex{};
    }
}

std::string bitstring(const std::vector<int>& clbits) {
    std::string out(clbits.size(), '0');
    for (std::size_t j = 0; j < clbits.size(); ++j) {
        if (clbits[j]) out[clbits.size() - 1 - j] = '1';
    }
    return out;
}

// Classical bit -> the qubit whose measurement last wrote it.
std::vector<std::optional<std::size_t>> final_measurements(const CircuitIr& circuit) {
    std::vector<std::optional<std::size_t>> out(circuit.n_clbits);
    for (const auto& op : circuit.ops) {
        if (const auto* m = std::get_if<MeasureOp>(&op.op)) out[m->clbit] = m->qubit;
    }
    return out;
}

struct Branch {
    StateVector state;
    std::vector<int> clbits;
    double weight;
};

class Brancher {
public:
    explicit Brancher(std::size_t max_branches) : max_(max_branches) {}

    void run(const std::vector<CircuitOp>& ops, std::vector<Branch>& branches) {
        for (const auto& op : ops) {
            if (const auto* g = std::get_if<GateOp>(&op.op)) {
                for (auto& b : branches) apply_gate(b.state, *g);
            } else if (const auto* m = std::get_if<MeasureOp>(&op.op)) {
                measure(*m, branches);
            } else {
                const auto& block = std::get<ConditionalBlock>(op.op);
                std::vector<Branch> taken;
                std::vector<Branch> skipped;
                for (auto& b : branches) {
                    (b.clbits[block.clbit] == block.value ? taken : skipped).push_back(std::move(b));
                }
                run(block.body, taken);
                branches = std::move(skipped);
                for (auto& b : taken) branches.push_back(std::move(b));
            }
        }
    }

private:
    void measure(const MeasureOp& m, std::vector<Branch>& branches) {
        std::vector<Branch> next;
        for (auto& b : branches) {
            const double p1 = std::clamp(probability_of_one(b.state, m.qubit), 0.0, 1.0);
            const double p0 = 1.0 - p1;
            if (p0 * b.weight > kDropBelow && p1 * b.weight > kDropBelow) {
                Branch one = b;
                collapse(one.state, m.qubit, 1, p1);
                one.clbits[m.clbit] = 1;
                one.weight *= p1;
                collapse(b.state, m.qubit, 0, p0);
                b.clbits[m.clbit] = 0;
                b.weight *= p0;
                next.push_back(std::move(b));
                next.push_back(std::move(one));
            } else {
                const int outcome = p1 > p0 ? 1 : 0;
                collapse(b.state, m.qubit, outcome, outcome ? p1 : p0);
                b.clbits[m.clbit] = outcome;
                next.push_back(std::move(b));
            }
            if (next.size() > max_) {
                throw CapacityExceeded("more than " + std::to_string(max_) + " measurement branches");
            }
        }
        branches = std::move(next);
    }

    std::size_t max_;
};

class Trajectory {
public:
    Trajectory(const CircuitIr& circuit, Rng& rng) : circuit_(circuit), rng_(rng) {}

    std::string shot() {
        state_ = zero_state(circuit_.n_qubits);
        clbits_.assign(circuit_.n_clbits, 0);
        run(circuit_.ops);
        return bitstring(clbits_);
    }

private:
    void run(const std::vector<CircuitOp>& ops) {
        for (const auto& op : ops) {
            if (const auto* g = std::get_if<GateOp>(&op.op)) {
                apply_gate(state_, *g);
            } else if (const auto* m = std::get_if<MeasureOp>(&op.op)) {
                const double p1 = std::clamp(probability_of_one(state_, m->qubit), 0.0, 1.0);
                const int outcome = rng_.uniform() < p1 ? 1 : 0;
                collapse(state_, m->qubit, outcome, outcome ? p1 : 1.0 - p1);
                clbits_[m->clbit] = outcome;
            } else {
                const auto& block = std::get<ConditionalBlock>(op.op);
                if (clbits_[block.clbit] == block.value) run(block.body);
            }
        }
    }

    const CircuitIr& circuit_;
    Rng& rng_;
    StateVector state_;
    std::vector<int> clbits_;
};

std::string python_float(double v) {
    std::string s = format_real(v);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

}  // namespace

Matrix2 gate_unitary(GateKind gate, const std::vector<double>& params) {
    using namespace std::complex_literals;
    const double r = 1.0 / std::sqrt(2.0);
    auto u3 = [](double theta, double phi, double lam) -> Matrix2 {
        const double c = std::cos(theta / 2);
        const double s = std::sin(theta / 2);
        return {c, -std::polar(1.0, lam) * s, std::polar(1.0, phi) * s, std::polar(1.0, phi + lam) * c};
    };
    switch (gate) {
        case GateKind::H:
        case GateKind::Ch: return {r, r, r, -r};
        case GateKind::X:
        case GateKind::Cx:
        case GateKind::Ccx: return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Y:
        case GateKind::Cy: return {0.0, -1i, 1i, 0.0};
        case GateKind::Z:
        case GateKind::Cz: return {1.0, 0.0, 0.0, -1.0};
        case GateKind::S: return {1.0, 0.0, 0.0, 1i};
        case GateKind::Sdg: return {1.0, 0.0, 0.0, -1i};
        case GateKind::T: return {1.0, 0.0, 0.0, std::polar(1.0, pi / 4)};
        case GateKind::Tdg: return {1.0, 0.0, 0.0, std::polar(1.0, -pi / 4)};
        case GateKind::Rx: {
            const double c = std::cos(params.at(0) / 2);
            const double s = std::sin(params.at(0) / 2);
            return {c, -1i * s, -1i * s, c};
        }
        case GateKind::Ry: {
            const double c = std::cos(params.at(0) / 2);
            const double s = std::sin(params.at(0) / 2);
            return {c, -s, s, c};
        }
        case GateKind::Rz:
            return {std::polar(1.0, -params.at(0) / 2), 0.0, 0.0, std::polar(1.0, params.at(0) / 2)};
        case GateKind::U2: return u3(pi / 2, params.at(0), params.at(1));
        case GateKind::U3: return u3(params.at(0), params.at(1), params.at(2));
        case GateKind::Swap:
        case GateKind::Cswap: break;
    }
    throw std::invalid_argument(std::string(gate_name(gate)) + " is not a single-qubit unitary");
}

void apply_gate(StateVector& state, const GateOp& gate) {
    const std::size_t n = std::countr_zero(state.size());
    std::size_t cmask = 0;
    for (auto c : gate.controls) {
        if (c >= n) throw std::out_of_range("control qubit " + std::to_string(c) + " out of range");
        cmask |= std::size_t{1} << c;
    }
    for (auto t : gate.targets) {
        if (t >= n) throw std::out_of_range("target qubit " + std::to_string(t) + " out of range");
    }
    if (gate.gate == GateKind::Swap || gate.gate == GateKind::Cswap) {
        apply_controlled_swap(state, cmask, gate.targets.at(0), gate.targets.at(1));
    } else {
        apply_controlled(state, cmask, gate.targets.at(0), gate_unitary(gate.gate, gate.params));
    }
}

StateVector statevector(const CircuitIr& circuit) {
    require_exact(circuit);
    StateVector s = zero_state(circuit.n_qubits);
    for (const auto& op : circuit.ops) {
        if (const auto* g = std::get_if<GateOp>(&op.op)) apply_gate(s, *g);
    }
    return s;
}

Distribution probabilities(const CircuitIr& circuit) {
    const StateVector s = statevector(circuit);
    const auto sources = final_measurements(circuit);
    Distribution out;
    std::vector<int> clbits(circuit.n_clbits);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double p = std::norm(s[i]);
        if (p < kDropBelow) continue;
        for (std::size_t j = 0; j < clbits.size(); ++j) clbits[j] = sources[j] ? int((i >> *sources[j]) & 1) : 0;
        out[bitstring(clbits)] += p;
    }
    return out;
}

Distribution branch_distribution(const CircuitIr& circuit, std::size_t max_branches) {
    require_valid(circuit);
    if (!is_dynamic(circuit)) return probabilities(circuit);
    std::vector<Branch> branches{{zero_state(circuit.n_qubits), std::vector<int>(circuit.n_clbits), 1.0}};
    Brancher(max_branches).run(circuit.ops, branches);
    Distribution out;
    for (const auto& b : branches) out[bitstring(b.clbits)] += b.weight;
    return out;
}

Counts sample(const CircuitIr& circuit, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("shots must be at least 1");
    require_valid(circuit);
    Rng rng(seed);
    Counts counts;
    if (!is_dynamic(circuit)) {
        const Distribution dist = probabilities(circuit);
        std::vector<const std::string*> keys;
        std::vector<double> cdf;
        double total = 0.0;
        for (const auto& [key, p] : dist) {
            total += p;
            keys.push_back(&key);
            cdf.push_back(total);
        }
        for (std::uint64_t s = 0; s < shots; ++s) {
            const double u = rng.uniform() * total;
            auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            const std::size_t k = std::min<std::size_t>(it - cdf.begin(), keys.size() - 1);
            ++counts[*keys[k]];
        }
        return counts;
    }
    Trajectory trajectory(circuit, rng);
    for (std::uint64_t s = 0; s < shots; ++s) ++counts[trajectory.shot()];
    return counts;
}

std::string counts_to_json(const Counts& counts) {
    std::string out = "{";
    for (const auto& [key, n] : counts) {
        if (out.size() > 1) out += ", ";
        out += nlohmann::json(key).dump() + ": " + std::to_string(n);
    }
    return out + "}";
}

std::string distribution_to_json(const Distribution& distribution) {
    std::string out = "{";
    for (const auto& [key, p] : distribution) {
        if (out.size() > 1) out += ", ";
        out += nlohmann::json(key).dump() + ": " + python_float(p);
    }
    return out + "}";
}

Counts counts_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed counts JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("counts JSON must be an object of bitstring to count");
    Counts out;
    for (const auto& [key, value] : doc.items()) {
        if (key.find_first_not_of("01") != std::string::npos) {
            throw std::invalid_argument("counts key '" + key + "' is not a bitstring");
        }
        if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0)) {
            throw std::invalid_argument("count for '" + key + "' is not a non-negative integer");
        }
        out[key] = value.get<std::uint64_t>();
    }
    return out;
}

}  // namespace umlq
