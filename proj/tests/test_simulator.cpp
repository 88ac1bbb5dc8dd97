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

#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"
#include "umlq/simulator.hpp"

using namespace umlq;
using umlq::testing::corpus_dir;
using umlq::testing::corpus_files;
using umlq::testing::make_gate;
using umlq::testing::read_text;

namespace {

CircuitIr corpus(const std::string& stem, bool mid = false) {
    auto l = lower_sequence_model(parse_sequence_diagram(read_text(corpus_dir() / "sequence" / (stem + ".puml"))),
                                  {.allow_mid_circuit = mid});
    REQUIRE(l.circuit.has_value());
    return *l.circuit;
}

CircuitIr blank(std::size_t n_qubits, std::size_t n_clbits) {
    CircuitIr c;
    c.n_qubits = n_qubits;
    c.n_clbits = n_clbits;
    for (std::size_t i = 0; i < n_qubits; ++i) c.qubit_names.push_back("q" + std::to_string(i));
    for (std::size_t i = 0; i < n_clbits; ++i) c.clbit_names.push_back("c" + std::to_string(i));
    return c;
}

double max_diff(const StateVector& a, const std::vector<oracle::C>& b) {
    REQUIRE(a.size() == b.size());
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double total_variation(const Distribution& p, const Counts& counts, std::uint64_t shots) {
    std::map<std::string, double> diff;
    for (const auto& [k, v] : p) diff[k] += v;
    for (const auto& [k, n] : counts) diff[k] -= static_cast<double>(n) / static_cast<double>(shots);
    double tv = 0;
    for (const auto& [k, v] : diff) tv += std::abs(v);
    return tv / 2;
}

}  // namespace

TEST_SUITE("gates") {
    TEST_CASE("u3(pi, 0, pi) is X") {
        const Matrix2 u = gate_unitary(GateKind::U3, {std::numbers::pi, 0, std::numbers::pi});
        CHECK(std::abs(u[0]) < 1e-15);
        CHECK(std::abs(u[1] - Complex(1, 0)) < 1e-15);
        CHECK(std::abs(u[2] - Complex(1, 0)) < 1e-15);
        CHECK(std::abs(u[3]) < 1e-15);
    }

    TEST_CASE("rz convention") {
        const Matrix2 u = gate_unitary(GateKind::Rz, {0.8});
        CHECK(std::abs(u[0] - std::exp(Complex(0, -0.4))) < 1e-15);
        CHECK(std::abs(u[3] - std::exp(Complex(0, 0.4))) < 1e-15);
    }

    TEST_CASE("every single-target matrix matches the oracle") {
        for (const auto& info : gate_table()) {
            if (info.kind == GateKind::Swap || info.kind == GateKind::Cswap) continue;
            CAPTURE(info.name);
            const std::vector<double> params(info.num_params, 0.77);
            const Matrix2 u = gate_unitary(info.kind, params);
            const oracle::Dense o = oracle::target_operator(info.kind, params);
            for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(u[i] - o.a[i]) < 1e-15);
        }
    }
}

TEST_SUITE("statevector") {
    TEST_CASE("bell") {
        const StateVector s = statevector(corpus("bell"));
        REQUIRE(s.size() == 4);
        CHECK(std::abs(s[0] - Complex(std::sqrt(0.5), 0)) < 1e-15);
        CHECK(std::abs(s[3] - Complex(std::sqrt(0.5), 0)) < 1e-15);
        CHECK(std::abs(s[1]) < 1e-15);
        CHECK(std::abs(s[2]) < 1e-15);
        const Distribution p = probabilities(corpus("bell"));
        CHECK(p.size() == 2);
        CHECK(p.at("00") == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(p.at("11") == doctest::Approx(0.5).epsilon(1e-12));
    }

    TEST_CASE("ghz") {
        const Distribution p = probabilities(corpus("ghz"));
        REQUIRE(p.size() == 2);
        const std::string zeros(p.begin()->first.size(), '0'), ones(p.begin()->first.size(), '1');
        CHECK(std::abs(p.at(zeros) - 0.5) < 1e-12);
        CHECK(std::abs(p.at(ones) - 0.5) < 1e-12);
    }

    TEST_CASE("little-endian bit order") {
        CircuitIr c = blank(2, 2);
        c.ops.push_back({make_gate(GateKind::X, {}, {}, {0})});
        umlq::testing::measure_all(c);
        const Distribution p = probabilities(c);
        REQUIRE(p.size() == 1);
        CHECK(p.begin()->first == "01");
        CHECK(statevector(c)[1] == Complex(1, 0));
    }

    TEST_CASE("unmeasured clbits read as zero") {
        CircuitIr c = blank(1, 3);
        c.ops.push_back({make_gate(GateKind::X, {}, {}, {0})});
        c.ops.push_back({MeasureOp{0, 1}});
        CHECK(probabilities(c) == Distribution{{"010", 1.0}});
    }

    TEST_CASE("random circuits agree with the dense oracle") {
        std::mt19937_64 rng(17);
        for (int i = 0; i < 300; ++i) {
            const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
            const CircuitIr c = umlq::testing::random_circuit(rng, n, 1 + static_cast<std::size_t>(i % 15));
            CHECK(max_diff(statevector(c), oracle::run(c)) < 1e-10);
        }
    }

    TEST_CASE("evolution preserves the norm") {
        std::mt19937_64 rng(23);
        for (std::size_t n = 1; n <= 6; ++n) {
            const CircuitIr c = umlq::testing::random_circuit(rng, n, 50);
            StateVector state(std::size_t{1} << n);
            state[0] = 1.0;
            for (const auto& op : c.ops) {
                apply_gate(state, std::get<GateOp>(op.op));
                double norm = 0;
                for (const auto& a : state) norm += std::norm(a);
                CHECK(std::abs(norm - 1.0) < 1e-9);
            }
            CHECK(max_diff(state, statevector(c)) == 0.0);
        }
    }

    TEST_CASE("capacity limit") {
        CircuitIr c = blank(kMaxSimQubits + 1, 0);
        CHECK_THROWS_AS(statevector(c), CapacityExceeded);
        CHECK_THROWS_AS(sample(c, 1, 0), CapacityExceeded);
    }

    TEST_CASE("empty circuit") {
        const CircuitIr c = corpus("empty");
        CHECK(statevector(c) == StateVector{Complex(1, 0)});
        CHECK(probabilities(c) == Distribution{{"", 1.0}});
        CHECK(sample(c, 10, 3) == Counts{{"", 10}});
    }
}

TEST_SUITE("dynamic circuits") {
    TEST_CASE("exact mode refuses dynamic circuits") {
        CHECK_THROWS_AS(probabilities(corpus("teleport")), ExactModeUnsupported);
    }

    TEST_CASE("teleportation delivers the prepared state") {
        const Distribution p = branch_distribution(corpus("teleport"));
        double one = 0, total = 0;
        for (const auto& [k, v] : p) {
            total += v;
            if (k[0] == '1') one += v;
        }
        CHECK(std::abs(total - 1.0) < 1e-12);
        CHECK(std::abs(one - std::pow(std::sin(0.6), 2)) < 1e-12);
    }

    TEST_CASE("measure, then flip on one") {
        CircuitIr c = blank(2, 2);
        c.ops.push_back({make_gate(GateKind::H, {}, {}, {0})});
        c.ops.push_back({MeasureOp{0, 0}});
        c.ops.push_back({ConditionalBlock{0, 1, {{make_gate(GateKind::X, {}, {}, {1})}}}});
        c.ops.push_back({MeasureOp{1, 1}});
        const Distribution p = branch_distribution(c);
        REQUIRE(p.size() == 2);
        CHECK(std::abs(p.at("00") - 0.5) < 1e-12);
        CHECK(std::abs(p.at("11") - 0.5) < 1e-12);
        const Counts counts = sample(c, 10000, 1);
        CHECK(counts.size() == 2);
        CHECK(counts.count("00") == 1);
        CHECK(counts.count("11") == 1);
    }

    TEST_CASE("conditional reset example") {
        const Distribution p = branch_distribution(corpus("conditional_reset", true));
        REQUIRE(p.size() == 2);
        CHECK(std::abs(p.at("00") - 0.5) < 1e-12);
        CHECK(std::abs(p.at("01") - 0.5) < 1e-12);
    }

    TEST_CASE("branch enumeration equals exact probabilities on static circuits") {
        std::mt19937_64 rng(29);
        for (int i = 0; i < 100; ++i) {
            CircuitIr c = umlq::testing::random_circuit(rng, 1 + i % 4, 10);
            umlq::testing::measure_all(c);
            const Distribution a = probabilities(c), b = branch_distribution(c);
            for (const auto& [k, v] : a) CHECK(std::abs(v - (b.count(k) ? b.at(k) : 0.0)) < 1e-12);
            for (const auto& [k, v] : b) CHECK(std::abs(v - (a.count(k) ? a.at(k) : 0.0)) < 1e-12);
        }
    }

    TEST_CASE("branch limit") {
        CircuitIr c = blank(4, 4);
        for (std::size_t q = 0; q < 4; ++q) c.ops.push_back({make_gate(GateKind::H, {}, {}, {q})});
        for (std::size_t q = 0; q < 4; ++q) c.ops.push_back({MeasureOp{q, q}});
        c.ops.push_back({ConditionalBlock{0, 1, {{make_gate(GateKind::X, {}, {}, {0})}}}});
        CHECK_THROWS_AS(branch_distribution(c, 4), CapacityExceeded);
        CHECK(branch_distribution(c).size() == 16);
    }
}

TEST_SUITE("sampling") {
    TEST_CASE("counts add up to shots and are seed deterministic") {
        const CircuitIr c = corpus("bell");
        const Counts a = sample(c, 1024, 7);
        std::uint64_t total = 0;
        for (const auto& [k, n] : a) total += n;
        CHECK(total == 1024);
        CHECK(a == sample(c, 1024, 7));
        std::set<Counts> distinct;
        for (std::uint64_t seed = 0; seed < 20; ++seed) distinct.insert(sample(c, 1024, seed));
        CHECK(distinct.size() > 1);
        for (const auto& [k, n] : a) CHECK((k == "00" || k == "11"));
    }

    TEST_CASE("bell counts stay within six standard deviations") {
        const CircuitIr c = corpus("bell");
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const Counts counts = sample(c, 1024, seed);
            for (const auto& [k, n] : counts) {
                CHECK((k == "00" || k == "11"));
                CHECK(n >= 452);
                CHECK(n <= 572);
            }
        }
    }

    TEST_CASE("corpus circuits converge to their exact distribution") {
        for (const auto& f : corpus_files("sequence")) {
            auto l = lower_sequence_model(parse_sequence_diagram(read_text(f)), {.allow_mid_circuit = true});
            REQUIRE(l.circuit.has_value());
            if (l.circuit->n_qubits > 4) continue;
            CAPTURE(f.string());
            const std::uint64_t shots = 100000;
            CHECK(total_variation(branch_distribution(*l.circuit), sample(*l.circuit, shots, 42), shots) < 0.01);
        }
    }

    TEST_CASE("sampled distribution converges") {
        std::mt19937_64 rng(31);
        for (int i = 0; i < 5; ++i) {
            CircuitIr c = umlq::testing::random_circuit(rng, 3, 12);
            umlq::testing::measure_all(c);
            const std::uint64_t shots = 100000;
            CHECK(total_variation(probabilities(c), sample(c, shots, 100 + i), shots) < 0.01);
        }
        const CircuitIr t = corpus("teleport");
        CHECK(total_variation(branch_distribution(t), sample(t, 100000, 5), 100000) < 0.01);
    }

    TEST_CASE("rng draws 53-bit uniforms") {
        Rng r(42);
        std::mt19937_64 e(42);
        for (int i = 0; i < 10; ++i) {
            const double u = r.uniform();
            CHECK(u == static_cast<double>(e() >> 11) / 9007199254740992.0);
            CHECK(u >= 0.0);
            CHECK(u < 1.0);
        }
    }
}

TEST_SUITE("counts json") {
    TEST_CASE("format and parse") {
        const Counts c{{"11", 497}, {"00", 527}};
        CHECK(counts_to_json(c) == R"({"00": 527, "11": 497})");
        CHECK(counts_to_json({}) == "{}");
        CHECK(counts_from_json(counts_to_json(c)) == c);
        CHECK(counts_from_json(R"({"01":3})") == Counts{{"01", 3}});
    }
}
