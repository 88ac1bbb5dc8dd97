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

#include "doctest.h"
#include "support.hpp"
#include "umlq/uml_parser.hpp"

using namespace umlq;
using umlq::testing::corpus_files;
using umlq::testing::read_text;

namespace {

int expected_error_line(const std::string& text) {
    const std::string tag = "' expect-error-line: ";
    REQUIRE(text.rfind(tag, 0) == 0);
    return std::stoi(text.substr(tag.size()));
}

const MessageNode& message(const EventNode& e) { return std::get<MessageNode>(e.node); }

}  // namespace

TEST_SUITE("class diagrams") {
    TEST_CASE("quantum package holding a quantum class") {
        const ClassModel m =
            parse_class_diagram("package QuantumLogic <<Quantum>> { class HHL <<Quantum>> { +run(): void } }");
        REQUIRE(m.packages.size() == 1);
        const PackageNode& p = m.packages[0];
        CHECK(p.name == "QuantumLogic");
        CHECK(has_quantum_stereotype(p.stereotypes));
        REQUIRE(p.classes.size() == 1);
        CHECK(p.classes[0].name == "HHL");
        CHECK(has_quantum_stereotype(p.classes[0].stereotypes));
        REQUIRE(p.classes[0].operations.size() == 1);
        CHECK(p.classes[0].operations[0].name == "run");
        CHECK(p.classes[0].operations[0].return_type == "void");
        CHECK(p.classes[0].operations[0].visibility == Visibility::Public);
        CHECK(m.associations.empty());
    }

    TEST_CASE("empty input") {
        const ClassModel m = parse_class_diagram("");
        CHECK(m.packages.empty());
        CHECK(m.classes.empty());
        CHECK(m.associations.empty());
    }

    TEST_CASE("print then parse is a fixpoint") {
        const ClassModel m = parse_class_diagram("class A { +x: int }");
        REQUIRE(m.classes.size() == 1);
        CHECK(m.classes[0].attributes[0] == AttributeNode{"x", "int", Visibility::Public});
        CHECK(parse_class_diagram(print_class_model(m)) == m);
    }

    TEST_CASE("stereotypes other than Quantum do not set the quantum flag") {
        const ClassModel m = parse_class_diagram("class A <<Entity>> { }");
        CHECK(m.classes[0].stereotypes == std::vector<std::string>{"Entity"});
        CHECK_FALSE(has_quantum_stereotype(m.classes[0].stereotypes));
    }

    TEST_CASE("members, visibility and types") {
        const ClassModel m = parse_class_diagram(R"(
            class R {
              +width: int
              -labels: str[]
              #weights: Map<str, float>
              values: Vector
              +read(index: int, strict: bool): float
              #resize(width: int)
            }
        )");
        const ClassNode& c = m.classes.at(0);
        REQUIRE(c.attributes.size() == 4);
        CHECK(c.attributes[1] == AttributeNode{"labels", "str[]", Visibility::Private});
        CHECK(c.attributes[2].type == "Map<str,float>");
        CHECK(c.attributes[2].visibility == Visibility::Protected);
        CHECK(c.attributes[3].visibility == Visibility::Unspecified);
        REQUIRE(c.operations.size() == 2);
        CHECK(c.operations[0].params == std::vector<ParameterNode>{{"index", "int"}, {"strict", "bool"}});
        CHECK(c.operations[1].return_type.empty());
    }

    TEST_CASE("associations keep source, target and label") {
        const ClassModel m = parse_class_diagram("class A { }\nclass B { }\nA --> B : talks to\nB --> A\n");
        REQUIRE(m.associations.size() == 2);
        CHECK(m.associations[0] == AssociationNode{"A", "B", "talks to"});
        CHECK(m.associations[1] == AssociationNode{"B", "A", ""});
    }

    TEST_CASE("comments and wrappers are ignored") {
        const ClassModel a = parse_class_diagram("@startuml\n' a comment\nclass A { } ' trailing\n@enduml\n");
        const ClassModel b = parse_class_diagram("class A { }");
        CHECK(a == b);
    }

    TEST_CASE("the same name may appear in different scopes") {
        CHECK_NOTHROW(parse_class_diagram("package P { class A { } } package Q { class A { } }"));
    }

    TEST_CASE("errors carry position and tokens") {
        try {
            parse_class_diagram("class A {\n}\nenum E {\n}\n");
            FAIL("expected a ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
            CHECK(e.column() == 1);
            CHECK(e.found().find("enum") != std::string::npos);
            CHECK(std::string(e.what()).rfind("3:1: expected ", 0) == 0);
        }
    }
}

TEST_SUITE("sequence diagrams") {
    TEST_CASE("qubit participant and a self-message") {
        const SequenceModel m = parse_sequence_diagram("participant \"qubit_0\" as q0 <<qubit>>\nq0 -> q0 : h\n");
        REQUIRE(m.participants.size() == 1);
        CHECK(m.participants[0] == Participant{"qubit_0", "q0", ParticipantKind::Qubit});
        REQUIRE(m.events.size() == 1);
        CHECK(message(m.events[0]).kind == MessageKind::SelfMessage);
        CHECK(message(m.events[0]).name == "h");
    }

    TEST_CASE("group with a control label") {
        const SequenceModel m = parse_sequence_diagram(
            "participant \"a\" as q0 <<qubit>>\nparticipant \"b\" as q1 <<qubit>>\n"
            "group cx\n  q0 -> q1 : <<control>>\nend\n");
        REQUIRE(m.events.size() == 1);
        const auto& g = std::get<GroupNode>(m.events[0].node);
        CHECK(g.name == "cx");
        REQUIRE(g.messages.size() == 1);
        CHECK(g.messages[0].sender == "q0");
        CHECK(g.messages[0].receiver == "q1");
        CHECK(g.messages[0].control);
        CHECK_FALSE(g.messages[0].controlled);
    }

    TEST_CASE("measurement message") {
        const SequenceModel m = parse_sequence_diagram(
            "participant \"q\" as q0 <<qubit>>\nparticipant \"c\" as c0 <<classical_bit>>\nq0 -> c0 : measure\n");
        REQUIRE(m.events.size() == 1);
        CHECK(message(m.events[0]).kind == MessageKind::Measure);
        CHECK(message(m.events[0]).sender == "q0");
        CHECK(message(m.events[0]).receiver == "c0");
    }

    TEST_CASE("parameters are real expressions in radians") {
        const SequenceModel m = parse_sequence_diagram(
            "participant \"q\" as q0 <<qubit>>\nq0 -> q0 : u3(1.57, -pi/2, 2*pi)\nq0 -> q0 : rz(+0.5)\n");
        const auto& p = message(m.events[0]).params;
        REQUIRE(p.size() == 3);
        CHECK(p[0] == 1.57);
        CHECK(p[1] == -std::numbers::pi / 2);
        CHECK(p[2] == 2 * std::numbers::pi);
        CHECK(message(m.events[1]).params == std::vector<double>{0.5});
    }

    TEST_CASE("alt fragments nest and keep their condition") {
        const SequenceModel m = parse_sequence_diagram(
            "participant \"q\" as q0 <<qubit>>\nparticipant \"c\" as c0 <<classical_bit>>\n"
            "q0 -> c0 : measure\nalt c0 == 0\n  alt c0 == 1\n    q0 -> q0 : x\n  end\nend\n");
        REQUIRE(m.events.size() == 2);
        const auto& outer = std::get<AltNode>(m.events[1].node);
        CHECK(outer.clbit == "c0");
        CHECK(outer.value == 0);
        REQUIRE(outer.events.size() == 1);
        CHECK(std::get<AltNode>(outer.events[0].node).value == 1);
    }

    TEST_CASE("event order follows the source") {
        const SequenceModel m = parse_sequence_diagram(
            "participant \"q\" as q0 <<qubit>>\nq0 -> q0 : h\nq0 -> q0 : x\nq0 -> q0 : z\n");
        REQUIRE(m.events.size() == 3);
        CHECK(message(m.events[0]).name == "h");
        CHECK(message(m.events[1]).name == "x");
        CHECK(message(m.events[2]).name == "z");
    }

    TEST_CASE("format_real reads back exactly") {
        for (double v : {0.0, 1.0, -0.5, 0.1, 1e-300, std::numbers::pi, 123456789.125}) {
            CHECK(std::stod(format_real(v)) == v);
        }
    }
}

TEST_SUITE("corpus") {
    TEST_CASE("valid class diagrams round-trip through the printer") {
        const auto files = corpus_files("class");
        CHECK(files.size() >= 5);
        for (const auto& f : files) {
            CAPTURE(f.string());
            const ClassModel m = parse_class_diagram(read_text(f));
            CHECK(parse_class_diagram(print_class_model(m)) == m);
            CHECK(parse_class_diagram(read_text(f)) == m);
        }
    }

    TEST_CASE("valid sequence diagrams round-trip through the printer") {
        const auto files = corpus_files("sequence");
        CHECK(files.size() >= 10);
        for (const auto& f : files) {
            CAPTURE(f.string());
            const SequenceModel m = parse_sequence_diagram(read_text(f));
            CHECK(parse_sequence_diagram(print_sequence_model(m)) == m);
        }
    }

    TEST_CASE("invalid models fail at the injected line") {
        const auto files = corpus_files("invalid");
        CHECK(files.size() >= 10);
        for (const auto& f : files) {
            CAPTURE(f.string());
            const std::string text = read_text(f);
            const int line = expected_error_line(text);
            const bool is_class = f.filename().string().rfind("class_", 0) == 0;
            try {
                if (is_class) {
                    parse_class_diagram(text);
                } else {
                    parse_sequence_diagram(text);
                }
                FAIL("expected a ParseError");
            } catch (const ParseError& e) {
                CHECK(static_cast<int>(e.line()) == line);
            }
        }
    }
}
