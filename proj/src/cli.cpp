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

#include "umlq/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "umlq/classical_codegen.hpp"
#include "umlq/ir_json.hpp"
#include "umlq/metrics.hpp"
#include "umlq/simulator.hpp"

namespace umlq::cli {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

// Thrown inside run() and mapped to an exit code at the top.
struct CommandFailure {
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, std::string message) { throw CommandFailure{code, std::move(message)}; }

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(kInputError, path.string() + ": cannot read file");
    std::ostringstream os;
    os << in.rdbuf();
    if (in.bad()) fail(kInputError, path.string() + ": read error");
    return os.str();
}

std::string json_text(const ojson& doc) { return doc.dump(2) + "\n"; }

std::string stem_of(const fs::path& path) {
    std::string name = path.filename().string();
    for (const char* suffix : {".ir.json", ".puml"}) {
        const std::string s = suffix;
        if (name.size() > s.size() && name.ends_with(s)) return name.substr(0, name.size() - s.size());
    }
    return path.stem().string();
}

std::string describe(const ValidationReport& report, const std::string& source) {
    std::ostringstream os;
    for (const auto& f : report.errors) {
        os << source << ": op " << f.op_index << ": error [" << f.rule << "] " << f.message << "\n";
    }
    return os.str();
}

class Session {
public:
    Session(const CliConfig& config, std::ostream& out, std::ostream& err) : cfg_(config), out_(out), err_(err) {}

    int run() {
        switch (cfg_.command) {
            case Command::Parse: parse(); break;
            case Command::Generate: generate(); break;
            case Command::Simulate: simulate(); break;
            case Command::Verify: verify(); break;
            case Command::Report: report(); break;
        }
        write_atomically(files_);
        for (const auto& [path, text] : files_) out_ << "wrote " << path.string() << "\n";
        return exit_;
    }

private:
    // -- inputs ----------------------------------------------------------------

    std::string stem() const {
        if (cfg_.sequence_diagram) return stem_of(*cfg_.sequence_diagram);
        if (cfg_.class_diagram) return stem_of(*cfg_.class_diagram);
        if (cfg_.ir_file) return stem_of(*cfg_.ir_file);
        return "model";
    }

    ValidationOptions validation() const { return {.allow_mid_circuit = cfg_.allow_mid_circuit}; }

    SystemIr load_system() {
        if (cfg_.class_diagram) {
            const std::string text = read_file(*cfg_.class_diagram);
            try {
                return lower_class_model(parse_class_diagram(text));
            } catch (const ParseError& e) {
                fail(kInputError, cfg_.class_diagram->string() + ":" + e.what());
            }
        }
        if (cfg_.ir_file && cfg_.command == Command::Report) return load_ir().first;
        return {};
    }

    std::pair<SystemIr, CircuitIr> load_ir() {
        const std::string text = read_file(*cfg_.ir_file);
        try {
            return deserialize_ir(text);
        } catch (const IrFormatError& e) {
            fail(kInputError, cfg_.ir_file->string() + ": " + e.what());
        }
    }

    // Lowered and validated circuit; also records the validation report.
    CircuitIr load_circuit() {
        if (cfg_.sequence_diagram) {
            const std::string text = read_file(*cfg_.sequence_diagram);
            SequenceModel model;
            try {
                model = parse_sequence_diagram(text);
            } catch (const ParseError& e) {
                fail(kInputError, cfg_.sequence_diagram->string() + ":" + e.what());
            }
            CircuitLowering lowered = lower_sequence_model(model, validation());
            report_ = lowered.report;
            if (!lowered.circuit) fail(kFailed, describe(lowered.report, cfg_.sequence_diagram->string()));
            return std::move(*lowered.circuit);
        }
        if (cfg_.ir_file) {
            CircuitIr circuit = load_ir().second;
            report_ = validate_circuit(circuit, validation());
            if (!report_.ok()) fail(kFailed, describe(report_, cfg_.ir_file->string()));
            return circuit;
        }
        return {};
    }

    void require_circuit_input(const char* command) const {
        if (!cfg_.sequence_diagram && !cfg_.ir_file) {
            fail(kInputError, std::string(command) + " requires --sequence-diagram or --ir");
        }
    }

    void emit(const fs::path& relative, std::string text) { files_.emplace_back(cfg_.out / relative, std::move(text)); }

    // -- commands --------------------------------------------------------------

    void parse() {
        if (!cfg_.class_diagram && !cfg_.sequence_diagram) {
            fail(kInputError, "parse requires --class-diagram and/or --sequence-diagram");
        }
        const SystemIr system = load_system();
        const CircuitIr circuit = load_circuit();
        emit(fs::path("ir") / (stem() + ".ir.json"), serialize_ir(system, circuit));
        emit(fs::path("reports") / (stem() + ".validation.json"), json_text(report_to_json(report_)));
    }

    void generate() {
        if (!cfg_.class_diagram && !cfg_.sequence_diagram) {
            fail(kInputError, "generate requires --class-diagram and/or --sequence-diagram");
        }
        const SystemIr system = load_system();
        const CircuitIr circuit = load_circuit();
        const std::string name = stem();

        ojson manifest = {{"ir_version", kIrVersion}};
        if (cfg_.sequence_diagram) {
            const bool explicit_targets = !cfg_.targets.empty();
            std::vector<TargetQpl> targets(all_targets().begin(), all_targets().end());
            if (explicit_targets) targets = cfg_.targets;
            GenOptions options;
            options.shots = cfg_.shots;
            options.seed = cfg_.seed;
            options.allow_placeholders = cfg_.allow_placeholders;

            ojson quantum = ojson::object();
            for (TargetQpl t : targets) {
                const std::string tname(target_name(t));
                const fs::path file = fs::path("quantum") / (name + "." + std::string(target_extension(t)));
                try {
                    TargetProgram program = generate_quantum(circuit, t, options);
                    const Manifest& m = program.manifest;
                    quantum[tname] = {{"status", "ok"},
                                      {"file", file.generic_string()},
                                      {"manifest",
                                       {{"qubit_decls", m.qubit_decls},
                                        {"clbit_decls", m.clbit_decls},
                                        {"gate_ops", m.gate_ops},
                                        {"measures", m.measures},
                                        {"conditionals", m.conditionals},
                                        {"placeholders", m.placeholders}}},
                                      {"warnings", program.warnings}};
                    for (const auto& w : program.warnings) err_ << "warning: " << tname << ": " << w << "\n";
                    emit(file, std::move(program.source));
                } catch (const CodegenError& e) {
                    if (explicit_targets) fail(kFailed, tname + ": " + e.what());
                    quantum[tname] = {{"status", "unsupported"}, {"reason", e.what()}};
                    err_ << "warning: " << tname << ": skipped: " << e.what() << "\n";
                }
            }
            manifest["quantum"] = std::move(quantum);
        }
        if (cfg_.class_diagram) {
            ClassicalOptions options;
            options.quantum_stem = name;
            FileTree tree;
            try {
                tree = generate_classical(system, options);
            } catch (const std::exception& e) {
                fail(kFailed, cfg_.class_diagram->string() + ": " + e.what());
            }
            ojson listed = ojson::array();
            for (auto& f : tree.files) {
                const fs::path rel = fs::path("classical") / f.path;
                listed.push_back(rel.generic_string());
                emit(rel, std::move(f.text));
            }
            manifest["classical"] = {{"files", std::move(listed)}};
        }
        if (cfg_.ir_dump) emit(fs::path("ir") / (name + ".ir.json"), serialize_ir(system, circuit));
        emit(fs::path("reports") / (name + ".manifest.json"), json_text(manifest));
    }

    void simulate() {
        require_circuit_input("simulate");
        const CircuitIr circuit = load_circuit();
        try {
            emit(fs::path("reports") / (stem() + ".probabilities.json"),
                 distribution_to_json(branch_distribution(circuit)) + "\n");
            emit(fs::path("reports") / (stem() + ".counts.json"),
                 counts_to_json(sample(circuit, cfg_.shots, cfg_.seed.value_or(0))) + "\n");
        } catch (const SimulationError& e) {
            fail(kFailed, e.what());
        }
    }

    void verify() {
        require_circuit_input("verify");
        if (!cfg_.counts_file) fail(kInputError, "verify requires --counts");
        const CircuitIr circuit = load_circuit();
        Counts counts;
        try {
            counts = counts_from_json(read_file(*cfg_.counts_file));
        } catch (const std::invalid_argument& e) {
            fail(kInputError, cfg_.counts_file->string() + ": " + e.what());
        }
        std::uint64_t total = 0;
        for (const auto& [key, n] : counts) total += n;
        if (total == 0) fail(kInputError, cfg_.counts_file->string() + ": counts are empty");

        Verdict verdict;
        try {
            verdict = equivalence_verdict(branch_distribution(circuit), normalize(counts), cfg_.threshold, total);
        } catch (const SimulationError& e) {
            fail(kFailed, e.what());
        } catch (const LengthMismatch& e) {
            fail(kInputError, cfg_.counts_file->string() + ": " + e.what());
        }
        out_ << (verdict.pass ? "PASS" : "FAIL") << " kl=" << verdict.kl.value << " threshold=" << verdict.threshold
             << (verdict.kl.smoothed ? " (smoothed)" : "") << "\n";
        emit(fs::path("reports") / (stem() + ".verdict.json"), json_text(verdict_to_json(verdict)));
        if (!verdict.pass) exit_ = kFailed;
    }

    void report() {
        if (!cfg_.class_diagram && !cfg_.ir_file) fail(kInputError, "report requires --class-diagram or --ir");
        const SystemIr system = load_system();
        ClassicalOptions options;
        options.quantum_stem = stem();
        FileTree tree;
        try {
            tree = generate_classical(system, options);
        } catch (const std::exception& e) {
            fail(kFailed, e.what());
        }
        const ElementReport r = element_report(system, tree);
        out_ << "precision=" << r.precision << " recall=" << r.recall
             << " precision_without_constructors=" << r.precision_without_constructors << "\n";
        emit(fs::path("reports") / (stem() + ".elements.json"), json_text(element_report_to_json(r)));
    }

    const CliConfig& cfg_;
    std::ostream& out_;
    std::ostream& err_;
    ValidationReport report_;
    std::vector<std::pair<fs::path, std::string>> files_;
    int exit_ = kOk;
};

}  // namespace

void write_atomically(const std::vector<std::pair<fs::path, std::string>>& files) {
    std::vector<fs::path> temps;
    auto cleanup = [&] {
        std::error_code ec;
        for (const auto& t : temps) fs::remove(t, ec);
    };
    for (const auto& [path, text] : files) {
        fs::path tmp = path;
        tmp += ".umlq-tmp";
        std::error_code ec;
        if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) {
            cleanup();
            throw std::runtime_error(path.string() + ": cannot write file");
        }
        temps.push_back(tmp);
        os << text;
        os.close();
        if (!os) {
            cleanup();
            throw std::runtime_error(path.string() + ": write error");
        }
    }
    for (std::size_t i = 0; i < files.size(); ++i) {
        std::error_code ec;
        fs::rename(temps[i], files[i].first, ec);
        if (ec) {
            cleanup();
            throw std::runtime_error(files[i].first.string() + ": " + ec.message());
        }
    }
}

ParsedArgs parse_args(const std::vector<std::string>& args, const std::map<std::string, std::string>& env,
                      std::ostream& out, std::ostream& err) {
    CLI::App app{"Compile UML models of hybrid quantum-classical systems", "umlq"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string targets = "all";
    std::optional<std::uint64_t> seed;
    std::string class_diagram, sequence_diagram, ir_file, counts_file;

    struct Spec {
        const char* name;
        const char* help;
        Command command;
    };
    const Spec specs[] = {
        {"parse", "Lower diagrams to IR JSON and a validation report", Command::Parse},
        {"generate", "Generate quantum programs and classical skeletons", Command::Generate},
        {"simulate", "Compute exact probabilities and sampled counts", Command::Simulate},
        {"verify", "Compare counts JSON against the reference simulator", Command::Verify},
        {"report", "Report element completeness of the classical skeletons", Command::Report},
    };
    std::map<CLI::App*, Command> commands;
    for (const auto& spec : specs) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        commands[sub] = spec.command;
        sub->add_option("--class-diagram", class_diagram, "Class diagram (.puml)");
        sub->add_option("--sequence-diagram", sequence_diagram, "Sequence diagram (.puml)");
        sub->add_option("--out", cfg.out, "Output directory")->capture_default_str();
        sub->add_flag("--allow-mid-circuit", cfg.allow_mid_circuit, "Accept qubit use after measurement");
        if (spec.command != Command::Parse && spec.command != Command::Generate) {
            sub->add_option("--ir", ir_file, "IR JSON file instead of diagrams");
        }
        if (spec.command == Command::Generate) {
            sub->add_option("--targets", targets, "Comma-separated targets or 'all'")->capture_default_str();
            sub->add_flag("--ir-dump", cfg.ir_dump, "Also write the IR JSON");
            sub->add_flag("!--no-placeholders", cfg.allow_placeholders, "Fail on gates a target lacks");
        }
        if (spec.command == Command::Generate || spec.command == Command::Simulate) {
            sub->add_option("--shots", cfg.shots, "Shot count")->capture_default_str()->check(CLI::PositiveNumber);
            sub->add_option("--seed", seed, "Sampler seed (falls back to M2Q_SEED, then 0)");
        }
        if (spec.command == Command::Verify) {
            sub->add_option("--counts", counts_file, "Counts JSON to check")->required();
            sub->add_option("--threshold", cfg.threshold, "KL divergence threshold")
                ->capture_default_str()
                ->check(CLI::PositiveNumber);
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return {std::nullopt, code == 0 ? kOk : kInputError};
    }

    for (const auto& [sub, command] : commands) {
        if (sub->parsed()) cfg.command = command;
    }
    if (!class_diagram.empty()) cfg.class_diagram = class_diagram;
    if (!sequence_diagram.empty()) cfg.sequence_diagram = sequence_diagram;
    if (!ir_file.empty()) cfg.ir_file = ir_file;
    if (!counts_file.empty()) cfg.counts_file = counts_file;

    if (targets != "all") {
        std::stringstream ss(targets);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto t = target_from_name(item);
            if (!t) {
                err << "umlq: unknown target '" << item << "' (expected qiskit, cirq, qsharp, braket or all)\n";
                return {std::nullopt, kInputError};
            }
            if (std::find(cfg.targets.begin(), cfg.targets.end(), *t) == cfg.targets.end()) cfg.targets.push_back(*t);
        }
        if (cfg.targets.empty()) {
            err << "umlq: --targets is empty\n";
            return {std::nullopt, kInputError};
        }
    }

    if (seed) {
        cfg.seed = seed;
    } else if (auto it = env.find("M2Q_SEED"); it != env.end() && !it->second.empty()) {
        const std::string& text = it->second;
        std::uint64_t value = 0;
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || end != text.data() + text.size()) {
            err << "umlq: M2Q_SEED is not a non-negative integer: '" << text << "'\n";
            return {std::nullopt, kInputError};
        }
        cfg.seed = value;
    }
    return {cfg, kOk};
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        return Session(config, out, err).run();
    } catch (const CommandFailure& f) {
        err << "umlq: " << f.message;
        if (f.message.empty() || f.message.back() != '\n') err << "\n";
        return f.code;
    } catch (const std::exception& e) {
        err << "umlq: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace umlq::cli
