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

// The `umlq` command line.
//
//   umlq parse    [--class-diagram F] [--sequence-diagram F]         -> ir/, reports/*.validation.json
//   umlq generate [--class-diagram F] [--sequence-diagram F] [--targets LIST]
//                                                                    -> quantum/, classical/, reports/*.manifest.json
//   umlq simulate (--sequence-diagram F | --ir F) [--shots N] [--seed S]
//                                                                    -> reports/*.probabilities.json, *.counts.json
//   umlq verify   (--sequence-diagram F | --ir F) --counts F [--threshold T]
//                                                                    -> reports/*.verdict.json
//   umlq report   (--class-diagram F | --ir F)                       -> reports/*.elements.json
//
// Every artifact is computed in memory first and then written through a temporary
// file and a rename, so a failing command leaves existing outputs untouched.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "umlq/quantum_codegen.hpp"

namespace umlq::cli {

enum ExitCode : int {
    kOk = 0,
    kFailed = 1,  // validation errors, unsupported target, or a failed verdict
    kInputError = 2,  // unreadable input, parse error, bad usage
};

enum class Command { Parse, Generate, Simulate, Verify, Report };

struct CliConfig {
    Command command = Command::Parse;
    std::optional<std::filesystem::path> class_diagram;
    std::optional<std::filesystem::path> sequence_diagram;
    std::optional<std::filesystem::path> ir_file;
    std::optional<std::filesystem::path> counts_file;
    std::vector<TargetQpl> targets;  // empty means all
    std::filesystem::path out = "out";
    std::uint64_t shots = 1024;
    std::optional<std::uint64_t> seed;  // simulate falls back to 0
    double threshold = 0.1;
    bool ir_dump = false;
    bool allow_mid_circuit = false;
    bool allow_placeholders = true;
};

struct ParsedArgs {
    std::optional<CliConfig> config;  // unset when the process should exit with `exit_code`
    int exit_code = kOk;
};

/// `env` supplies M2Q_SEED, used when --seed is absent.
ParsedArgs parse_args(const std::vector<std::string>& args, const std::map<std::string, std::string>& env,
                      std::ostream& out, std::ostream& err);

int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Writes each file to `<path>.umlq-tmp` and renames it into place once all writes succeed.
/// Throws std::runtime_error on failure after removing its temporary files.
void write_atomically(const std::vector<std::pair<std::filesystem::path, std::string>>& files);

}  // namespace umlq::cli
