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

#include <cstdlib>
#include <iostream>

#include "umlq/cli.hpp"

int main(int argc, char** argv) {
    std::map<std::string, std::string> env;
    if (const char* seed = std::getenv("M2Q_SEED")) env["M2Q_SEED"] = seed;
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto parsed = umlq::cli::parse_args(args, env, std::cout, std::cerr);
    if (!parsed.config) return parsed.exit_code;
    return umlq::cli::run(*parsed.config, std::cout, std::cerr);
}
