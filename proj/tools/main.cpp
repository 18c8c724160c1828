// Copyright 2026 The devolab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <csignal>
#include <cstdlib>
#include <iostream>

#include "cli.hpp"

namespace {
std::atomic<bool> g_stop{false};
extern "C" void on_interrupt(int) { g_stop = true; }
}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_interrupt);
  std::signal(SIGTERM, on_interrupt);

  devolab::cli::Environment env;
  if (const char* seed = std::getenv("DEVOLAB_SEED"); seed != nullptr && *seed != '\0') {
    env.seed_override = seed;
  }
  env.stop = &g_stop;
  return devolab::cli::run({argv + 1, argv + argc}, std::cout, std::cerr, env);
}
