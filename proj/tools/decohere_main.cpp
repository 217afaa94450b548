// Copyright 2026 The decohere Authors
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

// decohere <evolve|figure1|sweep|validate> [--config PATH] [--out PATH] [key=value ...]
//
// Exit status: 0 success, 1 configuration error, 2 numerical failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "decohere/decohere.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

int exit_code(decohere_status status) {
  switch (status) {
    case DECOHERE_OK:
      return kExitOk;
    case DECOHERE_ERR_CONFIG:
    case DECOHERE_ERR_DOMAIN:
    case DECOHERE_ERR_ARGUMENT:
    case DECOHERE_ERR_IO:
      return kExitConfig;
    default:
      return kExitNumerical;
  }
}

int report(decohere_status status) {
  std::cerr << "decohere: " << decohere_last_error() << '\n';
  return exit_code(status);
}

struct ConfigDeleter {
  void operator()(decohere_config* c) const { decohere_config_destroy(c); }
};
struct OutputDeleter {
  void operator()(decohere_output* o) const { decohere_output_destroy(o); }
};
using ConfigPtr = std::unique_ptr<decohere_config, ConfigDeleter>;
using OutputPtr = std::unique_ptr<decohere_output, OutputDeleter>;

struct Options {
  std::string config_path;
  std::string out_path;
  std::vector<std::string> overrides;
};

int run(const std::string& command, const Options& opts) {
  decohere_config* raw_config = nullptr;
  decohere_status st = decohere_config_create(&raw_config);
  if (st != DECOHERE_OK) return report(st);
  const ConfigPtr config(raw_config);

  if (!opts.config_path.empty()) {
    st = decohere_config_load(config.get(), opts.config_path.c_str());
    if (st != DECOHERE_OK) return report(st);
  }
  for (const std::string& kv : opts.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "decohere: override '" << kv << "' is not key=value\n";
      return kExitConfig;
    }
    st = decohere_config_set(config.get(), kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str());
    if (st != DECOHERE_OK) return report(st);
  }

  decohere_output* raw_output = nullptr;
  st = decohere_run(config.get(), command.c_str(), &raw_output);
  if (raw_output == nullptr) return report(st);
  const OutputPtr output(raw_output);

  for (std::size_t i = 0; i < decohere_output_warning_count(output.get()); ++i)
    std::cerr << "decohere: warning: " << decohere_output_warning(output.get(), i) << '\n';

  const char* csv = decohere_output_csv(output.get());
  const auto size = static_cast<std::streamsize>(decohere_output_size(output.get()));
  int code = kExitOk;
  if (opts.out_path.empty() || opts.out_path == "-") {
    std::cout.write(csv, size);
    std::cout.flush();
  } else {
    std::ofstream out(opts.out_path, std::ios::binary | std::ios::trunc);
    if (!out.write(csv, size)) {
      std::cerr << "decohere: cannot write '" << opts.out_path << "'\n";
      code = kExitConfig;
    }
  }
  if (st != DECOHERE_OK) return report(st);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vacuum-induced decoherence of a free charged particle"};
  app.set_version_flag("--version", std::string(decohere_version()));
  app.require_subcommand(1);

  Options opts;
  const std::vector<std::pair<const char*, const char*>> commands{
      {"evolve", "Evolve the configured packet and print rho_12 and diagnostics per tau"},
      {"figure1", "Print |gamma_vac| over the tau grid for each figure1.q value"},
      {"sweep", "Evolve a two-point packet for each sweep.q value"},
      {"validate", "Compare every closed form with its quadrature oracle"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", opts.config_path, "Configuration file (key = value lines)")
        ->check(CLI::ExistingFile);
    sub->add_option("--out", opts.out_path, "Output CSV path (default: standard output)");
    sub->add_option("overrides", opts.overrides, "key=value settings applied after --config");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }
  return run(app.get_subcommands().front()->get_name(), opts);
}
