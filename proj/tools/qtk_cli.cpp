// Copyright 2026 The qtk Authors
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

// qtk command-line tool. Links only the C interface.
//
// Exit codes: 0 pass, 1 check failure, 2 usage or parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qtk/qtk.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string spec_path;
  int n = 0;
  std::uint64_t seed = 1;
  int trials = 0;
  double tolerance = 1e-9;
  std::string format = "human";
  int m = 3;
  int pairs = 0;
  std::string demo;
};

class Failure {
 public:
  Failure(int code, std::string message) : code_(code), message_(std::move(message)) {}
  int code() const { return code_; }
  const std::string &message() const { return message_; }

 private:
  int code_;
  std::string message_;
};

int exit_code_for(qtk_status status) {
  switch (status) {
    case QTK_ERR_PARSE:
    case QTK_ERR_DOMAIN:
    case QTK_ERR_NULL_ARGUMENT:
      return kExitUsage;
    default:
      return kExitCheckFailed;
  }
}

void check(qtk_status status) {
  if (status != QTK_OK) throw Failure(exit_code_for(status), qtk_last_error());
}

std::string read_file(const std::string &path) {
  if (path.empty()) throw Failure(kExitUsage, "--spec is required");
  std::ifstream in(path);
  if (!in) throw Failure(kExitUsage, "cannot read spec file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Takes ownership of a string returned by the library.
nlohmann::json take_json(char *text) {
  auto doc = nlohmann::json::parse(text);
  qtk_string_free(text);
  return doc;
}

class SpecHandle {
 public:
  explicit SpecHandle(const RunConfig &config) { check(qtk_spec_parse(read_file(config.spec_path).c_str(), config.n, &spec_)); }
  ~SpecHandle() { qtk_spec_destroy(spec_); }
  SpecHandle(const SpecHandle &) = delete;
  SpecHandle &operator=(const SpecHandle &) = delete;
  const qtk_spec *get() const { return spec_; }

 private:
  qtk_spec *spec_ = nullptr;
};

void print_human(const nlohmann::json &doc, const std::string &indent = "") {
  for (const auto &[key, value] : doc.items()) {
    if (value.is_object()) {
      std::cout << indent << key << ":\n";
      print_human(value, indent + "  ");
    } else if (value.is_string()) {
      std::cout << indent << key << ": " << value.get<std::string>() << "\n";
    } else {
      std::cout << indent << key << ": " << value.dump() << "\n";
    }
  }
}

void emit(const RunConfig &config, const nlohmann::json &doc) {
  if (config.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    print_human(doc);
  }
}

int cmd_verify(const RunConfig &config) {
  SpecHandle spec(config);
  char *text = nullptr;
  int pass = 0;
  check(qtk_verify(spec.get(), config.trials > 0 ? config.trials : 100, config.seed, config.tolerance, &text, &pass));
  emit(config, take_json(text));
  return pass ? kExitPass : kExitCheckFailed;
}

int cmd_resources(const RunConfig &config) {
  SpecHandle spec(config);
  char *text = nullptr;
  int pass = 0;
  check(qtk_resources(spec.get(), config.seed, &text, &pass));
  emit(config, take_json(text));
  return pass ? kExitPass : kExitCheckFailed;
}

int cmd_rotation_stats(const RunConfig &config) {
  char *text = nullptr;
  int verdict = -1;
  const int trials = config.trials > 0 ? config.trials : 10000;
  check(qtk_rotation_stats(config.m, trials, config.seed, &text, &verdict));
  auto doc = take_json(text);
  if (verdict < 0) {
    std::cerr << "warning: " << trials << " trials is too few for a verdict; use at least 100 (10000 recommended)\n";
  }
  emit(config, doc);
  return verdict == 0 ? kExitCheckFailed : kExitPass;
}

int cmd_decompose(const RunConfig &config) {
  const std::string phases = read_file(config.spec_path);
  char *text = nullptr;
  if (config.pairs > 0) {
    int not_ruled_out = 0;
    check(qtk_decompose_pairwise(phases.c_str(), config.pairs, config.seed, &text, &not_ruled_out));
    emit(config, take_json(text));
    return kExitPass;
  }
  int decomposable = 0;
  const int cap = config.n > 0 ? config.n : 16;
  const qtk_status status = qtk_decompose(phases.c_str(), cap, &text, &decomposable);
  if (status == QTK_ERR_DOMAIN)
    throw Failure(kExitUsage, std::string(qtk_last_error()) + "\nrerun with --pairs K for the sampled necessary-condition check");
  check(status);
  auto doc = take_json(text);
  doc["seed"] = config.seed;
  emit(config, doc);
  return kExitPass;
}

int cmd_demo(const RunConfig &config) {
  char *text = nullptr;
  int pass = 0;
  check(qtk_demo(config.demo.c_str(), config.n > 0 ? config.n : 3, config.seed, config.tolerance, &text, &pass));
  auto doc = take_json(text);
  if (doc.contains("caveat")) std::cerr << "note: " << doc["caveat"].get<std::string>() << "\n";
  emit(config, doc);
  return pass ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"qtk: oracle-driven phase, permutation and mixing operations on a dense simulator"};
  app.require_subcommand(1);
  RunConfig config;

  auto common = [&](CLI::App *cmd) {
    cmd->add_option("--n", config.n, "register width (overrides the spec's n)")->check(CLI::Range(1, 24));
    cmd->add_option("--seed", config.seed, "seed for every random choice")->capture_default_str();
    cmd->add_option("--format", config.format, "output format")->check(CLI::IsMember({"human", "json"}))->capture_default_str();
  };

  auto *verify = app.add_subcommand("verify", "compare a method with its dense reference on random states");
  verify->add_option("--spec", config.spec_path, "method spec JSON")->required();
  verify->add_option("--trials", config.trials, "random input states (default 100)")->check(CLI::PositiveNumber);
  verify->add_option("--tolerance", config.tolerance, "accepted fidelity deficit")->capture_default_str();
  common(verify);

  auto *resources = app.add_subcommand("resources", "run a method once and check its resource counts");
  resources->add_option("--spec", config.spec_path, "method spec JSON")->required();
  common(resources);

  auto *rotation = app.add_subcommand("rotation-stats", "mean oracle calls of the measured root-of-unity rotation");
  rotation->add_option("--m", config.m, "rotation by exp(2 pi i / 2^m)")->capture_default_str();
  rotation->add_option("--trials", config.trials, "seeded runs (default 10000)")->check(CLI::PositiveNumber);
  common(rotation);

  auto *decompose = app.add_subcommand("decompose", "test a diagonal for a tensor-product form");
  decompose->add_option("--spec", config.spec_path, "JSON with a \"phases\" array")->required();
  decompose->add_option("--pairs", config.pairs, "sample this many bit pairs instead of the exhaustive test");
  common(decompose);
  decompose->get_option("--n")->description("largest width for the exhaustive test (default 16)");

  auto *demo = app.add_subcommand("demo", "bundled examples");
  demo->add_option("name", config.demo, "demo name")
      ->required()
      ->check(CLI::IsMember({"grover-sign-step", "exchange-permutation", "grouped-mixing"}));
  demo->add_option("--tolerance", config.tolerance, "accepted fidelity deficit")->capture_default_str();
  common(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(config);
    if (*resources) return cmd_resources(config);
    if (*rotation) return cmd_rotation_stats(config);
    if (*decompose) return cmd_decompose(config);
    return cmd_demo(config);
  } catch (const Failure &f) {
    std::cerr << "qtk: " << f.message() << "\n";
    return f.code();
  }
}
