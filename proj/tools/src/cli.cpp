// Copyright 2026 The qps Authors
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

#include "cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "qps/errors.hpp"
#include "verify.hpp"

namespace qps::cli {
namespace {

bool is_usage_kind(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnsupportedDimension:
    case ErrorKind::Incompatible:
    case ErrorKind::TooLarge:
    case ErrorKind::InvalidState:
    case ErrorKind::NotTracePreserving:
      return true;
    default:
      return false;
  }
}

void add_common(CLI::App* app, RunConfig& cfg) {
  app->add_option("--d", cfg.d, "local dimension (prime)");
  app->add_option("--n", cfg.n, "number of qudits");
  app->add_option("--seed", cfg.seed, "RNG seed for randomized runs");
  app->add_option("--out", cfg.out, "write the report to this file instead of stdout");
  app->add_option("--jobs", cfg.jobs, "worker threads");
  app->add_option("--tol-one", cfg.tol.tau_one, "unit-modulus threshold for characteristic values");
  app->add_option("--tol-supp", cfg.tol.tau_supp, "support threshold for characteristic values");
}

void add_params(CLI::App* app, RunConfig& cfg) {
  app->add_option("--family", cfg.family, "beam-splitter, amplifier, hadamard or cnot");
  app->add_option("--st", cfg.st, "beam splitter (s,t)")->delimiter(',')->expected(2);
  app->add_option("--lm", cfg.lm, "amplifier (l,m)")->delimiter(',')->expected(2);
  app->add_option("--g", cfg.g, "explicit G as g00,g01,g10,g11; repeatable");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string file_a, file_b, form = "dense", suite;
  std::function<int(std::ostream&)> action;

  CLI::App app{"Discrete quantum phase space: convolution, magic and central limit checks"};
  app.require_subcommand(1);

  auto* clt = app.add_subcommand("clt", "iterated self-convolution of a state against its mean");
  add_common(clt, cfg);
  add_params(clt, cfg);
  clt->add_option("--N", cfg.steps, "number of convolution steps");
  clt->add_option("--state", file_a, "state document (default: seeded random zero-mean state)");
  clt->add_option("--rank", cfg.rank, "rank of the random input (0 = full)");
  clt->add_option("--alphas", cfg.alphas, "Renyi orders, comma separated (inf allowed)");
  clt->callback([&] { action = [&](std::ostream& o) { return cmd_clt(cfg, file_a, o, err); }; });

  auto* cclt = app.add_subcommand("channel-clt", "iterated self-convolution of a channel");
  add_common(cclt, cfg);
  add_params(cclt, cfg);
  cclt->add_option("--N", cfg.steps, "number of convolution steps");
  cclt->add_option("--channel", file_a, "channel document (default: seeded random channel)");
  cclt->add_option("--rank", cfg.rank, "Kraus rank of the random channel (0 = full)");
  cclt->callback(
      [&] { action = [&](std::ostream& o) { return cmd_channel_clt(cfg, file_a, o, err); }; });

  auto* params = app.add_subcommand("params", "beam splitter and amplifier parameter classes");
  add_common(params, cfg);
  params->callback([&] { action = [&](std::ostream& o) { return cmd_params(cfg, o); }; });

  auto* gap = app.add_subcommand("gap", "magic gap of a state or channel document");
  add_common(gap, cfg);
  gap->add_option("file", file_a, "state or channel document")->required();
  gap->callback([&] { action = [&](std::ostream& o) { return cmd_gap(cfg, file_a, o); }; });

  auto* sweep = app.add_subcommand("entropy-sweep", "entropies along the iterated convolution");
  add_common(sweep, cfg);
  add_params(sweep, cfg);
  sweep->add_option("--N", cfg.steps, "number of convolution steps");
  sweep->add_option("--state", file_a, "state document (default: seeded random state)");
  sweep->add_option("--rank", cfg.rank, "rank of the random input (0 = full)");
  sweep->add_option("--alphas", cfg.alphas, "Renyi orders, comma separated (inf allowed)");
  sweep->callback(
      [&] { action = [&](std::ostream& o) { return cmd_entropy_sweep(cfg, file_a, o, err); }; });

  auto* conv = app.add_subcommand("conv", "convolution of two state documents");
  add_common(conv, cfg);
  add_params(conv, cfg);
  conv->add_option("rho", file_a, "first state document")->required();
  conv->add_option("sigma", file_b, "second state document")->required();
  conv->add_option("--form", form, "output form")->check(CLI::IsMember({"dense", "char"}));
  conv->callback(
      [&] { action = [&](std::ostream& o) { return cmd_conv(cfg, file_a, file_b, form, o); }; });

  auto* verify = app.add_subcommand("verify", "property suites with per-check slack");
  add_common(verify, cfg);
  verify->add_option("suite", suite, "weyl, duality, majorization, entropy, fisher, hudson, channels or all")
      ->required();
  verify->add_option("--seeds", cfg.seeds, "random instances per check");
  verify->callback([&] { action = [&](std::ostream& o) { return cmd_verify(cfg, suite, o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (cfg.out.empty()) return action(out);
    // Render fully before touching the file so a failed run leaves no partial report.
    std::ostringstream buffer;
    const int code = action(buffer);
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw UsageError("cannot open " + cfg.out + " for writing");
    file << buffer.str();
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_usage_kind(e.kind()) ? kUsage : kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace qps::cli
