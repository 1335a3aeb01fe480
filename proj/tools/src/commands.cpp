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

#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qps/channels.hpp"
#include "qps/convolution.hpp"
#include "qps/entropy.hpp"
#include "qps/errors.hpp"
#include "qps/io.hpp"
#include "qps/mean_magic.hpp"
#include "report.hpp"

namespace qps::cli {
namespace {

std::string label_string(const PhasePoint& x) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < x.p.size(); ++k) os << (k ? "," : "") << x.p[k];
  os << ";";
  for (std::size_t k = 0; k < x.q.size(); ++k) os << (k ? "," : "") << x.q[k];
  os << ")";
  return os.str();
}

// A state from --state, or a seeded random state of the configured rank.
DensityOperator load_or_draw(const RunConfig& cfg, const std::string& file) {
  if (!file.empty()) {
    DensityOperator rho = read_state(file);
    check_dimensions(rho.d(), rho.n());
    return rho;
  }
  check_dimensions(cfg.d, cfg.n);
  const int dim = static_cast<int>(std::pow(cfg.d, cfg.n));
  const int rank = cfg.rank == 0 ? dim : cfg.rank;
  if (rank < 1 || rank > dim) throw UsageError("--rank must lie in [1, d^n]");
  return random_state(cfg.n, cfg.d, require_seed(cfg), rank);
}

// The parameters are resolved against the dimension of the loaded state.
std::vector<ParamMatrix> params_for(RunConfig cfg, int d) {
  cfg.d = d;
  return resolve_params(cfg);
}

}  // namespace

int cmd_clt(const RunConfig& cfg, const std::string& state_file, std::ostream& out,
            std::ostream& err) {
  if (cfg.steps < 0) throw UsageError("--N must be nonnegative");
  DensityOperator rho = load_or_draw(cfg, state_file);
  const auto params = params_for(cfg, rho.d());
  const auto alphas = parse_alphas(cfg.alphas);
  if (!is_zero_mean(rho, cfg.tol)) {
    const ZeroMeanShift shift = zero_mean_shift(rho, cfg.tol);
    err << "applied zero-mean shift w" << label_string(shift.label) << "\n";
    rho = shift.shifted;
  }
  const DensityOperator mean = mean_state(rho, cfg.tol).mean;
  const double mg = magic_gap(rho, cfg.tol).gap;
  const double d0 = hs_norm(rho.matrix() - mean.matrix());
  std::vector<std::string> header{"N", "l2_distance", "paper_bound"};
  for (double a : alphas) header.push_back(alpha_label(a));
  CsvWriter csv(out, header);
  double min_slack = kInf;
  const auto chain = iterate(rho, params, cfg.steps);
  for (std::size_t n = 0; n < chain.size(); ++n) {
    const double dist = hs_norm(chain[n].matrix() - mean.matrix());
    const double bound = std::pow(1.0 - mg, static_cast<double>(n)) * d0;
    min_slack = std::min(min_slack, bound + 1e-9 - dist);
    std::vector<double> row{static_cast<double>(n), dist, bound};
    for (double a : alphas) row.push_back(renyi_entropy(chain[n], a, cfg.tol));
    csv.row(row);
  }
  if (min_slack < 0) {
    err << "CLT bound violated, slack " << format_double(min_slack) << "\n";
    return kCheckFailed;
  }
  return kOk;
}

int cmd_channel_clt(const RunConfig& cfg, const std::string& channel_file, std::ostream& out,
                    std::ostream& err) {
  if (cfg.steps < 0) throw UsageError("--N must be nonnegative");
  Channel c = Channel::identity(2, 1);
  if (!channel_file.empty()) {
    c = read_channel(channel_file);
  } else {
    check_dimensions(cfg.d, cfg.n);
    c = random_channel(cfg.d, cfg.n, require_seed(cfg), cfg.rank == 0 ? 2 : cfg.rank);
  }
  check_dimensions(c.d(), 2 * c.n());
  const auto params = params_for(cfg, c.d());
  const ChannelCltReport r = channel_clt(c, params, cfg.steps, cfg.tol);
  if (r.shift) err << "applied zero-mean shift w" << label_string(*r.shift) << "\n";
  CsvWriter csv(out, {"N", "l2_distance", "paper_bound", "diamond_bound"});
  for (std::size_t n = 0; n < r.distance.size(); ++n) {
    csv.row({static_cast<double>(n), r.distance[n], r.bound[n], r.diamond_bound[n]});
  }
  if (!r.ok) {
    err << "channel CLT bound violated, slack " << format_double(r.min_slack) << "\n";
    return kCheckFailed;
  }
  return kOk;
}

int cmd_params(const RunConfig& cfg, std::ostream& out) {
  try {
    PrimeModulus{cfg.d};
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  nlohmann::ordered_json doc;
  doc["d"] = cfg.d;
  for (const auto& [name, family] :
       {std::pair{"circle", ParamFamily::Circle}, std::pair{"hyperbola", ParamFamily::Hyperbola}}) {
    const auto classes = solve_params(cfg.d, family);
    nlohmann::ordered_json block;
    block["count"] = classes.size();
    block["formula"] = std::max(0, expected_class_count(cfg.d, family));
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const ParamClass& c : classes) {
      nlohmann::ordered_json members = nlohmann::ordered_json::array();
      for (const auto& [a, b] : c.members) members.push_back({a, b});
      list.push_back({{"representative", {c.representative.first, c.representative.second}},
                      {"members", members}});
    }
    block["classes"] = list;
    doc[name] = block;
  }
  if (cfg.d == 2) doc["note"] = "no positive G exists for d = 2";
  doc["tolerances"] = tolerances_json(cfg.tol);
  out << dump(doc);
  return kOk;
}

int cmd_gap(const RunConfig& cfg, const std::string& file, std::ostream& out) {
  std::ifstream in(file);
  if (!in) throw UsageError(file + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  const auto probe = nlohmann::json::parse(text.str(), nullptr, false);
  const bool is_channel = probe.is_object() && probe.contains("kind");

  nlohmann::ordered_json doc;
  MagicGapReport r;
  if (is_channel) {
    const Channel c = parse_channel(text.str(), file);
    r = channel_magic_gap(c, cfg.tol);
    doc["kind"] = "channel";
    doc["d"] = c.d();
    doc["n"] = c.n();
    doc["zero_mean"] = is_zero_mean_channel(c, cfg.tol);
  } else {
    const DensityOperator rho = parse_state(text.str(), file);
    r = magic_gap(rho, cfg.tol);
    doc["kind"] = "state";
    doc["d"] = rho.d();
    doc["n"] = rho.n();
    doc["zero_mean"] = is_zero_mean(rho, cfg.tol);
    const auto ub = magic_gap_upper_bound(rho, cfg.tol);
    doc["upper_bound"] = ub ? number_json(*ub) : nlohmann::ordered_json(nullptr);
  }
  doc["gap"] = r.gap;
  doc["log_gap"] = number_json(r.log_gap);
  doc["second_max"] = r.second_max;
  doc["support_size"] = r.support_size;
  doc["unit_count"] = r.unit_count;
  doc["tolerances"] = tolerances_json(cfg.tol);
  out << dump(doc);
  return kOk;
}

int cmd_entropy_sweep(const RunConfig& cfg, const std::string& state_file, std::ostream& out,
                      std::ostream& err) {
  if (cfg.steps < 0) throw UsageError("--N must be nonnegative");
  const DensityOperator rho = load_or_draw(cfg, state_file);
  const auto params = params_for(cfg, rho.d());
  const auto alphas = parse_alphas(cfg.alphas);
  std::vector<std::string> header{"N"};
  for (double a : alphas) header.push_back(alpha_label(a));
  header.push_back("Q");
  CsvWriter csv(out, header);
  const auto chain = iterate(rho, params, cfg.steps);
  std::vector<double> last;
  double min_step = kInf;
  for (std::size_t n = 0; n < chain.size(); ++n) {
    std::vector<double> row{static_cast<double>(n)};
    for (double a : alphas) row.push_back(renyi_entropy(chain[n], a, cfg.tol));
    row.push_back(subentropy(chain[n], cfg.tol).value);
    if (!last.empty()) {
      for (std::size_t k = 1; k < row.size(); ++k) {
        if (std::isinf(row[k]) && row[k] == last[k]) continue;
        min_step = std::min(min_step, row[k] - last[k]);
      }
    }
    csv.row(row);
    last = row;
  }
  // The guarantee holds for positive G only.
  bool all_positive = true;
  for (const ParamMatrix& g : params) all_positive = all_positive && g.positive;
  if (all_positive && min_step < -1e-8) {
    err << "entropy decreased along the trajectory, slack " << format_double(min_step) << "\n";
    return kCheckFailed;
  }
  return kOk;
}

int cmd_conv(const RunConfig& cfg, const std::string& rho_file, const std::string& sigma_file,
             const std::string& form, std::ostream& out) {
  const DensityOperator rho = read_state(rho_file);
  const DensityOperator sigma = read_state(sigma_file);
  if (rho.d() != sigma.d() || rho.n() != sigma.n()) {
    throw UsageError("the two states disagree on (d, n)");
  }
  check_dimensions(rho.d(), rho.n());
  const auto params = params_for(cfg, rho.d());
  if (params.size() != 1) throw UsageError("conv takes a single parameter matrix");
  StateForm f = StateForm::Dense;
  if (form == "char") {
    f = StateForm::Char;
  } else if (form != "dense") {
    throw UsageError("--form must be dense or char");
  }
  out << write_state(convolve(rho, sigma, params.front()), f);
  return kOk;
}

}  // namespace qps::cli
