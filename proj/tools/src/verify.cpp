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

#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "json.hpp"
#include "qps/channels.hpp"
#include "qps/convolution.hpp"
#include "qps/entropy.hpp"
#include "qps/errors.hpp"
#include "qps/fisher.hpp"
#include "qps/mean_magic.hpp"
#include "qps/states.hpp"
#include "report.hpp"

namespace qps::cli {
namespace {

enum class Parity { Positive, OddOnly, EvenOnly, Trivial };

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::Positive: return "positive";
    case Parity::OddOnly: return "odd-only";
    case Parity::EvenOnly: return "even-only";
    case Parity::Trivial: return "trivial";
  }
  return "";
}

Parity parity_of(const ParamMatrix& g) {
  if (g.positive) return Parity::Positive;
  if (g.odd_parity_positive) return Parity::OddOnly;
  if (g.even_parity_positive) return Parity::EvenOnly;
  return Parity::Trivial;
}

constexpr Parity kParities[] = {Parity::Positive, Parity::OddOnly, Parity::EvenOnly,
                                Parity::Trivial};

std::vector<ParamMatrix> invertible_params(int d) {
  std::vector<ParamMatrix> out;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e)
          if ((a * e - b * c) % d != 0) out.push_back(classify(a, b, c, e, d));
  return out;
}

std::vector<ParamMatrix> in_class(int d, Parity p) {
  std::vector<ParamMatrix> out;
  for (const ParamMatrix& g : invertible_params(d))
    if (parity_of(g) == p) out.push_back(g);
  return out;
}

// A positive G for odd d (the beam splitter when one exists), else CNOT_{2->1}.
ParamMatrix preferred_params(int d) {
  if (d == 2) return cnot_family(1).g;
  const auto classes = solve_params(d, ParamFamily::Circle);
  if (!classes.empty()) {
    return beam_splitter(classes.front().representative.first, classes.front().representative.second,
                         d)
        .g;
  }
  return in_class(d, Parity::Positive).front();
}

int dim_of(int d, int n) { return static_cast<int>(std::pow(d, n)); }

// value must stay at or below threshold
CheckResult at_most(double value, double threshold, int runs) {
  CheckResult r;
  r.value = value;
  r.threshold = threshold;
  r.slack = threshold - value;
  r.pass = r.slack >= 0;
  r.runs = runs;
  return r;
}

// value must stay at or above threshold
CheckResult at_least(double value, double threshold, int runs) {
  CheckResult r = at_most(-value, -threshold, runs);
  r.value = value;
  r.threshold = threshold;
  return r;
}

double max_abs(const Operator& a) { return a.cwiseAbs().maxCoeff(); }

void add_check(std::vector<Check>& checks, const std::string& suite, const std::string& name,
         std::function<CheckResult()> fn) {
  checks.push_back({suite, name, std::move(fn)});
}

void weyl_checks(std::vector<Check>& out, int d, int n, int seeds, std::uint64_t seed) {
  auto pair_error = [d](const PhasePoint& x, const PhasePoint& y) {
    const PrimeModulus mod(d);
    cd phase;
    if (d == 2) {
      phase = weyl_product_phase(x, y, mod);
    } else {
      phase = chi(static_cast<long long>(mod.half()) * symplectic_inner(x, y, mod), mod);
    }
    const Operator lhs = weyl_operator(x, mod) * weyl_operator(y, mod);
    const Operator comm = weyl_operator(y, mod) * weyl_operator(x, mod);
    // Product phase and the commutation phase chi(<x,y>_s).
    return std::max(max_abs(lhs - phase * weyl_operator(add(x, y, mod), mod)),
                    max_abs(lhs - chi(symplectic_inner(x, y, mod), mod) * comm));
  };
  add_check(out, "weyl", "commutation-single-site", [=] {
    const PhaseSpace space(d, 1);
    double worst = 0.0;
    int runs = 0;
    for (std::size_t i = 0; i < space.size(); ++i)
      for (std::size_t j = 0; j < space.size(); ++j, ++runs)
        worst = std::max(worst, pair_error(space.point(i), space.point(j)));
    return at_most(worst, 1e-12, runs);
  });
  add_check(out, "weyl", "commutation-sampled", [=] {
    const PhaseSpace space(d, n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, space.size() - 1);
    double worst = 0.0;
    const int runs = 20 * seeds;
    for (int k = 0; k < runs; ++k) worst = std::max(worst, pair_error(space.point(pick(rng)), space.point(pick(rng))));
    return at_most(worst, 1e-12, runs);
  });
  add_check(out, "weyl", "orthonormality", [=] {
    const PhaseSpace space(d, n);
    std::mt19937_64 rng(seed + 1);
    std::uniform_int_distribution<std::size_t> pick(0, space.size() - 1);
    std::vector<Monomial> cache;
    double worst = 0.0;
    const int runs = 20 * seeds;
    for (int k = 0; k < runs; ++k) {
      const std::size_t i = pick(rng), j = k % 4 == 0 ? i : pick(rng);
      const Monomial m = weyl_monomial(space, space.point(i)).adjoint().compose(weyl_monomial(space, space.point(j)));
      cd tr = 0.0;
      for (std::size_t s = 0; s < m.dim(); ++s)
        if (m.perm[s] == s) tr += m.phase[s];
      worst = std::max(worst, std::abs(tr / static_cast<double>(space.dim()) - (i == j ? 1.0 : 0.0)));
    }
    return at_most(worst, 1e-12, runs);
  });
}

void duality_checks(std::vector<Check>& out, int d, int n, int seeds, std::uint64_t seed) {
  for (Parity p : kParities) {
    if (in_class(d, p).empty()) continue;  // no positive G at d = 2
    add_check(out, "duality", parity_name(p), [=] {
      const auto gs = in_class(d, p);
      double worst = 0.0;
      const int dim = dim_of(d, n);
      for (int k = 0; k < seeds; ++k) {
        const ParamMatrix& g = gs[static_cast<std::size_t>(k) * 7919 % gs.size()];
        const DensityOperator rho = random_state(n, d, seed + 2 * k, 1 + k % dim);
        const DensityOperator sigma = random_state(n, d, seed + 2 * k + 1, dim);
        const CharTable a = char_function(convolve(rho, sigma, g));
        const CharTable b = convolve_char(char_function(rho), char_function(sigma), g);
        for (std::size_t i = 0; i < a.values.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
      }
      return at_most(worst, 1e-10, seeds);
    });
  }
}

void majorization_checks(std::vector<Check>& out, int d, int n, int seeds, std::uint64_t seed) {
  for (Parity p : kParities) {
    if (in_class(d, p).empty()) continue;  // no positive G at d = 2
    add_check(out, "majorization", parity_name(p), [=] {
      const auto gs = in_class(d, p);
      double worst = kInf;
      const int dim = dim_of(d, n);
      for (int k = 0; k < seeds; ++k) {
        const ParamMatrix& g = gs[static_cast<std::size_t>(k) * 104729 % gs.size()];
        const DensityOperator rho = random_state(n, d, seed + 2 * k, 1 + k % dim);
        const DensityOperator sigma = random_state(n, d, seed + 2 * k + 1, 1 + (k / 3) % dim);
        const auto spec = spectrum(convolve(rho, sigma, g));
        std::vector<const DensityOperator*> targets;
        switch (p) {
          case Parity::Positive: targets = {&rho, &sigma}; break;
          case Parity::OddOnly: targets = {&sigma}; break;
          case Parity::EvenOnly: targets = {&rho}; break;
          case Parity::Trivial: targets = {g.g01 == 0 ? &rho : &sigma}; break;
        }
        for (const DensityOperator* t : targets) worst = std::min(worst, majorization_slack(spec, spectrum(*t)));
      }
      return at_least(worst, -1e-9, seeds);
    });
  }
}

void entropy_checks(std::vector<Check>& out, int d, int n, int seeds, std::uint64_t seed) {
  if (d > 2) {
    add_check(out, "entropy", "second-law", [=] {
      const std::vector<ParamMatrix> ps{preferred_params(d)};
      double worst = kInf;
      const int dim = dim_of(d, n);
      for (int k = 0; k < seeds; ++k) {
        const SecondLawReport r = check_second_law(random_state(n, d, seed + k, 1 + k % dim), ps, 15,
                                                   {0.5, 1.0, 2.0, kInf});
        worst = std::min(worst, r.min_slack);
      }
      return at_least(worst, -1e-8, seeds);
    });
  }
  add_check(out, "entropy", "parity-monotonicity", [=] {
    const auto gs = invertible_params(d);
    double worst = kInf;
    const int dim = dim_of(d, n);
    for (int k = 0; k < seeds; ++k) {
      const ParamMatrix& g = gs[static_cast<std::size_t>(k) * 7919 % gs.size()];
      const DensityOperator rho = random_state(n, d, seed + 2 * k, dim);
      const DensityOperator sigma = random_state(n, d, seed + 2 * k + 1, dim);
      const DensityOperator o = convolve(rho, sigma, g);
      for (double a : {-2.0, 0.5, 1.0, 2.0, kInf}) {
        const double h = renyi_entropy(o, a);
        if (g.odd_parity_positive) worst = std::min(worst, h - renyi_entropy(sigma, a));
        if (g.even_parity_positive) worst = std::min(worst, h - renyi_entropy(rho, a));
      }
    }
    return at_least(worst, -1e-8, seeds);
  });
  add_check(out, "entropy", "additivity", [=] {
    double worst = 0.0;
    for (int k = 0; k < seeds; ++k) {
      const DensityOperator a = random_state(n, d, seed + 2 * k, 1 + k % dim_of(d, n));
      const DensityOperator b = random_state(1, d, seed + 2 * k + 1, d);
      for (double alpha : {0.5, 1.0, 2.0, kInf})
        worst = std::max(worst, std::abs(renyi_entropy(tensor(a, b), alpha) - renyi_entropy(a, alpha) -
                                         renyi_entropy(b, alpha)));
    }
    return at_most(worst, 1e-9, seeds);
  });
}

void fisher_checks(std::vector<Check>& out, int d, int n, int seeds, std::uint64_t seed) {
  add_check(out, "fisher", "fisher-convolution", [=] {
    const ParamMatrix g = preferred_params(d);
    double worst = kInf;
    const int dim = dim_of(d, n);
    for (int k = 0; k < seeds; ++k) {
      const DensityOperator rho = smooth(random_state(n, d, seed + 2 * k, 1 + k % dim), 1e-3);
      const DensityOperator sigma = smooth(random_state(n, d, seed + 2 * k + 1, 1 + (k / 2) % dim), 1e-3);
      worst = std::min(worst, check_fisher_convolution(rho, sigma, g).slack);
    }
    return at_least(worst, -1e-7, seeds);
  });
  add_check(out, "fisher", "two-paths", [=] {
    double worst = 0.0;
    for (int k = 0; k < seeds; ++k) {
      const FisherPaths p = fisher_paths(smooth(random_state(n, d, seed + k, 1 + k % 2), 0.05));
      worst = std::max(worst, std::abs(p.commutator - p.dephasing) / std::max(1.0, p.commutator));
    }
    return at_most(worst, 1e-8, seeds);
  });
  add_check(out, "fisher", "de-bruijn", [=] {
    double worst = 0.0;
    for (int k = 0; k < seeds; ++k) {
      // The central difference has O(h^2) error scaled by the inverse smallest
      // eigenvalue, so inputs are kept away from the boundary of state space.
      const DensityOperator rho = smooth(random_state(n, d, seed + k, dim_of(d, n)), 0.05);
      const DeBruijn r = de_bruijn_check(rho, 1e-4);
      worst = std::max(worst, std::abs(r.lhs - r.rhs));
    }
    return at_most(worst, 1e-4, seeds);
  });
}

void hudson_checks(std::vector<Check>& out, int d, int seeds, std::uint64_t seed) {
  add_check(out, "hudson", "stabilizer-nonnegative", [=] {
    double worst = kInf;
    int runs = 0;
    for (const DensityOperator& s : enumerate_msps(1, d)) {
      if (std::abs(s.purity() - 1.0) > 1e-9) continue;
      worst = std::min(worst, wigner(s).min());
      ++runs;
    }
    return at_least(worst, -1e-12, runs);
  });
  add_check(out, "hudson", "random-pure-negative", [=] {
    int negative = 0;
    for (int k = 0; k < seeds; ++k) negative += wigner(random_pure(1, d, seed + k)).min() < -1e-12;
    return at_least(static_cast<double>(negative) / seeds, 0.95, seeds);
  });
}

void channel_checks(std::vector<Check>& out, int d, int n, int seeds, std::uint64_t seed) {
  auto nontrivial = [d] {
    std::vector<ParamMatrix> gs;
    for (const ParamMatrix& g : invertible_params(d))
      if (g.nontrivial) gs.push_back(g);
    return gs;
  };
  add_check(out, "channels", "exact-formula", [=] {
    const auto gs = nontrivial();
    double worst = 0.0;
    for (int k = 0; k < seeds; ++k) {
      const Channel a = random_channel(d, n, seed + 2 * k, 1 + k % 3);
      const Channel b = random_channel(d, n, seed + 2 * k + 1, 1 + (k / 2) % 3);
      const ParamMatrix& g = gs[static_cast<std::size_t>(k) % gs.size()];
      worst = std::max(worst, max_abs(convolve_channels(a, b, g).choi().matrix() -
                                      convolve_channels_exact(a, b, g)));
    }
    return at_most(worst, 1e-9, seeds);
  });
  add_check(out, "channels", "choi-marginal", [=] {
    const auto gs = nontrivial();
    double worst = 0.0;
    for (int k = 0; k < seeds; ++k) {
      const Channel a = random_channel(d, n, seed + 3 * k, 2);
      const Channel b = random_channel(d, n, seed + 3 * k + 1, 1);
      const Channel c = convolve_channels(a, b, gs[static_cast<std::size_t>(k) % gs.size()]);
      const auto dim = static_cast<std::size_t>(c.choi().dim());
      const Operator marginal = partial_trace_second(c.choi().matrix(), dim, dim);
      worst = std::max(worst, max_abs(marginal - Operator::Identity(dim, dim) / static_cast<double>(dim)));
    }
    return at_most(worst, 1e-9, seeds);
  });
  add_check(out, "channels", "depolarizing-absorption", [=] {
    std::vector<ParamMatrix> odd;
    for (const ParamMatrix& g : invertible_params(d))
      if (g.odd_parity_positive) odd.push_back(g);
    const Channel r = Channel::depolarizing(d, n);
    double worst = 0.0;
    for (int k = 0; k < seeds; ++k) {
      const Channel a = random_channel(d, n, seed + 5 * k, 1 + k % 3);
      const ParamMatrix& g = odd[static_cast<std::size_t>(k) % odd.size()];
      worst = std::max(worst, max_abs(convolve_channels(a, r, g).choi().matrix() - r.choi().matrix()));
    }
    return at_most(worst, 1e-10, seeds);
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"weyl",  "duality",  "majorization", "entropy",
                                              "fisher", "hudson", "channels",     "all"};
  return names;
}

std::vector<Check> build_checks(const std::string& suite, int d, int n, int seeds,
                                std::uint64_t seed) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw UsageError("unknown suite \"" + suite + "\"");
  }
  if (seeds < 1) throw UsageError("--seeds must be positive");
  const bool all = suite == "all";
  std::vector<Check> checks;
  if (all || suite == "weyl") weyl_checks(checks, d, n, seeds, seed);
  if (all || suite == "duality") duality_checks(checks, d, n, seeds, seed);
  if (all || suite == "majorization") majorization_checks(checks, d, n, seeds, seed);
  if (all || suite == "entropy") entropy_checks(checks, d, n, seeds, seed);
  if (all || suite == "fisher") fisher_checks(checks, d, n, seeds, seed);
  if (suite == "hudson" && (d == 2 || n != 1)) {
    throw UsageError("the hudson suite needs odd d and n = 1");
  }
  if ((all && d > 2 && n == 1) || suite == "hudson") hudson_checks(checks, d, seeds, seed);
  if (all || suite == "channels") {
    check_dimensions(d, 2 * n);
    channel_checks(checks, d, n, seeds, seed);
  }
  return checks;
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks, int jobs) {
  std::vector<CheckResult> results(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      CheckResult r;
      try {
        r = checks[i].run();
      } catch (const std::exception&) {
        r.pass = false;
        r.value = std::nan("");
        r.slack = -kInf;
      }
      r.suite = checks[i].suite;
      r.name = checks[i].name;
      results[i] = r;
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(checks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return results;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, std::ostream& out) {
  check_dimensions(cfg.d, cfg.n);
  if (cfg.jobs < 1) throw UsageError("--jobs must be positive");
  const std::uint64_t seed = require_seed(cfg);
  const auto results = run_checks(build_checks(suite, cfg.d, cfg.n, cfg.seeds, seed), cfg.jobs);
  return write_verify_report(cfg, suite, seed, results, out);
}

int write_verify_report(const RunConfig& cfg, const std::string& suite, std::uint64_t seed,
                        const std::vector<CheckResult>& results, std::ostream& out) {
  bool pass = true;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const CheckResult& r : results) {
    pass = pass && r.pass;
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["value"] = number_json(r.value);
    j["threshold"] = number_json(r.threshold);
    j["slack"] = number_json(r.slack);
    j["runs"] = r.runs;
    list.push_back(j);
  }
  nlohmann::ordered_json doc;
  doc["suite"] = suite;
  doc["config"] = {{"d", cfg.d}, {"n", cfg.n}, {"seeds", cfg.seeds}, {"seed", seed}};
  doc["tolerances"] = tolerances_json(cfg.tol);
  doc["checks"] = list;
  doc["pass"] = pass;
  out << dump(doc);
  return pass ? kOk : kCheckFailed;
}

}  // namespace qps::cli
