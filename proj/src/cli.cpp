// Copyright 2026 The infocost Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "infocost/approx.hpp"
#include "infocost/axioms.hpp"
#include "infocost/blackwell.hpp"
#include "infocost/cost.hpp"
#include "infocost/divergence.hpp"
#include "infocost/json_io.hpp"
#include "infocost/ri_solver.hpp"

namespace infocost::cli {
namespace {

using json_io::InputError;
using json_io::Json;
using json_io::Number;

struct Options {
  std::string experiment;
  std::string experiment2;
  std::string cost;
  std::string param;
  std::string problem;
  std::string out;
  std::optional<std::uint64_t> seed;
  int samples = 200;
  std::optional<double> tol;
  int grid = 0;
  int threads = 1;
  bool pairwise = false;
  std::vector<std::string> axioms;
  int starts = 16;
  int max_iter = 5000;
  double sigma = 2.0;
  double t = 0.5;
  double lambda = 1.0;
  std::vector<double> v_grid{6.0, 8.0, 10.0};
  int w_steps = 25;
  double support_eps = 0.01;
  bool compare = false;
  bool intervals = false;
  std::vector<int> k_list{4, 16, 64};
  std::vector<double> prior;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json ReadJson(const std::string& path) { return json_io::Parse(ReadFile(path)); }

// --param takes inline JSON or @FILE.
Json ParamJson(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return ReadJson(arg.substr(1));
  return json_io::Parse(arg);
}

std::uint64_t RequireSeed(const Options& o) {
  if (!o.seed) throw InputError("--seed is required for this command");
  return *o.seed;
}

std::string CsvNumber(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return Json(x).dump();
}

std::string JoinWeights(const std::vector<double>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ';';
    s += CsvNumber(w[i]);
  }
  return s;
}

std::string JsonPayload(const Json& j) { return j.dump() + "\n"; }

std::string CmdDivergence(const Options& o) {
  const auto mu = json_io::ExperimentFromJson(ReadJson(o.experiment));
  const auto param = json_io::ParamFromJson(ParamJson(o.param), mu.num_states());
  return JsonPayload({{"value", Number(UnifiedDivergence(param, mu))}});
}

std::string CmdCost(const Options& o) {
  const auto mu = json_io::ExperimentFromJson(ReadJson(o.experiment));
  const auto spec = json_io::CostFromJson(ReadJson(o.cost));
  return JsonPayload({{"kind", CostKindName(spec)}, {"value", Number(EvalCost(spec, mu))}});
}

std::string CmdDominate(const Options& o) {
  const auto mu = json_io::ExperimentFromJson(ReadJson(o.experiment));
  const auto nu = json_io::ExperimentFromJson(ReadJson(o.experiment2));
  const double tol = o.tol.value_or(kDominanceTolerance);
  if (o.pairwise) {
    const auto r = PairwiseDominates(mu, nu, tol);
    Json pair = nullptr;
    if (r.failing_pair) pair = {r.failing_pair->first, r.failing_pair->second};
    return JsonPayload({{"dominates", r.dominates}, {"marginal", r.marginal}, {"failing_pair", pair}});
  }
  const auto r = Dominates(mu, nu, tol);
  Json cert = nullptr;
  if (r.certificate) cert = json_io::ToJson(r.certificate->psi());
  return JsonPayload({{"dominates", r.dominates},
                      {"marginal", r.marginal},
                      {"residual", Number(r.residual)},
                      {"certificate", cert}});
}

std::string CmdAxioms(const Options& o) {
  const auto spec = json_io::CostFromJson(ReadJson(o.cost));
  SuiteProfile profile;
  profile.seed = RequireSeed(o);
  profile.n_samples = o.samples;
  profile.tol = o.tol.value_or(kAxiomTolerance);
  profile.threads = o.threads;
  for (const auto& name : o.axioms) {
    profile.axioms.push_back(json_io::Build([&] { return ParseAxiom(name); }));
  }
  Json reports = Json::array();
  for (const auto& r : RunSuite(spec, profile)) {
    Json witness = nullptr;
    if (r.witness) {
      Json exps = Json::array();
      for (const auto& e : r.witness->experiments) exps.push_back(json_io::ToJson(e));
      witness = {{"experiments", exps}, {"weights", json_io::Numbers(r.witness->weights)}};
    }
    reports.push_back({{"axiom", std::string(AxiomName(r.axiom))},
                       {"passed", r.passed},
                       {"samples", r.samples},
                       {"skipped", r.skipped},
                       {"worst_violation", Number(r.worst_violation)},
                       {"worst_residual", Number(r.worst_residual)},
                       {"witness", witness}});
  }
  return JsonPayload({{"cost", CostKindName(spec)}, {"reports", reports}});
}

std::string CmdSolve(const Options& o) {
  const auto problem = json_io::ProblemFromJson(ReadJson(o.problem));
  const auto spec = json_io::CostFromJson(ReadJson(o.cost));
  SolveOptions so;
  so.seed = RequireSeed(o);
  so.starts = o.starts;
  so.max_iter = o.max_iter;
  so.threads = o.threads;
  so.support_eps = o.support_eps;
  const auto policy = Solve(problem, spec, so);
  return JsonPayload({{"value", Number(policy.value)},
                      {"choice", json_io::ToJson(policy.choice)},
                      {"marginals", json_io::Numbers(policy.marginals)},
                      {"support", policy.support},
                      {"converged", policy.converged},
                      {"iterations", policy.iterations},
                      {"start", policy.start}});
}

std::string CmdClaim1(const Options& o) {
  const auto table = Claim1Region(o.lambda, o.t, o.v_grid, o.w_steps, o.support_eps);
  if (o.intervals) {
    Json rows = Json::array();
    for (const auto& iv : table.intervals) {
      rows.push_back({{"v", iv.v},
                      {"pi_v", iv.pi_v},
                      {"w_lo", iv.w_lo},
                      {"w_hi", iv.w_hi},
                      {"nonempty", iv.w_lo < iv.w_hi},
                      {"k_lo", iv.k_lo},
                      {"k_hi", iv.k_hi},
                      {"k_interval_valid", iv.k_interval_valid}});
    }
    return JsonPayload({{"lambda", o.lambda}, {"t", o.t}, {"intervals", rows}});
  }
  std::ostringstream csv;
  csv << "v,w,spec,support_size,value,alpha,pi\r\n";
  std::vector<std::pair<double, double>> cells;
  for (const auto& r : table.rows) {
    csv << CsvNumber(r.v) << ',' << CsvNumber(r.w) << ",closed_form," << r.support_size << ','
        << CsvNumber(r.value) << ',' << CsvNumber(r.alpha) << ',' << CsvNumber(r.pi) << "\r\n";
    cells.emplace_back(r.v, r.w);
  }
  if (o.compare) {
    SolveOptions so;
    so.seed = RequireSeed(o);
    so.starts = o.starts;
    so.max_iter = o.max_iter;
    so.threads = o.threads;
    so.support_eps = o.support_eps;
    const std::vector<NamedCost> specs{
        {"renyi", SymmetricRenyiCost(o.lambda, o.t)},
        {"shannon", PosteriorSeparableCost{{0.5, 0.5}, ShannonPotential{}}},
        {"max_kl", SymmetricMaxKlCost(o.lambda)}};
    for (const auto& r : SupportComparison(cells, specs, so)) {
      csv << CsvNumber(r.v) << ',' << CsvNumber(r.w) << ',' << r.spec << ',' << r.support_size
          << ',' << CsvNumber(r.value) << ',' << CsvNumber(r.alpha) << ',' << CsvNumber(r.pi)
          << "\r\n";
    }
  }
  return csv.str();
}

std::string CmdTsallis(const Options& o) {
  const int grid = o.grid > 0 ? o.grid : 99;
  const auto r = UpsSubadditivityCheck(TsallisPotential{o.sigma}, grid);
  auto opt = [](const std::optional<double>& x) -> Json {
    return x ? Number(*x) : Json(nullptr);
  };
  return JsonPayload({{"sigma", o.sigma},
                      {"subadditive", r.subadditive},
                      {"worst_violation", Number(r.worst_violation)},
                      {"witness_p", opt(r.witness_p)},
                      {"witness_x", opt(r.witness_x)},
                      {"x_form_lhs", opt(r.x_form_lhs)},
                      {"grid_size", r.grid_size}});
}

std::string CmdApprox(const Options& o) {
  const auto mu = json_io::ExperimentFromJson(ReadJson(o.experiment));
  std::vector<double> q = o.prior;
  if (q.empty()) q.assign(mu.num_states(), 1.0 / static_cast<double>(mu.num_states()));
  json_io::Build([&] {
    ValidatePrior(q, mu.num_states());
    return 0;
  });
  const auto params = ParameterGrid(mu.num_states(), o.grid > 0 ? o.grid : 50);
  const auto report = Sandwich(mu, q, o.k_list, params, o.threads);
  std::ostringstream csv;
  csv << "k,param_kind,param_value,d_under,d_mu,d_over,gap\r\n";
  for (const auto& r : report.rows) {
    const auto& p = report.params[r.param];
    csv << r.k << ',' << json_io::ParamKindName(p) << ',' << JoinWeights(p.weights()) << ','
        << CsvNumber(r.d_under) << ',' << CsvNumber(r.d_mu) << ',' << CsvNumber(r.d_over) << ','
        << CsvNumber(r.gap) << "\r\n";
  }
  return csv.str();
}

void AddCommon(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out, "Write the payload to FILE");
  sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Information cost toolkit", "infocost"};
  app.require_subcommand(1);
  std::function<std::string(const Options&)> handler;
  auto add = [&](const char* name, const char* about,
                 std::string (*fn)(const Options&)) -> CLI::App* {
    auto* sub = app.add_subcommand(name, about);
    sub->callback([&handler, fn] { handler = fn; });
    AddCommon(sub, o);
    return sub;
  };

  auto* div = add("divergence", "Unified divergence of an experiment", CmdDivergence);
  div->add_option("--experiment", o.experiment, "Experiment JSON file")->required();
  div->add_option("--param", o.param, "Parameter JSON or @FILE")->required();

  auto* cost = add("cost", "Evaluate a cost on an experiment", CmdCost);
  cost->add_option("--experiment", o.experiment, "Experiment JSON file")->required();
  cost->add_option("--cost", o.cost, "Cost JSON file")->required();

  auto* dom = add("dominate", "Blackwell dominance of --experiment over --experiment2",
                  CmdDominate);
  dom->add_option("--experiment", o.experiment, "Dominating candidate")->required();
  dom->add_option("--experiment2", o.experiment2, "Dominated candidate")->required();
  dom->add_option("--tol", o.tol, "Residual tolerance");
  dom->add_flag("--pairwise", o.pairwise, "Check every two-state restriction");

  auto* ax = add("axioms", "Randomized axiom suite for a cost", CmdAxioms);
  ax->add_option("--cost", o.cost, "Cost JSON file")->required();
  ax->add_option("--seed", o.seed, "Random seed (required)");
  ax->add_option("--samples", o.samples, "Samples per axiom")->check(CLI::PositiveNumber);
  ax->add_option("--tol", o.tol, "Relative tolerance");
  ax->add_option("--axioms", o.axioms, "Comma-separated axiom names")->delimiter(',');

  auto* solve = add("solve", "Rational-inattention choice problem", CmdSolve);
  solve->add_option("--problem", o.problem, "Problem JSON file")->required();
  solve->add_option("--cost", o.cost, "Cost JSON file")->required();
  solve->add_option("--seed", o.seed, "Random seed (required)");
  solve->add_option("--starts", o.starts, "Number of starts")->check(CLI::PositiveNumber);
  solve->add_option("--max-iter", o.max_iter, "Iterations per start")->check(CLI::PositiveNumber);
  solve->add_option("--support-eps", o.support_eps, "Support threshold on action marginals");

  auto* claim1 = add("claim1", "Symmetric matching sweep (CSV)", CmdClaim1);
  claim1->add_option("--t", o.t, "Renyi order t in (0, 1)");
  claim1->add_option("--lambda", o.lambda, "Cost scale");
  claim1->add_option("--v-grid", o.v_grid, "Comma-separated v values")->delimiter(',');
  claim1->add_option("--w-steps", o.w_steps, "w samples per v")->check(CLI::PositiveNumber);
  claim1->add_option("--support-eps", o.support_eps, "Support threshold on action marginals");
  claim1->add_flag("--compare", o.compare, "Also solve under Renyi, Shannon and Max-KL");
  claim1->add_flag("--intervals", o.intervals, "Print the w intervals as JSON");
  claim1->add_option("--seed", o.seed, "Random seed (required with --compare)");
  claim1->add_option("--starts", o.starts, "Starts per solve")->check(CLI::PositiveNumber);
  claim1->add_option("--max-iter", o.max_iter, "Iterations per start")->check(CLI::PositiveNumber);

  auto* ts = add("tsallis", "Uniform sub-additivity scan of a Tsallis potential", CmdTsallis);
  ts->add_option("--sigma", o.sigma, "Tsallis order");
  ts->add_option("--grid", o.grid, "Number of interior grid points");

  auto* ap = add("approx", "Finite sandwich of a binary experiment (CSV)", CmdApprox);
  ap->add_option("--experiment", o.experiment, "Binary experiment JSON file")->required();
  ap->add_option("--prior", o.prior, "Comma-separated prior")->delimiter(',');
  ap->add_option("--k-list", o.k_list, "Comma-separated grid resolutions")->delimiter(',');
  ap->add_option("--grid", o.grid, "Number of divergence parameters");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  std::string payload;
  try {
    payload = handler(o);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  if (o.out.empty()) {
    out << payload;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err << "input error: cannot write " << o.out << "\n";
      return kExitInput;
    }
    file << payload;
  }
  return kExitOk;
}

}  // namespace infocost::cli
