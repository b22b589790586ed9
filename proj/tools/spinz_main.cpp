// Command-line front end: partition, dual, symcheck, codeinfo, tdinfo.
//
// Exit codes: 0 success, 1 internal invariant breach (a symmetry or duality
// check that must hold failed), 2 user/parse error, 3 engine infeasibility.

#include <algorithm>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinz/engines.hpp"
#include "spinz/io.hpp"
#include "spinz/planar.hpp"
#include "spinz/transforms.hpp"

namespace {

using namespace spinz;
using nlohmann::json;

constexpr double kSymTolerance = 1e-9;
constexpr double kDualTolerance = 1e-9;

struct JobSpec {
  std::string graph_path;
  std::string model_path;
  std::string method = "auto";
  double beta = 0.0;        // 0: use the model file's beta
  std::string beta_range;   // "start:stop:steps"
  std::string format = "json";
  std::uint64_t seed = 1;
  std::uint64_t mem_budget = std::uint64_t{1} << 28;
  std::string out_prefix = "dual";
  bool verify = false;
  int count = 50;
  bool corrupt = false;
  std::string strategy = "min_fill";
  int modulus = 0;
};

Method parse_method(const std::string& m) {
  if (m == "auto") return Method::Auto;
  if (m == "brute") return Method::Brute;
  if (m == "overlap") return Method::Overlap;
  if (m == "contract") return Method::Contract;
  if (m == "closed") return Method::Closed;
  throw ParseError("unknown method '" + m + "'");
}

DecompositionStrategy parse_strategy(const std::string& s) {
  if (s == "min_fill") return DecompositionStrategy::MinFill;
  if (s == "min_degree") return DecompositionStrategy::MinDegree;
  if (s == "exact_small") return DecompositionStrategy::ExactSmall;
  throw ParseError("unknown strategy '" + s + "'");
}

std::vector<double> beta_list(const JobSpec& spec, double fallback) {
  if (!spec.beta_range.empty()) {
    double start = 0, stop = 0;
    int steps = 0;
    if (std::sscanf(spec.beta_range.c_str(), "%lf:%lf:%d", &start, &stop, &steps) != 3)
      throw ParseError("--beta-range must be start:stop:steps");
    if (!(start > 0.0) || !(stop >= start) || steps < 1)
      throw ParseError("--beta-range needs 0 < start <= stop and steps >= 1");
    std::vector<double> betas(steps);
    for (int i = 0; i < steps; ++i)
      betas[i] = steps == 1 ? start : start + i * (stop - start) / (steps - 1);
    return betas;
  }
  if (spec.beta != 0.0) {
    if (!(spec.beta > 0.0)) throw ParseError("beta must be positive");
    return {spec.beta};
  }
  return {fallback};
}

struct LoadedInstance {
  OrientedGraph graph;
  ModelFile model;
};

LoadedInstance load_instance(const JobSpec& spec, bool need_model = true) {
  OrientedGraph g = graph_from_json(read_text_file(spec.graph_path));
  ModelFile m;
  if (need_model || !spec.model_path.empty()) {
    if (spec.model_path.empty()) throw ParseError("--model is required");
    m = model_from_json(read_text_file(spec.model_path));
    const int rows = m.energies ? static_cast<int>(m.energies->rows())
                                : static_cast<int>(m.weights->rows());
    if (rows != g.edge_count())
      throw ParseError("model rows do not match the graph's edge count");
  }
  return {std::move(g), std::move(m)};
}

WeightTable weights_at(const ModelFile& m, double beta) {
  if (m.weights) return {m.modulus, *m.weights};
  return boltzmann_weights({m.modulus, beta, *m.energies});
}

void print_reports(const JobSpec& spec, const std::vector<std::pair<double, EvalReport>>& rows) {
  if (spec.format == "csv") {
    std::cout << report_csv_header() << "\n";
    for (const auto& [beta, rep] : rows) std::cout << report_csv_row(rep, beta) << "\n";
    return;
  }
  if (rows.size() == 1) {
    std::cout << report_to_json(rows[0].second, rows[0].first) << "\n";
    return;
  }
  std::cout << "[";
  for (size_t i = 0; i < rows.size(); ++i)
    std::cout << (i ? "," : "") << report_to_json(rows[i].second, rows[i].first);
  std::cout << "]\n";
}

int cmd_partition(const JobSpec& spec) {
  const auto [g, model] = load_instance(spec);
  const Method method = parse_method(spec.method);
  EngineOptions opts;
  opts.table_entry_budget = spec.mem_budget;

  std::vector<std::pair<double, EvalReport>> rows;
  if (model.weights) {
    if (!spec.beta_range.empty())
      throw ParseError("beta sweeps need an energy model, not a weight table");
    const double beta = spec.beta != 0.0 ? spec.beta : model.beta;
    rows.emplace_back(beta, partition(g, WeightTable{model.modulus, *model.weights}, method, opts));
  } else {
    const std::vector<double> betas = beta_list(spec, model.beta);
    std::vector<std::future<EvalReport>> futs;
    futs.reserve(betas.size());
    for (double b : betas)
      futs.push_back(std::async(betas.size() > 1 ? std::launch::async : std::launch::deferred,
                                [&, b] {
                                  return partition(
                                      g, InteractionTable{model.modulus, b, *model.energies},
                                      method, opts);
                                }));
    for (size_t i = 0; i < betas.size(); ++i) rows.emplace_back(betas[i], futs[i].get());
  }
  print_reports(spec, rows);
  return 0;
}

int cmd_dual(const JobSpec& spec) {
  const auto [g, model] = load_instance(spec);
  if (!spec.beta_range.empty()) throw ParseError("dual takes a single beta, not a sweep");
  const double beta = spec.beta != 0.0 ? spec.beta : model.beta;
  const WeightTable w = weights_at(model, beta);

  const DualModel dm = dual_model(g, w);
  const std::string graph_file = spec.out_prefix + ".graph.json";
  const std::string model_file = spec.out_prefix + ".model.json";
  const std::string cert_file = spec.out_prefix + ".cert.json";
  write_text_file(graph_file, graph_to_json(dm.graph));
  write_text_file(model_file, weights_to_json(dm.weights, beta));
  write_text_file(cert_file, certificate_to_json(dm.certificate));

  json out;
  out["certificate"] = json::parse(certificate_to_json(dm.certificate));
  out["graph_file"] = graph_file;
  out["model_file"] = model_file;
  out["certificate_file"] = cert_file;

  int code = 0;
  if (spec.verify) {
    EngineOptions opts;
    opts.table_entry_budget = spec.mem_budget;
    const EvalReport zg = partition(g, w, Method::Auto, opts);
    const EvalReport zd = partition(dm.graph, dm.weights, Method::Auto, opts);
    const ScaledValue expected = zg.value * dm.certificate.scale();
    const double err = relative_difference(zd.value, expected);
    out["verify"] = {{"relative_error", err}, {"tolerance", kDualTolerance}};
    if (!(err < kDualTolerance)) code = 1;
  }
  std::cout << out.dump() << "\n";
  return code;
}

int cmd_symcheck(const JobSpec& spec) {
  const auto [g, model] = load_instance(spec);
  if (spec.count < 0) throw ParseError("--count must be nonnegative");
  const double beta = spec.beta != 0.0 ? spec.beta : model.beta;
  const WeightTable w = weights_at(model, beta);

  std::vector<SymmetryElement> elements =
      symmetry_group_sample(g, model.modulus, spec.count, spec.seed);
  if (spec.corrupt) {
    if (elements.empty()) throw ParseError("--corrupt needs --count > 0");
    const CodeOverZq cut = cut_code(g, model.modulus);
    bool corrupted = false;
    for (int e = 0; e < g.edge_count() && !corrupted; ++e) {
      IntVec u = elements[0].x_shift.entries;
      u[e] = mod_q(u[e] + 1, model.modulus);
      const ZqVector cand = make_zq_vector(model.modulus, u);
      if (!contains(cut, cand)) {
        elements[0].x_shift = cand;
        corrupted = true;
      }
    }
    if (!corrupted)
      throw ParseError("cannot corrupt: the cut code is the full space on this graph");
  }

  EngineOptions opts;
  opts.table_entry_budget = spec.mem_budget;
  const EvalReport base = partition(g, w, Method::Auto, opts);
  double max_dev = 0.0;
  for (const SymmetryElement& s : elements) {
    const EvalReport transformed = partition(g, apply_symmetry(s, w), Method::Auto, opts);
    max_dev = std::max(max_dev, relative_difference(base.value, transformed.value));
  }

  json out;
  out["count"] = spec.count;
  out["max_relative_deviation"] = max_dev;
  out["tolerance"] = kSymTolerance;
  std::cout << out.dump() << "\n";
  return max_dev < kSymTolerance ? 0 : 1;
}

std::string digit_string(const IntVec& v) {
  static const char* digits = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string s;
  for (int i = 0; i < v.size(); ++i) s += v[i] < 36 ? digits[v[i]] : '?';
  return s;
}

json code_summary(const CodeOverZq& c, int expected_log_q) {
  json j;
  j["generator_count"] = static_cast<int>(c.generators().rows());
  j["log_q_cardinality"] = c.log_q_cardinality();
  j["expected_log_q"] = expected_log_q;
  j["ok"] = c.log_q_cardinality() == expected_log_q;
  if (c.log2_cardinality() <= 53.0)
    j["cardinality"] = static_cast<std::uint64_t>(
        std::llround(std::exp2(c.log2_cardinality())));
  json gens = json::array();
  for (int i = 0; i < c.generators().rows(); ++i)
    gens.push_back(digit_string(c.generators().row(i).transpose()));
  j["generators"] = std::move(gens);
  return j;
}

int cmd_codeinfo(const JobSpec& spec) {
  const auto [g, model] = load_instance(spec, /*need_model=*/false);
  int q = spec.modulus;
  if (q == 0 && !spec.model_path.empty()) q = model.modulus;
  if (q < 2) throw ParseError("specify --q or --model");

  json out;
  out["q"] = q;
  out["vertices"] = g.vertex_count();
  out["edges"] = g.edge_count();
  out["cut_code"] = code_summary(cut_code(g, q), g.vertex_count() - 1);
  out["cycle_code"] =
      code_summary(cycle_code(g, q), g.edge_count() - g.vertex_count() + 1);
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_tdinfo(const JobSpec& spec) {
  const auto [g, model] = load_instance(spec, /*need_model=*/false);
  const TreeDecomposition td = tree_decomposition(g, parse_strategy(spec.strategy));
  json hist = json::object();
  for (const auto& nd : td.nodes()) {
    const std::string key = std::to_string(nd.bag.size());
    hist[key] = hist.value(key, 0) + 1;
  }
  json out;
  out["strategy"] = spec.strategy;
  out["width"] = td.width();
  out["node_count"] = static_cast<int>(td.nodes().size());
  out["bag_size_histogram"] = std::move(hist);
  out["valid"] = is_valid_decomposition(g, td);
  std::cout << out.dump() << "\n";
  return 0;
}

void add_common(CLI::App* cmd, JobSpec& spec, bool model_required) {
  cmd->add_option("--graph", spec.graph_path, "graph JSON file")->required();
  auto* model = cmd->add_option("--model", spec.model_path, "model JSON file");
  if (model_required) model->required();
  cmd->add_option("--beta", spec.beta, "inverse temperature (overrides the model file)");
  cmd->add_option("--mem-budget", spec.mem_budget, "max table entries per contraction bag");
  cmd->add_option("--seed", spec.seed, "seed for sampled checks");
  cmd->add_option("--format", spec.format, "output format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact partition functions of q-state spin models on arbitrary graphs"};
  app.require_subcommand(1);
  JobSpec spec;

  CLI::App* p = app.add_subcommand("partition", "evaluate Z");
  add_common(p, spec, true);
  p->add_option("--beta-range", spec.beta_range, "sweep start:stop:steps");
  p->add_option("--method", spec.method, "auto|brute|overlap|contract|closed");

  CLI::App* d = app.add_subcommand("dual", "emit the planar dual graph, weights, certificate");
  add_common(d, spec, true);
  d->add_option("--out-prefix", spec.out_prefix, "prefix for the emitted files");
  d->add_flag("--verify", spec.verify, "evaluate both sides and report the relative error");

  CLI::App* s = app.add_subcommand("symcheck", "sample stabilizer symmetries and check Z invariance");
  add_common(s, spec, true);
  s->add_option("--count", spec.count, "number of sampled elements");
  s->add_flag("--corrupt", spec.corrupt, "negative control: corrupt one element (testing)");

  CLI::App* c = app.add_subcommand("codeinfo", "cut/cycle code summary");
  add_common(c, spec, false);
  c->add_option("--q", spec.modulus, "modulus (when no model file is given)");

  CLI::App* t = app.add_subcommand("tdinfo", "tree decomposition summary");
  add_common(t, spec, false);
  t->add_option("--strategy", spec.strategy, "min_fill|min_degree|exact_small");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (p->parsed()) return cmd_partition(spec);
    if (d->parsed()) return cmd_dual(spec);
    if (s->parsed()) return cmd_symcheck(spec);
    if (c->parsed()) return cmd_codeinfo(spec);
    if (t->parsed()) return cmd_tdinfo(spec);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
