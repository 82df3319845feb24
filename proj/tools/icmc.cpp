// icmc: build, check and measure interval models of the cubic MaxCut
// reduction. Exit codes: 0 ok, 1 check failed, 2 bad usage or input.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "icmc/acceptance.hpp"
#include "icmc/cuts.hpp"
#include "icmc/graphs.hpp"
#include "icmc/legacy.hpp"
#include "icmc/maxcut.hpp"
#include "icmc/model_io.hpp"
#include "icmc/reduction.hpp"

using nlohmann::json;
using namespace icmc;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Raised for anything the caller got wrong: missing files, bad flags.
struct UsageError : Error {
  using Error::Error;
};

std::string str(std::uint64_t v) { return std::to_string(v); }

void emit(const json& doc, const std::string& out_path = {}) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write '" + out_path + "'");
  out << text;
}

ModelFile load_model(const std::string& path) {
  try {
    return read_model_file(path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

CubicInstance load_graph(const std::string& name_or_path) {
  try {
    return load_instance(name_or_path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

ParameterSet parse_params(const std::string& text, std::size_t n) {
  if (text == "true") return parameters(n);
  const std::string prefix = "custom:";
  if (text.rfind(prefix, 0) != 0) throw UsageError("--params must be 'true' or 'custom:p,q,pe,qe'");
  std::vector<std::uint64_t> v;
  std::stringstream in(text.substr(prefix.size()));
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad parameter '" + item + "'");
    }
  }
  if (v.size() != 4 || std::count(v.begin(), v.end(), 0u)) {
    throw UsageError("custom parameters need four positive integers");
  }
  return {v[0], v[1], v[2], v[3]};
}

CubicInstance reorder(CubicInstance inst, const std::string& how) {
  if (how == "default") return inst;
  const std::string prefix = "random:";
  if (how.rfind(prefix, 0) != 0) throw UsageError("--orderings must be 'default' or 'random:SEED'");
  std::uint64_t seed = 0;
  try {
    seed = std::stoull(how.substr(prefix.size()));
  } catch (const std::exception&) {
    throw UsageError("bad seed in '" + how + "'");
  }
  std::mt19937_64 rng(seed);
  std::shuffle(inst.pi_v.begin(), inst.pi_v.end(), rng);
  std::shuffle(inst.pi_e.begin(), inst.pi_e.end(), rng);
  return inst;
}

// "X:1,3" lists the 1-based vertices on side X.
VertexCut parse_cut(const std::string& text, std::size_t n) {
  if (text.rfind("X:", 0) != 0) throw UsageError("--cut must look like X:1,3");
  VertexCut vc{std::vector<bool>(n, false)};
  std::stringstream in(text.substr(2));
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    std::size_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad vertex '" + item + "'");
    }
    if (v < 1 || v > n) throw UsageError("vertex " + item + " out of range");
    vc.in_x[v - 1] = true;
  }
  return vc;
}

json lift_json(const ReductionModel& rm, const VertexCut& vc, bool with_breakdown) {
  const BreakdownCounter counter(rm);
  const auto w = cut_window(rm, counter, vc);
  json doc = {{"k", str(w.k)},
              {"size", w.size.str()},
              {"f_k", w.f_k.str()},
              {"f_next", w.f_next.str()},
              {"window", w.in_window},
              {"exact_window", w.in_exact_window},
              {"surplus", w.surplus_exact.str()}};
  if (with_breakdown) {
    const auto b = counter.breakdown(phi_inverse(rm, vc));
    json cats;
    for (std::size_t c = 0; c < kCategoryCount; ++c) cats[to_string(static_cast<Category>(c))] = b.value[c].str();
    doc["categories"] = cats;
  }
  return doc;
}

json ic_report_json(const LegacyModel& lm, const LegacyIcReport& r) {
  return {{"n", str(lm.instance.n())},
          {"measured_ic", str(r.measured_ic)},
          {"lower_bound", str(r.lower_bound)},
          {"upper_bound_target", str(r.upper_bound_target)},
          {"hamiltonian", r.hamiltonian},
          {"upper_ok", r.upper_ok},
          {"lower_ok", r.lower_ok},
          {"total_multiplicity", lm.model.total_multiplicity().str()},
          {"classes", str(lm.model.size())}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval models for MaxCut on cubic graphs"};
  app.require_subcommand(1);

  std::string graph, params = "true", orderings = "default", out, model_path, cut_text;
  bool with_breakdown = false, report = false, as_json = false;
  std::int64_t f_offset = 0;

  auto* gen = app.add_subcommand("gen", "build the reduction model of a cubic graph");
  gen->add_option("--graph", graph, "generator name or graph file")->required();
  gen->add_option("--params", params, "true or custom:p,q,pe,qe");
  gen->add_option("--orderings", orderings, "default or random:SEED");
  gen->add_option("--out", out, "output file (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "check every structural condition of a model file");
  verify->add_option("model", model_path)->required();

  auto* ic = app.add_subcommand("ic", "print the interval count of a model file");
  ic->add_option("model", model_path)->required();

  auto* mc = app.add_subcommand("maxcut", "exact maximum cut of a graph or a small model");
  auto* mc_graph = mc->add_option("--graph", graph, "generator name or graph file");
  mc->add_option("--model", model_path, "model file (materialized)")->excludes(mc_graph);

  auto* lift = app.add_subcommand("lift", "size of the model cut induced by a vertex cut");
  lift->add_option("--model", model_path)->required();
  lift->add_option("--cut", cut_text, "X:1,3 (1-based vertices on side X)")->required();
  lift->add_flag("--breakdown", with_breakdown);

  auto* breakdown = app.add_subcommand("breakdown", "per-category edge counts of an induced cut");
  breakdown->add_option("--model", model_path)->required();
  breakdown->add_option("--cut", cut_text)->required();

  auto* legacy = app.add_subcommand("legacy", "the older construction and its interval count");
  legacy->add_option("--graph", graph)->required();
  legacy->add_option("--orderings", orderings, "matching, adversarial or default")
      ->check(CLI::IsMember({"matching", "adversarial", "default"}));
  std::string layout = "auto";
  legacy->add_option("--layout", layout, "plain, sharing or auto")
      ->check(CLI::IsMember({"plain", "sharing", "auto"}));
  legacy->add_flag("--report", report, "print the interval count report instead of the model");
  legacy->add_option("--out", out);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance checks");
  selftest->add_flag("--json", as_json);
  selftest->add_option("--inject-f-offset", f_offset, "add a constant to f(G,k) (mutation run)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      auto inst = reorder(load_graph(graph), orderings);
      const auto ps = parse_params(params, inst.n());
      const auto rm = build_model(inst, ps);
      const std::string text = write_model_file({rm.model, rm.instance, rm.params});
      if (out.empty()) {
        std::cout << text << "\n";
      } else {
        std::ofstream f(out);
        if (!f) throw UsageError("cannot write '" + out + "'");
        f << text << "\n";
      }
      return kOk;
    }
    if (*verify) {
      const auto file = load_model(model_path);
      if (!file.instance || !file.params) throw UsageError("model file has no instance or params");
      const auto rm = reduction_from_file(file);
      const auto rep = verify_structure(rm);
      const auto five = verify_interval_count_five(rm);
      json doc = json::parse(rep.to_json());
      doc["checks"] = str(rep.checks.size());
      doc["interval_count_five"] = five.ok;
      doc["ok"] = rep.ok() && five.ok;
      emit(doc);
      return rep.ok() && five.ok ? kOk : kFailed;
    }
    if (*ic) {
      const auto file = load_model(model_path);
      std::cout << interval_count(file.model) << "\n";
      return kOk;
    }
    if (*mc) {
      if (!model_path.empty()) {
        const auto file = load_model(model_path);
        const auto mg = materialize(file.model, kBruteForceMaxVertices);
        const auto r = bruteforce_maxcut(mg.graph);
        json side_a = json::array();
        for (std::size_t v = 0; v < mg.graph.vertex_count; ++v) {
          if ((r.a_mask >> v) & 1) side_a.push_back(str(v + 1));
        }
        emit({{"size", str(r.size)}, {"vertices", str(mg.graph.vertex_count)}, {"a", side_a}});
        return kOk;
      }
      if (graph.empty()) throw UsageError("maxcut needs --graph or --model");
      const auto inst = load_graph(graph);
      const auto r = maxcut(inst.graph);
      json x = json::array();
      for (std::size_t v = 0; v < inst.n(); ++v) {
        if (r.cut.in_x[v]) x.push_back(str(v + 1));
      }
      emit({{"k", str(r.k)}, {"x", x}});
      return kOk;
    }
    if (*lift || *breakdown) {
      const auto file = load_model(model_path);
      if (!file.instance || !file.params) throw UsageError("model file has no instance or params");
      const auto rm = reduction_from_file(file);
      const auto vc = parse_cut(cut_text, rm.instance.n());
      auto doc = lift_json(rm, vc, *breakdown || with_breakdown);
      if (*breakdown) doc = doc["categories"];
      emit(doc);
      return kOk;
    }
    if (*legacy) {
      CubicInstance inst;
      if (orderings == "adversarial") {
        const std::string prefix = "fig6:";
        if (graph.rfind(prefix, 0) != 0) throw UsageError("adversarial orderings need --graph fig6:N");
        try {
          inst = adversarial_instance(std::stoull(graph.substr(prefix.size())));
        } catch (const std::logic_error&) {
          throw UsageError("bad graph '" + graph + "'");
        }
      } else if (orderings == "matching") {
        inst = matching_orderings(load_graph(graph).graph).instance;
      } else {
        inst = load_graph(graph);
      }
      const bool sharing = layout == "sharing" || (layout == "auto" && orderings == "matching");
      const auto lm = legacy_build(inst, sharing ? LegacyLayout::length_sharing : LegacyLayout::plain);
      if (report) {
        emit(ic_report_json(lm, legacy_ic_report(lm)), out);
      } else {
        emit(json::parse(write_model_file({lm.model, lm.instance, lm.params})), out);
      }
      return kOk;
    }
    if (*selftest) {
      AcceptanceOptions options;
      options.f_offset = f_offset;
      const auto lines = run_acceptance(options, [&](const AcceptanceLine& l) {
        if (!as_json) std::cout << format_line(l) << std::endl;
      });
      if (as_json) std::cout << acceptance_json(lines) << "\n";
      return all_required_passed(lines) ? kOk : kFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "icmc: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "icmc: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
