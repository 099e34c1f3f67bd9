// eincausal: causal geometry of conformally flat domains in the Einstein
// cylinder. JSON in, JSON/CSV out; all randomness flows from --seed.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eincausal/domains.hpp"
#include "eincausal/duality.hpp"
#include "eincausal/enveloping.hpp"
#include "eincausal/errors.hpp"
#include "eincausal/json_io.hpp"
#include "eincausal/maximality.hpp"

namespace {

using eincausal::CausalDomain;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitWitness = 2;
constexpr int kExitFullSpace = 3;
constexpr int kExitUsage = 64;

uint64_t fnv1a(const std::string& bytes) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

// Positional inputs are file paths; inline JSON (starting with '{') is
// accepted too, which keeps one-off queries scriptable.
std::string slurp(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  return eincausal::read_file(arg);
}

class Report {
 public:
  Report(std::string command) : start_(std::chrono::steady_clock::now()) {
    body_["command"] = std::move(command);
    body_["inputs"] = json::object();
    body_["tolerances"] = json::object();
    body_["verdicts"] = json::object();
    body_["witnesses"] = json::array();
  }

  void input(const std::string& name, const std::string& contents) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(contents)));
    body_["inputs"][name] = buf;
  }
  void grid(const eincausal::GridSpec& spec) {
    body_["grid"] = json::parse(eincausal::to_json(spec));
  }
  void tolerance(const std::string& name, double value) {
    body_["tolerances"][name] = value;
  }
  json& verdicts() { return body_["verdicts"]; }
  json& witnesses() { return body_["witnesses"]; }

  void print() {
    const auto elapsed = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - start_);
    body_["wall_time_s"] = elapsed.count();
    std::puts(body_.dump(2).c_str());
  }

 private:
  json body_;
  std::chrono::steady_clock::time_point start_;
};

json point_json(const eincausal::CoverPoint& p) {
  return json{{"x", p.x.coords()}, {"t", p.t}};
}

json issues_json(const eincausal::ValidationReport& report) {
  json arr = json::array();
  for (const auto& issue : report.issues) {
    arr.push_back({{"code", eincausal::to_string(issue.code)},
                   {"node_a", issue.node_a},
                   {"node_b", issue.node_b},
                   {"value", issue.value},
                   {"detail", issue.detail}});
  }
  return arr;
}

void write_artifact(const std::string& path, const std::string& contents) {
  if (!path.empty()) eincausal::write_file(path, contents);
}

std::string format_csv_value(double v) {
  if (v == HUGE_VAL) return "inf";
  if (v == -HUGE_VAL) return "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int run_validate(const std::string& domain_arg, Report& report) {
  const std::string text = slurp(domain_arg);
  report.input("domain", text);
  const CausalDomain dom = eincausal::domain_from_json(text);
  report.grid(dom.region().grid().spec());
  const eincausal::ValidationReport result = eincausal::validate_domain(dom);
  report.verdicts()["pass"] = result.pass;
  report.verdicts()["issues"] = issues_json(result);
  report.print();
  return result.pass ? kExitPass : kExitWitness;
}

int run_classify(const std::string& p_arg, const std::string& q_arg,
                 Report& report) {
  const std::string p_text = slurp(p_arg);
  const std::string q_text = slurp(q_arg);
  report.input("p", p_text);
  report.input("q", q_text);
  const eincausal::CoverPoint p = eincausal::cover_point_from_json(p_text);
  const eincausal::CoverPoint q = eincausal::cover_point_from_json(q_text);
  const eincausal::CausalRelation rel = eincausal::causal_relation(p, q);
  report.verdicts()["relation"] = eincausal::to_string(rel);
  report.verdicts()["q_form"] =
      eincausal::q_form(eincausal::to_klein(p), eincausal::to_klein(q));
  report.verdicts()["chart"] =
      eincausal::to_string(eincausal::chart_classify(p, q));
  report.print();
  return kExitPass;
}

int run_dual(const std::string& set_arg, bool by_definition, double time_step,
             const std::string& out, Report& report) {
  const std::string text = slurp(set_arg);
  report.input("achronal_set", text);
  const eincausal::AchronalSet set = eincausal::achronal_set_from_json(text);
  report.grid(set.grid().spec());
  if (by_definition) {
    const double step =
        time_step > 0 ? time_step : set.grid().resolution() / 2.0;
    report.tolerance("time_step", step);
    const auto points = eincausal::dual_by_definition(set, step);
    json arr = json::array();
    for (const auto& [node, t] : points) arr.push_back({node, t});
    report.verdicts()["points"] = static_cast<int>(points.size());
    write_artifact(out, json{{"points", std::move(arr)}}.dump());
  } else {
    const CausalDomain dual = eincausal::dual_by_formula(set);
    report.verdicts()["interior_nodes"] =
        static_cast<int>(dual.region().interior().size());
    report.verdicts()["empty"] = dual.region().empty();
    write_artifact(out, eincausal::to_json(dual));
  }
  report.print();
  return kExitPass;
}

int run_shadow(const std::string& point_arg, const std::string& surface_arg,
               const std::string& out, Report& report) {
  const std::string p_text = slurp(point_arg);
  const std::string s_text = slurp(surface_arg);
  report.input("point", p_text);
  report.input("surface", s_text);
  const eincausal::CoverPoint p = eincausal::cover_point_from_json(p_text);
  const eincausal::SurfaceGraph s = eincausal::surface_from_json(s_text);
  report.grid(s.region().grid().spec());
  const std::vector<int> nodes = eincausal::shadow(p, s);
  report.verdicts()["size"] = static_cast<int>(nodes.size());
  write_artifact(out, json{{"nodes", nodes}}.dump());
  report.print();
  return kExitPass;
}

int run_cauchy_dev(const std::string& surface_arg, const std::string& out,
                   Report& report) {
  const std::string text = slurp(surface_arg);
  report.input("surface", text);
  const eincausal::SurfaceGraph s = eincausal::surface_from_json(text);
  report.grid(s.region().grid().spec());
  const eincausal::DevelopmentResult dev =
      eincausal::cauchy_development_of_graph(s);
  report.verdicts()["full_space"] = dev.full_space;
  report.verdicts()["touches_graph"] = dev.touches_graph;
  write_artifact(out, eincausal::to_json(dev.domain));
  report.print();
  return dev.full_space ? kExitFullSpace : kExitPass;
}

int run_maximalize(const std::string& domain_arg, const std::string& out,
                   Report& report) {
  const std::string text = slurp(domain_arg);
  report.input("domain", text);
  const CausalDomain dom = eincausal::domain_from_json(text);
  report.grid(dom.region().grid().spec());
  const eincausal::MaximalizeResult result = eincausal::maximalize(dom);
  report.verdicts()["full_space"] = result.full_space;
  write_artifact(out, eincausal::to_json(result.domain));
  report.print();
  return result.full_space ? kExitFullSpace : kExitPass;
}

int run_is_maximal(const std::string& domain_arg, double tol, Report& report) {
  const std::string text = slurp(domain_arg);
  report.input("domain", text);
  const CausalDomain dom = eincausal::domain_from_json(text);
  report.grid(dom.region().grid().spec());
  const double used_tol = tol > 0 ? tol : dom.region().grid().resolution();
  report.tolerance("maximality", used_tol);
  const eincausal::MaximalityVerdict verdict =
      eincausal::is_maximal(dom, used_tol);
  report.verdicts()["kind"] = eincausal::to_string(verdict.kind);
  report.verdicts()["max_deviation"] = verdict.max_deviation;
  report.print();
  switch (verdict.kind) {
    case eincausal::MaximalityKind::maximal: return kExitPass;
    case eincausal::MaximalityKind::extendable: return kExitWitness;
    case eincausal::MaximalityKind::full_space: return kExitFullSpace;
  }
  return kExitUsage;
}

int run_certify(const std::string& domain_arg, int node, Report& report) {
  const std::string text = slurp(domain_arg);
  report.input("domain", text);
  const CausalDomain dom = eincausal::domain_from_json(text);
  report.grid(dom.region().grid().spec());
  report.tolerance("residual", 2.0 * dom.region().grid().resolution());
  const auto plus = eincausal::geodesic_certificate(
      dom.f_plus(), node, eincausal::EikonalDirection::future);
  const auto minus = eincausal::geodesic_certificate(
      dom.f_minus(), node, eincausal::EikonalDirection::past);
  report.verdicts()["f_plus"] =
      json{{"pass", plus.pass}, {"residual", plus.residual},
           {"site", plus.site_node}};
  report.verdicts()["f_minus"] =
      json{{"pass", minus.pass}, {"residual", minus.residual},
           {"site", minus.site_node}};
  report.print();
  return plus.pass && minus.pass ? kExitPass : kExitWitness;
}

int run_oracle(const std::string& domain_arg, int samples, uint64_t seed,
               Report& report) {
  const std::string text = slurp(domain_arg);
  report.input("domain", text);
  const CausalDomain dom = eincausal::domain_from_json(text);
  report.grid(dom.region().grid().spec());
  report.tolerance("band", dom.region().grid().resolution());
  report.verdicts()["samples"] = samples;
  report.verdicts()["seed"] = seed;
  const auto witness = eincausal::causal_convexity_oracle(dom, samples, seed);
  report.verdicts()["pass"] = !witness.has_value();
  if (witness.has_value()) {
    report.witnesses().push_back(json{{"p", point_json(witness->p)},
                                      {"q", point_json(witness->q)},
                                      {"r", point_json(witness->r)}});
  }
  report.print();
  return witness.has_value() ? kExitWitness : kExitPass;
}

int run_plot_data(const std::string& domain_arg, const std::string& out,
                  Report& report) {
  const std::string text = slurp(domain_arg);
  report.input("domain", text);
  const CausalDomain dom = eincausal::domain_from_json(text);
  const eincausal::SphereGrid& grid = dom.region().grid();
  report.grid(grid.spec());

  bool have_envelopes = false;
  std::vector<double> g_minus, g_plus;
  if (dom.f_plus().is_finite() && dom.f_minus().is_finite() &&
      !dom.region().boundary().empty()) {
    try {
      auto envelopes = eincausal::eikonal_envelopes(dom);
      have_envelopes = true;
      g_minus.assign(static_cast<size_t>(grid.size()), NAN);
      g_plus.assign(static_cast<size_t>(grid.size()), NAN);
      for (int v = 0; v < grid.size(); ++v) {
        if (!dom.region().in_region(v)) continue;
        g_minus[static_cast<size_t>(v)] = envelopes.first.value(v);
        g_plus[static_cast<size_t>(v)] = envelopes.second.value(v);
      }
    } catch (const eincausal::NotApplicableError&) {
      have_envelopes = false;
    }
  }

  std::string csv = grid.dim() == 1 ? "node_index,angle" : "node_index,x,y,z";
  csv += ",f_minus,f_plus,g_minus,g_plus\n";
  int rows = 0;
  for (int v = 0; v < grid.size(); ++v) {
    if (!dom.region().in_region(v)) continue;
    ++rows;
    csv += std::to_string(v);
    if (grid.dim() == 1) {
      const double angle = std::atan2(grid.node(v)[1], grid.node(v)[0]);
      csv += ',' + format_csv_value(angle < 0 ? angle + 2 * M_PI : angle);
    } else {
      for (int k = 0; k < 3; ++k) csv += ',' + format_csv_value(grid.node(v)[k]);
    }
    csv += ',' + format_csv_value(dom.f_minus().value(v));
    csv += ',' + format_csv_value(dom.f_plus().value(v));
    csv += ',';
    csv += have_envelopes ? format_csv_value(g_minus[static_cast<size_t>(v)])
                          : "nan";
    csv += ',';
    csv += have_envelopes ? format_csv_value(g_plus[static_cast<size_t>(v)])
                          : "nan";
    csv += '\n';
  }
  report.verdicts()["rows"] = rows;
  write_artifact(out, csv);
  report.print();
  return kExitPass;
}

int run_env_make_base(const std::string& kind, const std::string& grid_arg,
                      int node, double step, int turns, const std::string& out,
                      Report& report) {
  std::string base_json;
  if (kind == "helix") {
    base_json = eincausal::to_json(eincausal::make_helix_base(step, turns));
  } else {
    const std::string grid_text = slurp(grid_arg);
    report.input("grid", grid_text);
    const eincausal::SphereGrid grid = eincausal::SphereGrid::build(
        eincausal::grid_spec_from_json(grid_text));
    report.grid(grid.spec());
    if (kind == "sphere_minus_node") {
      base_json =
          eincausal::to_json(eincausal::make_sphere_minus_node_base(grid, node));
    } else if (kind == "full_sphere") {
      base_json = eincausal::to_json(eincausal::make_full_sphere_base(grid));
    } else {
      throw std::invalid_argument("unknown base kind \"" + kind + "\"");
    }
  }
  report.verdicts()["kind"] = kind;
  write_artifact(out, base_json);
  report.print();
  return kExitPass;
}

int run_env_classify(const std::string& base_arg, const std::string& p_arg,
                     const std::string& q_arg, Report& report) {
  const std::string base_text = slurp(base_arg);
  report.input("base", base_text);
  const auto base = eincausal::base_from_json(base_text);
  const eincausal::EPoint p = eincausal::epoint_from_json(slurp(p_arg));
  const eincausal::EPoint q = eincausal::epoint_from_json(slurp(q_arg));
  report.verdicts()["relation"] =
      eincausal::to_string(eincausal::e_causal_relation(*base, p, q));
  report.verdicts()["developed_relation"] = eincausal::to_string(
      eincausal::causal_relation(eincausal::develop(*base, p),
                                 eincausal::develop(*base, q)));
  report.print();
  return kExitPass;
}

int run_env_maximalize(const std::string& base_arg,
                       const std::string& domain_arg, const std::string& out,
                       Report& report) {
  const std::string base_text = slurp(base_arg);
  const std::string dom_text = slurp(domain_arg);
  report.input("base", base_text);
  report.input("domain", dom_text);
  const auto base = eincausal::base_from_json(base_text);
  const eincausal::BaseDomain dom =
      eincausal::base_domain_from_json(dom_text, base);
  const eincausal::EMaximalizeResult result = eincausal::maximalize_in_E(dom);
  report.verdicts()["status"] =
      result.status == eincausal::EMaximalizeStatus::ok           ? "ok"
      : result.status == eincausal::EMaximalizeStatus::full_fiber ? "full_fiber"
                                                                  : "lipschitz_fail";
  report.verdicts()["time_extent_warning"] = result.time_extent_warning;
  report.verdicts()["truncated_ends"] = result.truncated_ends;
  for (const auto& v : result.violations) {
    report.witnesses().push_back(json{{"node_a", v.node_a},
                                      {"node_b", v.node_b},
                                      {"difference", v.difference},
                                      {"bound", v.bound}});
  }
  write_artifact(out, eincausal::to_json(result.domain));
  report.print();
  switch (result.status) {
    case eincausal::EMaximalizeStatus::ok: return kExitPass;
    case eincausal::EMaximalizeStatus::full_fiber: return kExitFullSpace;
    case eincausal::EMaximalizeStatus::lipschitz_fail: return kExitWitness;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"causal geometry of conformally flat domains in the Einstein cylinder"};
  app.require_subcommand(1);

  std::string domain_arg, out, p_arg, q_arg, set_arg, surface_arg, point_arg;
  std::string base_arg, grid_arg, kind;
  double tol = -1.0, time_step = -1.0, helix_step = M_PI / 32;
  int node = 0, samples = 500, turns = 1;
  uint64_t seed = 0;
  bool by_definition = false;

  auto* validate = app.add_subcommand("validate", "check the domain invariants");
  validate->add_option("domain", domain_arg)->required();

  auto* classify = app.add_subcommand("classify", "causal relation of two points");
  classify->add_option("p", p_arg)->required();
  classify->add_option("q", q_arg)->required();

  auto* dual = app.add_subcommand("dual", "dual of an achronal site set");
  dual->add_option("--achronal-set", set_arg)->required();
  dual->add_flag("--by-definition", by_definition);
  dual->add_option("--time-step", time_step);
  dual->add_option("-o,--out", out);

  auto* shadow = app.add_subcommand("shadow", "shadow of a point on a surface");
  shadow->add_option("--point", point_arg)->required();
  shadow->add_option("--surface", surface_arg)->required();
  shadow->add_option("-o,--out", out);

  auto* cauchy = app.add_subcommand("cauchy-dev", "Cauchy development of a graph");
  cauchy->add_option("surface", surface_arg)->required();
  cauchy->add_option("-o,--out", out);

  auto* maximalize = app.add_subcommand("maximalize", "C0-maximal extension");
  maximalize->add_option("domain", domain_arg)->required();
  maximalize->add_option("-o,--out", out);

  auto* is_maximal = app.add_subcommand("is-maximal", "C0-maximality verdict");
  is_maximal->add_option("domain", domain_arg)->required();
  is_maximal->add_option("--tol", tol);

  auto* certify = app.add_subcommand("certify", "lightlike generator certificate");
  certify->add_option("domain", domain_arg)->required();
  certify->add_option("--node", node)->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force oracles");
  oracle->require_subcommand(1);
  auto* convexity = oracle->add_subcommand("causal-convexity",
                                           "diamond containment scan");
  convexity->add_option("domain", domain_arg)->required();
  convexity->add_option("--samples", samples);
  convexity->add_option("--seed", seed);

  auto* plot = app.add_subcommand("plot-data", "CSV for external plotting");
  plot->add_option("domain", domain_arg)->required();
  plot->add_option("-o,--out", out);

  auto* env = app.add_subcommand("env", "enveloping-space operations");
  env->require_subcommand(1);
  auto* make_base = env->add_subcommand("make-base", "canonical bases");
  make_base->add_option("--kind", kind)->required();
  make_base->add_option("--grid", grid_arg);
  make_base->add_option("--node", node);
  make_base->add_option("--step", helix_step);
  make_base->add_option("--turns", turns);
  make_base->add_option("-o,--out", out);
  auto* env_classify = env->add_subcommand("classify", "causal relation in E");
  env_classify->add_option("--base", base_arg)->required();
  env_classify->add_option("p", p_arg)->required();
  env_classify->add_option("q", q_arg)->required();
  auto* env_max = env->add_subcommand("maximalize", "maximalization in E");
  env_max->add_option("--base", base_arg)->required();
  env_max->add_option("domain", domain_arg)->required();
  env_max->add_option("-o,--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*validate) {
      Report report("validate");
      return run_validate(domain_arg, report);
    }
    if (*classify) {
      Report report("classify");
      return run_classify(p_arg, q_arg, report);
    }
    if (*dual) {
      Report report("dual");
      return run_dual(set_arg, by_definition, time_step, out, report);
    }
    if (*shadow) {
      Report report("shadow");
      return run_shadow(point_arg, surface_arg, out, report);
    }
    if (*cauchy) {
      Report report("cauchy-dev");
      return run_cauchy_dev(surface_arg, out, report);
    }
    if (*maximalize) {
      Report report("maximalize");
      return run_maximalize(domain_arg, out, report);
    }
    if (*is_maximal) {
      Report report("is-maximal");
      return run_is_maximal(domain_arg, tol, report);
    }
    if (*certify) {
      Report report("certify");
      return run_certify(domain_arg, node, report);
    }
    if (*convexity) {
      Report report("oracle causal-convexity");
      return run_oracle(domain_arg, samples, seed, report);
    }
    if (*plot) {
      Report report("plot-data");
      return run_plot_data(domain_arg, out, report);
    }
    if (*make_base) {
      Report report("env make-base");
      return run_env_make_base(kind, grid_arg, node, helix_step, turns, out,
                               report);
    }
    if (*env_classify) {
      Report report("env classify");
      return run_env_classify(base_arg, p_arg, q_arg, report);
    }
    if (*env_max) {
      Report report("env maximalize");
      return run_env_maximalize(base_arg, domain_arg, out, report);
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitWitness;
  }
  return kExitUsage;
}
