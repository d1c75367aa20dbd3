#include "acx/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "acx/dominance.hpp"
#include "acx/economy.hpp"
#include "acx/errors.hpp"
#include "acx/scene.hpp"
#include "acx/separation.hpp"
#include "acx/suite.hpp"

#ifndef ACX_DEFAULT_DATA_DIR
#define ACX_DEFAULT_DATA_DIR ""
#endif

namespace acx {

using nlohmann::json;

namespace {

// A command computes a report and returns its exit code.
using Command = std::function<int(json& report)>;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SceneError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RationalVector point_arg(const std::string& text, std::size_t dimension, const char* flag) {
  RationalVector v = parse_vector(text);
  if (v.size() != dimension) {
    throw DimensionMismatch(std::string(flag) + " has " + std::to_string(v.size()) +
                            " coordinates in a scene of dimension " + std::to_string(dimension));
  }
  return v;
}

int verdict(bool b) { return b ? kExitOk : kExitFalse; }

// Re-checks a dominate, hulls-disjoint or separate report against the scene.
bool verify_report(const Scene& scene, const json& report) {
  const std::string command = report.at("command").get<std::string>();
  const std::size_t n = scene.dimension;
  if (command == "dominate") {
    if (!report.contains("certificate")) return false;
    const DominationCertificate c = certificate_from_json(report.at("certificate"), n);
    return verify_certificate(c, scene.decomposable(report.at("set").get<std::string>()));
  }
  if (command == "hulls-disjoint") {
    const DisjointnessResult r = disjointness_from_json(report.at("result"), n);
    return verify_disjointness(scene.polyhedron(report.at("x").get<std::string>()),
                               scene.decomposable(report.at("y").get<std::string>()), r);
  }
  if (command == "separate") {
    const SeparationResult s = separation_from_json(report.at("separator"), n);
    const std::string y = report.at("y").get<std::string>();
    const FinitePointSet pts = report.at("kind").get<std::string>() == "strict"
                                   ? scene.polyhedron(y).vertices
                                   : materialize(scene.decomposable(y));
    return verify_separation(scene.polyhedron(report.at("x").get<std::string>()), pts.points(), s);
  }
  throw std::invalid_argument("reports of '" + command + "' carry no certificate to verify");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cone dominance, Pareto optima and separation checks", "acx"};
  app.require_subcommand(1);

  std::string scene_path;
  std::string set_name, cone_name, x_name, y_name, point, from, to, kind = "strict";
  std::string utility, grid_name, price_name, input_path, data_dir = ACX_DEFAULT_DATA_DIR;
  bool dominated = false, verify = false, timings = false;
  std::uint64_t seed = 42;
  std::size_t instances = 0;
  std::vector<int> criteria;

  std::optional<Scene> scene;
  const auto load = [&]() -> const Scene& {
    if (!scene) scene = parse_scene(read_file(scene_path));
    return *scene;
  };
  const auto add_scene = [&](CLI::App* sub) {
    sub->add_option("--scene", scene_path, "Scene file (JSON)")->required();
  };

  std::vector<std::pair<CLI::App*, Command>> commands;
  const auto command = [&](const char* name, const char* help, Command run) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(run));
    return sub;
  };

  {
    CLI::App* sub = command("relate", "Classify (from, to) under a cone", [&](json& r) {
      const Scene& s = load();
      const Comparability c = relate(s.cone(cone_name), point_arg(from, s.dimension, "--from"),
                                     point_arg(to, s.dimension, "--to"));
      r["relation"] = to_string(c);
      return kExitOk;
    });
    add_scene(sub);
    sub->add_option("--cone", cone_name)->required();
    sub->add_option("--from", from)->required();
    sub->add_option("--to", to)->required();
  }

  const auto set_check = [&](bool chain) {
    return [&, chain](json& r) {
      const Scene& s = load();
      const Cone& c = cone_name.empty() ? s.cone_of_set(set_name) : s.cone(cone_name);
      const FinitePointSet pts = s.points_of(set_name);
      const bool ok = chain ? is_chain(pts, c) : is_antichain(pts, c);
      r[chain ? "chain" : "antichain"] = ok;
      return verdict(ok);
    };
  };
  for (bool chain : {true, false}) {
    CLI::App* sub = command(chain ? "chain-check" : "antichain-check",
                            chain ? "Every two points are comparable" : "No two points are comparable",
                            set_check(chain));
    add_scene(sub);
    sub->add_option("--set", set_name)->required();
    sub->add_option("--cone", cone_name, "Defaults to the set's cone");
  }

  {
    CLI::App* sub = command("dominate", "Dominating (or dominated) element certificate", [&](json& r) {
      const Scene& s = load();
      const DecomposableSet d = s.decomposable(set_name);
      const RationalVector y = point_arg(point, s.dimension, "--point");
      r["set"] = set_name;
      const HullDecomposition dec = decompose_in_hulls(y, d);
      if (!dec.member) {
        r["member"] = false;
        r["separator"] = {{"normal", to_json(dec.certificate->normal)},
                          {"bound", to_json(dec.certificate->bound)}};
        return kExitFalse;
      }
      r["member"] = true;
      r["certificate"] = to_json(dominated ? dominated_element(y, d) : dominating_element(y, d));
      return kExitOk;
    });
    add_scene(sub);
    sub->add_option("--set", set_name)->required();
    sub->add_option("--point", point, "Comma-separated rationals, e.g. 3/2,3/2")->required();
    sub->add_flag("--dominated", dominated, "Find x with y - x in K instead");
    sub->add_flag("--verify", verify, "Re-check the emitted certificate");
  }

  {
    CLI::App* sub = command("pareto", "Pareto optima of a finite set", [&](json& r) {
      const Scene& s = load();
      const Cone& c = cone_name.empty() ? s.cone_of_set(set_name) : s.cone(cone_name);
      r["optima"] = to_json(pareto_optima_finite(s.points_of(set_name), c).sorted());
      return kExitOk;
    });
    add_scene(sub);
    sub->add_option("--set", set_name)->required();
    sub->add_option("--cone", cone_name, "Defaults to the set's cone");
  }

  {
    CLI::App* sub = command("equiv", "Pareto optimum equivalences of a decomposable set", [&](json& r) {
      const Scene& s = load();
      const EquivalenceReport rep = check_equivalences(s.decomposable(set_name));
      r["zero_invariance"] = rep.zero_invariance;
      r["hull_invariance"] = rep.hull_invariance;
      r["maximal_equivalence"] = rep.maximal_equivalence;
      r["optima"] = to_json(rep.optima.sorted());
      r["domination_maximals"] = to_json(rep.domination_maximals.sorted());
      r["hull_points_sampled"] = rep.hull_points_sampled;
      return verdict(rep.all());
    });
    add_scene(sub);
    sub->add_option("--set", set_name)->required();
  }

  {
    CLI::App* sub = command("hulls-disjoint", "Do co(X) and co(Y) share a point", [&](json& r) {
      const Scene& s = load();
      const DisjointnessResult res = hulls_disjoint(s.polyhedron(x_name), s.decomposable(y_name));
      r["x"] = x_name;
      r["y"] = y_name;
      r["result"] = to_json(res);
      return verdict(res.disjoint);
    });
    add_scene(sub);
    sub->add_option("--x", x_name)->required();
    sub->add_option("--y", y_name)->required();
    sub->add_flag("--verify", verify, "Re-check the emitted certificate");
  }

  {
    CLI::App* sub = command("separate", "Strict or proper separating functional", [&](json& r) {
      const Scene& s = load();
      r["x"] = x_name;
      r["y"] = y_name;
      r["kind"] = kind;
      SeparationResult res;
      if (kind == "strict") {
        res = strict_separator(s.polyhedron(x_name), s.polyhedron(y_name));
      } else {
        const Cone& c = cone_name.empty() ? s.cone_of_set(y_name) : s.cone(cone_name);
        res = proper_separator(s.polyhedron(x_name), s.decomposable(y_name), c);
        r["sign_check"] = separator_sign_check(res.functional, c);
      }
      r["separator"] = to_json(res);
      return kExitOk;
    });
    add_scene(sub);
    sub->add_option("--x", x_name)->required();
    sub->add_option("--y", y_name)->required();
    sub->add_option("--kind", kind)->check(CLI::IsMember({"strict", "proper"}));
    sub->add_option("--cone", cone_name, "Cone for the proper case; defaults to Y's cone");
    sub->add_flag("--verify", verify, "Re-check the emitted separator");
  }

  {
    CLI::App* sub = command("demand", "Utility maximizers over a budget set", [&](json& r) {
      const Scene& s = load();
      const Utility u = utility_by_name(utility);
      const GridDomain& g = s.grid(grid_name);
      const PriceSystem& p = s.price(price_name);
      const FinitePointSet d = demand(u, g, p).sorted();
      r["demand"] = to_json(d);
      r["value"] = to_string(u(d[0]));
      bool on_line = true;
      for (const auto& x : d) on_line = on_line && p.cost(x) == p.wealth;
      r["on_budget_hyperplane"] = on_line;
      r["antichain"] = is_antichain(d, Cone::orthant(s.dimension));
      return kExitOk;
    });
    add_scene(sub);
    sub->add_option("--utility", utility)->required();
    sub->add_option("--grid", grid_name)->required();
    sub->add_option("--price", price_name)->required();
  }

  {
    CLI::App* sub = command("grinta", "Maximals versus convexified maximals on a budget set", [&](json& r) {
      const Scene& s = load();
      const GrintaReport g = check_grinta(utility_by_name(utility), s.grid(grid_name), s.price(price_name));
      r["equal"] = g.equal;
      r["hypothesis_met"] = g.hypothesis_met;
      r["maximals"] = to_json(g.maximals.sorted());
      r["convexified_maximals"] = to_json(g.convexified_maximals.sorted());
      return verdict(g.equal);
    });
    add_scene(sub);
    sub->add_option("--utility", utility)->required();
    sub->add_option("--grid", grid_name)->required();
    sub->add_option("--price", price_name)->required();
  }

  {
    CLI::App* sub = command("suite", "Run the randomized acceptance criteria", [&](json& r) {
      SuiteOptions o;
      o.seed = seed;
      if (instances > 0) o.instances = instances;
      o.criteria = criteria;
      o.threads = suite_threads_from_env();
      o.data_dir = data_dir;
      const auto results = run_suite(o);
      r = suite_report(results, o, timings);
      r["command"] = "suite";
      return verdict(r["passed"].get<bool>());
    });
    sub->add_option("--seed", seed);
    sub->add_option("--instances", instances, "Instances per randomized criterion");
    sub->add_option("--criterion", criteria, "Run only these criteria (repeatable)");
    sub->add_option("--data", data_dir, "Directory with the pinned corpus and fixture");
    sub->add_flag("--timings", timings, "Include wall-clock seconds (breaks byte identity)");
  }

  {
    CLI::App* sub = command("verify", "Re-check a report written by dominate, hulls-disjoint or separate",
                            [&](json& r) {
                              const Scene& s = load();
                              const json report = json::parse(read_file(input_path));
                              const bool ok = verify_report(s, report);
                              r["verified"] = ok;
                              return verdict(ok);
                            });
    add_scene(sub);
    sub->add_option("--input", input_path, "Report JSON")->required();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  for (auto& [sub, run] : commands) {
    if (!sub->parsed()) continue;
    json report;
    report["command"] = sub->get_name();
    try {
      int code = run(report);
      // A non-member dominate report has no certificate; everything else does.
      if (verify && !(report["command"] == "dominate" && !report.contains("certificate"))) {
        const bool ok = verify_report(*scene, json::parse(report.dump()));
        report["verified"] = ok;
        if (!ok) code = kExitFalse;
      }
      out << report.dump(2) << "\n";
      return code;
    } catch (const PreconditionViolation& e) {
      report["error"] = e.what();
      out << report.dump(2) << "\n";
      return kExitFalse;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  return kExitUsage;
}

}  // namespace acx
