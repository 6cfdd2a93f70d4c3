// genrigid: experiment runner. Every subcommand except `suite` builds a
// scenario and hands it to run_scenario; `run` reads the scenario from a file.

#include "genrigid/experiments.hpp"

#include <iostream>

#include "CLI11.hpp"

namespace {

using genrigid::json;
namespace ex = genrigid::experiments;

enum Exit { kOk = 0, kFailure = 1, kValidation = 2, kBudget = 3 };

struct Common {
  std::string out = "reports";
  double tau = genrigid::Tolerance{}.tau;
  bool quiet = false;
};

int emit(const ex::Report& r, const Common& c) {
  ex::write_report(r, c.out);
  if (!c.quiet) std::cout << r.document().dump(2) << "\n";
  if (r.unstable) {
    std::cerr << "genrigid: stability condition failed (see " << r.name << ".json)\n";
    return kBudget;
  }
  return kOk;
}

int run_json(const json& scenario, const std::filesystem::path& base, const Common& c) {
  genrigid::Tolerance tol;
  tol.tau = c.tau;
  return emit(ex::run_scenario(scenario, base, tol), c);
}

int guarded(const std::function<int()>& fn) {
  try {
    return fn();
  } catch (const genrigid::InputError& e) {
    std::cerr << "genrigid: invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const json::exception& e) {
    std::cerr << "genrigid: invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const genrigid::BudgetError& e) {
    std::cerr << "genrigid: budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const genrigid::NumericalError& e) {
    std::cerr << "genrigid: numerical instability: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "genrigid: " << e.what() << "\n";
    return kFailure;
  }
}

/// "0:0,1:2" -> [[0,0],[1,2]]
json parse_profile(const std::string& s) {
  json t = json::array();
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto end = s.find(',', pos);
    auto item = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    auto colon = item.find(':');
    if (colon == std::string::npos) throw genrigid::InputError("profile entries look like j:ell, got '" + item + "'");
    try {
      t.push_back({std::stoul(item.substr(0, colon)), std::stoul(item.substr(colon + 1))});
    } catch (const std::logic_error&) {
      throw genrigid::InputError("profile entries look like j:ell, got '" + item + "'");
    }
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return t;
}

int suite(const Common& c, double scale, std::uint64_t seed, std::size_t n_max) {
  genrigid::acceptance::Settings s;
  s.tol.tau = c.tau;
  s.scale = scale;
  s.seed = seed;
  s.n_max = n_max;
  auto results = genrigid::acceptance::run_all(s);
  ex::Table table;
  table.header = {"criterion", "name", "passed", "detail"};
  json timing = json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    table.rows.push_back({std::to_string(r.id), r.name, r.passed ? "1" : "0", r.detail});
    timing.push_back({{"criterion", r.id}, {"seconds", r.seconds}});
    std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.id << "  " << r.name << ": " << r.detail << "\n";
  }
  std::filesystem::create_directories(c.out);
  std::ofstream(std::filesystem::path(c.out) / "suite.csv", std::ios::binary) << table.to_csv();
  json doc = {{"tool_version", ex::kVersion}, {"seed", seed},   {"scale", scale},
              {"tolerance", c.tau},           {"passed", all}, {"timing", timing}};
  std::ofstream(std::filesystem::path(c.out) / "suite.json", std::ios::binary) << doc.dump(2) << "\n";
  std::cout << (all ? "all criteria pass" : "some criteria FAIL") << "\n";
  return all ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic rigidity experiments: isotropy oracles, Tannaka checks, genericity scans"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--out", c.out, "report directory")->capture_default_str();
  app.add_option("--tolerance", c.tau, "float tolerance tau")->capture_default_str();
  app.add_flag("--quiet", c.quiet, "do not print the summary");

  std::function<int()> action;

  auto* run = app.add_subcommand("run", "run a scenario file");
  std::string scenario_file;
  run->add_option("scenario", scenario_file)->required();
  run->callback([&] {
    action = [&] {
      std::filesystem::path p(scenario_file);
      return run_json(genrigid::read_json_file(p), p.parent_path(), c);
    };
  });

  auto* su = app.add_subcommand("suite", "run the acceptance criteria");
  double scale = 1.0;
  std::uint64_t suite_seed = genrigid::acceptance::Settings{}.seed;
  std::size_t suite_nmax = 4;
  su->add_option("--scale", scale, "sample-count multiplier (1 = release thresholds)")->capture_default_str();
  su->add_option("--seed", suite_seed)->capture_default_str();
  su->add_option("--nmax", suite_nmax)->capture_default_str();
  su->callback([&] { action = [&] { return suite(c, scale, suite_seed, suite_nmax); }; });

  // Per-module shortcuts. Options land in `sc` under their scenario keys.
  json sc;
  std::map<const CLI::App*, std::function<void()>> builders;
  auto shortcut = [&](const std::string& name, const std::string& kind, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&, kind, s] {
      action = [&, kind, s] {
        builders.at(s)();
        sc["kind"] = kind;
        sc["name"] = kind;
        return run_json(sc, {}, c);
      };
    });
    return s;
  };

  std::string provider, algebra, subspace_file, mode = "exact", sampler, on = "w", profile, criterion;
  std::uint64_t seed = 0;
  std::size_t d = 0, trials = 0, ell = 0, n = 0, nmax = 4, probes = 50, orth = 20, ell_max = 2;
  double eps = 1e-3;
  bool star = false, complex_lines = false;

  auto* gd = shortcut("gen-density", "gen-density", "Monte Carlo generation density of random tuples");
  gd->add_option("--algebra", algebra, "algebra JSON file")->required();
  gd->add_option("--n", n, "tuple size")->default_val(2);
  gd->add_option("--trials", trials)->required();
  gd->add_option("--seed", seed)->required();
  gd->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}))->default_val("exact");
  gd->add_option("--sampler", sampler)->check(CLI::IsMember({"uniform-rational", "gaussian-selfadjoint"}));
  gd->add_flag("--star", star, "close under the involution too");
  builders[gd] = [&] {
    sc = {{"algebra_file", algebra}, {"n", n}, {"trials", trials}, {"seed", seed}, {"mode", mode}, {"star", star}};
    if (!sampler.empty()) sc["sampler"] = sampler;
  };

  auto add_scan = [&](const std::string& name, const std::string& help, bool with_criterion) {
    auto* s = shortcut(name, "isotropy-scan", help);
    s->add_option("--provider", provider, "finite:<file>")->required();
    s->add_option("--d", d)->required();
    s->add_option("--trials", trials)->required();
    s->add_option("--ell", ell)->default_val(0);
    s->add_option("--on", on)->check(CLI::IsMember({"w", "v"}))->default_val("w");
    s->add_option("--seed", seed)->required();
    s->add_option("--sampler", sampler)->check(CLI::IsMember({"structured", "rational"}));
    if (with_criterion) {
      s->add_option("--nmax", nmax)->default_val(4);
      s->add_option("--criterion", criterion)->check(CLI::IsMember({"oracle", "tannaka", "both"}))->default_val("both");
    }
    builders[s] = [&, with_criterion] {
      sc = {{"provider", provider}, {"d", d}, {"trials", trials}, {"ell", ell}, {"on", on}, {"seed", seed}};
      if (!sampler.empty()) sc["sampler"] = sampler;
      if (with_criterion) {
        sc["criterion"] = criterion;
        sc["n_max"] = nmax;
      }
    };
  };
  add_scan("isotropy-scan", "isotropy-oracle verdicts on sampled subspaces", false);
  add_scan("scan", "genericity scan with oracle and/or Tannaka criterion", true);

  auto* tc = shortcut("tannaka-check", "tannaka-check", "Tannaka intertwiner verdicts for a constraint profile");
  tc->add_option("--provider", provider, "finite:<file> or sl2:<n>")->required();
  tc->add_option("--subspace-file", subspace_file)->required();
  tc->add_option("--profile", profile, "targets j:ell,... (default 0:0)");
  tc->add_option("--nmax", nmax)->default_val(4);
  tc->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}))->default_val("exact");
  tc->add_option("--seed", seed, "seed for the random central elements")->default_val(0);
  builders[tc] = [&] {
    sc = {{"provider", provider}, {"subspaces_file", subspace_file}, {"n_max", nmax}, {"mode", mode}, {"seed", seed}};
    if (!profile.empty()) sc["targets"] = parse_profile(profile);
  };

  auto* oc = shortcut("oracle-compare", "oracle-compare", "Tannaka verdicts against the isotropy oracle");
  oc->add_option("--provider", provider, "finite:<file>")->required();
  oc->add_option("--trials", trials)->required();
  oc->add_option("--seed", seed)->required();
  oc->add_option("--d", d, "fixed d (default cycles 1..dim V-1)")->default_val(0);
  oc->add_option("--ell-max", ell_max)->default_val(2);
  oc->add_option("--nmax", nmax)->default_val(4);
  oc->add_option("--sampler", sampler)->check(CLI::IsMember({"structured", "rational"}));
  builders[oc] = [&] {
    sc = {{"provider", provider}, {"trials", trials}, {"seed", seed}, {"d", d}, {"ell_max", ell_max}, {"n_max", nmax}};
    if (!sampler.empty()) sc["sampler"] = sampler;
  };

  auto* pr = shortcut("probe", "openness-probe", "openness probe around a subspace");
  pr->add_option("--provider", provider, "finite:<file>")->required();
  pr->add_option("--subspace-file", subspace_file)->required();
  pr->add_option("--ell", ell)->default_val(0);
  pr->add_option("--eps", eps)->default_val(1e-3);
  pr->add_option("--probes", probes)->default_val(50);
  pr->add_option("--on", on)->check(CLI::IsMember({"w", "v"}))->default_val("w");
  pr->add_option("--seed", seed)->required();
  builders[pr] = [&] {
    sc = {{"provider", provider}, {"subspace_file", subspace_file}, {"ell", ell}, {"eps", eps},
          {"probes", probes},     {"on", on},                       {"seed", seed}};
  };

  auto* ab = shortcut("axb-demo", "axb-demo", "ax+b good-set scan and openness probe");
  ab->add_option("--trials", trials)->default_val(1000);
  ab->add_option("--eps", eps)->default_val(1e-3);
  ab->add_option("--probes", probes)->default_val(50);
  ab->add_option("--seed", seed)->required();
  ab->add_flag("--complex-lines", complex_lines, "scan Gaussian-rational lines instead of real ones");
  builders[ab] = [&] {
    sc = {{"trials", trials}, {"eps", eps}, {"probes", probes}, {"seed", seed}, {"complex_lines", complex_lines}};
  };

  auto* ps = shortcut("psl2-demo", "psl2-demo", "PSU(2) lines p^{2n-1}q: orthogonality dichotomy");
  ps->add_option("--n", n)->default_val(2);
  ps->add_option("--trials", trials, "generic pairs")->default_val(200);
  ps->add_option("--orthogonal", orth)->default_val(20);
  ps->add_option("--seed", seed)->required();
  builders[ps] = [&] {
    sc = {{"n", n}, {"generic", trials}, {"orthogonal", orth}, {"seed", seed}};
  };

  auto* hk = shortcut("hopf-kernel", "hopf-kernel", "zero locus of the kernel ideal against G_W");
  hk->add_option("--provider", provider, "finite:<file>")->required();
  auto* hsf = hk->add_option("--subspace-file", subspace_file);
  auto* hd = hk->add_option("--d", d, "sample subspaces of this dimension");
  hk->add_option("--trials", trials)->default_val(1);
  hk->add_option("--seed", seed)->default_val(0);
  hsf->excludes(hd);
  builders[hk] = [&] {
    if (subspace_file.empty() && d == 0) throw genrigid::InputError("hopf-kernel needs --subspace-file or --d");
    sc = {{"provider", provider}, {"seed", seed}};
    if (!subspace_file.empty())
      sc["subspace_file"] = subspace_file;
    else
      sc.update({{"d", d}, {"trials", trials}});
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }
  return action ? guarded(action) : kValidation;
}
