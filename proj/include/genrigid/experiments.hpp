#ifndef GENRIGID_EXPERIMENTS_HPP
#define GENRIGID_EXPERIMENTS_HPP

// Scenario files: one JSON object with a "kind", a mandatory "seed" and the
// kind's parameters. run_scenario validates, dispatches and returns the
// per-sample table and a summary; write_report puts both on disk.

#include "genrigid/acceptance.hpp"
#include "genrigid/io.hpp"

#include <set>

namespace genrigid::experiments {

inline constexpr const char* kVersion = "0.3.0";

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const {
    auto cell = [](const std::string& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
      return q + "\"";
    };
    std::string out;
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + cell(r[i]);
      out += "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
  }
};

struct Report {
  std::string name;
  std::string kind;
  json scenario;
  Table samples;
  json summary;
  bool unstable = false;  // a stability condition failed; exit status 3
  double seconds = 0.0;

  /// Summary document; wall clock is the only schedule-dependent field.
  json document() const {
    return {{"name", name},         {"kind", kind},       {"tool_version", kVersion},
            {"seed", scenario.at("seed")}, {"scenario", scenario}, {"summary", summary},
            {"samples", samples.rows.size()}, {"wall_clock_seconds", seconds}};
  }
};

inline const std::vector<std::string>& kinds() {
  static const std::vector<std::string> k{"gen-density", "isotropy-scan", "tannaka-check", "oracle-compare",
                                          "openness-probe", "axb-demo",     "psl2-demo",     "hopf-kernel"};
  return k;
}

namespace detail {

/// Typed access to scenario keys; rejects keys the kind does not read.
class Params {
 public:
  Params(const json& j, std::filesystem::path base) : j_(j), base_(std::move(base)) {
    if (!j_.is_object()) throw InputError("scenario must be a JSON object");
    used_ = {"kind", "name", "description"};
  }

  const std::filesystem::path& base_dir() const { return base_; }
  bool has(const std::string& k) const { return j_.contains(k); }

  const json& raw(const std::string& k) {
    used_.insert(k);
    if (!j_.contains(k)) throw InputError("scenario is missing '" + k + "'");
    return j_.at(k);
  }

  std::uint64_t seed() {
    const json& s = raw("seed");
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0))
      throw InputError("'seed' must be a non-negative integer");
    return s.get<std::uint64_t>();
  }

  std::size_t size(const std::string& k, std::optional<std::size_t> dflt = std::nullopt, std::size_t lo = 0) {
    used_.insert(k);
    if (!j_.contains(k)) {
      if (!dflt) throw InputError("scenario is missing '" + k + "'");
      return *dflt;
    }
    const json& v = j_.at(k);
    if (!v.is_number_integer() || v.get<long long>() < static_cast<long long>(lo))
      throw InputError("'" + k + "' must be an integer >= " + std::to_string(lo));
    return v.get<std::size_t>();
  }

  double real(const std::string& k, double dflt) {
    used_.insert(k);
    if (!j_.contains(k)) return dflt;
    const json& v = j_.at(k);
    if (!v.is_number() || !(v.get<double>() >= 0.0)) throw InputError("'" + k + "' must be a non-negative number");
    return v.get<double>();
  }

  bool flag(const std::string& k, bool dflt) {
    used_.insert(k);
    if (!j_.contains(k)) return dflt;
    if (!j_.at(k).is_boolean()) throw InputError("'" + k + "' must be true or false");
    return j_.at(k).get<bool>();
  }

  std::string choice(const std::string& k, const std::vector<std::string>& allowed, std::optional<std::string> dflt) {
    used_.insert(k);
    if (!j_.contains(k)) {
      if (!dflt) throw InputError("scenario is missing '" + k + "'");
      return *dflt;
    }
    if (!j_.at(k).is_string()) throw InputError("'" + k + "' must be a string");
    auto v = j_.at(k).get<std::string>();
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
      std::string all;
      for (const auto& a : allowed) all += (all.empty() ? "" : "|") + a;
      throw InputError("'" + k + "' must be one of " + all + ", got '" + v + "'");
    }
    return v;
  }

  /// Inline value under k, or the JSON file named by k + "_file".
  std::optional<json> inline_or_file(const std::string& k) {
    used_.insert(k);
    used_.insert(k + "_file");
    if (j_.contains(k)) return j_.at(k);
    if (j_.contains(k + "_file")) return read_json_file(resolve(j_.at(k + "_file").get<std::string>()));
    return std::nullopt;
  }

  std::filesystem::path resolve(const std::filesystem::path& p) const {
    if (p.is_absolute() || base_.empty() || std::filesystem::exists(p)) return p;
    return base_ / p;
  }

  void finish() const {
    for (const auto& [k, v] : j_.items())
      if (!used_.count(k)) throw InputError("unknown key '" + k + "' for this scenario kind");
  }

 private:
  const json& j_;
  std::filesystem::path base_;
  std::set<std::string> used_;
};

inline ProviderHandle provider(Params& p) {
  return make_provider(p.raw("provider").get<std::string>(), p.base_dir());
}

inline const MatrixRep<Exact>& finite_rep(const ProviderHandle& h) {
  if (!h.rep) throw InputError("this scenario kind needs a finite:<file> provider");
  return *h.rep;
}

inline std::string bit(bool x) { return x ? "1" : "0"; }
inline std::string num(std::size_t x) { return std::to_string(x); }

inline RestrictTo parse_on(Params& p) { return p.choice("on", {"w", "v"}, "w") == "w" ? RestrictTo::W : RestrictTo::V; }

inline void check_d(std::size_t d, std::size_t ambient) {
  if (d == 0 || d > ambient) throw InputError("d must lie in 1..dim V = " + std::to_string(ambient));
}

inline void check_ell(std::size_t ell, std::size_t d, RestrictTo on, std::size_t ambient) {
  if (ell > (on == RestrictTo::W ? d : ambient)) throw InputError("ell exceeds the dimension of the acted-on space");
}

inline Subspace<Exact> sample_w(const std::string& sampler, const MatrixRep<Exact>& rep, std::size_t d,
                                std::mt19937_64& rng) {
  return sampler == "structured" ? structured_subspace(rep, d, rng) : rational_subspace(rep.dim(), d, rng);
}

inline json profile_json(const BlockProfile& p) {
  json blocks = json::array();
  for (const auto& bl : p.blocks) blocks.push_back({{"dim", bl.dim}, {"mult", bl.mult}, {"trivial", bl.trivial}});
  return {{"blocks", blocks}, {"fixed_dim", p.fixed_dim}, {"target_dim", p.target_dim}};
}

inline json verdict_json(const Verdict& v) {
  json levels = json::array();
  for (const auto& l : v.levels)
    levels.push_back({{"n", l.n},
                      {"algebra_dim", l.algebra_dim},
                      {"compressed_dim", l.compressed_dim},
                      {"fixed_dim", l.fixed_dim},
                      {"max_block", l.max_block}});
  return {{"target", v.target},         {"ell", v.ell},
          {"result", v.result},         {"stabilized_at", v.stabilized_at},
          {"unstable", v.unstable},     {"saturated", v.saturated},
          {"compressed_dims", v.compressed_dims}, {"levels", levels},
          {"diagnostics", profile_json(v.diagnostics)}, {"spectral_agrees", v.spectral_agrees}};
}

inline TannakaOptions tannaka_opts(Params& p, std::uint64_t seed, const Tolerance& tol) {
  TannakaOptions o;
  o.n_max = p.size("n_max", 4, 1);
  o.seed = seed;
  o.tol = tol;
  o.diagnostics = p.flag("diagnostics", true);
  return o;
}

inline void require_exact(Params& p, const std::string& kind) {
  if (p.choice("mode", {"exact", "float"}, "exact") != "exact") throw InputError(kind + " runs in exact mode only");
}

// ---------------------------------------------------------------------------

inline void gen_density(Params& p, Report& r, const Tolerance& tol) {
  const auto seed = p.seed();
  const auto mode = p.choice("mode", {"exact", "float"}, "exact");
  auto alg = p.inline_or_file("algebra");
  if (!alg) throw InputError("gen-density needs 'algebra' or 'algebra_file'");
  const std::size_t n = p.size("n", 2, 1), trials = p.size("trials", std::nullopt, 1);
  const bool star = p.flag("star", false);
  auto sampler = parse_sampler(
      p.choice("sampler", {"uniform-rational", "gaussian-selfadjoint"},
               mode == "exact" ? "uniform-rational" : "gaussian-selfadjoint"));
  p.finish();
  ExperimentReport rep;
  std::size_t dim = 0;
  if (mode == "exact") {
    auto a = parse_algebra<Exact>(*alg, tol);
    dim = a.dim();
    rep = sample_generation_density(a, n, trials, sampler, star, seed);
  } else {
    auto a = parse_algebra<Complex>(*alg, tol);
    dim = a.dim();
    rep = sample_generation_density(a, n, trials, sampler, star, seed);
  }
  r.samples.header = {"index", "seed", "generating", "span_dim", "stabilization_degree"};
  for (const auto& t : rep.records)
    r.samples.rows.push_back({num(t.index), std::to_string(t.seed), bit(t.generating), num(t.span_dim),
                              num(t.stabilization_degree)});
  r.summary = {{"criterion", rep.criterion}, {"algebra_dim", dim},          {"tuple_size", n},
               {"trials", rep.trials},       {"good_count", rep.good_count}, {"fraction", rep.fraction()},
               {"bad_indices", rep.bad_indices}};
}

inline void isotropy_scan(Params& p, Report& r, const Tolerance& tol) {
  const auto seed = p.seed();
  auto h = provider(p);
  const auto& rep = finite_rep(h);
  const std::size_t d = p.size("d"), trials = p.size("trials", std::nullopt, 1), ell = p.size("ell", 0);
  const RestrictTo on = parse_on(p);
  const auto sampler = p.choice("sampler", {"structured", "rational"}, "structured");
  const auto criterion = p.choice("criterion", {"oracle", "tannaka", "both"}, "oracle");
  check_d(d, rep.dim());
  check_ell(ell, d, on, rep.dim());
  if (criterion != "oracle" && on == RestrictTo::V) throw InputError("the Tannaka criterion restricts to W (on = w)");
  auto opts = tannaka_opts(p, seed, tol);
  p.finish();
  const auto& form = h.provider->form();
  struct Row {
    std::size_t order = 0;
    bool oracle = false, tannaka = false, has_tannaka = false;
    std::string basis;
  };
  auto rows = parallel_map<Row>(trials, [&](std::size_t i) {
    auto rng = trial_rng(seed, i);
    auto w = sample_w(sampler, rep, d, rng);
    Row row;
    auto o = oracle_verdict(rep, form, {w}, 0, on, ell, tol);
    row.order = o.stabilizer_order;
    row.oracle = o.result;
    if (criterion != "oracle") {
      row.has_tannaka = true;
      row.tannaka = ell == 0 ? check_trivial(*h.provider, {w}, 0, opts).result
                             : check_ell_constrained(*h.provider, {w}, 0, ell, opts).result;
    }
    row.basis = basis_string(w);
    return row;
  });
  r.samples.header = {"index", "seed", "stabilizer_order", "oracle_good"};
  if (criterion != "oracle") r.samples.header.push_back("tannaka_good");
  r.samples.header.push_back("basis");
  std::size_t good = 0, disagree = 0;
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto& row = rows[i];
    bool verdict = criterion == "tannaka" ? row.tannaka : row.oracle;
    if (criterion == "both" && row.tannaka != row.oracle) ++disagree;
    verdict ? ++good : (bad.push_back(i), 0);
    std::vector<std::string> cells{num(i), std::to_string(trial_seed(seed, i)), num(row.order), bit(row.oracle)};
    if (row.has_tannaka) cells.push_back(bit(row.tannaka));
    cells.push_back(row.basis);
    r.samples.rows.push_back(std::move(cells));
  }
  r.summary = {{"provider", h.provider->describe()},
               {"d", d},
               {"ell", ell},
               {"on", on == RestrictTo::W ? "w" : "v"},
               {"criterion", criterion},
               {"trials", trials},
               {"good_count", good},
               {"fraction", static_cast<double>(good) / static_cast<double>(trials)},
               {"bad_indices", bad}};
  if (criterion == "both") r.summary["disagreements"] = disagree;
}

inline void tannaka_check(Params& p, Report& r, const Tolerance& tol) {
  const auto seed = p.seed();
  require_exact(p, "tannaka-check");
  auto h = provider(p);
  auto sub = p.inline_or_file("subspaces");
  if (!sub) throw InputError("tannaka-check needs 'subspaces' or 'subspaces_file'");
  ConstraintProfile prof;
  prof.ws = parse_subspaces(*sub, h.provider->dim());
  if (p.has("targets")) {
    for (const auto& t : p.raw("targets")) {
      if (!t.is_array() || t.size() != 2) throw InputError("targets must be [[j, ell], ...]");
      prof.targets.emplace_back(t[0].get<std::size_t>(), t[1].get<std::size_t>());
    }
  } else if (sub->is_object() && sub->contains("targets")) {
    for (const auto& t : sub->at("targets")) prof.targets.emplace_back(t[0].get<std::size_t>(), t[1].get<std::size_t>());
  } else {
    prof.targets.emplace_back(0, 0);
  }
  prof.validate(h.provider->dim());
  auto opts = tannaka_opts(p, seed, tol);
  p.finish();
  auto pv = check_profile(*h.provider, prof, opts);
  r.samples.header = {"target", "ell", "n", "algebra_dim", "compressed_dim", "fixed_dim", "max_block"};
  json per = json::array();
  for (const auto& [j, v] : pv.per_target) {
    for (const auto& l : v.levels)
      r.samples.rows.push_back({num(j), num(v.ell), num(l.n), num(l.algebra_dim), num(l.compressed_dim), num(l.fixed_dim),
                                num(l.max_block)});
    per.push_back(verdict_json(v));
    if (v.unstable) r.unstable = true;
  }
  r.summary = {{"provider", h.provider->describe()}, {"result", pv.result}, {"per_target", per}};
}

inline void oracle_compare(Params& p, Report& r, const Tolerance& tol) {
  const auto seed = p.seed();
  require_exact(p, "oracle-compare");
  auto h = provider(p);
  const auto& rep = finite_rep(h);
  const std::size_t trials = p.size("trials", std::nullopt, 1), ell_max = p.size("ell_max", 2);
  const std::size_t fixed_d = p.size("d", 0);
  const auto sampler = p.choice("sampler", {"structured", "rational"}, "structured");
  if (fixed_d) check_d(fixed_d, rep.dim());
  if (!fixed_d && rep.dim() < 2) throw InputError("sampling d in 1..dim V - 1 needs dim V >= 2");
  auto opts = tannaka_opts(p, seed, tol);
  p.finish();
  struct Cmp {
    std::size_t d = 0, ell = 0, stabilized_at = 0;
    bool tannaka = false, oracle = false, unstable = false;
  };
  auto per = parallel_map<std::vector<Cmp>>(trials, [&](std::size_t i) {
    auto rng = trial_rng(seed, i);
    const std::size_t d = fixed_d ? fixed_d : 1 + i % (rep.dim() - 1);
    auto w = sample_w(sampler, rep, d, rng);
    std::vector<genrigid::detail::TargetSpec> specs;
    for (std::size_t ell = 0; ell <= std::min(ell_max, d); ++ell) specs.push_back({0, ell});
    auto vs = genrigid::detail::run_levels(*h.provider, {w}, specs, opts);
    std::vector<Cmp> out;
    for (const auto& v : vs) {
      auto o = oracle_verdict(rep, h.provider->form(), {w}, 0, RestrictTo::W, v.ell, tol);
      out.push_back({d, v.ell, v.stabilized_at, v.result, o.result, v.unstable});
    }
    return out;
  });
  r.samples.header = {"index", "d", "ell", "tannaka", "oracle", "agree", "stabilized_at"};
  std::size_t total = 0, agree = 0, unstable = 0;
  for (std::size_t i = 0; i < trials; ++i)
    for (const auto& c : per[i]) {
      ++total;
      agree += c.tannaka == c.oracle;
      unstable += c.unstable;
      r.samples.rows.push_back(
          {num(i), num(c.d), num(c.ell), bit(c.tannaka), bit(c.oracle), bit(c.tannaka == c.oracle), num(c.stabilized_at)});
    }
  r.summary = {{"provider", h.provider->describe()},
               {"comparisons", total},
               {"agree", agree},
               {"agreement", static_cast<double>(agree) / static_cast<double>(total)},
               {"unstable", unstable}};
  if (unstable) r.unstable = true;
}

inline void openness_probe_kind(Params& p, Report& r, const Tolerance& tol) {
  const auto seed = p.seed();
  auto h = provider(p);
  const auto& rep = finite_rep(h);
  auto sub = p.inline_or_file("subspace");
  if (!sub) throw InputError("openness-probe needs 'subspace' or 'subspace_file'");
  auto w = parse_subspaces(*sub, rep.dim()).at(0);
  const std::size_t ell = p.size("ell", 0), probes = p.size("probes", 50, 1);
  const double eps = p.real("eps", 1e-3);
  const RestrictTo on = parse_on(p);
  check_ell(ell, w.dim(), on, rep.dim());
  p.finish();
  const auto& form = h.provider->form();
  std::function<bool(const Subspace<Exact>&)> crit = [&](const Subspace<Exact>& x) {
    return oracle_verdict(rep, form, {x}, 0, on, ell, tol).result;
  };
  const bool base = crit(w);
  auto pr = openness_probe<Exact>(w, eps, probes, crit, seed);
  static constexpr Direction cycle[] = {Direction::Both, Direction::RealOnly, Direction::ImagOnly};
  r.samples.header = {"probe", "direction", "good"};
  std::set<std::size_t> failed(pr.failed_probes.begin(), pr.failed_probes.end());
  for (std::size_t k = 0; k < probes; ++k)
    r.samples.rows.push_back({num(k), std::string(direction_name(cycle[k % 3])), bit(!failed.count(k))});
  r.summary = {{"provider", h.provider->describe()},
               {"subspace", basis_string(w)},
               {"ell", ell},
               {"eps", eps},
               {"base_good", base},
               {"probes", probes},
               {"failures", pr.failures},
               {"passed", base && pr.passed}};
}

inline void axb_demo(Params& p, Report& r) {
  const auto seed = p.seed();
  const std::size_t trials = p.size("trials", 1000), probes = p.size("probes", 50, 1);
  const double eps = p.real("eps", 1e-3);
  const bool complex_lines = p.flag("complex_lines", false);
  p.finish();
  auto scan = axb_good_set_scan(trials, seed, complex_lines);
  auto probe = axb_openness_probe(Exact(1), Exact(0), eps, probes, trial_seed(seed, ~std::uint64_t{0}));
  r.samples.header = {"index", "line", "good"};
  for (std::size_t i = 0; i < scan.lines.size(); ++i)
    r.samples.rows.push_back({num(i), scan.lines[i], bit(scan.report.verdicts[i])});
  r.summary = {{"lines", scan.report.trials},
               {"real_lines", scan.real_lines},
               {"good_count", scan.report.good_count},
               {"good_set", scan.good_set},
               {"probe_point", "[1:0]"},
               {"eps", eps},
               {"probes", probes},
               {"probe_failures", probe.failures},
               {"open_at_probe_point", probe.passed}};
}

inline void psl2_demo(Params& p, Report& r) {
  const auto seed = p.seed();
  const std::size_t nn = p.size("n", 2, 2), generic = p.size("generic", 200, 1),
                    orth = p.size("orthogonal", 20, 1);
  p.finish();
  auto fam = psl2_family_scan(nn, generic, orth, seed);
  r.samples.header = {"index", "p", "q", "p_perp_q", "stabilizer", "weight", "good", "lie_dim", "lie_consistent"};
  for (std::size_t i = 0; i < fam.records.size(); ++i) {
    const auto& x = fam.records[i];
    r.samples.rows.push_back({num(i), linear_form_string(x.p), linear_form_string(x.q), bit(x.verdict.p_perp_q),
                              x.verdict.stabilizer, std::to_string(x.verdict.weight), bit(x.verdict.good),
                              num(x.lie.dim), bit(x.lie_consistent)});
  }
  r.summary = {{"n", nn},
               {"generic_pairs", fam.generic},
               {"orthogonal_pairs", fam.orthogonal},
               {"dichotomy", fam.dichotomy},
               {"good_stratum", fam.good_stratum},
               {"claimed_stratum", "orthogonal"},
               {"agrees_with_claim", fam.good_stratum == "orthogonal"},
               {"lie_cross_check", fam.cross_check}};
}

inline void hopf_kernel_kind(Params& p, Report& r) {
  const auto seed = p.seed();
  auto h = provider(p);
  const auto& rep = finite_rep(h);
  auto sub = p.inline_or_file("subspace");
  std::vector<Subspace<Exact>> ws;
  std::string sampler;
  if (sub) {
    ws = parse_subspaces(*sub, rep.dim());
  } else {
    const std::size_t d = p.size("d"), trials = p.size("trials", std::nullopt, 1);
    check_d(d, rep.dim());
    sampler = p.choice("sampler", {"structured", "rational"}, "structured");
    for (std::size_t i = 0; i < trials; ++i) {
      auto rng = trial_rng(seed, i);
      ws.push_back(sample_w(sampler, rep, d, rng));
    }
  }
  p.finish();
  const std::size_t order = rep.images.size();
  r.samples.header = {"index", "dim_w", "locus_size", "quotient_dim", "isotropy_order", "agree", "locus"};
  std::size_t agree = 0;
  json first;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    auto gens = kernel_ideal_generators(rep, ws[i]);
    auto locus = zero_locus(gens, order);
    auto iso = isotropy_subgroup(rep, ws[i]).members;
    const std::size_t q = quotient_dimension(gens, order);
    const bool ok = locus == iso && q == iso.size() && rep.group->is_subgroup(locus);
    agree += ok;
    std::string ls;
    for (auto g : locus) ls += (ls.empty() ? "" : ";") + std::to_string(g);
    r.samples.rows.push_back({num(i), num(ws[i].dim()), num(locus.size()), num(q), num(iso.size()), bit(ok), ls});
    if (i == 0) first = {{"locus", locus}, {"isotropy_order", iso.size()}, {"quotient_dim", q}, {"agree", ok}};
  }
  r.summary = {{"provider", h.provider->describe()},
               {"group_order", order},
               {"coefficient_space_dim", coefficient_space(rep).dim()},
               {"subspaces", ws.size()},
               {"agree", agree},
               {"all_agree", agree == ws.size()}};
  if (ws.size() == 1) r.summary["first"] = first;
}

}  // namespace detail

/// Validates and runs one scenario. Relative file names are resolved against
/// base_dir when they do not exist relative to the working directory.
inline Report run_scenario(const json& scenario, const std::filesystem::path& base_dir = {},
                           const Tolerance& tol = {}) {
  auto t0 = std::chrono::steady_clock::now();
  if (!scenario.is_object()) throw InputError("scenario must be a JSON object");
  if (!scenario.contains("kind") || !scenario.at("kind").is_string()) throw InputError("scenario needs a string 'kind'");
  Report r;
  r.kind = scenario.at("kind").get<std::string>();
  if (std::find(kinds().begin(), kinds().end(), r.kind) == kinds().end())
    throw InputError("unknown scenario kind '" + r.kind + "'");
  if (!scenario.contains("seed")) throw InputError("scenario is missing the mandatory 'seed'");
  r.name = scenario.value("name", r.kind);
  if (r.name.empty() || r.name.find_first_of("/\\") != std::string::npos)
    throw InputError("scenario name must be a non-empty file stem");
  r.scenario = scenario;
  detail::Params p(scenario, base_dir);
  try {
    if (r.kind == "gen-density") detail::gen_density(p, r, tol);
    else if (r.kind == "isotropy-scan") detail::isotropy_scan(p, r, tol);
    else if (r.kind == "tannaka-check") detail::tannaka_check(p, r, tol);
    else if (r.kind == "oracle-compare") detail::oracle_compare(p, r, tol);
    else if (r.kind == "openness-probe") detail::openness_probe_kind(p, r, tol);
    else if (r.kind == "axb-demo") detail::axb_demo(p, r);
    else if (r.kind == "psl2-demo") detail::psl2_demo(p, r);
    else detail::hopf_kernel_kind(p, r);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad scenario value: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Writes <name>.csv and <name>.json into out_dir.
inline void write_report(const Report& r, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::ofstream csv(out_dir / (r.name + ".csv"), std::ios::binary);
  csv << r.samples.to_csv();
  std::ofstream js(out_dir / (r.name + ".json"), std::ios::binary);
  js << r.document().dump(2) << "\n";
  if (!csv || !js) throw std::runtime_error("cannot write reports to " + out_dir.string());
}

}  // namespace genrigid::experiments

#endif  // GENRIGID_EXPERIMENTS_HPP
