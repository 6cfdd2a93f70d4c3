#ifndef GENRIGID_GRASSMANN_HPP
#define GENRIGID_GRASSMANN_HPP

// Grassmannian sampling, perturbations along real and imaginary directions,
// Monte Carlo genericity, openness probes, and the two closed-form families
// (ax+b lines in CP^1 and the PSU(2) lines C p^{2n-1} q in V_{2n}).

#include "genrigid/isotropy.hpp"
#include "genrigid/random.hpp"

#include <charconv>
#include <chrono>
#include <functional>
#include <optional>

namespace genrigid {

enum class SamplerMode { FloatHaar, ExactRational };

inline Complex complex_gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  double re = g(rng);
  double im = g(rng);
  return {re, im};
}

/// Orthonormalized complex Gaussian frame; the span is Haar distributed.
inline Subspace<Complex> haar_subspace(std::size_t ambient, std::size_t d, std::mt19937_64& rng) {
  if (d > ambient) throw InputError("d exceeds the ambient dimension");
  if (d == 0) return Subspace<Complex>::zero(ambient);
  Eigen::MatrixXcd g(static_cast<Eigen::Index>(ambient), static_cast<Eigen::Index>(d));
  for (Eigen::Index j = 0; j < g.cols(); ++j)
    for (Eigen::Index i = 0; i < g.rows(); ++i) g(i, j) = complex_gaussian(rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(g.rows(), g.cols());
  return Subspace<Complex>(from_eigen(q));
}

/// Column span of a Gaussian-integer matrix with entries in [-bound, bound],
/// resampled until it has full column rank.
inline Subspace<Exact> rational_subspace(std::size_t ambient, std::size_t d, std::mt19937_64& rng, long bound = 100) {
  if (d > ambient) throw InputError("d exceeds the ambient dimension");
  if (d == 0) return Subspace<Exact>::zero(ambient);
  std::uniform_int_distribution<long> u(-bound, bound);
  for (;;) {
    Matrix<Exact> b(ambient, d);
    for (std::size_t i = 0; i < ambient; ++i)
      for (std::size_t j = 0; j < d; ++j) b(i, j) = Exact(Rational(u(rng)), Rational(u(rng)));
    if (rank(b) == d) return Subspace<Exact>(std::move(b));
  }
}

/// Subspaces biased towards non-trivial stabilizers: spans of eigenvectors of
/// a random element (eigenvalues +-1, +-i), of coordinate vectors and orbit
/// sums, or generic rational spans, chosen with fixed proportions.
inline Subspace<Exact> structured_subspace(const MatrixRep<Exact>& rep, std::size_t d, std::mt19937_64& rng) {
  const std::size_t n = rep.dim();
  if (d > n) throw InputError("d exceeds the ambient dimension");
  if (d == 0) return Subspace<Exact>::zero(n);
  std::uniform_int_distribution<int> mode_pick(0, 3);
  std::uniform_int_distribution<long> small(-3, 3);
  const int mode = mode_pick(rng);
  if (mode == 0) return rational_subspace(n, d, rng, 5);

  std::vector<std::vector<std::vector<Exact>>> pools;  // pools of spanning sets
  if (mode == 1 || mode == 2) {
    std::uniform_int_distribution<std::size_t> elem(0, rep.images.size() - 1);
    const Matrix<Exact>& g = rep.images[elem(rng)];
    for (const Exact& lam : {Exact(1), Exact(-1), imag_unit(), -imag_unit()}) {
      Matrix<Exact> k = kernel_basis(g - lam * Matrix<Exact>::identity(n));
      if (k.cols() == 0) continue;
      std::vector<std::vector<Exact>> pool;
      for (std::size_t c = 0; c < k.cols(); ++c) pool.push_back(k.col(c));
      pools.push_back(std::move(pool));
    }
  }
  if (mode == 3 || pools.empty()) {
    std::vector<std::vector<Exact>> pool;
    for (std::size_t i = 0; i < n; ++i) {
      pool.push_back(Matrix<Exact>::identity(n).col(i));
      std::uniform_int_distribution<std::size_t> elem(0, rep.images.size() - 1);
      const Matrix<Exact>& g = rep.images[elem(rng)];
      std::vector<Exact> orbit(n, Field<Exact>::zero()), v = pool.back();
      Matrix<Exact> pw = Matrix<Exact>::identity(n);
      for (std::size_t k = 0; k < rep.images.size(); ++k) {
        auto col = (pw * Matrix<Exact>::column(v)).col(0);
        for (std::size_t j = 0; j < n; ++j) orbit[j] += col[j];
        pw = g * pw;
        if (pw == Matrix<Exact>::identity(n)) break;
      }
      pool.push_back(orbit);
    }
    pools.push_back(std::move(pool));
  }
  IndependentSet<Exact> set(n);
  for (int attempt = 0; attempt < 64 && set.size() < d; ++attempt) {
    std::uniform_int_distribution<std::size_t> pick(0, pools.size() - 1);
    const auto& pool = pools[pick(rng)];
    std::vector<Exact> v(n, Field<Exact>::zero());
    if (mode == 2) {
      for (const auto& b : pool) {
        long c = small(rng);
        for (std::size_t j = 0; j < n; ++j) v[j] += Exact(c) * b[j];
      }
    } else {
      std::uniform_int_distribution<std::size_t> pv(0, pool.size() - 1);
      v = pool[pv(rng)];
    }
    set.insert(v);
  }
  while (set.size() < d) set.insert(rational_subspace(n, 1, rng, 5).basis().col(0));
  return Subspace<Exact>(from_columns(set.vectors(), n));
}

// ---------------------------------------------------------------------------
// Perturbations

enum class Direction { Both, RealOnly, ImagOnly };

inline std::string_view direction_name(Direction d) {
  switch (d) {
    case Direction::Both: return "both";
    case Direction::RealOnly: return "real";
    case Direction::ImagOnly: return "imag";
  }
  return "both";
}

/// span(basis + eps (A + iB)); B = 0 for RealOnly, A = 0 for ImagOnly.
inline Subspace<Complex> perturb(const Subspace<Complex>& w, double eps, std::mt19937_64& rng,
                                 Direction dir = Direction::Both) {
  std::normal_distribution<double> g(0.0, 1.0);
  for (;;) {
    Matrix<Complex> b = w.basis();
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) {
        double a = g(rng), c = g(rng);
        if (dir == Direction::RealOnly) c = 0.0;
        if (dir == Direction::ImagOnly) a = 0.0;
        b(i, j) += eps * Complex(a, c);
      }
    if (rank(b) == w.dim()) return Subspace<Complex>(std::move(b));
  }
}

inline Rational decimal_rational(double x) {
  char buf[512];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed);
  return parse_rational(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
}

/// Exact version: the Gaussian entries are rounded to the grid 2^-20 and
/// eps is read as the exact decimal it prints as.
inline Subspace<Exact> perturb_exact(const Subspace<Exact>& w, double eps, std::mt19937_64& rng,
                                     Direction dir = Direction::Both) {
  std::normal_distribution<double> g(0.0, 1.0);
  const Rational e = decimal_rational(eps);
  const double grid = 1048576.0;
  auto round = [&](double x) { return make_rational(static_cast<long>(std::llround(x * grid)), 1048576L); };
  for (;;) {
    Matrix<Exact> b = w.basis();
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) {
        Rational a = round(g(rng)), c = round(g(rng));
        if (dir == Direction::RealOnly) c = 0;
        if (dir == Direction::ImagOnly) a = 0;
        b(i, j) += Exact(Rational(e * a), Rational(e * c));
      }
    if (rank(b) == w.dim()) return Subspace<Exact>(std::move(b));
  }
}

/// Largest principal angle sine between equal-dimensional subspaces (gap).
inline double gap_distance(const Subspace<Complex>& a, const Subspace<Complex>& b) {
  if (a.dim() != b.dim()) throw InputError("gap distance needs equal dimensions");
  if (a.dim() == 0) return 0.0;
  auto orth = [](const Subspace<Complex>& s) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(to_eigen(s.basis()));
    return Eigen::MatrixXcd(qr.householderQ() * Eigen::MatrixXcd::Identity(s.ambient_dim(), s.dim()));
  };
  Eigen::MatrixXcd qa = orth(a), qb = orth(b);
  Eigen::MatrixXcd diff = qa * qa.adjoint() - qb * qb.adjoint();
  return diff.operatorNorm();
}

// ---------------------------------------------------------------------------
// Genericity experiments and openness probes

struct BadSample {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::string basis;  // exact or float entries
};

struct GenericityReport {
  std::string criterion;
  std::size_t trials = 0;
  std::size_t good_count = 0;
  std::vector<BadSample> bad_samples;
  std::vector<bool> verdicts;  // per trial
  std::uint64_t seed = 0;
  double seconds = 0.0;

  double fraction() const { return trials ? static_cast<double>(good_count) / static_cast<double>(trials) : 0.0; }
};

template <class S>
std::string basis_string(const Subspace<S>& w) {
  std::string out = "[";
  for (std::size_t j = 0; j < w.dim(); ++j) {
    out += j ? ",[" : "[";
    for (std::size_t i = 0; i < w.ambient_dim(); ++i) {
      if (i) out += ",";
      out += to_string(w.basis()(i, j));
    }
    out += "]";
  }
  return out + "]";
}

/// Samples W from (seed, index), evaluates the criterion; deterministic.
template <class S>
GenericityReport genericity_experiment(const std::function<Subspace<S>(std::mt19937_64&)>& sampler,
                                       const std::function<bool(const Subspace<S>&)>& criterion,
                                       std::string name, std::size_t trials, std::uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  GenericityReport rep;
  rep.criterion = std::move(name);
  rep.trials = trials;
  rep.seed = seed;
  struct Out {
    bool good = false;
    std::string basis;
  };
  auto outs = parallel_map<Out>(trials, [&](std::size_t i) {
    auto rng = trial_rng(seed, i);
    auto w = sampler(rng);
    bool good = criterion(w);
    return Out{good, good ? std::string() : basis_string(w)};
  });
  for (std::size_t i = 0; i < trials; ++i) {
    rep.verdicts.push_back(outs[i].good);
    if (outs[i].good)
      ++rep.good_count;
    else
      rep.bad_samples.push_back({i, trial_seed(seed, i), outs[i].basis});
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

struct ProbeResult {
  bool passed = true;
  std::size_t probes = 0;
  std::size_t failures = 0;
  std::vector<std::size_t> failed_probes;
};

/// Probe k perturbs along direction k mod 3 (both, real-only, imag-only).
template <class S>
ProbeResult openness_probe(const Subspace<S>& w, double eps, std::size_t probes,
                           const std::function<bool(const Subspace<S>&)>& criterion, std::uint64_t seed) {
  ProbeResult res;
  res.probes = probes;
  static constexpr Direction cycle[] = {Direction::Both, Direction::RealOnly, Direction::ImagOnly};
  for (std::size_t k = 0; k < probes; ++k) {
    auto rng = trial_rng(seed, k);
    Direction dir = cycle[k % 3];
    bool ok;
    if constexpr (Field<S>::exact)
      ok = criterion(perturb_exact(w, eps, rng, dir));
    else
      ok = criterion(perturb(w, eps, rng, dir));
    if (!ok) {
      ++res.failures;
      res.failed_probes.push_back(k);
    }
  }
  res.passed = res.failures == 0;
  return res;
}

// ---------------------------------------------------------------------------
// ax+b on CP^1

struct AxbScanReport {
  GenericityReport report;
  std::vector<std::string> lines;     // every scanned line, in scan order
  std::vector<std::string> good_set;  // good points among the scanned lines
  bool real_lines = true;
};

inline std::string projective_string(const Exact& x, const Exact& y) {
  return "[" + to_string(x) + ":" + to_string(y) + "]";
}

/// Scans [1:0], [0:1] and `trials` random lines. By default lines are real
/// (x, y rational); with complex_lines they have Gaussian-rational coordinates.
inline AxbScanReport axb_good_set_scan(std::size_t trials, std::uint64_t seed, bool complex_lines = false) {
  auto t0 = std::chrono::steady_clock::now();
  AxbScanReport out;
  out.real_lines = !complex_lines;
  std::vector<std::pair<Exact, Exact>> lines{{Exact(1), Exact(0)}, {Exact(0), Exact(1)}};
  for (std::size_t i = 0; i < trials; ++i) {
    auto rng = trial_rng(seed, i);
    std::uniform_int_distribution<long> u(-1000, 1000);
    Exact x, y;
    do {
      x = complex_lines ? Exact(Rational(u(rng)), Rational(u(rng))) : Exact(u(rng));
      y = complex_lines ? Exact(Rational(u(rng)), Rational(u(rng))) : Exact(u(rng));
    } while (x.is_zero() && y.is_zero());
    lines.emplace_back(x, y);
  }
  auto& rep = out.report;
  rep.criterion = "ax+b isotropy acts trivially on the line";
  rep.trials = lines.size();
  rep.seed = seed;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& [x, y] = lines[i];
    bool good = axb_isotropy(x, y).good;
    rep.verdicts.push_back(good);
    std::string name = y.is_zero() ? "[1:0]" : projective_string(x, y);
    out.lines.push_back(projective_string(x, y));
    if (good) {
      ++rep.good_count;
      if (std::find(out.good_set.begin(), out.good_set.end(), name) == out.good_set.end()) out.good_set.push_back(name);
    } else {
      rep.bad_samples.push_back({i, i >= 2 ? trial_seed(seed, i - 2) : 0, projective_string(x, y)});
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

/// Openness probe of the ax+b verdict at [x:y] (exact perturbations).
inline ProbeResult axb_openness_probe(const Exact& x, const Exact& y, double eps, std::size_t probes,
                                      std::uint64_t seed) {
  Matrix<Exact> b(2, 1);
  b(0, 0) = x;
  b(1, 0) = y;
  std::function<bool(const Subspace<Exact>&)> crit = [](const Subspace<Exact>& l) {
    return axb_isotropy(l.basis()(0, 0), l.basis()(1, 0)).good;
  };
  return openness_probe<Exact>(Subspace<Exact>(b), eps, probes, crit, seed);
}

// ---------------------------------------------------------------------------
// PSU(2) lines C p^{2n-1} q in V_{2n}

/// Linear form p = p[0] x + p[1] y.
template <class S>
using LinearForm = std::array<S, 2>;

template <class S>
bool proportional(const LinearForm<S>& p, const LinearForm<S>& q) {
  S det = p[0] * q[1] - p[1] * q[0];
  if constexpr (Field<S>::exact)
    return Field<S>::is_zero(det);
  else
    return std::abs(det) <= 1e-12 * std::max({std::abs(p[0]), std::abs(p[1]), 1.0}) *
                                std::max({std::abs(q[0]), std::abs(q[1]), 1.0});
}

/// Coordinates of p^{2n-1} q on x^{2n-k} y^k, k = 0..2n.
template <class S>
std::vector<S> psl2_line(std::size_t n, const LinearForm<S>& p, const LinearForm<S>& q) {
  if (n == 0) throw InputError("n must be at least 1");
  if ((Field<S>::is_zero(p[0], 0.0) && Field<S>::is_zero(p[1], 0.0)) ||
      (Field<S>::is_zero(q[0], 0.0) && Field<S>::is_zero(q[1], 0.0)))
    throw InputError("linear forms must be nonzero");
  if (proportional(p, q)) throw InputError("p and q are proportional");
  std::vector<S> poly{Field<S>::one()};
  auto times = [](const std::vector<S>& a, const LinearForm<S>& l) {
    std::vector<S> out(a.size() + 1, Field<S>::zero());
    for (std::size_t k = 0; k < a.size(); ++k) {
      out[k] += a[k] * l[0];
      out[k + 1] += a[k] * l[1];
    }
    return out;
  };
  for (std::size_t k = 0; k + 1 < 2 * n; ++k) poly = times(poly, p);
  return times(poly, q);
}

struct Psl2Verdict {
  bool good = false;
  bool p_perp_q = false;
  std::string stabilizer;  // "torus" or "trivial"
  long weight = 0;         // torus character weight on the line
};

/// Closed form for n >= 2: multiplicities 2n-1 != 1 force stabilizers to fix
/// [p] and [q]. Antipodal roots give the maximal torus acting on the line
/// with weight 2n-2; otherwise only the identity fixes both points.
template <class S>
Psl2Verdict psl2_line_verdict(std::size_t n, const LinearForm<S>& p, const LinearForm<S>& q) {
  if (n < 2) throw InputError("the closed form needs n >= 2");
  psl2_line(n, p, q);  // validates
  S ip = Field<S>::conj(p[0]) * q[0] + Field<S>::conj(p[1]) * q[1];
  Psl2Verdict v;
  if constexpr (Field<S>::exact)
    v.p_perp_q = Field<S>::is_zero(ip);
  else
    v.p_perp_q = std::abs(ip) <= 1e-12 * std::hypot(std::abs(p[0]), std::abs(p[1])) *
                                     std::hypot(std::abs(q[0]), std::abs(q[1]));
  if (v.p_perp_q) {
    v.stabilizer = "torus";
    v.weight = static_cast<long>(2 * n - 2);
    v.good = v.weight == 0;
  } else {
    v.stabilizer = "trivial";
    v.good = true;
  }
  return v;
}

struct LieStabilizer {
  std::size_t dim = 0;     // dimension of the stabilizer Lie algebra in su(2)
  bool acts_trivially = true;
};

/// Numerical cross-check: X in su(2) with X v in C v, via the sl2 action on
/// V_{2n}; also whether such X act on the line by a nonzero scalar.
inline LieStabilizer psl2_lie_stabilizer(std::size_t n, const std::vector<Complex>& v) {
  auto rep = sl2_sym_power<Exact>(2 * n);
  const Complex i(0.0, 1.0);
  Eigen::MatrixXcd e = to_eigen(convert_matrix<Complex>(rep.e)), f = to_eigen(convert_matrix<Complex>(rep.f)),
                   h = to_eigen(convert_matrix<Complex>(rep.h));
  std::vector<Eigen::MatrixXcd> su2{i * h, e - f, i * (e + f)};
  Eigen::VectorXcd x(static_cast<Eigen::Index>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k) x(static_cast<Eigen::Index>(k)) = v[k];
  x.normalize();
  // Orthogonal complement projection for the invariant form G: v^H G = row.
  Eigen::MatrixXcd gram = to_eigen(convert_matrix<Complex>(rep.form.gram()));
  Complex nn = (x.adjoint() * gram * x)(0, 0);
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(x.size(), x.size()) - x * (x.adjoint() * gram) / nn;
  Eigen::MatrixXd sys(2 * x.size(), 3);
  for (int k = 0; k < 3; ++k) {
    Eigen::VectorXcd r = proj * su2[static_cast<std::size_t>(k)] * x;
    sys.col(k) << r.real(), r.imag();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys, Eigen::ComputeFullV);
  LieStabilizer out;
  const auto& sv = svd.singularValues();
  double top = std::max(sv(0), 1.0);
  for (int k = 0; k < 3; ++k)
    if (sv(k) <= 1e-9 * top) {
      ++out.dim;
      Eigen::VectorXcd y = Eigen::VectorXcd::Zero(x.size());
      for (int j = 0; j < 3; ++j) y += svd.matrixV()(j, k) * (su2[static_cast<std::size_t>(j)] * x);
      if (y.norm() > 1e-9) out.acts_trivially = false;
    }
  return out;
}

struct Psl2Record {
  LinearForm<Exact> p, q;
  Psl2Verdict verdict;
  LieStabilizer lie;
  bool lie_consistent = false;
};

struct Psl2FamilyReport {
  std::size_t n = 0;
  std::vector<Psl2Record> records;
  std::size_t generic = 0, orthogonal = 0;
  bool dichotomy = false;     // good-bit constant on each stratum, different across
  bool cross_check = false;   // closed form matches the Lie-algebra stabilizer everywhere
  std::string good_stratum;   // "orthogonal", "non-orthogonal", or empty without a dichotomy
};

inline std::string linear_form_string(const LinearForm<Exact>& p) {
  return "(" + to_string(p[0]) + ")x+(" + to_string(p[1]) + ")y";
}

/// `generic` random non-proportional pairs with Gaussian-integer coefficients
/// in [-50, 50], then `orthogonal` pairs (p, p^perp).
inline Psl2FamilyReport psl2_family_scan(std::size_t n, std::size_t generic, std::size_t orthogonal,
                                         std::uint64_t seed) {
  Psl2FamilyReport out;
  out.n = n;
  std::uniform_int_distribution<long> u(-50, 50);
  auto form = [&](std::mt19937_64& rng) {
    LinearForm<Exact> p;
    do {
      p = {Exact(Rational(u(rng)), Rational(u(rng))), Exact(Rational(u(rng)), Rational(u(rng)))};
    } while (p[0].is_zero() && p[1].is_zero());
    return p;
  };
  auto evaluate = [&](const LinearForm<Exact>& p, const LinearForm<Exact>& q) {
    Psl2Record r{p, q, psl2_line_verdict(n, p, q), {}, false};
    std::vector<Complex> lc;
    for (const auto& x : psl2_line(n, p, q)) lc.push_back(Field<Exact>::to_complex(x));
    r.lie = psl2_lie_stabilizer(n, lc);
    bool torus = r.lie.dim == 1 && !r.lie.acts_trivially;
    r.lie_consistent = (r.verdict.stabilizer == "torus") == torus && (r.verdict.stabilizer == "trivial") == (r.lie.dim == 0);
    (r.verdict.p_perp_q ? out.orthogonal : out.generic) += 1;
    out.records.push_back(std::move(r));
  };
  std::size_t sampled = 0;
  for (std::size_t i = 0; sampled < generic; ++i) {
    auto rng = trial_rng(seed, i);
    auto p = form(rng), q = form(rng);
    if (proportional(p, q)) continue;
    evaluate(p, q);
    ++sampled;
  }
  for (std::size_t i = 0; i < orthogonal; ++i) {
    auto rng = trial_rng(seed + 1, i);
    auto p = form(rng);
    evaluate(p, {-p[1].conj(), p[0].conj()});
  }
  std::optional<bool> g_orth, g_gen;
  bool constant = true;
  out.cross_check = true;
  for (const auto& r : out.records) {
    auto& slot = r.verdict.p_perp_q ? g_orth : g_gen;
    if (slot && *slot != r.verdict.good) constant = false;
    slot = r.verdict.good;
    out.cross_check = out.cross_check && r.lie_consistent;
  }
  out.dichotomy = constant && g_orth && g_gen && *g_orth != *g_gen;
  if (out.dichotomy) out.good_stratum = *g_orth ? "orthogonal" : "non-orthogonal";
  return out;
}

}  // namespace genrigid

#endif  // GENRIGID_GRASSMANN_HPP
