#ifndef GENRIGID_TANNAKA_HPP
#define GENRIGID_TANNAKA_HPP

// Intertwiner-side decision procedure. At truncation level n, B_n is the
// *-algebra generated by the intertwiners of T^{<=n}V and the insertion
// operators P_{W_i;m,k}. Its compression to W_j is computed as the commutant
// inside End(W_j) of D_n = (B_n)'|_{W_j}, where (B_n)' consists of the
// elements of the action span commuting with every insertion.

#include "genrigid/isotropy.hpp"
#include "genrigid/poly.hpp"

#include <map>
#include <random>

namespace genrigid {

struct ConstraintProfile {
  std::vector<Subspace<Exact>> ws;               // indexed by F
  std::vector<std::pair<std::size_t, std::size_t>> targets;  // (j in F', ell_j)

  void validate(std::size_t ambient) const {
    if (ws.empty()) throw InputError("constraint profile needs at least one subspace");
    for (const auto& w : ws) {
      if (w.ambient_dim() != ambient) throw InputError("subspace ambient dimension does not match the provider");
      if (w.dim() == 0) throw InputError("zero subspace in constraint profile");
    }
    std::vector<bool> seen(ws.size(), false);
    for (auto [j, ell] : targets) {
      if (j >= ws.size()) throw InputError("target index outside F");
      if (seen[j]) throw InputError("target index " + std::to_string(j) + " listed twice");
      seen[j] = true;
      if (ell > ws[j].dim()) throw InputError("threshold ell_j exceeds d_j");
    }
  }
};

struct TannakaOptions {
  std::size_t n_max = 4;
  Tolerance tol{};
  std::uint64_t seed = 0x7a11a;
  std::size_t spectral_samples = 4;
  bool diagnostics = true;  // float Wedderburn profile of the final level
};

struct LevelRecord {
  std::size_t n = 0;
  std::size_t algebra_dim = 0;    // dim of the action span on T^{<=n}V
  std::size_t compressed_dim = 0; // dim C_n
  std::size_t fixed_dim = 0;      // trivial-isotypic witness f_n
  std::size_t max_block = 0;      // largest irreducible block, exact
};

struct Verdict {
  bool result = false;
  std::size_t target = 0;
  std::size_t ell = 0;
  std::size_t stabilized_at = 0;
  bool unstable = false;
  bool saturated = false;
  std::vector<std::size_t> compressed_dims;
  std::vector<LevelRecord> levels;
  BlockProfile diagnostics;
  bool spectral_agrees = true;
};

struct ProfileVerdict {
  bool result = true;
  std::map<std::size_t, Verdict> per_target;
};

/// Compressed data of one target at one level.
struct TargetLevel {
  std::vector<Matrix<Exact>> restricted;  // basis of D_n, W coordinates
  std::vector<Matrix<Exact>> compressed;  // basis of C_n = D_n' in End(W)
  std::size_t fixed_dim = 0;
};

struct LevelData {
  std::size_t n = 0;
  std::size_t algebra_dim = 0;
  std::vector<TargetLevel> targets;  // parallel to Ws
};

/// Builds D_n, C_n and the fixed witness for every W_i at level n.
inline LevelData compute_level(const RepProvider& provider, const std::vector<Subspace<Exact>>& ws, std::size_t n) {
  if (n == 0) throw InputError("truncation level must be at least 1");
  for (const auto& w : ws) {
    if (w.dim() == 0) throw InputError("zero subspace");
    if (w.ambient_dim() != provider.dim()) throw InputError("subspace ambient dimension does not match the provider");
  }
  ActionSpan span = provider.action_span(n);
  const std::size_t r = span.on_v.size();
  LevelData out;
  out.n = n;
  out.algebra_dim = rank(span.gram);

  Matrix<Exact> k(r, r);
  for (const auto& w : ws) k += span.insertion_defect(orth_projection(w, provider.form()).matrix);
  Matrix<Exact> coeffs = kernel_basis(k);

  for (const auto& w : ws) {
    const std::size_t d = w.dim();
    TargetLevel tl;
    IndependentSet<Exact> seen(d * d);
    Matrix<Exact> stacked(0, d);
    std::vector<Matrix<Exact>> shifted;
    for (std::size_t c = 0; c < coeffs.cols(); ++c) {
      Matrix<Exact> xv(provider.dim(), provider.dim());
      Exact unit = Field<Exact>::zero();
      for (std::size_t i = 0; i < r; ++i) {
        const Exact& ci = coeffs(i, c);
        if (ci.is_zero()) continue;
        xv += ci * span.on_v[i];
        unit += ci * span.on_unit[i];
      }
      Matrix<Exact> xw = restrict_operator(xv, w);
      if (seen.insert(vec(xw))) tl.restricted.push_back(xw);
      Matrix<Exact> s = xw - unit * Matrix<Exact>::identity(d);
      if (!s.is_zero()) shifted.push_back(std::move(s));
    }
    // f_n = dim of the joint kernel of x|_W - chi_0(x), the vectors on which
    // (B_n)' acts through its character on the unit block.
    Matrix<Exact> all(shifted.size() * d, d);
    for (std::size_t s = 0; s < shifted.size(); ++s) all.set_block(s * d, 0, shifted[s]);
    tl.fixed_dim = shifted.empty() ? d : d - rank(all);
    tl.compressed = commutant(tl.restricted, d);
    out.targets.push_back(std::move(tl));
  }
  return out;
}

/// Basis of the compressed algebra C_n inside End(W_target), W coordinates.
inline std::vector<Matrix<Exact>> compressed_algebra(const RepProvider& provider,
                                                     const std::vector<Subspace<Exact>>& ws, std::size_t target,
                                                     std::size_t n) {
  if (target >= ws.size()) throw InputError("target index out of range");
  return compute_level(provider, ws, n).targets[target].compressed;
}

namespace detail {

/// Largest irreducible block of D = C' from random self-adjoint elements of
/// C: a generic one has every eigenvalue with multiplicity exactly the
/// corresponding block dimension.
inline std::size_t exact_max_block(const std::vector<Matrix<Exact>>& c_basis, const InnerProductForm<Exact>& form,
                                   std::size_t samples, std::mt19937_64& rng) {
  const std::size_t d = form.dim();
  if (c_basis.size() == d * d) return 1;
  std::uniform_int_distribution<long> coef(-1000, 1000);
  std::size_t best = d;
  for (std::size_t s = 0; s < std::max<std::size_t>(samples, 1); ++s) {
    Matrix<Exact> x(d, d);
    for (const auto& b : c_basis) x += Exact(Rational(coef(rng)), Rational(coef(rng))) * b;
    Matrix<Exact> h = x + form.adjoint(x);
    auto mult = exact_eigen_multiplicities(h);
    best = std::min(best, mult.empty() ? std::size_t{0} : mult.back());
  }
  return best;
}

struct TargetSpec {
  std::size_t index;
  std::size_t ell;
};

inline std::vector<Verdict> run_levels(const RepProvider& provider, const std::vector<Subspace<Exact>>& ws,
                                       const std::vector<TargetSpec>& specs, const TannakaOptions& opts) {
  if (opts.n_max == 0) throw InputError("n_max must be at least 1");
  std::vector<Verdict> verdicts(specs.size());
  for (std::size_t t = 0; t < specs.size(); ++t) {
    verdicts[t].target = specs[t].index;
    verdicts[t].ell = specs[t].ell;
  }
  std::mt19937_64 rng(opts.seed);
  std::vector<InnerProductForm<Exact>> forms;
  for (const auto& s : specs) forms.push_back(provider.form().restrict_to(ws.at(s.index)));

  std::size_t prev_alg = rank(provider.action_span(0).gram);
  const bool certifies = provider.action_span(0).saturation_certifies;
  std::optional<LevelData> last;
  bool stopped = false;
  for (std::size_t n = 1; n <= opts.n_max && !stopped; ++n) {
    LevelData level = compute_level(provider, ws, n);
    bool same = last.has_value() && level.algebra_dim == last->algebra_dim;
    for (std::size_t t = 0; t < specs.size(); ++t) {
      const auto& tl = level.targets[specs[t].index];
      LevelRecord rec;
      rec.n = n;
      rec.algebra_dim = level.algebra_dim;
      rec.compressed_dim = tl.compressed.size();
      rec.fixed_dim = tl.fixed_dim;
      rec.max_block = exact_max_block(tl.compressed, forms[t], opts.spectral_samples, rng);
      if (!verdicts[t].levels.empty()) {
        const auto& p = verdicts[t].levels.back();
        same = same && p.compressed_dim == rec.compressed_dim && p.fixed_dim == rec.fixed_dim &&
               p.max_block == rec.max_block;
      }
      verdicts[t].levels.push_back(rec);
      verdicts[t].compressed_dims.push_back(rec.compressed_dim);
    }
    bool saturated = certifies && level.algebra_dim == prev_alg;
    prev_alg = level.algebra_dim;
    if (saturated || same) {
      stopped = true;
      for (auto& v : verdicts) {
        v.stabilized_at = n;
        v.saturated = saturated;
      }
    }
    last = std::move(level);
  }
  for (std::size_t t = 0; t < specs.size(); ++t) {
    Verdict& v = verdicts[t];
    if (!stopped) {
      v.unstable = true;
      v.stabilized_at = opts.n_max;
    }
    const LevelRecord& fin = v.levels.back();
    const std::size_t d = ws[specs[t].index].dim();
    if (specs[t].ell == 0)
      v.result = fin.compressed_dim == d * d && fin.fixed_dim == d;
    else
      v.result = fin.max_block <= specs[t].ell;
    if (opts.diagnostics) {
      const auto& tl = last->targets[specs[t].index];
      auto w = wedderburn_blocks(tl.restricted, forms[t], opts.tol, opts.seed);
      v.diagnostics.target_dim = d;
      v.diagnostics.fixed_dim = fin.fixed_dim;
      for (std::size_t b = 0; b < w.blocks.size(); ++b) v.diagnostics.blocks.push_back(w.blocks[b]);
      std::sort(v.diagnostics.blocks.begin(), v.diagnostics.blocks.end(), [](const Block& a, const Block& b) {
        return std::tie(a.dim, a.mult) < std::tie(b.dim, b.mult);
      });
      v.spectral_agrees = v.diagnostics.max_block_dim() == fin.max_block;
      if (!v.spectral_agrees) throw NumericalError("spectral clustering failed; decrease tolerance");
    }
  }
  return verdicts;
}

}  // namespace detail

inline Verdict check_trivial(const RepProvider& provider, const std::vector<Subspace<Exact>>& ws, std::size_t target,
                             const TannakaOptions& opts = {}) {
  if (target >= ws.size()) throw InputError("target index out of range");
  return detail::run_levels(provider, ws, {{target, 0}}, opts).front();
}

inline Verdict check_ell_constrained(const RepProvider& provider, const std::vector<Subspace<Exact>>& ws,
                                     std::size_t target, std::size_t ell, const TannakaOptions& opts = {}) {
  if (target >= ws.size()) throw InputError("target index out of range");
  if (ell > ws[target].dim()) throw InputError("threshold ell exceeds the target dimension");
  return detail::run_levels(provider, ws, {{target, ell}}, opts).front();
}

inline ProfileVerdict check_profile(const RepProvider& provider, const ConstraintProfile& profile,
                                    const TannakaOptions& opts = {}) {
  profile.validate(provider.dim());
  std::vector<detail::TargetSpec> specs;
  for (auto [j, ell] : profile.targets) specs.push_back({j, ell});
  auto vs = detail::run_levels(provider, profile.ws, specs, opts);
  ProfileVerdict out;
  for (auto& v : vs) {
    out.result = out.result && v.result;
    out.per_target.emplace(v.target, std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Literal route: closure of intertwiners and insertions on T^{<=n}V itself.
// Only feasible for small truncated spaces; used to cross-check the above.

struct LiteralCompression {
  std::vector<Matrix<Exact>> compressed;  // P X_V P on W, W coordinates
  std::size_t fixed_dim = 0;              // dim span of P X_{V,0}: C -> W
  std::size_t generated_dim = 0;          // dim of the generated algebra
};

/// Embeds P_W in slot `pos` of V^{(x)m}, placed on the length-m diagonal block.
inline Matrix<Exact> insertion_operator(const RepProvider& provider, const Matrix<Exact>& p, std::size_t n,
                                        std::size_t m, std::size_t pos) {
  const std::size_t d = provider.dim();
  const std::size_t total = provider.truncated_dim(n);
  if (m == 0 || m > n || pos >= m) throw InputError("insertion position out of range");
  std::size_t offset = 0;
  for (std::size_t j = 0; j < m; ++j) offset += checked_power(d, j);
  Matrix<Exact> ins = Matrix<Exact>::identity(1);
  for (std::size_t j = 0; j < m; ++j) ins = kron(ins, j == pos ? p : Matrix<Exact>::identity(d));
  Matrix<Exact> out(total, total);
  out.set_block(offset, offset, ins);
  return out;
}

inline LiteralCompression compressed_algebra_by_generation(const RepProvider& provider,
                                                           const std::vector<Subspace<Exact>>& ws,
                                                           std::size_t target, std::size_t n) {
  if (target >= ws.size()) throw InputError("target index out of range");
  const std::size_t d = provider.dim();
  auto gens = truncated_intertwiners(provider, n);
  for (const auto& w : ws) {
    Matrix<Exact> p = orth_projection(w, provider.form()).matrix;
    for (std::size_t m = 1; m <= n; ++m)
      for (std::size_t pos = 0; pos < m; ++pos) gens.push_back(insertion_operator(provider, p, n, m, pos));
  }
  InnerProductForm<Exact> tform = provider.truncated_form(n);
  AdjointFn<Exact> star = [&tform](const Matrix<Exact>& x) { return tform.adjoint(x); };
  const std::size_t total = provider.truncated_dim(n);
  std::vector<Matrix<Exact>> seed{Matrix<Exact>::identity(total)};
  seed.insert(seed.end(), gens.begin(), gens.end());
  auto basis = span_closure(seed, gens, star);

  const Subspace<Exact>& w = ws[target];
  Matrix<Exact> p = orth_projection(w, provider.form()).matrix;
  LiteralCompression out;
  out.generated_dim = basis.size();
  IndependentSet<Exact> seen(w.dim() * w.dim());
  IndependentSet<Exact> fixed(d);
  for (const auto& x : basis) {
    Matrix<Exact> xv = x.block(1, 1, d, d);
    Matrix<Exact> c = restrict_operator(p * xv * p, w);
    if (seen.insert(vec(c))) out.compressed.push_back(c);
    fixed.insert((p * x.block(1, 0, d, 1)).col(0));
  }
  out.fixed_dim = fixed.size();
  return out;
}

}  // namespace genrigid

#endif  // GENRIGID_TANNAKA_HPP
