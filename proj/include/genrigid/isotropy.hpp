#ifndef GENRIGID_ISOTROPY_HPP
#define GENRIGID_ISOTROPY_HPP

// Ground truth for finite groups: isotropy subgroups G_W = {g : gW <= W} by
// enumeration, their restrictions, and Wedderburn block profiles of the
// restricted actions.

#include "genrigid/rep_providers.hpp"

#include <random>

namespace genrigid {

struct Block {
  std::size_t dim = 0;   // irreducible dimension d_i
  std::size_t mult = 0;  // multiplicity m_i
  bool trivial = false;  // the trivial isotypic block

  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockProfile {
  std::vector<Block> blocks;  // sorted by (dim, mult, trivial)
  std::size_t fixed_dim = 0;
  std::size_t target_dim = 0;

  std::size_t max_block_dim() const {
    std::size_t m = 0;
    for (const auto& b : blocks) m = std::max(m, b.dim);
    return m;
  }
  std::size_t weighted_dim() const {
    std::size_t s = 0;
    for (const auto& b : blocks) s += b.dim * b.mult;
    return s;
  }
};

namespace detail {

/// Orthonormalizing change of coordinates for a positive-definite Gram
/// matrix G = L L^H: y = L^H x, so operators transform as L^H M L^{-H}.
struct OrthonormalFrame {
  Eigen::MatrixXcd lh, lh_inv;

  explicit OrthonormalFrame(const Matrix<Exact>& gram) {
    Eigen::LLT<Eigen::MatrixXcd> llt(to_eigen(convert_matrix<Complex>(gram)));
    if (llt.info() != Eigen::Success) throw NumericalError("Cholesky factorization of the invariant form failed");
    lh = llt.matrixL().adjoint();
    lh_inv = lh.inverse();
  }

  Eigen::MatrixXcd apply(const Matrix<Exact>& m) const { return lh * to_eigen(convert_matrix<Complex>(m)) * lh_inv; }
};

inline std::size_t float_rank(const Eigen::MatrixXcd& m, const Tolerance& tol) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > tol.tau * sv(0)) ++r;
  return r;
}

/// rank of {vec(Q x) : x in xs}.
inline std::size_t projected_span_rank(const Eigen::MatrixXcd& q, const std::vector<Eigen::MatrixXcd>& xs,
                                       const Tolerance& tol) {
  if (xs.empty()) return 0;
  const Eigen::Index n = q.rows();
  Eigen::MatrixXcd stack(n * n, static_cast<Eigen::Index>(xs.size()));
  for (std::size_t k = 0; k < xs.size(); ++k) {
    Eigen::MatrixXcd y = q * xs[k];
    stack.col(static_cast<Eigen::Index>(k)) = Eigen::Map<Eigen::VectorXcd>(y.data(), n * n);
  }
  return float_rank(stack, tol);
}

inline std::size_t exact_sqrt(std::size_t v) {
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(v))));
  return r * r == v ? r : 0;
}

}  // namespace detail

struct WedderburnResult {
  std::vector<Block> blocks;                  // unsorted, parallel to `projections`
  std::vector<Eigen::MatrixXcd> projections;  // central projections, orthonormal frame
  std::size_t algebra_dim = 0;
  std::size_t commutant_dim = 0;
};

/// Wedderburn block sizes of the unital *-algebra generated by `gens` on a
/// space with invariant form `form`. Dimensions of the algebra A, its
/// commutant C and center Z are exact; the central decomposition uses the
/// spectrum of one generic self-adjoint central element in float mode, giving
/// d_i = sqrt(dim z_i A) and m_i = sqrt(dim z_i C).
inline WedderburnResult wedderburn_blocks(const std::vector<Matrix<Exact>>& gens, const InnerProductForm<Exact>& form,
                                          const Tolerance& tol = {}, std::uint64_t seed = 0x5eed) {
  WedderburnResult out;
  const std::size_t d = form.dim();
  if (d == 0) return out;
  std::vector<Matrix<Exact>> seedset{Matrix<Exact>::identity(d)};
  seedset.insert(seedset.end(), gens.begin(), gens.end());
  auto alg = span_closure(seedset, gens);
  auto comm = commutant(gens, d);
  out.algebra_dim = alg.size();
  out.commutant_dim = comm.size();

  std::vector<std::vector<Exact>> av, cv;
  for (const auto& a : alg) av.push_back(vec(a));
  for (const auto& c : comm) cv.push_back(vec(c));
  auto center = intersect(Subspace<Exact>(from_columns(av, d * d)), Subspace<Exact>(from_columns(cv, d * d)));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-1000, 1000);
  Matrix<Exact> z(d, d);
  for (std::size_t k = 0; k < center.dim(); ++k) {
    Matrix<Exact> zk = unvec<Exact>(center.basis().col(k), d, d);
    Matrix<Exact> zadj = form.adjoint(zk);
    z += Exact(coef(rng)) * (zk + zadj);
    z += Exact(Rational(0), Rational(coef(rng))) * (zk - zadj);
  }

  detail::OrthonormalFrame frame(form.gram());
  Eigen::MatrixXcd zf = frame.apply(z);
  zf = 0.5 * (zf + zf.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(zf);
  std::vector<Complex> ev;
  double scale = 0.0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    ev.emplace_back(es.eigenvalues()(k), 0.0);
    scale = std::max(scale, std::abs(es.eigenvalues()(k)));
  }
  auto [sizes, label] = genrigid::detail::cluster_points(ev, tol.cluster_radius(std::max(scale, 1e-300)));

  std::vector<Eigen::MatrixXcd> af, cf;
  for (const auto& a : alg) af.push_back(frame.apply(a));
  for (const auto& c : comm) cf.push_back(frame.apply(c));

  std::size_t sum_a = 0, sum_c = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    Eigen::MatrixXcd u(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(sizes[c]));
    Eigen::Index col = 0;
    for (std::size_t k = 0; k < d; ++k)
      if (label[k] == c) u.col(col++) = es.eigenvectors().col(static_cast<Eigen::Index>(k));
    Eigen::MatrixXcd q = u * u.adjoint();
    std::size_t da = detail::projected_span_rank(q, af, tol);
    std::size_t dc = detail::projected_span_rank(q, cf, tol);
    std::size_t di = detail::exact_sqrt(da), mi = detail::exact_sqrt(dc);
    if (di == 0 || mi == 0 || di * mi != sizes[c])
      throw NumericalError("spectral clustering failed; decrease tolerance");
    sum_a += da;
    sum_c += dc;
    out.blocks.push_back({di, mi, false});
    out.projections.push_back(std::move(q));
  }
  if (sum_a != out.algebra_dim || sum_c != out.commutant_dim)
    throw NumericalError("spectral clustering failed; decrease tolerance");
  return out;
}

/// Block profile of a finite group acting unitarily (w.r.t. `form`) through
/// the matrices `action` (the full list of group elements). The fixed
/// dimension comes from the exact averaging projection.
inline BlockProfile block_profile(const std::vector<Matrix<Exact>>& action, const InnerProductForm<Exact>& form,
                                  const Tolerance& tol = {}) {
  BlockProfile prof;
  const std::size_t d = form.dim();
  prof.target_dim = d;
  if (d == 0) return prof;
  Matrix<Exact> avg(d, d);
  for (const auto& g : action) avg += g;
  if (!action.empty()) avg *= Exact(make_rational(1, static_cast<long>(action.size())));
  prof.fixed_dim = action.empty() ? d : rank(avg);

  bool all_identity = std::all_of(action.begin(), action.end(),
                                  [&](const Matrix<Exact>& g) { return g == Matrix<Exact>::identity(d); });
  if (all_identity) {
    prof.blocks = {{1, d, true}};
    return prof;
  }
  auto w = wedderburn_blocks(action, form, tol);
  detail::OrthonormalFrame frame(form.gram());
  Eigen::MatrixXcd avg_f = frame.apply(avg);
  bool seen_trivial = false;
  for (std::size_t k = 0; k < w.blocks.size(); ++k) {
    Block b = w.blocks[k];
    if (prof.fixed_dim > 0 && (w.projections[k] * avg_f).norm() > std::sqrt(tol.tau)) {
      if (seen_trivial || b.dim != 1 || b.mult != prof.fixed_dim)
        throw NumericalError("spectral clustering failed; decrease tolerance");
      b.trivial = true;
      seen_trivial = true;
    }
    prof.blocks.push_back(b);
  }
  if (prof.fixed_dim > 0 && !seen_trivial) throw NumericalError("spectral clustering failed; decrease tolerance");
  std::sort(prof.blocks.begin(), prof.blocks.end(), [](const Block& a, const Block& b) {
    return std::tie(a.dim, a.mult, a.trivial) < std::tie(b.dim, b.mult, b.trivial);
  });
  return prof;
}

// ---------------------------------------------------------------------------
// Isotropy subgroups

enum class RestrictTo { W, V };

struct IsotropySubgroup {
  std::vector<std::size_t> members;
  std::vector<Matrix<Exact>> restriction;  // action on the target, in W's basis (or on V)
};

namespace detail {

inline bool preserves(const Matrix<Exact>& g, const Subspace<Exact>& w, const IndependentSet<Exact>& span) {
  Matrix<Exact> gw = g * w.basis();
  for (std::size_t j = 0; j < gw.cols(); ++j)
    if (!span.contains(gw.col(j))) return false;
  return true;
}

}  // namespace detail

/// Members g with gW <= W for every W in `ws` (the joint stabilizer).
inline std::vector<std::size_t> joint_stabilizer(const MatrixRep<Exact>& rep, const std::vector<Subspace<Exact>>& ws) {
  std::vector<IndependentSet<Exact>> spans;
  for (const auto& w : ws) {
    IndependentSet<Exact> s(w.ambient_dim());
    for (std::size_t j = 0; j < w.dim(); ++j) s.insert(w.basis().col(j));
    spans.push_back(std::move(s));
  }
  std::vector<std::size_t> members;
  for (std::size_t g = 0; g < rep.images.size(); ++g) {
    bool ok = true;
    for (std::size_t i = 0; i < ws.size() && ok; ++i) ok = detail::preserves(rep.images[g], ws[i], spans[i]);
    if (ok) members.push_back(g);
  }
  return members;
}

inline IsotropySubgroup isotropy_subgroup(const MatrixRep<Exact>& rep, const Subspace<Exact>& w,
                                          RestrictTo on = RestrictTo::W) {
  IsotropySubgroup iso;
  iso.members = joint_stabilizer(rep, {w});
  for (auto g : iso.members)
    iso.restriction.push_back(on == RestrictTo::W ? restrict_operator(rep.images[g], w) : rep.images[g]);
  return iso;
}

inline bool is_trivial_restriction(const MatrixRep<Exact>& rep, const Subspace<Exact>& w, RestrictTo on) {
  auto iso = isotropy_subgroup(rep, w, on);
  const std::size_t n = on == RestrictTo::W ? w.dim() : rep.dim();
  return std::all_of(iso.restriction.begin(), iso.restriction.end(),
                     [&](const Matrix<Exact>& m) { return m == Matrix<Exact>::identity(n); });
}

/// Oracle outcome for one target of a (joint) isotropy computation.
struct OracleVerdict {
  bool result = false;
  std::size_t stabilizer_order = 0;
  BlockProfile profile;
};

/// Restricts the joint stabilizer of `ws` to `target` (an index into `ws`, or
/// V itself when on = V) and tests ell-constrainedness: ell = 0 asks for a
/// trivial action, ell >= 1 for every irreducible block of dim <= ell.
inline OracleVerdict oracle_verdict(const MatrixRep<Exact>& rep, const InnerProductForm<Exact>& form,
                                    const std::vector<Subspace<Exact>>& ws, std::size_t target, RestrictTo on,
                                    std::size_t ell, const Tolerance& tol = {}) {
  OracleVerdict v;
  auto members = joint_stabilizer(rep, ws);
  v.stabilizer_order = members.size();
  std::vector<Matrix<Exact>> action;
  InnerProductForm<Exact> tform =
      on == RestrictTo::W ? form.restrict_to(ws.at(target)) : form;
  for (auto g : members)
    action.push_back(on == RestrictTo::W ? restrict_operator(rep.images[g], ws[target]) : rep.images[g]);
  if (ell == 0) {
    // Exact path; the float profile is not needed to decide triviality.
    const std::size_t n = tform.dim();
    v.result = std::all_of(action.begin(), action.end(),
                           [&](const Matrix<Exact>& m) { return m == Matrix<Exact>::identity(n); });
    v.profile = block_profile(action, tform, tol);
    return v;
  }
  v.profile = block_profile(action, tform, tol);
  v.result = v.profile.max_block_dim() <= ell;
  return v;
}

inline bool ell_constrained(const MatrixRep<Exact>& rep, const Subspace<Exact>& w, std::size_t ell, RestrictTo on,
                            const Tolerance& tol = {}) {
  return oracle_verdict(rep, unitarize(rep), {w}, 0, on, ell, tol).result;
}

// ---------------------------------------------------------------------------
// The ax+b group acting on C^2 by (1 b; 0 a), a > 0, b real.

struct AxbIsotropy {
  enum class Kind { WholeGroup, ScalingFactor, OneParameter, Trivial };
  Kind kind;
  std::string description;
  bool acts_trivially;
  bool good;  // isotropy acts trivially on the line
};

/// Closed-form stabilizer of the line [x:y]. The matrix sends (x, y) to
/// (x + b y, a y), so for y != 0 the line is preserved iff b = (a - 1) x / y,
/// which has real solutions with a != 1 exactly when x / y is real.
inline AxbIsotropy axb_isotropy(const Exact& x, const Exact& y) {
  if (x.is_zero() && y.is_zero()) throw InputError("[0:0] is not a projective point");
  if (y.is_zero())
    return {AxbIsotropy::Kind::WholeGroup, "whole group; acts on the line by 1", true, true};
  if (x.is_zero())
    return {AxbIsotropy::Kind::ScalingFactor, "{b = 0} = R_{>0}; acts on the line by a", false, false};
  // x / y real  <=>  Im(x * conj(y)) = 0
  Exact prod = x * y.conj();
  if (prod.is_real()) {
    Exact ratio = x / y;
    return {AxbIsotropy::Kind::OneParameter,
            "{(a, (a-1)*" + to_string(ratio) + ") : a > 0}; acts on the line by a", false, false};
  }
  return {AxbIsotropy::Kind::Trivial, "trivial (x/y not real)", true, true};
}

}  // namespace genrigid

#endif  // GENRIGID_ISOTROPY_HPP
