#ifndef GENRIGID_REP_PROVIDERS_HPP
#define GENRIGID_REP_PROVIDERS_HPP

// Sources of representation data: finite groups (matrix generators or
// multiplication tables) and the sl2 symmetric powers, behind one provider
// interface that hands out tensor-power actions, intertwiner spaces, and the
// spanning data the Tannaka checker needs on truncated tensor spaces.

#include "genrigid/linalg.hpp"

#include <cstdlib>
#include <memory>
#include <string>
#include <unordered_map>

namespace genrigid {

/// Largest explicit tensor dimension dim(V)^m any operation may materialize.
/// Overridable through GENRIGID_SIZE_BUDGET.
inline std::size_t size_budget() {
  if (const char* env = std::getenv("GENRIGID_SIZE_BUDGET")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 64;
}

inline std::size_t checked_power(std::size_t base, std::size_t m) {
  std::size_t r = 1;
  const std::size_t budget = size_budget();
  for (std::size_t k = 0; k < m; ++k) {
    r *= base;
    if (r > budget)
      throw BudgetError("tensor dimension " + std::to_string(base) + "^" + std::to_string(m) +
                        " exceeds the size budget " + std::to_string(budget));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Finite groups

class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Validates identity, inverse and associativity axioms on the full table.
  static FiniteGroup from_table(std::vector<std::vector<std::size_t>> mul) {
    FiniteGroup g;
    g.mul_ = std::move(mul);
    const std::size_t n = g.mul_.size();
    if (n == 0) throw InputError("group must be non-empty");
    for (const auto& row : g.mul_) {
      if (row.size() != n) throw InputError("multiplication table is not square");
      for (auto v : row)
        if (v >= n) throw InputError("multiplication table entry out of range");
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) ok = g.mul_[e][a] == a && g.mul_[a][e] == a;
      if (ok) {
        g.id_ = e;
        found = true;
      }
    }
    if (!found) throw InputError("multiplication table has no identity");
    g.inv_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (g.mul_[a][b] == g.id_ && g.mul_[b][a] == g.id_) g.inv_[a] = b;
    for (auto v : g.inv_)
      if (v == n) throw InputError("multiplication table lacks inverses");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (g.mul_[g.mul_[a][b]][c] != g.mul_[a][g.mul_[b][c]])
            throw InputError("multiplication table is not associative");
    return g;
  }

  std::size_t order() const { return mul_.size(); }
  std::size_t identity() const { return id_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a][b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const { return mul_; }

  /// Closure under products and inverses, containing the identity.
  bool is_subgroup(const std::vector<std::size_t>& members) const {
    std::vector<bool> in(order(), false);
    for (auto m : members) in.at(m) = true;
    if (!in[id_]) return false;
    for (auto a : members) {
      if (!in[inv_[a]]) return false;
      for (auto b : members)
        if (!in[mul_[a][b]]) return false;
    }
    return true;
  }

 private:
  std::vector<std::vector<std::size_t>> mul_;
  std::vector<std::size_t> inv_;
  std::size_t id_ = 0;
};

/// A representation of a finite group: one image per group element.
template <class S>
struct MatrixRep {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<Matrix<S>> images;
  std::vector<std::size_t> generators;  // element indices generating the group

  std::size_t dim() const { return images.empty() ? 0 : images.front().rows(); }

  /// Checks the homomorphism property and rho(id) = 1 exactly.
  void validate() const {
    if (!group) throw InputError("representation without a group");
    if (images.size() != group->order()) throw InputError("one image per group element required");
    const std::size_t n = dim();
    for (const auto& m : images)
      if (m.rows() != n || m.cols() != n) throw InputError("representation images must be dim x dim");
    if (!(images[group->identity()] == Matrix<S>::identity(n)))
      throw InputError("representation does not send the identity to the identity matrix");
    for (std::size_t a = 0; a < images.size(); ++a)
      for (std::size_t b = 0; b < images.size(); ++b)
        if (!(images[group->mul(a, b)] == images[a] * images[b]))
          throw InputError("images do not respect the multiplication table");
  }

  std::vector<Matrix<S>> generator_images() const {
    std::vector<Matrix<S>> out;
    for (auto g : generators) out.push_back(images[g]);
    return out;
  }
};

namespace detail {

template <class S>
std::string matrix_key(const Matrix<S>& m) {
  std::string k;
  for (const auto& x : m.data()) {
    k += to_string(x);
    k += ';';
  }
  return k;
}

}  // namespace detail

/// Breadth-first closure of invertible exact generators. Fails when the group
/// exceeds `cap` elements.
template <ExactScalar S>
MatrixRep<S> group_closure(const std::vector<Matrix<S>>& gens, std::size_t cap = 10000) {
  if (gens.empty()) throw InputError("group_closure needs at least one generator");
  const std::size_t n = gens.front().rows();
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n) throw InputError("generators must be square of equal size");
    if (rank(g) != n) throw InputError("generators must be invertible");
  }
  std::vector<Matrix<S>> elems{Matrix<S>::identity(n)};
  std::unordered_map<std::string, std::size_t> index{{detail::matrix_key(elems[0]), 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Matrix<S> y = elems[head] * g;
      auto key = detail::matrix_key(y);
      if (index.count(key)) continue;
      if (elems.size() >= cap) throw InputError("group not finite within cap " + std::to_string(cap));
      index.emplace(std::move(key), elems.size());
      elems.push_back(std::move(y));
    }
  }
  const std::size_t order = elems.size();
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) table[a][b] = index.at(detail::matrix_key(elems[a] * elems[b]));
  MatrixRep<S> rep;
  rep.group = std::make_shared<FiniteGroup>(FiniteGroup::from_table(std::move(table)));
  rep.images = std::move(elems);
  for (const auto& g : gens) rep.generators.push_back(index.at(detail::matrix_key(g)));
  return rep;
}

/// Left-regular representation: g e_h = e_{gh}.
template <class S>
MatrixRep<S> regular_rep(std::shared_ptr<const FiniteGroup> group) {
  const std::size_t n = group->order();
  MatrixRep<S> rep;
  rep.group = group;
  for (std::size_t g = 0; g < n; ++g) {
    Matrix<S> m(n, n);
    for (std::size_t h = 0; h < n; ++h) m(group->mul(g, h), h) = Field<S>::one();
    rep.images.push_back(std::move(m));
  }
  rep.generators.resize(n);
  std::iota(rep.generators.begin(), rep.generators.end(), 0);
  return rep;
}

/// Invariant form (1/|G|) sum_g rho(g)^H rho(g).
template <ExactScalar S>
InnerProductForm<S> unitarize(const MatrixRep<S>& rep) {
  const std::size_t n = rep.dim();
  Matrix<S> gram(n, n);
  for (const auto& g : rep.images) gram += g.adjoint() * g;
  gram *= Field<S>::one() / Field<S>::from_int(static_cast<long>(rep.images.size()));
  return InnerProductForm<S>(std::move(gram));
}

// ---------------------------------------------------------------------------
// sl2 symmetric powers

template <class S>
struct SL2Rep {
  std::size_t n = 0;  // highest weight; dim = n + 1
  Matrix<S> e, f, h;
  InnerProductForm<S> form;
};

/// S^n C^2 on the monomials x^{n-k} y^k (k = 0..n): E = x d/dy, F = y d/dx,
/// H = [E, F]. The invariant form weights e_k by 1/binom(n, k), which makes
/// E and F mutually adjoint.
template <ExactScalar S>
SL2Rep<S> sl2_sym_power(std::size_t n) {
  const std::size_t d = n + 1;
  SL2Rep<S> r;
  r.n = n;
  r.e = Matrix<S>(d, d);
  r.f = Matrix<S>(d, d);
  r.h = Matrix<S>(d, d);
  Matrix<S> gram(d, d);
  mpz_class binom = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    const long kk = static_cast<long>(k);
    const long nn = static_cast<long>(n);
    if (k >= 1) r.e(k - 1, k) = Field<S>::from_int(kk);
    if (k < n) r.f(k + 1, k) = Field<S>::from_int(nn - kk);
    r.h(k, k) = Field<S>::from_int(nn - 2 * kk);
    gram(k, k) = Field<S>::from_parts(Rational(mpz_class(1), binom), Rational(0));
    binom = binom * (n - k) / (k + 1);
  }
  r.form = InnerProductForm<S>(std::move(gram));
  return r;
}

/// Leibniz extension of x to V^{(x)m}: sum_k 1 (x) ... (x) x (x) ... (x) 1.
template <class S>
Matrix<S> leibniz_power(const Matrix<S>& x, std::size_t m) {
  const std::size_t n = x.rows();
  if (m == 0) return Matrix<S>(1, 1);
  Matrix<S> total(checked_power(n, m), checked_power(n, m));
  const Matrix<S> id = Matrix<S>::identity(n);
  for (std::size_t k = 0; k < m; ++k) {
    Matrix<S> t = Matrix<S>::identity(1);
    for (std::size_t j = 0; j < m; ++j) t = kron(t, j == k ? x : id);
    total += t;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Provider interface

/// Spanning data for the algebra generated by the (co)action on the
/// truncated tensor space T^{<=n}V = C + V + ... + V^{(x)n}, i.e. the
/// commutant of all intertwiners there. This is what the Tannaka checker
/// consumes; each spanning element x is known through its length-1 block,
/// its scalar on the length-0 block, and Frobenius pairings.
struct ActionSpan {
  std::vector<Matrix<Exact>> on_v;
  std::vector<Exact> on_unit;
  /// gram(i, j) = <x_i, x_j> summed over all blocks of T^{<=n}V.
  Matrix<Exact> gram;
  /// defect(P)(i, j) = sum over m <= n and positions k of
  /// <[x_i, P_{m,k}], [x_j, P_{m,k}]>, where P_{m,k} puts P in slot k of V^{(x)m}.
  std::function<Matrix<Exact>(const Matrix<Exact>&)> insertion_defect;
  /// True when equal spanning dimensions at consecutive truncation levels
  /// certify that higher levels add no constraints (group-like spans).
  bool saturation_certifies = false;
};

class RepProvider {
 public:
  virtual ~RepProvider() = default;

  virtual std::string describe() const = 0;
  virtual std::size_t dim() const = 0;
  virtual const InnerProductForm<Exact>& form() const = 0;

  /// Action generators on V^{(x)m}: group elements g^{(x)m}, or Leibniz sums.
  virtual std::vector<Matrix<Exact>> tensor_power_action(std::size_t m) const = 0;

  /// The same generators acting block-diagonally on T^{<=n}V.
  virtual std::vector<Matrix<Exact>> truncated_action(std::size_t n) const = 0;

  virtual ActionSpan action_span(std::size_t n) const = 0;

  /// Invariant form on V^{(x)m}.
  InnerProductForm<Exact> tensor_form(std::size_t m) const {
    checked_power(dim(), m);
    return InnerProductForm<Exact>(kron_power(form().gram(), m));
  }

  /// Invariant form on T^{<=n}V (standard on the length-0 block).
  InnerProductForm<Exact> truncated_form(std::size_t n) const {
    Matrix<Exact> g = Matrix<Exact>::identity(1);
    for (std::size_t m = 1; m <= n; ++m) g = direct_sum(g, kron_power(form().gram(), m));
    return InnerProductForm<Exact>(std::move(g));
  }

  std::size_t truncated_dim(std::size_t n) const {
    std::size_t total = 0;
    for (std::size_t m = 0; m <= n; ++m) total += checked_power(dim(), m);
    if (total > size_budget()) throw BudgetError("truncated tensor space exceeds the size budget");
    return total;
  }
};

/// Basis of End_G(V^{(x)m}) as the commutant of the tensor-power action.
inline std::vector<Matrix<Exact>> intertwiners(const RepProvider& p, std::size_t m) {
  const std::size_t n = checked_power(p.dim(), m);
  return commutant(p.tensor_power_action(m), n);
}

/// Basis of the intertwiner algebra of T^{<=n}V, all Hom blocks included.
inline std::vector<Matrix<Exact>> truncated_intertwiners(const RepProvider& p, std::size_t n) {
  return commutant(p.truncated_action(n), p.truncated_dim(n));
}

class FiniteGroupProvider final : public RepProvider {
 public:
  explicit FiniteGroupProvider(MatrixRep<Exact> rep, std::string name = "finite")
      : rep_(std::move(rep)), name_(std::move(name)) {
    rep_.validate();
    if (rep_.generators.empty()) {
      rep_.generators.resize(rep_.images.size());
      std::iota(rep_.generators.begin(), rep_.generators.end(), 0);
    }
    form_ = unitarize(rep_);
  }

  std::string describe() const override { return name_; }
  std::size_t dim() const override { return rep_.dim(); }
  const InnerProductForm<Exact>& form() const override { return form_; }
  const MatrixRep<Exact>& rep() const { return rep_; }

  std::vector<Matrix<Exact>> tensor_power_action(std::size_t m) const override {
    checked_power(dim(), m);
    std::vector<Matrix<Exact>> out;
    for (auto g : rep_.generators) out.push_back(kron_power(rep_.images[g], m));
    return out;
  }

  /// Full element list on V^{(x)m} (used to cross-check generator-based results).
  std::vector<Matrix<Exact>> tensor_power_all_elements(std::size_t m) const {
    checked_power(dim(), m);
    std::vector<Matrix<Exact>> out;
    for (const auto& g : rep_.images) out.push_back(kron_power(g, m));
    return out;
  }

  std::vector<Matrix<Exact>> truncated_action(std::size_t n) const override {
    truncated_dim(n);
    std::vector<Matrix<Exact>> out;
    for (auto g : rep_.generators) {
      Matrix<Exact> blk = Matrix<Exact>::identity(1);
      for (std::size_t m = 1; m <= n; ++m) blk = direct_sum(blk, kron_power(rep_.images[g], m));
      out.push_back(std::move(blk));
    }
    return out;
  }

  /// Spanned by the group elements themselves; pairings factor through
  /// t(g, h) = tr(g^H h) because <a (x) b, c (x) d> = <a, c><b, d>.
  ActionSpan action_span(std::size_t n) const override {
    const std::size_t order = rep_.images.size();
    Matrix<Exact> t(order, order);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b) t(a, b) = frobenius_pairing(rep_.images[a], rep_.images[b]);
    ActionSpan span;
    span.on_v = rep_.images;
    span.on_unit.assign(order, Field<Exact>::one());
    span.gram = Matrix<Exact>(order, order);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b) {
        Exact s = Field<Exact>::zero(), pw = Field<Exact>::one();
        for (std::size_t m = 0; m <= n; ++m) {
          s += pw;
          pw *= t(a, b);
        }
        span.gram(a, b) = s;
      }
    auto images = rep_.images;
    span.insertion_defect = [images, t, n](const Matrix<Exact>& p) {
      const std::size_t order = images.size();
      std::vector<Matrix<Exact>> defects;
      for (const auto& g : images) defects.push_back(commutator(g, p));
      Matrix<Exact> k(order, order);
      for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b) {
          Exact sab = frobenius_pairing(defects[a], defects[b]);
          if (sab.is_zero()) continue;
          // sum_{m=1..n} m * t^{m-1} * s: m slots, each pairing to t^{m-1} s.
          Exact acc = Field<Exact>::zero(), pw = Field<Exact>::one();
          for (std::size_t m = 1; m <= n; ++m) {
            acc += Field<Exact>::from_int(static_cast<long>(m)) * pw;
            pw *= t(a, b);
          }
          k(a, b) = acc * sab;
        }
      return k;
    };
    span.saturation_certifies = true;
    return span;
  }

 private:
  MatrixRep<Exact> rep_;
  std::string name_;
  InnerProductForm<Exact> form_;
};

/// sl2 acting on S^n C^2 through its Lie algebra. For the connected compact
/// group SU(2), group and Lie-algebra commutants coincide.
class SL2Provider final : public RepProvider {
 public:
  explicit SL2Provider(std::size_t n) : rep_(sl2_sym_power<Exact>(n)) {}

  std::string describe() const override { return "sl2:" + std::to_string(rep_.n); }
  std::size_t dim() const override { return rep_.n + 1; }
  const InnerProductForm<Exact>& form() const override { return rep_.form; }
  const SL2Rep<Exact>& rep() const { return rep_; }

  std::vector<Matrix<Exact>> tensor_power_action(std::size_t m) const override {
    checked_power(dim(), m);
    return {leibniz_power(rep_.e, m), leibniz_power(rep_.f, m), leibniz_power(rep_.h, m)};
  }

  std::vector<Matrix<Exact>> truncated_action(std::size_t n) const override {
    truncated_dim(n);
    std::vector<Matrix<Exact>> out;
    for (const auto* x : {&rep_.e, &rep_.f, &rep_.h}) {
      Matrix<Exact> blk(1, 1);
      for (std::size_t m = 1; m <= n; ++m) blk = direct_sum(blk, leibniz_power(*x, m));
      out.push_back(std::move(blk));
    }
    return out;
  }

  /// Spanned by an explicit basis of the unital algebra the Lie action
  /// generates on T^{<=n}V.
  ActionSpan action_span(std::size_t n) const override {
    const std::size_t total = truncated_dim(n);
    auto gens = truncated_action(n);
    std::vector<Matrix<Exact>> seed{Matrix<Exact>::identity(total)};
    seed.insert(seed.end(), gens.begin(), gens.end());
    auto basis = span_closure(seed, gens);
    const std::size_t d = dim();
    std::vector<std::size_t> offsets{0};
    for (std::size_t m = 0; m <= n; ++m) offsets.push_back(offsets.back() + checked_power(d, m));
    ActionSpan span;
    for (const auto& b : basis) {
      span.on_unit.push_back(b(0, 0));
      span.on_v.push_back(n >= 1 ? b.block(1, 1, d, d) : Matrix<Exact>(d, d));
    }
    const std::size_t r = basis.size();
    span.gram = Matrix<Exact>(r, r);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) span.gram(a, b) = frobenius_pairing(basis[a], basis[b]);
    span.insertion_defect = [basis, offsets, n, d](const Matrix<Exact>& p) {
      const std::size_t r = basis.size();
      Matrix<Exact> k(r, r);
      for (std::size_t m = 1; m <= n; ++m) {
        const std::size_t lo = offsets[m], sz = offsets[m + 1] - offsets[m];
        for (std::size_t pos = 0; pos < m; ++pos) {
          Matrix<Exact> ins = Matrix<Exact>::identity(1);
          for (std::size_t j = 0; j < m; ++j) ins = kron(ins, j == pos ? p : Matrix<Exact>::identity(d));
          std::vector<Matrix<Exact>> defects;
          for (const auto& b : basis) defects.push_back(commutator(b.block(lo, lo, sz, sz), ins));
          for (std::size_t a = 0; a < r; ++a)
            for (std::size_t c = 0; c < r; ++c) k(a, c) += frobenius_pairing(defects[a], defects[c]);
        }
      }
      return k;
    };
    span.saturation_certifies = false;
    return span;
  }

 private:
  SL2Rep<Exact> rep_;
};

/// Number of irreducible sl2 constituents of V_1^{(x)m} by highest weight,
/// via the Clebsch-Gordan rule V_j (x) V_1 = V_{j+1} + V_{j-1}.
inline std::vector<std::size_t> clebsch_gordan_multiplicities(std::size_t m) {
  std::vector<std::size_t> mult{1};  // V_1^{(x)0} = V_0
  for (std::size_t step = 0; step < m; ++step) {
    std::vector<std::size_t> next(mult.size() + 1, 0);
    for (std::size_t j = 0; j < mult.size(); ++j) {
      if (!mult[j]) continue;
      next[j + 1] += mult[j];
      if (j >= 1) next[j - 1] += mult[j];
    }
    mult = std::move(next);
  }
  return mult;
}

/// dim End_{sl2}(V_1^{(x)m}) = sum of squared multiplicities.
inline std::size_t clebsch_gordan_commutant_dim(std::size_t m) {
  std::size_t s = 0;
  for (auto c : clebsch_gordan_multiplicities(m)) s += c * c;
  return s;
}

}  // namespace genrigid

#endif  // GENRIGID_REP_PROVIDERS_HPP
