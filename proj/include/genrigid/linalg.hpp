#ifndef GENRIGID_LINALG_HPP
#define GENRIGID_LINALG_HPP

// Field-generic linear algebra kernel. Exact fields use fraction-exact Gauss
// elimination; the float field delegates rank and spectra to Eigen and makes
// every decision against an explicit Tolerance.

#include "genrigid/matrix.hpp"
#include "genrigid/poly.hpp"

#include <Eigen/Dense>

#include <deque>
#include <functional>
#include <numeric>
#include <optional>

namespace genrigid {

// ---------------------------------------------------------------------------
// Eigen bridge (float mode only)

inline Eigen::MatrixXcd to_eigen(const Matrix<Complex>& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

inline Matrix<Complex> from_eigen(const Eigen::MatrixXcd& e) {
  Matrix<Complex> m(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

inline Eigen::VectorXd singular_values(const Matrix<Complex>& m) {
  if (m.empty()) return {};
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  return svd.singularValues();
}

// ---------------------------------------------------------------------------
// Exact row reduction

template <ExactScalar S>
struct RowEchelon {
  Matrix<S> reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

template <ExactScalar S>
RowEchelon<S> rref(Matrix<S> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && Field<S>::is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    S inv = Field<S>::one() / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || Field<S>::is_zero(m(i, c))) continue;
      S f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

// ---------------------------------------------------------------------------
// rank / kernel

template <class S>
std::size_t rank(const Matrix<S>& m, const Tolerance& tol = {}) {
  if (m.empty()) return 0;
  if constexpr (Field<S>::exact) {
    return rref(m).pivots.size();
  } else {
    Eigen::VectorXd sv = singular_values(m);
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    std::size_t r = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
      if (sv(k) > tol.tau * sv(0)) ++r;
    return r;
  }
}

/// Kernel basis as the columns of a cols x k matrix.
template <class S>
Matrix<S> kernel_basis(const Matrix<S>& m, const Tolerance& tol = {}) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return Matrix<S>::identity(n);
  if constexpr (Field<S>::exact) {
    auto [red, pivots] = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < n; ++c)
      if (!is_pivot[c]) free.push_back(c);
    Matrix<S> k(n, free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
      k(free[f], f) = Field<S>::one();
      for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], f) = -red(r, free[f]);
    }
    return k;
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m), Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    std::size_t r = 0;
    double top = sv.size() ? sv(0) : 0.0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
      if (top > 0.0 && sv(k) > tol.tau * top) ++r;
    Eigen::MatrixXcd v = svd.matrixV().rightCols(static_cast<Eigen::Index>(n - r));
    return from_eigen(v);
  }
}

// ---------------------------------------------------------------------------
// Inverse and linear solves

template <class S>
Matrix<S> inverse(const Matrix<S>& m, const Tolerance& tol = {}) {
  if (!m.square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if constexpr (Field<S>::exact) {
    auto [red, pivots] = rref(hcat(m, Matrix<S>::identity(n)));
    if (pivots.size() < n || pivots[n - 1] >= n) throw std::domain_error("singular matrix");
    return red.block(0, n, n, n);
  } else {
    auto e = to_eigen(m);
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(e);
    lu.setThreshold(tol.tau);
    if (!lu.isInvertible()) throw std::domain_error("singular matrix");
    return from_eigen(lu.inverse());
  }
}

/// Solves A X = B for X, requiring A to have full column rank and B to lie in
/// its column space.
template <class S>
Matrix<S> solve_exactly(const Matrix<S>& a, const Matrix<S>& b, const Tolerance& tol = {}) {
  if constexpr (Field<S>::exact) {
    auto [red, pivots] = rref(hcat(a, b));
    const std::size_t n = a.cols();
    for (auto p : pivots)
      if (p >= n) throw std::domain_error("right-hand side not in the column space");
    if (pivots.size() < n) throw std::domain_error("system is not uniquely solvable");
    return red.block(0, n, n, b.cols());
  } else {
    auto ea = to_eigen(a);
    Eigen::MatrixXcd x = ea.colPivHouseholderQr().solve(to_eigen(b));
    if ((ea * x - to_eigen(b)).norm() > 1e3 * tol.tau * std::max(1.0, to_eigen(b).norm()))
      throw std::domain_error("right-hand side not in the column space");
    return from_eigen(x);
  }
}

// ---------------------------------------------------------------------------
// Incremental independent sets

/// Maintains a set of linearly independent vectors and decides membership of
/// new vectors in their span. Exact fields keep an echelon basis; the float
/// field keeps an orthonormal basis and accepts a vector when its residual
/// exceeds sqrt(tau) times its norm.
template <class S>
class IndependentSet {
 public:
  explicit IndependentSet(std::size_t length, Tolerance tol = {}) : length_(length), tol_(tol) {}

  std::size_t length() const { return length_; }
  std::size_t size() const { return originals_.size(); }
  const std::vector<std::vector<S>>& vectors() const { return originals_; }

  /// Residual of v after projecting out the span (exact: echelon reduction).
  std::vector<S> reduce(std::vector<S> v) const {
    if (v.size() != length_) throw InputError("vector length mismatch");
    if constexpr (Field<S>::exact) {
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const S& f = v[pivots_[r]];
        if (Field<S>::is_zero(f)) continue;
        S c = f;
        for (std::size_t j = 0; j < length_; ++j)
          if (!Field<S>::is_zero(rows_[r][j])) v[j] -= c * rows_[r][j];
      }
    } else {
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& q : rows_) {
          Complex c = 0.0;
          for (std::size_t j = 0; j < length_; ++j) c += std::conj(q[j]) * v[j];
          for (std::size_t j = 0; j < length_; ++j) v[j] -= c * q[j];
        }
    }
    return v;
  }

  bool contains(const std::vector<S>& v) const { return is_null(reduce(v), norm(v)); }

  /// Adds v if it is independent of the current set; returns whether it was added.
  bool insert(const std::vector<S>& v) {
    double n0 = norm(v);
    auto r = reduce(v);
    if (is_null(r, n0)) return false;
    if constexpr (Field<S>::exact) {
      std::size_t p = 0;
      while (Field<S>::is_zero(r[p])) ++p;
      S inv = Field<S>::one() / r[p];
      for (S& x : r) x *= inv;
      // Keep earlier rows reduced at the new pivot, so membership tests stay
      // a single forward sweep.
      for (auto& row : rows_) {
        if (Field<S>::is_zero(row[p])) continue;
        S f = row[p];
        for (std::size_t j = 0; j < length_; ++j) row[j] -= f * r[j];
      }
      rows_.push_back(std::move(r));
      pivots_.push_back(p);
    } else {
      double nr = norm(r);
      for (S& x : r) x /= nr;
      rows_.push_back(std::move(r));
    }
    originals_.push_back(v);
    return true;
  }

 private:
  static double norm(const std::vector<S>& v) {
    double s = 0.0;
    for (const S& x : v) {
      double a = Field<S>::abs(x);
      s += a * a;
    }
    return std::sqrt(s);
  }

  bool is_null(const std::vector<S>& r, double scale) const {
    if constexpr (Field<S>::exact) {
      (void)scale;
      return std::all_of(r.begin(), r.end(), [](const S& x) { return Field<S>::is_zero(x); });
    } else {
      return norm(r) <= std::sqrt(tol_.tau) * scale || scale == 0.0;
    }
  }

  std::size_t length_;
  Tolerance tol_;
  std::vector<std::vector<S>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<S>> originals_;
};

// ---------------------------------------------------------------------------
// Subspaces

template <class S>
class Subspace {
 public:
  Subspace() = default;

  /// Wraps a basis matrix (columns); rejects dependent columns.
  Subspace(Matrix<S> basis, const Tolerance& tol = {}) : ambient_(basis.rows()), basis_(std::move(basis)) {  // NOLINT
    if (rank(basis_, tol) != basis_.cols()) throw InputError("subspace basis is not linearly independent");
  }

  static Subspace zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix<S>(ambient, 0);
    return s;
  }
  static Subspace full(std::size_t ambient) { return Subspace(Matrix<S>::identity(ambient)); }

  /// Span of arbitrary (possibly dependent) columns.
  static Subspace span_of(const Matrix<S>& cols, const Tolerance& tol = {}) {
    IndependentSet<S> set(cols.rows(), tol);
    for (std::size_t j = 0; j < cols.cols(); ++j) set.insert(cols.col(j));
    Subspace s;
    s.ambient_ = cols.rows();
    s.basis_ = from_columns(set.vectors(), cols.rows());
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix<S>& basis() const { return basis_; }

  bool contains(const Subspace& other, const Tolerance& tol = {}) const {
    if (other.ambient_ != ambient_) throw InputError("ambient dimension mismatch");
    if (other.dim() == 0) return true;
    return rank(hcat(basis_, other.basis_), tol) == dim();
  }
  bool contains_vector(const std::vector<S>& v, const Tolerance& tol = {}) const {
    return contains(Subspace::span_of(Matrix<S>::column(v), tol), tol);
  }
  /// Mutual containment via ranks of concatenated bases.
  bool equals(const Subspace& other, const Tolerance& tol = {}) const {
    return dim() == other.dim() && contains(other, tol);
  }

 private:
  std::size_t ambient_ = 0;
  Matrix<S> basis_;
};

template <class S>
Subspace<S> kernel(const Matrix<S>& m, const Tolerance& tol = {}) {
  Subspace<S> s = Subspace<S>::span_of(kernel_basis(m, tol), tol);
  return s.dim() == 0 ? Subspace<S>::zero(m.cols()) : s;
}

template <class S>
Subspace<S> intersect(const Subspace<S>& a, const Subspace<S>& b, const Tolerance& tol = {}) {
  if (a.dim() == 0 || b.dim() == 0) return Subspace<S>::zero(a.ambient_dim());
  Matrix<S> k = kernel_basis(hcat(a.basis(), -b.basis()), tol);
  Matrix<S> coeffs = k.block(0, 0, a.dim(), k.cols());
  auto s = Subspace<S>::span_of(a.basis() * coeffs, tol);
  return s.dim() == 0 ? Subspace<S>::zero(a.ambient_dim()) : s;
}

// ---------------------------------------------------------------------------
// Inner products and orthogonal projections

/// A positive-definite Hermitian Gram matrix defining <u|v> = u^H G v.
template <class S>
class InnerProductForm {
 public:
  InnerProductForm() = default;
  explicit InnerProductForm(Matrix<S> gram, const Tolerance& tol = {}) : gram_(std::move(gram)) {
    if (!gram_.square()) throw InputError("Gram matrix must be square");
    if (!is_hermitian(gram_, tol)) throw InputError("Gram matrix is not Hermitian");
    if (!positive_definite(gram_, tol)) throw std::domain_error("inner product form is not positive definite");
  }
  static InnerProductForm standard(std::size_t n) { return InnerProductForm(Matrix<S>::identity(n)); }

  std::size_t dim() const { return gram_.rows(); }
  const Matrix<S>& gram() const { return gram_; }

  S inner(const std::vector<S>& u, const std::vector<S>& v) const {
    S s = Field<S>::zero();
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (Field<S>::is_zero(u[i], 0.0)) continue;
      S row = Field<S>::zero();
      for (std::size_t j = 0; j < v.size(); ++j) row += gram_(i, j) * v[j];
      s += Field<S>::conj(u[i]) * row;
    }
    return s;
  }

  /// Adjoint with respect to this form: G^{-1} X^H G.
  Matrix<S> adjoint(const Matrix<S>& x) const {
    if (!inv_) inv_ = inverse(gram_);
    return *inv_ * x.adjoint() * gram_;
  }

  /// Restriction to a subspace, expressed in the subspace's basis.
  InnerProductForm restrict_to(const Subspace<S>& w) const {
    return InnerProductForm(w.basis().adjoint() * gram_ * w.basis());
  }

  static bool is_hermitian(const Matrix<S>& m, const Tolerance& tol) {
    if constexpr (Field<S>::exact) {
      return m == m.adjoint();
    } else {
      return (m - m.adjoint()).max_abs() <= 10 * tol.tau * std::max(1.0, m.max_abs());
    }
  }

 private:
  static bool positive_definite(const Matrix<S>& g, const Tolerance& tol) {
    if constexpr (Field<S>::exact) {
      // Unpivoted elimination: all pivots are positive exactly when all
      // leading principal minors are.
      Matrix<S> m = g;
      const std::size_t n = m.rows();
      for (std::size_t k = 0; k < n; ++k) {
        const S& p = m(k, k);
        if (sgn(Field<S>::imag_part(p)) != 0 || sgn(Field<S>::real_part(p)) <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
          if (Field<S>::is_zero(m(i, k))) continue;
          S f = m(i, k) / p;
          for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
      }
      return true;
    } else {
      if (g.rows() == 0) return true;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(g));
      return es.eigenvalues().minCoeff() > tol.tau;
    }
  }

  Matrix<S> gram_;
  mutable std::optional<Matrix<S>> inv_;
};

template <class S>
struct OrthoProjection {
  Matrix<S> matrix;
  Subspace<S> target;
};

/// Orthogonal projection onto W with respect to `form`, by Gram-Schmidt
/// without normalization (so it stays inside the field).
template <class S>
OrthoProjection<S> orth_projection(const Subspace<S>& w, const InnerProductForm<S>& form,
                                   const Tolerance& tol = {}) {
  const std::size_t n = w.ambient_dim();
  if (form.dim() != n) throw InputError("form dimension does not match the subspace");
  std::vector<std::vector<S>> ortho;
  std::vector<S> norms;
  Matrix<S> p(n, n);
  for (std::size_t k = 0; k < w.dim(); ++k) {
    std::vector<S> u = w.basis().col(k);
    for (std::size_t j = 0; j < ortho.size(); ++j) {
      S c = form.inner(ortho[j], u) / norms[j];
      for (std::size_t i = 0; i < n; ++i) u[i] -= c * ortho[j][i];
    }
    S nn = form.inner(u, u);
    bool degenerate;
    if constexpr (Field<S>::exact) degenerate = sgn(Field<S>::real_part(nn)) <= 0;
    else degenerate = nn.real() <= tol.tau;
    if (degenerate) throw std::domain_error("degenerate form: non-positive-definite on the subspace");
    // P += u u^H G / <u|u>
    std::vector<S> ug(n, Field<S>::zero());
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) ug[j] += Field<S>::conj(u[i]) * form.gram()(i, j);
    for (std::size_t i = 0; i < n; ++i) {
      if (Field<S>::is_zero(u[i], 0.0)) continue;
      S ui = u[i] / nn;
      for (std::size_t j = 0; j < n; ++j) p(i, j) += ui * ug[j];
    }
    ortho.push_back(std::move(u));
    norms.push_back(nn);
  }
  return {std::move(p), w};
}

/// Coordinates in W's basis of an operator that maps W into itself.
template <class S>
Matrix<S> restrict_operator(const Matrix<S>& x, const Subspace<S>& w, const Tolerance& tol = {}) {
  if (w.dim() == 0) return Matrix<S>(0, 0);
  return solve_exactly(w.basis(), x * w.basis(), tol);
}

// ---------------------------------------------------------------------------
// Commutants and multiplicative closures

/// True when a - b vanishes (exactly, or within `bound` in float mode).
template <class S>
bool near_zero(const Matrix<S>& m, double bound) {
  if constexpr (Field<S>::exact) {
    (void)bound;
    return m.is_zero();
  } else {
    return m.max_abs() <= bound;
  }
}

/// Basis of {X : X M_i = M_i X for all i} inside End(C^n).
template <class S>
std::vector<Matrix<S>> commutant(const std::vector<Matrix<S>>& ops, std::size_t n, const Tolerance& tol = {}) {
  for (const auto& m : ops)
    if (m.rows() != n || m.cols() != n) throw InputError("commutant: operators must be n x n");
  const std::size_t nn = n * n;
  std::vector<Matrix<S>> basis;
  if (ops.empty()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) basis.push_back(Matrix<S>::unit(n, n, i, j));
    return basis;
  }
  // Unknown X_{ab} sits at column a*n+b; equation (i,j) of op k is
  // sum_c X_{ic} M_{cj} - M_{ic} X_{cj} = 0.
  Matrix<S> sys(ops.size() * nn, nn);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const auto& m = ops[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t row = k * nn + i * n + j;
        for (std::size_t c = 0; c < n; ++c) {
          sys(row, i * n + c) += m(c, j);
          sys(row, c * n + j) -= m(i, c);
        }
      }
  }
  if constexpr (Field<S>::exact) {
    // Reduce the equations incrementally; the full system is mostly redundant.
    IndependentSet<S> eqs(nn, tol);
    for (std::size_t r = 0; r < sys.rows(); ++r) {
      auto row = sys.row(r);
      std::vector<S> v(row.begin(), row.end());
      if (std::any_of(v.begin(), v.end(), [](const S& x) { return !Field<S>::is_zero(x); })) eqs.insert(v);
      if (eqs.size() == nn) break;
    }
    sys = from_columns(eqs.vectors(), nn).transpose();
    if (eqs.size() == 0) sys = Matrix<S>(0, nn);
  }
  Matrix<S> k = kernel_basis(sys, tol);
  for (std::size_t f = 0; f < k.cols(); ++f) basis.push_back(unvec<S>(k.col(f), n, n));
  return basis;
}

/// Adjoint used by closures: identity form unless a Gram matrix is supplied.
template <class S>
using AdjointFn = std::function<Matrix<S>(const Matrix<S>&)>;

/// Smallest subspace containing `seed`, closed under left and right
/// multiplication by every element of `products_with` and (if an adjoint is
/// given) under the adjoint. Returns a basis.
template <class S>
std::vector<Matrix<S>> span_closure(const std::vector<Matrix<S>>& seed, const std::vector<Matrix<S>>& products_with,
                                    const AdjointFn<S>& star = nullptr, const Tolerance& tol = {}) {
  if (seed.empty()) return {};
  const std::size_t r = seed.front().rows();
  const std::size_t c = seed.front().cols();
  IndependentSet<S> set(r * c, tol);
  std::vector<Matrix<S>> basis;
  std::deque<Matrix<S>> queue;
  auto offer = [&](Matrix<S> m) {
    if (set.insert(vec(m))) {
      basis.push_back(m);
      queue.push_back(std::move(m));
    }
  };
  for (const auto& s : seed) offer(s);
  while (!queue.empty() && set.size() < r * c) {
    Matrix<S> x = std::move(queue.front());
    queue.pop_front();
    for (const auto& p : products_with) {
      if (p.cols() == r) offer(p * x);
      if (c == p.rows()) offer(x * p);
    }
    if (star) offer(star(x));
  }
  return basis;
}

/// Coordinates of `x` in the span of `basis` (which must be independent).
template <class S>
std::vector<S> coordinates(const std::vector<Matrix<S>>& basis, const Matrix<S>& x, const Tolerance& tol = {}) {
  std::vector<std::vector<S>> cols;
  for (const auto& b : basis) cols.push_back(vec(b));
  Matrix<S> a = from_columns(cols, x.size());
  Matrix<S> sol = solve_exactly(a, Matrix<S>::column(vec(x)), tol);
  return sol.col(0);
}

template <class S>
std::size_t span_dim(const std::vector<Matrix<S>>& mats, const Tolerance& tol = {}) {
  if (mats.empty()) return 0;
  IndependentSet<S> set(mats.front().size(), tol);
  for (const auto& m : mats) set.insert(vec(m));
  return set.size();
}

// ---------------------------------------------------------------------------
// Spectra

namespace detail {

/// Single-linkage clusters of points within `radius`; returns cluster sizes
/// in order of first appearance, plus the cluster index of every point.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> cluster_points(const std::vector<Complex>& pts,
                                                                                    double radius) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    return parent[a] == a ? a : parent[a] = find(parent[a]);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(pts[i] - pts[j]) <= radius) parent[find(i)] = find(j);
  std::vector<std::size_t> label(n), roots;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    auto it = std::find(roots.begin(), roots.end(), r);
    label[i] = static_cast<std::size_t>(it - roots.begin());
    if (it == roots.end()) roots.push_back(r);
  }
  std::vector<std::size_t> sizes(roots.size(), 0);
  for (auto l : label) ++sizes[l];
  return {sizes, label};
}

}  // namespace detail

/// Eigenvalue multiplicities in float mode, clustering eigenvalues closer than
/// `cluster_factor * tau * |M|` (largest singular value). With `normal`, the
/// input must satisfy M M^H = M^H M within tolerance.
template <class S>
std::vector<std::size_t> eigen_multiplicities(const Matrix<S>& m_in, bool normal, const Tolerance& tol = {}) {
  if (!m_in.square()) throw InputError("eigenvalues of a non-square matrix");
  if (m_in.rows() == 0) return {};
  Matrix<Complex> m = convert_matrix<Complex>(m_in);
  auto e = to_eigen(m);
  double norm = e.operatorNorm();
  if (normal) {
    double defect = (e * e.adjoint() - e.adjoint() * e).norm();
    if (defect > 10 * tol.tau * std::max(1.0, norm * norm))
      throw InputError("eigen_multiplicities: matrix is not normal");
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(e, false);
  std::vector<Complex> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  auto sizes = detail::cluster_points(ev, tol.cluster_radius(std::max(norm, 1e-300))).first;
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace genrigid

#endif  // GENRIGID_LINALG_HPP
