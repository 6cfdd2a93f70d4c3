#ifndef GENRIGID_ALGEBRA_GEN_HPP
#define GENRIGID_ALGEBRA_GEN_HPP

// Finite-dimensional unital algebras, word spans Gen^{<=m} of generator
// tuples, explicit generating pairs for direct sums of matrix algebras, and
// Monte Carlo generation density.

#include "genrigid/linalg.hpp"
#include "genrigid/random.hpp"

#include <chrono>
#include <optional>

namespace genrigid {

/// Faithful matrix realization of a unital algebra: basis matrices B_k in
/// End(C^N). Algebras given by structure constants are realized by their
/// left-regular matrices.
template <class S>
class FinDimAlgebra {
 public:
  /// Matrix basis; the span must be closed under products and contain 1.
  static FinDimAlgebra from_matrix_basis(std::vector<Matrix<S>> basis, bool has_involution,
                                         const Tolerance& tol = {}) {
    if (basis.empty()) throw InputError("algebra basis is empty");
    FinDimAlgebra a;
    a.basis_ = std::move(basis);
    a.tol_ = tol;
    a.star_ = has_involution;
    a.n_ = a.basis_.front().rows();
    for (const auto& b : a.basis_)
      if (b.rows() != a.n_ || b.cols() != a.n_) throw InputError("algebra basis matrices must be N x N of equal size");
    if (span_dim(a.basis_, tol) != a.basis_.size()) throw InputError("algebra basis is linearly dependent");
    a.build_coordinates();
    a.unit_ = a.coordinates(Matrix<S>::identity(a.n_));
    for (const auto& x : a.basis_)
      for (const auto& y : a.basis_) a.coordinates(x * y);
    if (has_involution)
      for (const auto& x : a.basis_) a.coordinates(x.adjoint());
    return a;
  }

  /// c[i][j][k] = coefficient of e_k in e_i e_j.
  static FinDimAlgebra from_structure_constants(const std::vector<std::vector<std::vector<S>>>& c,
                                                const std::vector<S>& unit, const Tolerance& tol = {}) {
    const std::size_t n = c.size();
    if (n == 0) throw InputError("structure constants are empty");
    if (unit.size() != n) throw InputError("unit coordinates have the wrong length");
    for (const auto& ci : c) {
      if (ci.size() != n) throw InputError("structure constants must be dim x dim x dim");
      for (const auto& cij : ci)
        if (cij.size() != n) throw InputError("structure constants must be dim x dim x dim");
    }
    auto mul = [&](const std::vector<S>& x, const std::vector<S>& y) {
      std::vector<S> z(n, Field<S>::zero());
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          S xy = x[i] * y[j];
          if (Field<S>::is_zero(xy, 0.0)) continue;
          for (std::size_t k = 0; k < n; ++k) z[k] += xy * c[i][j][k];
        }
      return z;
    };
    auto e = [&](std::size_t i) {
      std::vector<S> v(n, Field<S>::zero());
      v[i] = Field<S>::one();
      return v;
    };
    auto close = [&](const std::vector<S>& a, const std::vector<S>& b) {
      for (std::size_t k = 0; k < n; ++k)
        if (!Field<S>::is_zero(a[k] - b[k], 10 * tol.tau)) return false;
      return true;
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!close(mul(mul(e(i), e(j)), e(k)), mul(e(i), mul(e(j), e(k)))))
            throw InputError("structure constants are not associative");
    for (std::size_t i = 0; i < n; ++i)
      if (!close(mul(unit, e(i)), e(i)) || !close(mul(e(i), unit), e(i)))
        throw InputError("declared unit is not a two-sided identity");
    std::vector<Matrix<S>> left;
    for (std::size_t i = 0; i < n; ++i) {
      Matrix<S> l(n, n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) l(k, j) = c[i][j][k];
      left.push_back(std::move(l));
    }
    return from_matrix_basis(std::move(left), false, tol);
  }

  std::size_t dim() const { return basis_.size(); }
  std::size_t realization_size() const { return n_; }
  bool has_involution() const { return star_; }
  const std::vector<Matrix<S>>& basis() const { return basis_; }
  const std::vector<S>& unit() const { return unit_; }
  const Tolerance& tolerance() const { return tol_; }

  Matrix<S> to_matrix(const std::vector<S>& coords) const {
    if (coords.size() != dim()) throw InputError("element coordinates have the wrong length");
    Matrix<S> m(n_, n_);
    for (std::size_t k = 0; k < dim(); ++k)
      if (!Field<S>::is_zero(coords[k], 0.0)) m += coords[k] * basis_[k];
    return m;
  }

  std::vector<S> coordinates(const Matrix<S>& x) const {
    auto v = vec(x);
    std::vector<S> c(dim(), Field<S>::zero());
    if constexpr (Field<S>::exact) {
      auto r = reduce_.reduce(v);
      if (std::any_of(r.begin(), r.end(), [](const S& s) { return !Field<S>::is_zero(s); }))
        throw InputError("element is not in the algebra (span not closed)");
      for (std::size_t k = 0; k < dim(); ++k) {
        S acc = Field<S>::zero();
        for (std::size_t j = 0; j < v.size(); ++j) acc += left_inverse_(k, j) * v[j];
        c[k] = acc;
      }
    } else {
      for (std::size_t k = 0; k < dim(); ++k) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < v.size(); ++j) acc += left_inverse_(k, j) * v[j];
        c[k] = acc;
      }
      if ((to_matrix(c) - x).max_abs() > std::sqrt(tol_.tau) * std::max(1.0, x.max_abs()))
        throw InputError("element is not in the algebra (span not closed)");
    }
    return c;
  }

  /// Real basis of the self-adjoint part, orthonormal for Re tr(x^H y).
  std::vector<Matrix<Complex>> selfadjoint_basis() const {
    if (!star_) throw InputError("algebra has no declared involution");
    std::vector<std::vector<double>> ortho;
    std::vector<Matrix<Complex>> out;
    auto realvec = [](const Matrix<Complex>& m) {
      std::vector<double> v;
      for (const Complex& z : m.data()) {
        v.push_back(z.real());
        v.push_back(z.imag());
      }
      return v;
    };
    for (const auto& b : basis_) {
      Matrix<Complex> bc = convert_matrix<Complex>(b);
      Matrix<Complex> h1 = Complex(0.5) * (bc + bc.adjoint());
      Matrix<Complex> h2 = Complex(0.0, 0.5) * (bc - bc.adjoint());
      for (const auto& h : {h1, h2}) {
        auto v = realvec(h);
        double n0 = 0.0;
        for (double x : v) n0 += x * x;
        n0 = std::sqrt(n0);
        for (int pass = 0; pass < 2; ++pass)
          for (const auto& q : ortho) {
            double c = 0.0;
            for (std::size_t j = 0; j < v.size(); ++j) c += q[j] * v[j];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * q[j];
          }
        double nr = 0.0;
        for (double x : v) nr += x * x;
        nr = std::sqrt(nr);
        if (n0 == 0.0 || nr <= 1e-8 * n0) continue;
        for (double& x : v) x /= nr;
        Matrix<Complex> m(n_, n_);
        for (std::size_t j = 0; j < n_ * n_; ++j) m.data()[j] = Complex(v[2 * j], v[2 * j + 1]);
        ortho.push_back(std::move(v));
        out.push_back(std::move(m));
      }
    }
    return out;
  }

 private:
  void build_coordinates() {
    std::vector<std::vector<S>> cols;
    for (const auto& b : basis_) cols.push_back(vec(b));
    Matrix<S> bv = from_columns(cols, n_ * n_);
    // Left inverse (B^H B)^{-1} B^H; exact because B has full column rank.
    left_inverse_ = inverse(bv.adjoint() * bv) * bv.adjoint();
    if constexpr (Field<S>::exact) {
      reduce_ = IndependentSet<S>(n_ * n_, tol_);
      for (const auto& c : cols) reduce_.insert(c);
    }
  }

  std::vector<Matrix<S>> basis_;
  std::vector<S> unit_;
  std::size_t n_ = 0;
  bool star_ = false;
  Tolerance tol_;
  Matrix<S> left_inverse_;
  IndependentSet<S> reduce_{0};
};

template <class S>
using GeneratorTuple = std::vector<std::vector<S>>;

/// M_{n_1} + ... + M_{n_k}, block-diagonally in M_n with the basis e_ij of
/// each block in order; carries the conjugate-transpose involution.
template <class S>
FinDimAlgebra<S> block_matrix_algebra(const std::vector<std::size_t>& sizes, const Tolerance& tol = {}) {
  std::size_t n = 0;
  for (auto s : sizes) {
    if (s == 0) throw InputError("block sizes must be positive");
    n += s;
  }
  if (n == 0) throw InputError("at least one block is required");
  std::vector<Matrix<S>> basis;
  std::size_t off = 0;
  for (auto s : sizes) {
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) basis.push_back(Matrix<S>::unit(n, n, off + i, off + j));
    off += s;
  }
  return FinDimAlgebra<S>::from_matrix_basis(std::move(basis), true, tol);
}

template <class S>
FinDimAlgebra<S> matrix_algebra(std::size_t n, const Tolerance& tol = {}) {
  return block_matrix_algebra<S>({n}, tol);
}

/// k[x_1..x_n]/(x_i x_j : all i, j), basis 1, x_1, ..., x_n.
template <class S>
FinDimAlgebra<S> square_zero_algebra(std::size_t n, const Tolerance& tol = {}) {
  const std::size_t dim = n + 1;
  std::vector<std::vector<std::vector<S>>> c(dim, std::vector<std::vector<S>>(dim, std::vector<S>(dim, Field<S>::zero())));
  for (std::size_t i = 0; i < dim; ++i) {
    c[0][i][i] = Field<S>::one();
    c[i][0][i] = Field<S>::one();
  }
  std::vector<S> unit(dim, Field<S>::zero());
  unit[0] = Field<S>::one();
  return FinDimAlgebra<S>::from_structure_constants(c, unit, tol);
}

namespace detail {

template <class S>
std::vector<Matrix<S>> word_generators(const FinDimAlgebra<S>& a, const GeneratorTuple<S>& t, bool star) {
  if (star && !a.has_involution()) throw InputError("star requested on an algebra without an involution");
  std::vector<Matrix<S>> gens;
  for (const auto& x : t) gens.push_back(a.to_matrix(x));
  if (star) {
    const std::size_t k = gens.size();
    for (std::size_t i = 0; i < k; ++i) gens.push_back(gens[i].adjoint());
  }
  return gens;
}

}  // namespace detail

/// Filtration of word spans: level m is the span of words of length <= m.
template <class S>
class WordFiltration {
 public:
  WordFiltration(const FinDimAlgebra<S>& a, const GeneratorTuple<S>& t, bool star)
      : alg_(&a), gens_(detail::word_generators(a, t, star)), set_(a.realization_size() * a.realization_size(), a.tolerance()) {
    Matrix<S> one = Matrix<S>::identity(a.realization_size());
    set_.insert(vec(one));
    frontier_.push_back(one);
    members_.push_back(std::move(one));
    dims_.push_back(1);
  }

  /// Extends to level m+1 from the elements new at level m.
  void step() {
    std::vector<Matrix<S>> next;
    for (const auto& f : frontier_)
      for (const auto& g : gens_) {
        Matrix<S> w = g * f;
        if (set_.insert(vec(w))) {
          next.push_back(w);
          members_.push_back(std::move(w));
        }
      }
    frontier_ = std::move(next);
    dims_.push_back(set_.size());
  }

  std::size_t level() const { return dims_.size() - 1; }
  std::size_t dim() const { return dims_.back(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  bool stalled() const { return frontier_.empty(); }

  /// Current span as a subspace of the algebra's coordinate space.
  Subspace<S> span() const {
    std::vector<std::vector<S>> cols;
    for (const auto& m : members_) cols.push_back(alg_->coordinates(m));
    return Subspace<S>::span_of(from_columns(cols, alg_->dim()), alg_->tolerance());
  }

 private:
  const FinDimAlgebra<S>* alg_;
  std::vector<Matrix<S>> gens_;
  IndependentSet<S> set_;
  std::vector<Matrix<S>> frontier_;
  std::vector<Matrix<S>> members_;
  std::vector<std::size_t> dims_;
};

template <class S>
Subspace<S> monomial_span(const FinDimAlgebra<S>& a, const GeneratorTuple<S>& t, std::size_t m, bool star) {
  WordFiltration<S> f(a, t, star);
  while (f.level() < m && !f.stalled()) f.step();
  return f.span();
}

struct GenerationResult {
  bool generating = false;
  std::size_t stabilization_degree = 0;
  std::size_t span_dim = 0;
};

/// Iterates m = 0, 1, ... until span(m) = span(m+1).
template <class S>
GenerationResult is_generating(const FinDimAlgebra<S>& a, const GeneratorTuple<S>& t, bool star) {
  WordFiltration<S> f(a, t, star);
  for (;;) {
    std::size_t before = f.dim();
    f.step();
    if (f.dim() == before) return {before == a.dim(), f.level() - 1, before};
  }
}

template <class S>
struct ExplicitPair {
  FinDimAlgebra<S> algebra;
  GeneratorTuple<S> tuple;  // (a, b)
};

/// a = diag(lambda), b = sum of e_ij over i != j inside each block.
template <ExactScalar S>
ExplicitPair<S> explicit_pair(const std::vector<std::size_t>& block_sizes, const std::vector<S>& lambdas) {
  std::size_t n = 0;
  for (auto s : block_sizes) n += s;
  if (lambdas.size() != n) throw InputError("need one lambda per diagonal position");
  for (std::size_t i = 0; i < n; ++i) {
    if (Field<S>::is_zero(lambdas[i])) throw InputError("lambda_" + std::to_string(i + 1) + " is zero");
    for (std::size_t j = i + 1; j < n; ++j)
      if (lambdas[i] == lambdas[j])
        throw InputError("lambda_" + std::to_string(i + 1) + " = lambda_" + std::to_string(j + 1));
  }
  struct Ratio {
    std::size_t i, j;
    S value;
  };
  std::vector<Ratio> ratios;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) ratios.push_back({i, j, lambdas[i] / lambdas[j]});
  for (std::size_t p = 0; p < ratios.size(); ++p)
    for (std::size_t q = p + 1; q < ratios.size(); ++q)
      if (ratios[p].value == ratios[q].value)
        throw InputError("ratios lambda_" + std::to_string(ratios[p].i + 1) + "/lambda_" +
                         std::to_string(ratios[p].j + 1) + " and lambda_" + std::to_string(ratios[q].i + 1) +
                         "/lambda_" + std::to_string(ratios[q].j + 1) + " coincide");
  auto alg = block_matrix_algebra<S>(block_sizes);
  Matrix<S> a = Matrix<S>::diagonal(lambdas);
  Matrix<S> b(n, n);
  std::size_t off = 0;
  for (auto s : block_sizes) {
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j)
        if (i != j) b(off + i, off + j) = Field<S>::one();
    off += s;
  }
  GeneratorTuple<S> t{alg.coordinates(a), alg.coordinates(b)};
  return {std::move(alg), std::move(t)};
}

// ---------------------------------------------------------------------------
// Density experiments

enum class Sampler { GaussianSelfAdjoint, UniformRational };

inline Sampler parse_sampler(std::string_view s) {
  if (s == "gaussian-selfadjoint") return Sampler::GaussianSelfAdjoint;
  if (s == "uniform-rational") return Sampler::UniformRational;
  throw InputError("unknown sampler '" + std::string(s) + "'");
}

inline std::string_view sampler_name(Sampler s) {
  return s == Sampler::GaussianSelfAdjoint ? "gaussian-selfadjoint" : "uniform-rational";
}

struct TrialRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  bool generating = false;
  std::size_t span_dim = 0;
  std::size_t stabilization_degree = 0;
};

struct ExperimentReport {
  std::string criterion;
  std::size_t trials = 0;
  std::size_t good_count = 0;
  std::uint64_t seed = 0;
  std::vector<TrialRecord> records;
  std::vector<std::size_t> bad_indices;
  double seconds = 0.0;

  double fraction() const { return trials ? static_cast<double>(good_count) / static_cast<double>(trials) : 0.0; }
};

/// Uniform rational num/den, num in [-1e6, 1e6], den in [1, 1e6].
inline Rational uniform_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  long p = num(rng);
  long q = den(rng);
  return make_rational(p, q);
}

/// One sampled tuple under `sampler` from the trial's own RNG.
template <class S>
GeneratorTuple<S> sample_tuple(const FinDimAlgebra<S>& a, std::size_t n, Sampler sampler, std::mt19937_64& rng,
                               const std::vector<Matrix<Complex>>* sa_basis = nullptr) {
  GeneratorTuple<S> t;
  if (sampler == Sampler::UniformRational) {
    if constexpr (!Field<S>::exact) {
      throw InputError("uniform-rational sampling needs exact mode");
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<S> x;
        for (std::size_t k = 0; k < a.dim(); ++k) x.push_back(Field<S>::from_parts(uniform_rational(rng), Rational(0)));
        t.push_back(std::move(x));
      }
    }
  } else {
    if constexpr (Field<S>::exact) {
      throw InputError("gaussian-selfadjoint sampling needs float mode");
    } else {
      if (!sa_basis) throw InputError("self-adjoint basis required");
      std::normal_distribution<double> g(0.0, 1.0);
      for (std::size_t i = 0; i < n; ++i) {
        Matrix<Complex> m(a.realization_size(), a.realization_size());
        for (const auto& h : *sa_basis) m += Complex(g(rng)) * h;
        t.push_back(a.coordinates(m));
      }
    }
  }
  return t;
}

template <class S>
ExperimentReport sample_generation_density(const FinDimAlgebra<S>& a, std::size_t n, std::size_t trials,
                                           Sampler sampler, bool star, std::uint64_t seed) {
  if (trials == 0) throw InputError("trials must be at least 1");
  if (n == 0) throw InputError("tuple size must be at least 1");
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Matrix<Complex>> sa;
  if constexpr (!Field<S>::exact)
    if (sampler == Sampler::GaussianSelfAdjoint) sa = a.selfadjoint_basis();
  ExperimentReport rep;
  rep.criterion = "generates (" + std::string(sampler_name(sampler)) + ", n=" + std::to_string(n) + ")";
  rep.trials = trials;
  rep.seed = seed;
  rep.records = parallel_map<TrialRecord>(trials, [&](std::size_t i) {
    auto rng = trial_rng(seed, i);
    auto t = sample_tuple(a, n, sampler, rng, &sa);
    auto g = is_generating(a, t, star);
    return TrialRecord{i, trial_seed(seed, i), g.generating, g.span_dim, g.stabilization_degree};
  });
  for (const auto& r : rep.records) {
    if (r.generating)
      ++rep.good_count;
    else
      rep.bad_indices.push_back(r.index);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace genrigid

#endif  // GENRIGID_ALGEBRA_GEN_HPP
