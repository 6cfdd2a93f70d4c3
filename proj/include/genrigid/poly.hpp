#ifndef GENRIGID_POLY_HPP
#define GENRIGID_POLY_HPP

// Dense univariate polynomials over an exact field, enough to read off root
// multiplicities of a characteristic polynomial without leaving the field.

#include "genrigid/matrix.hpp"

#include <algorithm>
#include <vector>

namespace genrigid {

/// Coefficients, lowest degree first. The zero polynomial is the empty vector.
template <ExactScalar S>
using Poly = std::vector<S>;

namespace poly {

template <ExactScalar S>
void trim(Poly<S>& p) {
  while (!p.empty() && Field<S>::is_zero(p.back())) p.pop_back();
}

template <ExactScalar S>
int degree(const Poly<S>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <ExactScalar S>
Poly<S> derivative(const Poly<S>& p) {
  Poly<S> d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Field<S>::from_int(static_cast<long>(k)));
  trim(d);
  return d;
}

template <ExactScalar S>
Poly<S> monic(Poly<S> p) {
  trim(p);
  if (p.empty()) return p;
  S lead = p.back();
  for (S& c : p) c /= lead;
  return p;
}

template <ExactScalar S>
Poly<S> sub(Poly<S> a, const Poly<S>& b) {
  if (a.size() < b.size()) a.resize(b.size(), Field<S>::zero());
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  trim(a);
  return a;
}

/// Quotient and remainder; throws on division by zero.
template <ExactScalar S>
std::pair<Poly<S>, Poly<S>> divmod(Poly<S> a, Poly<S> b) {
  trim(a);
  trim(b);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {Poly<S>{}, a};
  Poly<S> q(a.size() - b.size() + 1, Field<S>::zero());
  const S& lead = b.back();
  for (int k = degree(a) - degree(b); k >= 0; --k) {
    S c = a[k + b.size() - 1] / lead;
    q[k] = c;
    if (Field<S>::is_zero(c)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  trim(q);
  a.resize(b.size() - 1);
  trim(a);
  return {q, a};
}

template <ExactScalar S>
Poly<S> gcd(Poly<S> a, Poly<S> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <ExactScalar S>
Poly<S> exact_div(const Poly<S>& a, const Poly<S>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.empty()) throw std::logic_error("non-exact polynomial division");
  return q;
}

}  // namespace poly

/// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier.
template <ExactScalar S>
Poly<S> characteristic_polynomial(const Matrix<S>& a) {
  if (!a.square()) throw InputError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  Poly<S> c(n + 1, Field<S>::zero());
  c[n] = Field<S>::one();
  Matrix<S> m(n, n);
  const Matrix<S> id = Matrix<S>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    c[n - k] = -(a * m).trace() / Field<S>::from_int(static_cast<long>(k));
  }
  return c;
}

/// Squarefree (Yun) decomposition: entry s-1 holds the monic product of the
/// distinct linear factors that occur with multiplicity exactly s.
template <ExactScalar S>
std::vector<Poly<S>> squarefree_decomposition(const Poly<S>& f_in) {
  Poly<S> f = poly::monic(f_in);
  std::vector<Poly<S>> out;
  if (poly::degree(f) < 1) return out;
  Poly<S> fp = poly::derivative(f);
  Poly<S> a = poly::gcd(f, fp);
  Poly<S> b = poly::exact_div(f, a);
  Poly<S> c = poly::exact_div(fp, a);
  Poly<S> d = poly::sub(c, poly::derivative(b));
  while (poly::degree(b) >= 1) {
    Poly<S> ai = poly::gcd(b, d);
    out.push_back(ai);
    b = poly::exact_div(b, ai);
    c = poly::exact_div(d, ai);
    d = poly::sub(c, poly::derivative(b));
  }
  return out;
}

/// Multiplicities of the distinct eigenvalues of `a` (algebraic), sorted
/// ascending. Computed exactly; the eigenvalues themselves are never formed.
template <ExactScalar S>
std::vector<std::size_t> exact_eigen_multiplicities(const Matrix<S>& a) {
  std::vector<std::size_t> mult;
  auto parts = squarefree_decomposition(characteristic_polynomial(a));
  for (std::size_t s = 0; s < parts.size(); ++s) {
    int deg = poly::degree(parts[s]);
    for (int k = 0; k < deg; ++k) mult.push_back(s + 1);
  }
  std::sort(mult.begin(), mult.end());
  return mult;
}

}  // namespace genrigid

#endif  // GENRIGID_POLY_HPP
