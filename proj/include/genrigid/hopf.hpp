#ifndef GENRIGID_HOPF_HPP
#define GENRIGID_HOPF_HPP

// Commutative case: functions on a finite group G as value vectors. The
// kernel ideal of W <= V is generated by the coefficients g -> f(g w) with f
// vanishing on W; its zero locus is G_W.

#include "genrigid/rep_providers.hpp"

namespace genrigid {

using Function = std::vector<Exact>;  // indexed by group element

struct CoefficientElement {
  std::vector<Exact> f;  // functional on V (row vector)
  std::vector<Exact> v;
  Function values;       // g -> f(g v)
};

inline CoefficientElement coefficient(const MatrixRep<Exact>& rep, std::vector<Exact> f, std::vector<Exact> v) {
  const std::size_t n = rep.dim();
  if (f.size() != n || v.size() != n) throw InputError("coefficient vectors must have length dim V");
  CoefficientElement c{std::move(f), std::move(v), {}};
  for (const auto& g : rep.images) {
    Exact s = Field<Exact>::zero();
    for (std::size_t i = 0; i < n; ++i) {
      if (c.f[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) s += c.f[i] * g(i, j) * c.v[j];
    }
    c.values.push_back(s);
  }
  return c;
}

/// Span of all matrix coefficients g -> rho(g)_{ij}.
inline Subspace<Exact> coefficient_space(const MatrixRep<Exact>& rep) {
  const std::size_t order = rep.images.size(), n = rep.dim();
  IndependentSet<Exact> set(order);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Function values;
      for (const auto& g : rep.images) values.push_back(g(i, j));
      set.insert(values);
    }
  if (set.size() == 0) return Subspace<Exact>::zero(order);
  return Subspace<Exact>(from_columns(set.vectors(), order));
}

/// Basis of W^perp = {f in V* : f|_W = 0}, as row vectors.
inline std::vector<std::vector<Exact>> annihilator(const Subspace<Exact>& w) {
  const std::size_t n = w.ambient_dim();
  if (w.dim() == 0) {
    std::vector<std::vector<Exact>> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(Matrix<Exact>::identity(n).col(i));
    return all;
  }
  Matrix<Exact> k = kernel_basis(w.basis().transpose());
  std::vector<std::vector<Exact>> out;
  for (std::size_t c = 0; c < k.cols(); ++c) out.push_back(k.col(c));
  return out;
}

inline std::vector<Function> kernel_ideal_generators(const MatrixRep<Exact>& rep, const Subspace<Exact>& w) {
  std::vector<Function> gens;
  if (w.dim() == 0) return gens;
  for (const auto& f : annihilator(w))
    for (std::size_t j = 0; j < w.dim(); ++j) gens.push_back(coefficient(rep, f, w.basis().col(j)).values);
  return gens;
}

inline std::vector<std::size_t> zero_locus(const std::vector<Function>& gens, std::size_t order) {
  std::vector<std::size_t> locus;
  for (std::size_t g = 0; g < order; ++g) {
    bool zero = true;
    for (const auto& h : gens) {
      if (h.size() != order) throw InputError("function length does not match the group order");
      if (!h[g].is_zero()) {
        zero = false;
        break;
      }
    }
    if (zero) locus.push_back(g);
  }
  return locus;
}

/// Dimension of the ideal generated by `gens`: the span of all products
/// h * delta_g with h a generator.
inline std::size_t ideal_rank(const std::vector<Function>& gens, std::size_t order) {
  IndependentSet<Exact> set(order);
  for (const auto& h : gens)
    for (std::size_t g = 0; g < order; ++g) {
      if (h.at(g).is_zero()) continue;
      Function p(order, Field<Exact>::zero());
      p[g] = h[g];
      set.insert(p);
    }
  return set.size();
}

inline std::size_t quotient_dimension(const std::vector<Function>& gens, std::size_t order) {
  return order - ideal_rank(gens, order);
}

inline bool is_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& members) { return g.is_subgroup(members); }

}  // namespace genrigid

#endif  // GENRIGID_HOPF_HPP
