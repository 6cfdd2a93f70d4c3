#include "genrigid/grassmann.hpp"
#include "genrigid/hopf.hpp"
#include "genrigid/isotropy.hpp"
#include "genrigid/suite.hpp"

#include <gtest/gtest.h>

using namespace genrigid;
using suite::permutation_matrix;

namespace {

Subspace<Exact> span(std::initializer_list<std::initializer_list<long>> vecs) {
  std::vector<std::vector<Exact>> cols;
  std::size_t n = 0;
  for (const auto& v : vecs) {
    cols.emplace_back(v.begin(), v.end());
    n = v.size();
  }
  return Subspace<Exact>(from_columns(cols, n));
}

std::size_t index_of(const MatrixRep<Exact>& rep, const Matrix<Exact>& m) {
  for (std::size_t i = 0; i < rep.images.size(); ++i)
    if (rep.images[i] == m) return i;
  throw std::logic_error("element not in the group");
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(CoefficientSpace, Examples) {
  EXPECT_EQ(coefficient_space(group_closure<Exact>({Matrix<Exact>::identity(3)})).dim(), 1u);
  auto trivial_s3 = suite::s3_permutation();
  for (auto& g : trivial_s3.images) g = Matrix<Exact>::identity(2);
  EXPECT_EQ(coefficient_space(trivial_s3).dim(), 1u);
  EXPECT_EQ(coefficient_space(suite::s3_permutation()).dim(), 5u);
  EXPECT_EQ(coefficient_space(suite::s3_regular()).dim(), 6u);
}

TEST(CoefficientSpace, ConjugationInvariantDimension) {
  Matrix<Exact> c = suite::mat({{1, 2, 0}, {0, 1, 3}, {-1, 0, 1}});
  Matrix<Exact> ci = inverse(c);
  for (const auto& named : suite::all()) {
    auto conj = named.rep;
    if (conj.dim() != 3) continue;
    for (auto& g : conj.images) g = ci * g * c;
    EXPECT_EQ(coefficient_space(conj).dim(), coefficient_space(named.rep).dim()) << named.name;
  }
  for (const auto& named : suite::all()) {
    std::size_t expected = named.name == "s3-perm" ? 5 : named.name == "s3-regular" ? 6
                         : named.name == "d4-twist" ? 4 : named.name == "q8-plus-trivial" ? 5 : 9;
    EXPECT_EQ(coefficient_space(named.rep).dim(), expected) << named.name;
  }
}

TEST(Coefficient, MatchesFormula) {
  auto rep = suite::s3_permutation();
  std::vector<Exact> f{Exact(1), Exact(2), Exact(0)}, v{Exact(0), Exact(1), Exact(-1)};
  auto c = coefficient(rep, f, v);
  for (std::size_t g = 0; g < rep.images.size(); ++g) {
    auto gv = rep.images[g] * Matrix<Exact>::column(v);
    Exact expect = f[0] * gv(0, 0) + f[1] * gv(1, 0) + f[2] * gv(2, 0);
    EXPECT_EQ(c.values[g], expect);
  }
  EXPECT_THROW(coefficient(rep, {Exact(1)}, v), InputError);
}

TEST(KernelIdeal, Generators) {
  auto rep = suite::s3_permutation();
  EXPECT_TRUE(kernel_ideal_generators(rep, Subspace<Exact>::full(3)).empty());
  EXPECT_TRUE(kernel_ideal_generators(rep, Subspace<Exact>::zero(3)).empty());
  auto gens = kernel_ideal_generators(rep, span({{1, 0, 0}}));
  ASSERT_EQ(gens.size(), 2u);
  // together they span the same functions as g -> (g e1)_2 and g -> (g e1)_3
  Function c2, c3;
  for (const auto& g : rep.images) {
    c2.push_back(g(1, 0));
    c3.push_back(g(2, 0));
  }
  auto mine = Subspace<Exact>(from_columns(gens, 6));
  auto theirs = Subspace<Exact>(from_columns(std::vector<Function>{c2, c3}, 6));
  EXPECT_TRUE(mine.equals(theirs));
}

TEST(ZeroLocus, Examples) {
  auto rep = suite::s3_permutation();
  EXPECT_EQ(zero_locus({}, 6).size(), 6u);
  const std::size_t e = rep.group->identity();
  auto l1 = zero_locus(kernel_ideal_generators(rep, span({{1, 0, 0}})), 6);
  EXPECT_EQ(sorted(l1), sorted({e, index_of(rep, permutation_matrix({0, 2, 1}))}));
  auto l2 = zero_locus(kernel_ideal_generators(rep, span({{1, -1, 0}})), 6);
  EXPECT_EQ(sorted(l2), sorted({e, index_of(rep, permutation_matrix({1, 0, 2}))}));
  EXPECT_THROW(zero_locus({Function(3)}, 6), InputError);
}

TEST(QuotientDimension, Examples) {
  auto rep = suite::s3_permutation();
  EXPECT_EQ(quotient_dimension({}, 6), 6u);
  EXPECT_EQ(quotient_dimension(kernel_ideal_generators(rep, span({{1, 0, 0}})), 6), 2u);
  auto generic = span({{1, 2, 5}});
  ASSERT_EQ(isotropy_subgroup(rep, generic).members.size(), 1u);
  EXPECT_EQ(quotient_dimension(kernel_ideal_generators(rep, generic), 6), 1u);
}

TEST(KernelIdeal, CutsOutIsotropyOnSuite) {
  for (const auto& named : suite::all()) {
    const auto& rep = named.rep;
    const std::size_t order = rep.images.size();
    for (std::size_t t = 0; t < 100; ++t) {
      auto rng = trial_rng(70, t);
      const std::size_t d = t % (rep.dim() + 1);
      auto w = structured_subspace(rep, d, rng);
      auto gens = kernel_ideal_generators(rep, w);
      auto locus = zero_locus(gens, order);
      EXPECT_EQ(locus, isotropy_subgroup(rep, w).members) << named.name << " " << basis_string(w);
      EXPECT_TRUE(is_subgroup(*rep.group, locus));
      EXPECT_EQ(quotient_dimension(gens, order), locus.size());
      EXPECT_EQ(quotient_dimension(gens, order) + ideal_rank(gens, order), order);
    }
  }
}
