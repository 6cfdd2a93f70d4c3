#include "genrigid/algebra_gen.hpp"

#include <gtest/gtest.h>

using namespace genrigid;

namespace {

std::vector<Exact> coords(std::initializer_list<long> v) {
  std::vector<Exact> out;
  for (long x : v) out.push_back(Exact(x));
  return out;
}

// diag(1,2) and e12+e21 in M2, basis e11, e12, e21, e22
GeneratorTuple<Exact> m2_pair() { return {coords({1, 0, 0, 2}), coords({0, 1, 1, 0})}; }

}  // namespace

TEST(Algebra, BuiltinDimensions) {
  EXPECT_EQ(matrix_algebra<Exact>(3).dim(), 9u);
  EXPECT_EQ(block_matrix_algebra<Exact>({2, 1}).dim(), 5u);
  EXPECT_EQ(square_zero_algebra<Exact>(3).dim(), 4u);
  EXPECT_THROW(block_matrix_algebra<Exact>({2, 0}), InputError);
}

TEST(Algebra, StructureConstantsValidated) {
  using C = std::vector<std::vector<std::vector<Exact>>>;
  // dual numbers k[x]/x^2
  C dual{{coords({1, 0}), coords({0, 1})}, {coords({0, 1}), coords({0, 0})}};
  auto a = FinDimAlgebra<Exact>::from_structure_constants(dual, coords({1, 0}));
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_TRUE(is_generating(a, {coords({0, 1})}, false).generating);
  EXPECT_THROW(FinDimAlgebra<Exact>::from_structure_constants(dual, coords({0, 1})), InputError);
  // (x x) y = 0 but x (x y) = x x
  C bad{{coords({1, 0, 0}), coords({0, 1, 0}), coords({0, 0, 1})},
        {coords({0, 1, 0}), coords({0, 0, 1}), coords({0, 1, 0})},
        {coords({0, 0, 1}), coords({0, 1, 0}), coords({0, 0, 0})}};
  EXPECT_THROW(FinDimAlgebra<Exact>::from_structure_constants(bad, coords({1, 0, 0})), InputError);
}

TEST(Algebra, CoordinatesRejectOutsiders) {
  auto a = block_matrix_algebra<Exact>({1, 1});
  EXPECT_THROW(a.coordinates(Matrix<Exact>::unit(2, 2, 0, 1)), InputError);
  auto x = a.coordinates(Matrix<Exact>::identity(2));
  EXPECT_EQ(a.to_matrix(x), Matrix<Exact>::identity(2));
}

TEST(MonomialSpan, Examples) {
  auto m2 = matrix_algebra<Exact>(2);
  EXPECT_EQ(monomial_span(m2, m2_pair(), 0, false).dim(), 1u);
  EXPECT_EQ(monomial_span(m2, m2_pair(), 3, false).dim(), 4u);
  auto sz = square_zero_algebra<Exact>(2);
  for (std::size_t m : {1u, 2u, 5u}) {
    auto s = monomial_span(sz, {coords({0, 1, 0})}, m, false);
    EXPECT_EQ(s.dim(), 2u);
  }
}

TEST(MonomialSpan, NestedAndStable) {
  auto m3 = matrix_algebra<Exact>(3);
  for (std::size_t t = 0; t < 10; ++t) {
    auto rng = trial_rng(30, t);
    auto tup = sample_tuple(m3, 2, Sampler::UniformRational, rng);
    WordFiltration<Exact> f(m3, tup, false);
    std::vector<Subspace<Exact>> spans{f.span()};
    for (int k = 0; k < 6; ++k) {
      f.step();
      spans.push_back(f.span());
    }
    for (std::size_t k = 0; k + 1 < spans.size(); ++k) {
      EXPECT_TRUE(spans[k + 1].contains(spans[k]));
      if (spans[k].dim() == spans[k + 1].dim()) {
        for (std::size_t j = k + 1; j < spans.size(); ++j) EXPECT_EQ(spans[j].dim(), spans[k].dim());
      }
    }
  }
}

TEST(IsGenerating, Examples) {
  auto m2 = matrix_algebra<Exact>(2);
  GeneratorTuple<Exact> basis{coords({1, 0, 0, 0}), coords({0, 1, 0, 0}), coords({0, 0, 1, 0}), coords({0, 0, 0, 1})};
  auto full = is_generating(m2, basis, false);
  EXPECT_TRUE(full.generating);
  EXPECT_LE(full.stabilization_degree, 1u);
  EXPECT_TRUE(is_generating(m2, m2_pair(), false).generating);
  auto sz = square_zero_algebra<Exact>(2);
  EXPECT_FALSE(is_generating(sz, {coords({3, 1, -2})}, false).generating);
}

TEST(IsGenerating, DegreeBoundedByDim) {
  auto a = block_matrix_algebra<Exact>({2, 1});
  for (std::size_t t = 0; t < 20; ++t) {
    auto rng = trial_rng(31, t);
    auto g = is_generating(a, sample_tuple(a, 2, Sampler::UniformRational, rng), false);
    EXPECT_LE(g.stabilization_degree, a.dim());
  }
}

TEST(IsGenerating, SquareZeroNeedsNGenerators) {
  // n = 3: pairs over the grid {-1, 0, 1}^4 never generate
  auto sz = square_zero_algebra<Exact>(3);
  std::vector<std::vector<Exact>> grid;
  for (int k = 0; k < 81; ++k) {
    std::vector<Exact> v;
    int r = k;
    for (int c = 0; c < 4; ++c, r /= 3) v.push_back(Exact(r % 3 - 1));
    grid.push_back(v);
  }
  std::size_t generating = 0;
  for (const auto& x : grid)
    for (const auto& y : grid) generating += is_generating(sz, {x, y}, false).generating;
  EXPECT_EQ(generating, 0u);
  GeneratorTuple<Exact> three{coords({0, 1, 0, 0}), coords({0, 0, 1, 0}), coords({0, 0, 0, 1})};
  EXPECT_TRUE(is_generating(sz, three, false).generating);
}

TEST(IsGenerating, TriangularSubstitutionInvariance) {
  // (a, b) -> (a, b + c0 + c1 a + c2 a^2) keeps the generated algebra
  for (const auto& blocks : std::vector<std::vector<std::size_t>>{{2}, {2, 1}, {3}}) {
    auto alg = block_matrix_algebra<Exact>(blocks);
    for (std::size_t t = 0; t < 15; ++t) {
      auto rng = trial_rng(32, t);
      std::uniform_int_distribution<long> u(-3, 3);
      GeneratorTuple<Exact> tup = sample_tuple(alg, 2, Sampler::UniformRational, rng);
      if (t % 3 == 0) tup[0] = alg.coordinates(Matrix<Exact>::identity(alg.realization_size()));
      Matrix<Exact> a = alg.to_matrix(tup[0]), b = alg.to_matrix(tup[1]);
      Matrix<Exact> b2 = b + Exact(u(rng)) * Matrix<Exact>::identity(a.rows()) + Exact(u(rng)) * a +
                         Exact(u(rng)) * (a * a);
      auto g1 = is_generating(alg, tup, false);
      auto g2 = is_generating(alg, {tup[0], alg.coordinates(b2)}, false);
      EXPECT_EQ(g1.generating, g2.generating);
      EXPECT_EQ(g1.span_dim, g2.span_dim);
    }
  }
}

TEST(ExplicitPair, Examples) {
  auto p1 = explicit_pair<Exact>({1}, {Exact(1)});
  EXPECT_EQ(p1.algebra.to_matrix(p1.tuple[0]), Matrix<Exact>::identity(1));
  EXPECT_TRUE(p1.algebra.to_matrix(p1.tuple[1]).is_zero());
  EXPECT_TRUE(is_generating(p1.algebra, p1.tuple, false).generating);

  auto p2 = explicit_pair<Exact>({2}, {Exact(1), Exact(2)});
  Matrix<Exact> d(2, 2);
  d(0, 0) = Exact(1);
  d(1, 1) = Exact(2);
  EXPECT_EQ(p2.algebra.to_matrix(p2.tuple[0]), d);
  EXPECT_EQ(p2.algebra.to_matrix(p2.tuple[1]), Matrix<Exact>::unit(2, 2, 0, 1) + Matrix<Exact>::unit(2, 2, 1, 0));
  EXPECT_TRUE(is_generating(p2.algebra, p2.tuple, false).generating);

  try {
    explicit_pair<Exact>({1, 2}, {Exact(1), Exact(2), Exact(4)});
    FAIL() << "ratio condition not enforced";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("coincide"), std::string::npos);
  }
  EXPECT_THROW(explicit_pair<Exact>({2}, {Exact(0), Exact(2)}), InputError);
  EXPECT_THROW(explicit_pair<Exact>({2}, {Exact(3), Exact(3)}), InputError);
  EXPECT_THROW(explicit_pair<Exact>({2}, {Exact(3)}), InputError);
}

TEST(ExplicitPair, GeneratesForValidLambdas) {
  const long primes[] = {2, 3, 5, 7, 11, 13, 17};
  for (const auto& blocks : std::vector<std::vector<std::size_t>>{{3}, {1, 3}, {1, 1, 1}, {2, 2}, {1, 2, 3}}) {
    std::size_t n = 0;
    for (auto s : blocks) n += s;
    std::vector<Exact> lam;
    for (std::size_t i = 0; i < n; ++i) lam.push_back(i % 2 ? Exact(Rational(primes[i])) : Exact(Rational(0), Rational(primes[i])));
    auto p = explicit_pair<Exact>(blocks, lam);
    EXPECT_TRUE(is_generating(p.algebra, p.tuple, false).generating);
  }
}

TEST(Density, SmallCases) {
  auto c = matrix_algebra<Exact>(1);
  EXPECT_EQ(sample_generation_density(c, 1, 20, Sampler::UniformRational, false, 1).good_count, 20u);
  auto m2 = matrix_algebra<Exact>(2);
  EXPECT_EQ(sample_generation_density(m2, 1, 100, Sampler::UniformRational, false, 2).good_count, 0u);
  auto m2f = matrix_algebra<Complex>(2);
  EXPECT_EQ(sample_generation_density(m2f, 1, 100, Sampler::GaussianSelfAdjoint, false, 3).good_count, 0u);
  auto m3f = matrix_algebra<Complex>(3);
  auto r = sample_generation_density(m3f, 2, 200, Sampler::GaussianSelfAdjoint, false, 4);
  EXPECT_GE(r.good_count, 199u);
  EXPECT_THROW(sample_generation_density(m2, 1, 5, Sampler::GaussianSelfAdjoint, false, 1), InputError);
}

TEST(Density, ExactFloatAgreeOnRationalInput) {
  auto ae = block_matrix_algebra<Exact>({2, 1});
  auto af = block_matrix_algebra<Complex>({2, 1});
  for (std::size_t t = 0; t < 20; ++t) {
    auto rng = trial_rng(33, t);
    auto tup = sample_tuple(ae, 2, Sampler::UniformRational, rng);
    GeneratorTuple<Complex> tf;
    for (const auto& x : tup) {
      std::vector<Complex> y;
      for (const auto& v : x) y.push_back(Field<Exact>::to_complex(v));
      tf.push_back(y);
    }
    auto ge = is_generating(ae, tup, false), gf = is_generating(af, tf, false);
    EXPECT_EQ(ge.generating, gf.generating);
    EXPECT_EQ(ge.span_dim, gf.span_dim);
  }
}

TEST(Density, ReplayDeterministic) {
  auto a = block_matrix_algebra<Exact>({2, 1});
  auto r1 = sample_generation_density(a, 2, 30, Sampler::UniformRational, false, 99);
  auto r2 = sample_generation_density(a, 2, 30, Sampler::UniformRational, false, 99);
  ASSERT_EQ(r1.records.size(), r2.records.size());
  for (std::size_t i = 0; i < r1.records.size(); ++i) {
    EXPECT_EQ(r1.records[i].seed, r2.records[i].seed);
    EXPECT_EQ(r1.records[i].span_dim, r2.records[i].span_dim);
  }
}

TEST(Density, StarClosure) {
  // a single non-normal element generates M2 as a *-algebra but not as an algebra
  auto m2 = matrix_algebra<Exact>(2);
  GeneratorTuple<Exact> t{coords({0, 1, 0, 0})};
  EXPECT_FALSE(is_generating(m2, t, false).generating);
  EXPECT_TRUE(is_generating(m2, t, true).generating);
  auto sz = square_zero_algebra<Exact>(2);
  EXPECT_THROW(is_generating(sz, {coords({0, 1, 0})}, true), InputError);
}
