#include "genrigid/grassmann.hpp"
#include "genrigid/isotropy.hpp"
#include "genrigid/suite.hpp"
#include "genrigid/tannaka.hpp"

#include <gtest/gtest.h>

using namespace genrigid;
using suite::mat;

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

Subspace<Exact> flat_span(const std::vector<Matrix<Exact>>& ms) {
  if (ms.empty()) return Subspace<Exact>::zero(0);
  std::vector<std::vector<Exact>> cols;
  for (const auto& m : ms) cols.push_back(vec(m));
  return Subspace<Exact>::span_of(from_columns(cols, cols.front().size()));
}

const FiniteGroupProvider& s3() {
  static const FiniteGroupProvider p(suite::s3_permutation(), "s3-perm");
  return p;
}

const FiniteGroupProvider& trivial3() {
  static const FiniteGroupProvider p(group_closure<Exact>({Matrix<Exact>::identity(3)}), "trivial");
  return p;
}

TannakaOptions quick(std::size_t n_max = 4) {
  TannakaOptions o;
  o.n_max = n_max;
  return o;
}

const auto e1 = span({{1, 0, 0}});
const auto e2 = span({{0, 1, 0}});
const auto sign_line = span({{1, -1, 0}});
const auto plane = span({{1, -1, 0}, {0, 1, -1}});

}  // namespace

TEST(CompressedAlgebra, Examples) {
  for (auto w : {e1, plane, Subspace<Exact>::full(3)})
    EXPECT_EQ(compressed_algebra(trivial3(), {w}, 0, 1).size(), w.dim() * w.dim());
  EXPECT_EQ(compressed_algebra(s3(), {e1}, 0, 2).size(), 1u);
  EXPECT_EQ(compressed_algebra(s3(), {sign_line}, 0, 2).size(), 1u);
  EXPECT_THROW(compressed_algebra(s3(), {e1}, 1, 1), InputError);
  EXPECT_THROW(compressed_algebra(s3(), {e1}, 0, 0), InputError);
}

TEST(CompressedAlgebra, SchurCheckWithoutInsertions) {
  // W = V makes the insertion the identity, leaving End_G(V) at n = 1
  FiniteGroupProvider d4(group_closure<Exact>({mat({{0, -1}, {1, 0}}), mat({{1, 0}, {0, -1}})}));
  EXPECT_EQ(compressed_algebra(d4, {Subspace<Exact>::full(2)}, 0, 1).size(), 1u);
  EXPECT_EQ(compressed_algebra(s3(), {Subspace<Exact>::full(3)}, 0, 1).size(), 2u);
  EXPECT_EQ(compressed_algebra(s3(), {Subspace<Exact>::full(3)}, 0, 1).size(), intertwiners(s3(), 1).size());
}

TEST(CompressedAlgebra, UnitalStarSubalgebra) {
  for (const auto& w : {e1, plane, span({{1, 2, 0}, {0, 0, 1}})}) {
    auto c = compressed_algebra(s3(), {w}, 0, 2);
    auto form = s3().form().restrict_to(w);
    auto sp = flat_span(c);
    EXPECT_TRUE(sp.contains_vector(vec(Matrix<Exact>::identity(w.dim()))));
    for (const auto& x : c) {
      EXPECT_TRUE(sp.contains_vector(vec(form.adjoint(x))));
      for (const auto& y : c) EXPECT_TRUE(sp.contains_vector(vec(x * y)));
    }
  }
}

TEST(CompressedAlgebra, MatchesLiteralGeneration) {
  std::vector<std::vector<Subspace<Exact>>> cases{{e1}, {sign_line}, {plane}, {e1, e2}, {span({{1, 1, 0}})}};
  for (std::size_t n : {1u, 2u}) {
    for (const auto& ws : cases) {
      for (std::size_t t = 0; t < ws.size(); ++t) {
        auto fast = compressed_algebra(s3(), ws, t, n);
        auto lit = compressed_algebra_by_generation(s3(), ws, t, n);
        EXPECT_EQ(fast.size(), lit.compressed.size()) << "n=" << n;
        EXPECT_TRUE(flat_span(fast).contains(flat_span(lit.compressed)));
        EXPECT_EQ(compute_level(s3(), ws, n).targets[t].fixed_dim, lit.fixed_dim) << "n=" << n;
      }
    }
  }
}

TEST(CompressedAlgebra, Monotone) {
  for (std::size_t t = 0; t < 10; ++t) {
    auto rng = trial_rng(50, t);
    auto w = structured_subspace(suite::s3_permutation(), 1 + t % 2, rng);
    auto extra = structured_subspace(suite::s3_permutation(), 1, rng);
    std::size_t prev = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
      std::size_t alone = compressed_algebra(s3(), {w}, 0, n).size();
      std::size_t joint = compressed_algebra(s3(), {w, extra}, 0, n).size();
      EXPECT_GE(alone, prev);
      EXPECT_GE(joint, alone);
      prev = alone;
    }
  }
}

TEST(CheckTrivial, Examples) {
  for (const auto& w : {e1, plane, span({{1, 2, 3}})}) EXPECT_TRUE(check_trivial(trivial3(), {w}, 0).result);
  auto good = check_trivial(s3(), {e1}, 0);
  EXPECT_TRUE(good.result);
  EXPECT_FALSE(good.unstable);
  auto bad = check_trivial(s3(), {sign_line}, 0);
  EXPECT_FALSE(bad.result);
  EXPECT_EQ(bad.levels.back().fixed_dim, 0u);
  EXPECT_FALSE(check_trivial(s3(), {plane}, 0).result);
}

TEST(CheckTrivial, VerdictShape) {
  auto v = check_trivial(s3(), {span({{1, 2, 0}})}, 0);
  ASSERT_FALSE(v.compressed_dims.empty());
  EXPECT_EQ(v.compressed_dims.size(), v.levels.size());
  EXPECT_TRUE(std::is_sorted(v.compressed_dims.begin(), v.compressed_dims.end()));
  EXPECT_EQ(v.stabilized_at, v.levels.back().n);
  EXPECT_EQ(v.diagnostics.target_dim, 1u);
  EXPECT_TRUE(v.spectral_agrees);
}

TEST(CheckTrivial, Sl2NeverSaturates) {
  SL2Provider v1(1);
  auto v = check_trivial(v1, {span({{1, 0}})}, 0, quick(2));
  EXPECT_TRUE(v.unstable);
  EXPECT_EQ(v.stabilized_at, 2u);
  EXPECT_FALSE(v.result);
}

TEST(CheckEllConstrained, Examples) {
  for (std::size_t ell : {1u, 2u}) EXPECT_TRUE(check_ell_constrained(trivial3(), {plane}, 0, ell).result);
  EXPECT_TRUE(check_ell_constrained(s3(), {sign_line}, 0, 1).result);
  EXPECT_FALSE(check_ell_constrained(s3(), {plane}, 0, 1).result);
  EXPECT_TRUE(check_ell_constrained(s3(), {plane}, 0, 2).result);
  EXPECT_THROW(check_ell_constrained(s3(), {e1}, 0, 2), InputError);
}

TEST(CheckProfile, SingleTargetReduces) {
  for (const auto& w : {e1, sign_line, plane}) {
    for (std::size_t ell = 0; ell <= w.dim(); ++ell) {
      ConstraintProfile prof{{w}, {{0, ell}}};
      auto pv = check_profile(s3(), prof);
      Verdict single = ell == 0 ? check_trivial(s3(), {w}, 0) : check_ell_constrained(s3(), {w}, 0, ell);
      EXPECT_EQ(pv.result, single.result);
      EXPECT_EQ(pv.per_target.at(0).compressed_dims, single.compressed_dims);
    }
  }
}

TEST(CheckProfile, TwoCoordinateLines) {
  auto rep = suite::s3_permutation();
  ASSERT_EQ(joint_stabilizer(rep, {e1, e2}).size(), 1u);
  ConstraintProfile prof{{e1, e2}, {{0, 0}, {1, 0}}};
  auto pv = check_profile(s3(), prof);
  EXPECT_TRUE(pv.result);
  EXPECT_TRUE(pv.per_target.at(0).result);
  EXPECT_TRUE(pv.per_target.at(1).result);
  auto form = unitarize(rep);
  for (std::size_t t = 0; t < 2; ++t) EXPECT_TRUE(oracle_verdict(rep, form, {e1, e2}, t, RestrictTo::W, 0).result);
}

TEST(CheckProfile, WholeSpaceTargetIsOnV) {
  auto rep = suite::s3_permutation();
  auto form = unitarize(rep);
  const auto v = Subspace<Exact>::full(3);
  for (const auto& w : {e1, sign_line, span({{1, 1, 1}}), span({{1, 2, 3}}), plane}) {
    for (std::size_t ell : {0u, 1u, 2u}) {
      ConstraintProfile prof{{w, v}, {{1, ell}}};
      auto pv = check_profile(s3(), prof);
      EXPECT_EQ(pv.result, oracle_verdict(rep, form, {w}, 0, RestrictTo::V, ell).result) << basis_string(w);
    }
  }
}

TEST(CheckProfile, Validation) {
  EXPECT_THROW(check_profile(s3(), ConstraintProfile{{}, {}}), InputError);
  EXPECT_THROW(check_profile(s3(), ConstraintProfile{{e1}, {{1, 0}}}), InputError);
  EXPECT_THROW(check_profile(s3(), ConstraintProfile{{e1}, {{0, 2}}}), InputError);
  EXPECT_THROW(check_profile(s3(), ConstraintProfile{{e1, e2}, {{0, 0}, {0, 1}}}), InputError);
  EXPECT_THROW(check_profile(s3(), ConstraintProfile{{Subspace<Exact>::zero(3)}, {{0, 0}}}), InputError);
  EXPECT_THROW(check_profile(s3(), ConstraintProfile{{span({{1, 0}})}, {{0, 0}}}), InputError);
}

TEST(OracleEquivalence, RandomSubspacesAllReps) {
  for (const auto& named : suite::all()) {
    FiniteGroupProvider p(named.rep, named.name);
    auto form = unitarize(named.rep);
    for (std::size_t t = 0; t < 12; ++t) {
      auto rng = trial_rng(51, t);
      const std::size_t d = 1 + t % (named.rep.dim() - 1);
      auto w = structured_subspace(named.rep, d, rng);
      for (std::size_t ell = 0; ell <= std::min<std::size_t>(2, d); ++ell) {
        auto tv = ell == 0 ? check_trivial(p, {w}, 0) : check_ell_constrained(p, {w}, 0, ell);
        EXPECT_FALSE(tv.unstable);
        EXPECT_EQ(tv.result, oracle_verdict(named.rep, form, {w}, 0, RestrictTo::W, ell).result)
            << named.name << " " << basis_string(w) << " ell=" << ell;
      }
    }
  }
}
