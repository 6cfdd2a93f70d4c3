#include "genrigid/rep_providers.hpp"
#include "genrigid/suite.hpp"

#include <gtest/gtest.h>

using namespace genrigid;
using suite::mat;
using suite::permutation_matrix;

namespace {

// Companion matrix of x^4 + x^3 + x^2 + x + 1: multiplication by a primitive
// fifth root of unity on Q(zeta_5), i.e. a rational rotation of order 5.
Matrix<Exact> order_five() {
  return mat({{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}});
}

MatrixRep<Exact> conjugate(const MatrixRep<Exact>& rep, const Matrix<Exact>& d) {
  MatrixRep<Exact> out = rep;
  Matrix<Exact> di = inverse(d);
  for (auto& g : out.images) g = di * g * d;
  return out;
}

std::vector<Exact> diagonal_of(const Matrix<Exact>& m) {
  std::vector<Exact> d;
  for (std::size_t i = 0; i < m.rows(); ++i) d.push_back(m(i, i));
  return d;
}

std::vector<Exact> exacts(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(GroupClosure, Examples) {
  EXPECT_EQ(group_closure<Exact>({Matrix<Exact>::identity(3)}).group->order(), 1u);
  EXPECT_EQ(suite::s3_permutation().group->order(), 6u);
  EXPECT_EQ(group_closure<Exact>({order_five()}).group->order(), 5u);
  EXPECT_EQ(group_closure<Exact>({mat({{0, -1}, {1, 0}})}).group->order(), 4u);
}

TEST(GroupClosure, Errors) {
  EXPECT_THROW(group_closure<Exact>({mat({{2, 0}, {0, 1}})}, 50), InputError);
  EXPECT_THROW(group_closure<Exact>({mat({{1, 1}, {1, 1}})}), InputError);
  EXPECT_THROW(group_closure<Exact>({}), InputError);
}

TEST(GroupClosure, ShippedOrders) {
  std::map<std::string, std::size_t> orders{
      {"s3-perm", 6}, {"s3-regular", 6}, {"d4-twist", 8}, {"q8-plus-trivial", 8}, {"a4-rotation", 12}};
  for (const auto& r : suite::all()) {
    EXPECT_EQ(r.rep.group->order(), orders.at(r.name)) << r.name;
    EXPECT_NO_THROW(r.rep.validate()) << r.name;
  }
}

TEST(FiniteGroup, TableAndSubgroups) {
  auto rep = suite::s3_permutation();
  const auto& g = *rep.group;
  for (std::size_t a = 0; a < g.order(); ++a) {
    EXPECT_EQ(g.mul(a, g.inv(a)), g.identity());
    EXPECT_EQ(g.mul(g.identity(), a), a);
  }
  EXPECT_TRUE(g.is_subgroup({g.identity()}));
  std::vector<std::size_t> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  EXPECT_TRUE(g.is_subgroup(all));
  EXPECT_FALSE(g.is_subgroup({rep.generators[0]}));
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 1}}), InputError);
}

TEST(Representation, Validation) {
  auto rep = suite::s3_permutation();
  rep.images[rep.generators[0]] = Matrix<Exact>::identity(3);
  EXPECT_THROW(rep.validate(), InputError);
  auto reg = suite::s3_regular();
  EXPECT_NO_THROW(reg.validate());
  EXPECT_EQ(reg.dim(), 6u);
}

TEST(Unitarize, Examples) {
  auto trivial = group_closure<Exact>({Matrix<Exact>::identity(2)});
  EXPECT_EQ(unitarize(trivial).gram(), Matrix<Exact>::identity(2));
  EXPECT_EQ(unitarize(suite::s3_permutation()).gram(), Matrix<Exact>::identity(3));
  EXPECT_EQ(unitarize(suite::s3_regular()).gram(), Matrix<Exact>::identity(6));

  // the irreducible D4 plane conjugated by diag(1, 2) averages to a multiple of diag(1, 4)
  auto d4 = group_closure<Exact>({mat({{0, -1}, {1, 0}}), mat({{1, 0}, {0, -1}})});
  auto c = conjugate(d4, mat({{1, 0}, {0, 2}}));
  Matrix<Exact> g = unitarize(c).gram();
  EXPECT_TRUE(g(0, 1).is_zero());
  EXPECT_TRUE(g(1, 0).is_zero());
  EXPECT_FALSE(g(0, 0).is_zero());
  EXPECT_EQ(g(1, 1), Exact(4) * g(0, 0));
}

TEST(Unitarize, ExactlyInvariant) {
  std::vector<MatrixRep<Exact>> reps;
  for (const auto& r : suite::all()) reps.push_back(r.rep);
  reps.push_back(conjugate(suite::s3_permutation(), mat({{1, 1, 0}, {0, 2, 0}, {3, 0, 1}})));
  reps.push_back(group_closure<Exact>({order_five()}));
  for (const auto& rep : reps) {
    Matrix<Exact> g = unitarize(rep).gram();
    for (const auto& x : rep.images) EXPECT_EQ(x.adjoint() * g * x, g);
  }
}

TEST(SL2, SymPowerExamples) {
  auto r0 = sl2_sym_power<Exact>(0);
  EXPECT_EQ(r0.h.rows(), 1u);
  EXPECT_TRUE(r0.e.is_zero() && r0.f.is_zero() && r0.h.is_zero());
  EXPECT_EQ(diagonal_of(sl2_sym_power<Exact>(1).h), exacts({1, -1}));
  EXPECT_EQ(diagonal_of(sl2_sym_power<Exact>(2).h), exacts({2, 0, -2}));
}

TEST(SL2, BracketsAndAdjointness) {
  for (std::size_t n = 0; n <= 12; ++n) {
    auto r = sl2_sym_power<Exact>(n);
    EXPECT_EQ(commutator(r.e, r.f), r.h) << n;
    EXPECT_EQ(commutator(r.h, r.e), Exact(2) * r.e) << n;
    EXPECT_EQ(commutator(r.h, r.f), Exact(-2) * r.f) << n;
    EXPECT_EQ(r.form.adjoint(r.e), r.f) << n;
    EXPECT_EQ(r.form.adjoint(r.h), r.h) << n;
  }
}

TEST(TensorPowerAction, Examples) {
  FiniteGroupProvider s3(suite::s3_permutation(), "s3");
  auto m0 = s3.tensor_power_action(0);
  for (const auto& x : m0) EXPECT_EQ(x, Matrix<Exact>::identity(1));
  auto m1 = s3.tensor_power_action(1);
  auto gens = s3.rep().generator_images();
  EXPECT_EQ(m1, gens);

  SL2Provider v1(1);
  for (const auto& x : v1.tensor_power_action(0)) EXPECT_TRUE(x.is_zero());
  auto act = v1.tensor_power_action(1);
  EXPECT_EQ(act[0], v1.rep().e);
  EXPECT_EQ(act[2], v1.rep().h);
  Matrix<Exact> h2 = v1.tensor_power_action(2)[2];
  auto diag = diagonal_of(h2);
  EXPECT_TRUE(h2 == Matrix<Exact>::diagonal(diag));
  std::vector<double> ev;
  for (const auto& x : diag) ev.push_back(x.re().get_d());
  std::sort(ev.begin(), ev.end());
  EXPECT_EQ(ev, (std::vector<double>{-2, 0, 0, 2}));
}

TEST(TensorPowerAction, SizeBudget) {
  SL2Provider v1(1);
  EXPECT_THROW(v1.tensor_power_action(7), BudgetError);
  FiniteGroupProvider s3(suite::s3_permutation());
  EXPECT_THROW(s3.truncated_dim(4), BudgetError);
  EXPECT_EQ(s3.truncated_dim(3), 40u);
}

TEST(Intertwiners, Examples) {
  SL2Provider v1(1);
  EXPECT_EQ(intertwiners(v1, 1).size(), 1u);
  EXPECT_EQ(intertwiners(v1, 2).size(), 2u);
  EXPECT_EQ(intertwiners(v1, 3).size(), 5u);
  FiniteGroupProvider d4(group_closure<Exact>({mat({{0, -1}, {1, 0}}), mat({{1, 0}, {0, -1}})}));
  EXPECT_EQ(intertwiners(d4, 1).size(), 1u);
  FiniteGroupProvider s3(suite::s3_permutation());
  EXPECT_EQ(intertwiners(s3, 1).size(), 2u);
}

TEST(Intertwiners, ClebschGordanCrossCheck) {
  EXPECT_EQ(clebsch_gordan_commutant_dim(2), 2u);
  EXPECT_EQ(clebsch_gordan_commutant_dim(3), 5u);
  EXPECT_EQ(clebsch_gordan_commutant_dim(4), 14u);
  SL2Provider v1(1);
  for (std::size_t m = 0; m <= 4; ++m) EXPECT_EQ(intertwiners(v1, m).size(), clebsch_gordan_commutant_dim(m)) << m;
}

TEST(Intertwiners, GeneratorsMatchAllElements) {
  for (const auto& r : suite::all()) {
    FiniteGroupProvider p(r.rep, r.name);
    for (std::size_t m = 0; m <= 2; ++m) {
      if (checked_power(p.dim(), m) > 16) continue;
      const std::size_t n = checked_power(p.dim(), m);
      auto from_gens = commutant(p.tensor_power_action(m), n);
      auto from_all = commutant(p.tensor_power_all_elements(m), n);
      ASSERT_EQ(from_gens.size(), from_all.size()) << r.name << " m=" << m;
      EXPECT_EQ(span_dim(from_gens), span_dim([&] {
                  auto u = from_gens;
                  u.insert(u.end(), from_all.begin(), from_all.end());
                  return u;
                }()))
          << r.name << " m=" << m;
    }
  }
}

TEST(Intertwiners, TruncatedIncludesHomBlocks) {
  // S3 on C^3 = 1 + 2: T^{<=1} = 1 + (1 + 2) has commutant dim 2^2 + 1 = 5
  FiniteGroupProvider s3(suite::s3_permutation());
  EXPECT_EQ(truncated_intertwiners(s3, 1).size(), 5u);
  SL2Provider v1(1);
  // T^{<=2} V_1 = V_0 + V_1 + (V_2 + V_0): 2^2 + 1 + 1
  EXPECT_EQ(truncated_intertwiners(v1, 2).size(), 6u);
}

TEST(ActionSpan, GramMatchesTruncatedPairings) {
  FiniteGroupProvider s3(suite::s3_permutation());
  auto span = s3.action_span(2);
  auto act = s3.rep().images;
  for (std::size_t a = 0; a < act.size(); ++a)
    for (std::size_t b = 0; b < act.size(); ++b) {
      Matrix<Exact> x = Matrix<Exact>::identity(1), y = Matrix<Exact>::identity(1);
      for (std::size_t m = 1; m <= 2; ++m) {
        x = direct_sum(x, kron_power(act[a], m));
        y = direct_sum(y, kron_power(act[b], m));
      }
      EXPECT_EQ(span.gram(a, b), frobenius_pairing(x, y));
    }
  EXPECT_TRUE(span.saturation_certifies);
  EXPECT_FALSE(SL2Provider(1).action_span(1).saturation_certifies);
}
