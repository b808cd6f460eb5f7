#include "hhbv/bv_table.hpp"
#include "hhbv/errors.hpp"
#include "hhbv/graded_algebra.hpp"
#include "hhbv/sphere_models.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace hhbv;

namespace {

bool has_kind(const std::vector<Violation>& vs, Violation::Kind k) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == k; });
}

}  // namespace

TEST(GradedAlgebra, SpheresAreValid) {
  for (int n = 2; n <= 5; ++n)
    for (auto ring : {Ring::integers(), Ring::prime_field(2), Ring::prime_field(3)})
      EXPECT_TRUE(validate(make_exterior_sphere(n, ring)).empty()) << n << ring.name();
}

TEST(GradedAlgebra, CircleFailsOnlyConnectivity) {
  auto v = validate(make_exterior_sphere(1, Ring::integers()));
  ASSERT_FALSE(v.empty());
  for (const auto& x : v) EXPECT_EQ(x.kind, Violation::Kind::Connectivity);
  EXPECT_TRUE(validate(make_exterior_sphere(1, Ring::integers()), {false}).empty());
}

TEST(GradedAlgebra, GradingViolation) {
  auto a = make_exterior_sphere(2, Ring::integers());
  a.set_product(1, 1, {1, 0});
  EXPECT_TRUE(has_kind(validate(a), Violation::Kind::Grading));
}

TEST(GradedAlgebra, DegenerateFunctional) {
  auto a = make_exterior_sphere(2, Ring::integers());
  a.set_dualizing(Functional{2, {0, 0}});
  EXPECT_TRUE(has_kind(validate(a), Violation::Kind::Duality));
}

TEST(GradedAlgebra, UnitAndAssociativityViolations) {
  auto a = make_truncated_polynomial(2, 3, Ring::integers());
  a.set_product(0, 1, {0, 2, 0});
  EXPECT_TRUE(has_kind(validate(a), Violation::Kind::Unit));
  auto b = make_truncated_polynomial(2, 4, Ring::integers());
  b.set_product(1, 2, {0, 0, 0, 2});
  EXPECT_TRUE(has_kind(validate(b), Violation::Kind::Associativity));
}

TEST(GradedAlgebra, TensorProductOfSpheres) {
  auto t = tensor_product(make_exterior_sphere(2, Ring::integers()), make_exterior_sphere(3, Ring::integers()));
  EXPECT_EQ(t.dim(), 4u);
  EXPECT_TRUE(validate(t).empty());
  // x_{-3} x_{-2} = -(x_{-2} x_{-3})
  const auto a = t.index_of("x"), b = t.index_of("x x");
  EXPECT_EQ(t.degree(b), -5);
  EXPECT_EQ(t.product(a, a), Vector(4));
}

TEST(BVTable, NormalizeReducesByOrder) {
  BVTable t(Ring::integers(), {{"1", 0, 0}, {"a", -2, 2}}, 0);
  EXPECT_EQ(t.normalize({{1, 5}}), (Element{{1, 1}}));
  EXPECT_EQ(t.normalize({{1, 4}, {0, 0}}), Element{});
  EXPECT_EQ(format_element(t, {{0, 3}, {1, 1}}), "3 + a");
}

TEST(BVTable, RestrictMarksEscapingEntriesAsTruncated) {
  auto t = s2_f2_table(1, 0, 6);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.degree(i) <= 3) keep.push_back(i);
  auto r = restrict_table(t, keep, DegreeWindow{-2, 3});
  const auto u = r.index_of("u"), u2 = r.index_of("u^2"), u3 = r.index_of("u^3");
  EXPECT_TRUE(r.product(u, u2));
  EXPECT_FALSE(r.product(u2, u2));
  EXPECT_EQ(*r.product(u, u2), r.basis_element(u3));
  EXPECT_THROW(restrict_table(t, {t.index_of("a")}, std::nullopt), std::invalid_argument);
}

TEST(BVTable, RenameLetters) {
  auto t = hh_sphere_f2_table(2, 4);
  auto r = rename_letters(t, {{"g", "a"}, {"f", "u"}});
  EXPECT_TRUE(r.find("a u^3"));
  EXPECT_TRUE(r.find("u^2"));
  EXPECT_FALSE(r.find("g f"));
  EXPECT_EQ(r.product(0, 1), t.product(0, 1));
}

TEST(GradedAlgebra, OddSquareBreaksCommutativity) {
  auto a = make_truncated_polynomial(3, 3, Ring::integers());
  a.set_graded_commutative(true);
  EXPECT_TRUE(has_kind(validate(a), Violation::Kind::Commutativity));
  auto b = make_truncated_polynomial(3, 3, Ring::prime_field(2));
  EXPECT_TRUE(validate(b).empty());
}
