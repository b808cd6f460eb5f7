#include "hhbv/bv_verify.hpp"
#include "hhbv/errors.hpp"
#include "hhbv/sphere_models.hpp"

#include <gtest/gtest.h>

using namespace hhbv;

namespace {

Element el(const BVTable& t, std::initializer_list<std::pair<const char*, long long>> terms) {
  Element e;
  for (const auto& [n, c] : terms) e[t.index_of(n)] = c;
  return e;
}

}  // namespace

TEST(SphereModels, Circle) {
  auto t = circle_table(Ring::integers(), 5);
  EXPECT_EQ(*t.delta(t.index_of("a x^3")), el(t, {{"x^3", 3}}));
  EXPECT_EQ(*t.delta(t.index_of("a x^-2")), el(t, {{"x^-2", -2}}));
  EXPECT_TRUE(t.delta(t.index_of("a"))->empty());
  EXPECT_FALSE(t.window().has_value());
  EXPECT_FALSE(t.product(t.index_of("x^3"), t.index_of("x^3")).has_value());
}

TEST(SphereModels, OddSphere) {
  auto t = odd_sphere_table(3, Ring::integers(), 6);
  EXPECT_EQ(*t.delta(t.index_of("a u")), el(t, {{"1", 1}}));
  EXPECT_TRUE(t.delta(t.index_of("u^4"))->empty());
  EXPECT_EQ(t.degree(t.index_of("a u^2")), 1);
  EXPECT_EQ(t.window(), (DegreeWindow{-3, 10}));
  EXPECT_THROW(odd_sphere_table(4, Ring::integers(), 3), std::invalid_argument);
}

TEST(SphereModels, EvenSphereOverZ) {
  auto t4 = even_sphere_z_table(4, -1, 6);
  EXPECT_EQ(*t4.delta(t4.index_of("b v^2")), el(t4, {{"v^2", 5}}));
  auto t2 = s2_z_table(6);
  EXPECT_EQ(*t2.delta(t2.index_of("b")), el(t2, {{"1", 1}, {"a v", 1}}));
  EXPECT_TRUE(t2.delta(t2.index_of("a v^3"))->empty());
  EXPECT_TRUE(t2.delta(t2.index_of("v^3"))->empty());
  EXPECT_EQ(t2.monomial(t2.index_of("a v^2")).order, 2);
  EXPECT_EQ(t2.monomial(t2.index_of("a")).order, 0);
  EXPECT_THROW(even_sphere_z_table(4, 1, 3), std::invalid_argument);
}

TEST(SphereModels, S2OverF2) {
  auto t = s2_f2_table(1, 0, 8);
  EXPECT_EQ(*t.delta(t.index_of("a u^3")), el(t, {{"u^2", 1}, {"a u^4", 1}}));
  EXPECT_TRUE(t.delta(t.index_of("a u^2"))->empty());
  for (int k = 0; k <= 8; ++k) EXPECT_TRUE(t.delta(t.index_of(k == 0 ? "1" : k == 1 ? "u" : "u^" + std::to_string(k)))->empty());
  // Δ(a u) = 1 + a u²: the a u² coordinate is 1.
  EXPECT_EQ(t.delta(t.index_of("a u"))->at(t.index_of("a u^2")), 1);
  auto l1 = s2_f2_table(1, 1, 8);
  EXPECT_EQ(*l1.delta(l1.index_of("u")), el(l1, {{"u^2", 1}, {"a u^4", 1}}));
  EXPECT_EQ(*l1.delta(l1.index_of("u")), *l1.delta(l1.index_of("a u^3")));
  EXPECT_EQ(t.window(), (DegreeWindow{-2, 6}));
}

TEST(SphereModels, HHOfSphere) {
  auto t = hh_sphere_f2_table(2, 8);
  EXPECT_EQ(*t.delta(t.index_of("g f^3")), el(t, {{"f^2", 1}}));
  EXPECT_TRUE(t.delta(t.index_of("f^5"))->empty());
  auto renamed = rename_letters(t, {{"g", "a"}, {"f", "u"}});
  EXPECT_TRUE(compare_tables(s2_f2_table(0, 0, 8), renamed).equal());
  EXPECT_TRUE(compare_tables(renamed, s2_f2_table(0, 0, 8)).equal());
}

TEST(SphereModels, AllShippedTablesSatisfyTheAxioms) {
  std::vector<BVTable> tables;
  for (int i = 1; i <= 5; ++i) tables.push_back(circle_table(Ring::integers(), i));
  for (int n : {3, 5})
    for (int k = 1; k <= 6; ++k) tables.push_back(odd_sphere_table(n, Ring::integers(), k));
  for (int n : {2, 4})
    for (int k = 1; k <= 6; ++k) tables.push_back(even_sphere_z_table(n, -1, k));
  for (int e : {0, 1})
    for (int l : {0, 1}) tables.push_back(s2_f2_table(e, l, 8));
  for (int d : {2, 3}) tables.push_back(hh_sphere_f2_table(d, 8));
  for (const auto& t : tables) {
    auto bv = verify_bv(t);
    EXPECT_TRUE(bv.passed()) << bv.first_violation()->detail;
    auto g = verify_gerstenhaber(t);
    EXPECT_TRUE(g.passed()) << g.first_violation()->detail;
  }
}

TEST(Involutions, AreInvolutiveAlgebraMaps) {
  auto t = s2_f2_table(1, 0, 8);
  auto w = involution_f2(8);
  EXPECT_EQ(*w.images[t.index_of("u")], el(t, {{"u", 1}, {"a u^3", 1}}));
  EXPECT_EQ(*w.images[t.index_of("u^2")], el(t, {{"u^2", 1}}));
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!w.images[i]) continue;
    auto twice = w.apply(t, *w.images[i]);
    if (twice) EXPECT_EQ(*twice, t.basis_element(i));
  }
  auto u = *w.images[t.index_of("u")];
  EXPECT_EQ(*t.multiply(u, u), *w.images[t.index_of("u^2")]);

  auto z = s2_z_table(6);
  auto wz = involution_z(6);
  EXPECT_EQ(*wz.images[z.index_of("v")], el(z, {{"v", 1}, {"a v^2", 1}}));
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!wz.images[i]) continue;
    auto twice = wz.apply(z, *wz.images[i]);
    if (twice) EXPECT_EQ(*twice, z.basis_element(i));
  }
}

TEST(Involutions, SwapTheLambdaVariants) {
  for (int eps : {0, 1}) {
    auto moved = transport_by_involution(s2_f2_table(eps, 0, 8), involution_f2(8));
    auto target = s2_f2_table(eps, 1, 8);
    auto cmp = compare_tables(moved, target);
    EXPECT_TRUE(cmp.mismatches.empty()) << cmp.mismatches.front();
  }
}
