#include "hhbv/cochains.hpp"
#include "hhbv/bv_verify.hpp"
#include "hhbv/errors.hpp"
#include "hhbv/modp.hpp"
#include "hhbv/sphere_models.hpp"

#include <gtest/gtest.h>

using namespace hhbv;

namespace {

const Ring F2 = Ring::prime_field(2);

GradedAlgebra sphere(int d) { return make_exterior_sphere(d, F2); }

Word xs(int k) { return Word(static_cast<std::size_t>(k), 1); }

// f^k: [sx]^k ↦ 1 and g f^k: [sx]^k ↦ x, written out by hand.
Cochain fk(const GradedAlgebra& a, int k) { return cochain_term(a, xs(k), 0); }
Cochain gfk(const GradedAlgebra& a, int k) { return cochain_term(a, xs(k), 1); }

std::string power(const std::string& g, int k) {
  std::string f = k == 0 ? "" : k == 1 ? "f" : "f^" + std::to_string(k);
  if (g.empty()) return k == 0 ? "1" : f;
  return k == 0 ? g : g + " " + f;
}

}  // namespace

TEST(Cochains, RequireF2) {
  EXPECT_THROW(build_cochain_complex(make_exterior_sphere(2, Ring::integers()), 3), UnsupportedRing);
  EXPECT_THROW(cup(make_exterior_sphere(2, Ring::integers()), {}, {}), UnsupportedRing);
}

TEST(Cochains, ArityBlocksOfExteriorAlgebraAreTwoDimensional) {
  auto c = build_cochain_complex(sphere(2), 5);
  std::map<std::size_t, int> per_arity;
  for (int e : c.degrees())
    for (const auto& b : c.basis(e)) per_arity[b.word.size()]++;
  for (const auto& [p, n] : per_arity) EXPECT_EQ(n, 2) << p;
}

TEST(Cochains, DifferentialVanishesForExteriorAlgebra) {
  auto c = build_cochain_complex(sphere(2), 6);
  for (int e : c.degrees()) EXPECT_TRUE(c.differential(e).is_zero());
  EXPECT_TRUE(d2(sphere(2), fk(sphere(2), 1)).is_zero());
}

TEST(Cochains, DifferentialSquaresToZero) {
  std::vector<GradedAlgebra> algebras{make_truncated_polynomial(2, 3, F2), make_truncated_polynomial(3, 4, F2),
                                      tensor_product(sphere(2), sphere(3))};
  for (const auto& a : algebras) {
    auto c = build_cochain_complex(a, 4);
    for (int e : c.degrees()) EXPECT_TRUE((c.differential(e - 1) * c.differential(e)).reduced(F2).is_zero()) << e;
  }
}

// On k[x]/x^3 with |x| = -2, d(id-like cochain [sx] ↦ x²)[sx|sx] = x·x² + x²·x = 0, while
// d([sx] ↦ x)[sx|sx] = x·x + x·x = 0 and the middle term uses x·x = x².
TEST(Cochains, DifferentialOnTruncatedPolynomialByHand) {
  auto a = make_truncated_polynomial(2, 3, F2);
  const std::size_t x = a.index_of("x"), x2 = a.index_of("x^2");
  // f: [s x²] ↦ 1. Middle term: (d f)[sx|sx] = f[s(x·x)] = 1; outer terms vanish.
  Cochain f = cochain_term(a, {x2}, 0);
  Cochain df = d2(a, f);
  Cochain expected = cochain_term(a, {x, x}, 0) + cochain_term(a, {x, x2}, x) + cochain_term(a, {x2, x}, x);
  // outer terms: a_1 f[sa_2] with a_1 = x, a_2 = x² gives x; f[sa_1] a_2 with a_1 = x², a_2 = x gives x.
  EXPECT_EQ(df, expected);
}

TEST(Cochains, CupProductExamples) {
  auto a = sphere(2);
  Cochain one = cochain_term(a, {}, 0);
  EXPECT_EQ(cup(a, fk(a, 1), fk(a, 1)), fk(a, 2));
  EXPECT_EQ(cup(a, cochain_term(a, {}, 1), fk(a, 3)), gfk(a, 3));
  EXPECT_EQ(cup(a, one, fk(a, 1)), fk(a, 1));
  EXPECT_EQ(cup(a, fk(a, 1), one), fk(a, 1));
  EXPECT_TRUE(cup(a, gfk(a, 1), gfk(a, 2)).is_zero());
}

TEST(Cochains, CupIsAssociative) {
  auto a = make_truncated_polynomial(2, 3, F2);
  auto c = build_cochain_complex(a, 3);
  std::vector<Cochain> sample;
  for (int e : c.degrees())
    for (const auto& b : c.basis(e))
      if (b.word.size() <= 1) sample.push_back(cochain_term(a, b.word, b.value));
  for (const auto& f : sample)
    for (const auto& g : sample)
      for (const auto& h : sample) EXPECT_EQ(cup(a, cup(a, f, g), h), cup(a, f, cup(a, g, h)));
}

TEST(Cochains, BracketOfAnElementWithItselfVanishes) {
  auto a = sphere(2);
  for (int k = 0; k < 4; ++k) {
    EXPECT_TRUE(gerst_bracket(a, fk(a, k), fk(a, k)).is_zero());
    EXPECT_TRUE(gerst_bracket(a, gfk(a, k), gfk(a, k)).is_zero());
  }
}

TEST(Cochains, BraceByHand) {
  auto a = sphere(2);
  // g f ∘̄ f: the single slot of [sx] ↦ x receives f[sx] = 1, whose Ā-part is 0.
  EXPECT_TRUE(brace(a, gfk(a, 1), fk(a, 1)).is_zero());
  // f² ∘̄ g f: either slot of [sx|sx] receives g f[sx] = x, giving 2 f² = 0; f ∘̄ g f^2 = f^2.
  EXPECT_TRUE(brace(a, fk(a, 2), gfk(a, 1)).is_zero());
  EXPECT_EQ(brace(a, fk(a, 1), gfk(a, 2)), fk(a, 2));
}

TEST(Cochains, ThetaHatOnSphereClasses) {
  auto a = sphere(2);
  for (int k = 0; k < 5; ++k) {
    DualChain expected_f{{{1, xs(k)}, Integer(1)}};
    DualChain expected_gf{{{0, xs(k)}, Integer(1)}};
    EXPECT_EQ(theta_hat(a, fk(a, k)), expected_f);
    EXPECT_EQ(theta_hat(a, gfk(a, k)), expected_gf);
  }
  GradedAlgebra plain = sphere(2);
  plain.set_dualizing(std::nullopt);
  EXPECT_THROW(theta_hat(plain, fk(plain, 1)), NotDualizing);
}

TEST(Cochains, ThetaHatIsBijectiveOnEveryDegree) {
  for (const auto& a : {sphere(3), make_truncated_polynomial(2, 3, F2)}) {
    auto co = build_cochain_complex(a, 4);
    auto ch = build_chain_complex(a, 4);
    for (int e : co.degrees()) {
      IntMatrix m = theta_hat_matrix(co, ch, e);
      ASSERT_EQ(m.rows(), m.cols());
      EXPECT_TRUE(modp::inverse(m, 2).has_value()) << e;
    }
  }
}

// Closed-form oracle: Λg ⊗ F2[f], Δ(g f^k) = k f^{k-1}, Δ(f^k) = 0,
// {g f^k, f^l} = l f^{k+l-1}, {g f^k, g f^l} = (k-l) g f^{k+l-1}.
class SphereHH : public ::testing::TestWithParam<int> {};

TEST_P(SphereHH, DeltaAndBracketsMatchClosedForm) {
  const int d = GetParam();
  auto a = sphere(d);
  auto result = delta_on_HH(a, 20, exterior_sphere_cochain_basis(d, 20));
  const BVTable& t = result.table;
  auto idx = [&](const std::string& g, int k) { return t.index_of(power(g, k)); };
  auto single = [](std::size_t i, long long c) { return c % 2 == 0 ? Element{} : Element{{i, Integer(1)}}; };
  for (int k = 0; k <= 8; ++k) {
    ASSERT_TRUE(t.delta(idx("g", k)).has_value()) << k;
    EXPECT_EQ(*t.delta(idx("g", k)), k == 0 ? Element{} : single(idx("", k - 1), k)) << k;
    ASSERT_TRUE(t.delta(idx("", k)).has_value());
    EXPECT_TRUE(t.delta(idx("", k))->empty());
    for (int l = 0; l <= 8; ++l) {
      const int top = k + l - 1;
      Element gf_f = top < 0 ? Element{} : single(idx("", top), l);
      Element gf_gf = top < 0 ? Element{} : single(idx("g", top), k - l);
      EXPECT_EQ(result.cochain_bracket.at(idx("g", k), idx("", l)), gf_f) << k << " " << l;
      EXPECT_EQ(result.cochain_bracket.at(idx("g", k), idx("g", l)), gf_gf) << k << " " << l;
      EXPECT_TRUE(result.cochain_bracket.at(idx("", k), idx("", l)).empty());
    }
  }
}

TEST_P(SphereHH, CupProductIsThePolynomialProduct) {
  const int d = GetParam();
  auto result = delta_on_HH(sphere(d), 12, exterior_sphere_cochain_basis(d, 12));
  const BVTable& t = result.table;
  for (int k = 0; k <= 4; ++k)
    for (int l = 0; l <= 4; ++l) {
      auto p = t.product(t.index_of(power("", k)), t.index_of(power("g", l)));
      ASSERT_TRUE(p.has_value());
      EXPECT_EQ(*p, (Element{{t.index_of(power("g", k + l)), Integer(1)}}));
      EXPECT_TRUE(t.product(t.index_of(power("g", k)), t.index_of(power("g", l)))->empty());
    }
}

INSTANTIATE_TEST_SUITE_P(Spheres, SphereHH, ::testing::Values(2, 3));

TEST(DeltaOnHH, DeltaSquaresToZeroAndFollowsParity) {
  auto result = delta_on_HH(sphere(2), 10, exterior_sphere_cochain_basis(2, 10));
  const BVTable& t = result.table;
  EXPECT_TRUE(t.delta(t.index_of("g f^2"))->empty());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!t.delta(i)) continue;
    auto dd = t.apply_delta(*t.delta(i));
    if (dd) EXPECT_TRUE(dd->empty());
  }
}

TEST(DeltaOnHH, GenericNamesWithoutHints) {
  auto result = delta_on_HH(sphere(2), 8);
  const BVTable& t = result.table;
  EXPECT_EQ(t.monomial(t.unit()).name, "1");
  for (const auto& [e, g] : result.groups) EXPECT_EQ(t.monomials_of_degree(e).size(), g.dimension());
}

// Dimensions and Δ-ranks agree with the dual-chain route after the shift by d.
TEST(DeltaOnHH, AgreesWithDualRoute) {
  for (const auto& a : {sphere(2), sphere(3), make_truncated_polynomial(2, 3, F2)}) {
    const int L = 8;
    auto hh = delta_on_HH(a, L);
    auto dual = hh_via_dual(a, F2, L);
    const int shift = a.dualizing()->degree;
    for (const auto& [e, g] : hh.groups) {
      ASSERT_TRUE(dual.groups.count(e + shift)) << e;
      EXPECT_EQ(g.dimension(), dual.groups.at(e + shift).dimension()) << e;
      if (!hh.groups.count(e + 1) || !dual.delta.count(e + shift)) continue;
      std::size_t rank = 0;
      modp::SpanBuilder span(hh.table.size(), 2);
      for (auto i : hh.table.monomials_of_degree(e)) {
        Vector v(hh.table.size());
        for (const auto& [k, c] : *hh.table.delta(i)) v[k] = c;
        rank += span.add(v);
      }
      EXPECT_EQ(rank, modp::rank(dual.delta.at(e + shift), 2)) << e;
    }
  }
}

// The closed-form model table and the cochain computation agree entry by entry.
TEST(DeltaOnHH, MatchesModelTable) {
  for (int d : {2, 3}) {
    const int K = 8;
    auto model = hh_sphere_f2_table(d, K);
    auto computed = delta_on_HH(sphere(d), 19, exterior_sphere_cochain_basis(d, K + 2)).table;
    std::vector<std::size_t> keep;
    for (const auto& m : model.monomials()) {
      auto i = computed.find(m.name);
      ASSERT_TRUE(i) << m.name;
      EXPECT_EQ(computed.degree(*i), m.degree);
      keep.push_back(*i);
    }
    auto restricted = restrict_table(computed, keep, model.window());
    auto forward = compare_tables(model, restricted);
    auto backward = compare_tables(restricted, model);
    EXPECT_TRUE(forward.equal()) << d << " " << (forward.mismatches.empty() ? "" : forward.mismatches[0])
                                 << (forward.unknown.empty() ? "" : forward.unknown[0]);
    EXPECT_TRUE(backward.mismatches.empty());
  }
}
