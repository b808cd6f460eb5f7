#include "hhbv/errors.hpp"
#include "hhbv/hochschild.hpp"
#include "hhbv/snf.hpp"

#include <gtest/gtest.h>

using namespace hhbv;

namespace {

std::vector<GradedAlgebra> sample_algebras() {
  std::vector<GradedAlgebra> out;
  for (int n = 2; n <= 5; ++n) out.push_back(make_exterior_sphere(n, Ring::integers()));
  out.push_back(make_truncated_polynomial(2, 3, Ring::integers()));
  out.push_back(make_truncated_polynomial(3, 3, Ring::integers()));
  out.push_back(tensor_product(make_exterior_sphere(2, Ring::integers()), make_exterior_sphere(3, Ring::integers())));
  out.push_back(tensor_product(make_exterior_sphere(3, Ring::integers()), make_exterior_sphere(3, Ring::integers())));
  return out;
}

// Index of [sx]^k (unit in front) or x[sx]^k inside its degree block.
std::size_t pos(const HochschildChainComplex& c, std::size_t a0, int k) {
  return *c.position(a0, Word(static_cast<std::size_t>(k), 1));
}

}  // namespace

TEST(ChainComplex, ExteriorSphereBasisForWordLengthTwo) {
  auto c = build_chain_complex(make_exterior_sphere(2, Ring::integers()), 2);
  std::map<int, std::size_t> dims;
  for (int d : c.degrees()) dims[d] = c.dim(d);
  std::map<int, std::size_t> expected{{0, 1}, {-1, 1}, {-2, 2}, {-3, 1}, {-4, 1}};
  EXPECT_EQ(dims, expected);
  EXPECT_EQ(c.basis(-2)[0].a0, 1u);  // x[]
  EXPECT_EQ(c.basis(-2)[1].word.size(), 2u);
}

TEST(ChainComplex, DifferentialSquaresToZero) {
  for (const auto& a : sample_algebras()) {
    auto c = build_chain_complex(a, 5);
    for (int d : c.degrees())
      EXPECT_TRUE((c.differential(d - 1) * c.differential(d)).is_zero()) << "degree " << d;
  }
}

TEST(ChainComplex, ConnesSquaresToZeroAndAnticommutesWithDifferential) {
  for (const auto& a : sample_algebras()) {
    auto c = build_chain_complex(a, 5);
    for (int d : c.degrees()) {
      if (!c.is_complete(d)) continue;
      EXPECT_TRUE((c.connes(d + 1) * c.connes(d)).is_zero()) << "degree " << d;
      IntMatrix db = c.differential(d + 1) * c.connes(d);
      IntMatrix bd = c.connes(d - 1) * c.differential(d);
      EXPECT_TRUE((db + bd).is_zero()) << "degree " << d;
    }
  }
}

TEST(ChainComplex, ConnesOnUnitAndGenerator) {
  auto c = build_chain_complex(make_exterior_sphere(2, Ring::integers()), 3);
  EXPECT_TRUE(c.apply_connes(c.basis(0)[0]).empty());
  auto bx = c.apply_connes(c.basis(-2)[0]);
  ASSERT_EQ(bx.size(), 1u);
  EXPECT_EQ(bx.begin()->first, std::make_pair(std::size_t{0}, Word{1}));
  EXPECT_EQ(bx.begin()->second, 1);
}

TEST(ChainComplex, DifferentialOnTwoLettersHasMagnitudeTwoForEvenSpheres) {
  for (int n : {2, 4}) {
    auto c = build_chain_complex(make_exterior_sphere(n, Ring::integers()), 3);
    const int deg = 2 * (1 - n);
    IntMatrix d = c.differential(deg);
    EXPECT_EQ(abs(d(pos(c, 1, 1), pos(c, 0, 2))), 2);
  }
}

TEST(ChainComplex, OverF2AllDifferentialsOfExteriorAlgebraVanish) {
  auto c = build_chain_complex(make_exterior_sphere(2, Ring::prime_field(2)), 6);
  for (int d : c.degrees()) EXPECT_TRUE(c.differential(d).is_zero());
}

TEST(ChainComplex, CertificationMatchesWordLengthBound) {
  auto c = build_chain_complex(make_exterior_sphere(2, Ring::integers()), 2);
  EXPECT_TRUE(c.is_complete(-2));
  EXPECT_FALSE(c.is_complete(-3));  // [sx|sx|sx] is missing
  EXPECT_TRUE(c.is_certified(-1));
  EXPECT_FALSE(c.is_certified(-2));
  std::vector<int> bad{-1, -2, -3};
  try {
    c.require_certified(bad);
    FAIL();
  } catch (const WindowTooSmall& e) {
    EXPECT_EQ(e.uncertified_degrees(), (std::vector<int>{-2, -3}));
  }
}

TEST(ChainComplex, RejectsDegreeMinusOneGenerator) {
  EXPECT_THROW(build_chain_complex(make_exterior_sphere(1, Ring::integers()), 2), InvalidAlgebra);
}

// Closed form for Λx_{-n}: d^∨(x[sx]^{k∨}) = ±(1-(-1)^{k(n+1)}) [sx]^{(k+1)∨},
// d^∨([sx]^{k∨}) = 0, B^∨([sx]^{k∨}) = ±k x[sx]^{(k-1)∨} when (k+1)(n+1) is even.
TEST(DualComplex, MatchesClosedFormForExteriorSpheres) {
  for (int n = 2; n <= 5; ++n) {
    auto c = build_chain_complex(make_exterior_sphere(n, Ring::integers()), 12);
    for (int k = 0; k <= 10; ++k) {
      const int e_bracket = k * (n - 1);  // dual degree of [sx]^{k∨}
      const int e_x = n + k * (n - 1);    // dual degree of x[sx]^{k∨}
      IntMatrix dx = dual_differential(c, e_x);
      ASSERT_EQ(dx.rows(), c.dim(-(e_x - 1)));
      const Integer expected = k * (n + 1) % 2 == 0 ? 0 : 2;
      EXPECT_EQ(abs(dx(pos(c, 0, k + 1), pos(c, 1, k))), expected) << n << " " << k;
      EXPECT_TRUE(dual_differential(c, e_bracket).is_zero() || dual_differential(c, e_bracket).column(pos(c, 0, k)) ==
                                                                   Vector(c.dim(-(e_bracket - 1))));
      if (k >= 1) {
        IntMatrix b = dual_connes(c, e_bracket);
        Integer coeff = (k + 1) * (n + 1) % 2 == 0 ? Integer(k) : Integer(0);
        EXPECT_EQ(abs(b(pos(c, 1, k - 1), pos(c, 0, k))), coeff) << n << " " << k;
      }
      EXPECT_TRUE(is_zero_vector(dual_connes(c, e_x).column(pos(c, 1, k))));
    }
  }
}

TEST(DualComplex, DualMapsSatisfyTheSameIdentities) {
  auto c = build_chain_complex(make_exterior_sphere(2, Ring::integers()), 8);
  for (int e = 0; e <= 6; ++e) {
    EXPECT_TRUE((dual_differential(c, e) * dual_differential(c, e + 1)).is_zero());
    IntMatrix lhs = dual_differential(c, e + 1) * dual_connes(c, e) + dual_connes(c, e - 1) * dual_differential(c, e);
    EXPECT_TRUE(lhs.is_zero()) << e;
  }
}

// Groups of the dual complex for n=2, from SNF of the closed-form 2x2 blocks.
TEST(DualHomology, IntegralGroupsOfTheTwoSphere) {
  auto dual = hh_via_dual(make_exterior_sphere(2, Ring::integers()), Ring::integers(), 12);
  for (int e = 0; e <= 10; ++e) {
    ASSERT_TRUE(dual.groups.count(e)) << e;
    const auto& g = dual.groups.at(e);
    // Oracle: dual degree e contains [sx]^{e∨} and x[sx]^{(e-2)∨}. For odd e the
    // second is not a cycle (d^∨ = ±2 [sx]^{(e-1)∨}); for even e ≥ 2 both are
    // cycles and the incoming map hits [sx]^{e∨} twice.
    std::vector<Integer> torsion;
    if (e % 2 == 0 && e >= 2) torsion.push_back(2);
    EXPECT_EQ(g.free_rank, 1u) << e;
    EXPECT_EQ(g.torsion, torsion) << e;
  }
}

TEST(DualHomology, CokernelOfDeltaOnTheTwoSphere) {
  auto dual = hh_via_dual(make_exterior_sphere(2, Ring::integers()), Ring::integers(), 12);
  for (int k = 1; k <= 3; ++k) {
    AbelianGroup coker = dual.delta_cokernel(2 * k + 1);
    EXPECT_EQ(coker.free_rank, 0u);
    EXPECT_EQ(coker.torsion, (std::vector<Integer>{2 * (2 * k + 1)}));
  }
}

TEST(DualHomology, OverF2DimensionsAreBasisCounts) {
  auto dual = hh_via_dual(make_exterior_sphere(2, Ring::integers()), Ring::prime_field(2), 8);
  std::vector<std::size_t> dims;
  for (int e = 0; e <= 5; ++e) dims.push_back(dual.groups.at(e).dimension());
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 1, 2, 2, 2, 2}));
}

TEST(DualHomology, UncertifiedDeltaThrows) {
  auto dual = hh_via_dual(make_exterior_sphere(2, Ring::integers()), Ring::integers(), 3);
  EXPECT_THROW(dual.delta_cokernel(20), WindowTooSmall);
}

// Universal coefficients: dim_F2 H_e = rank + #(even torsion in e) + #(even torsion in e-1)
// (the dual complex has differentials of degree -1).
TEST(DualHomology, F2DimensionsFollowUniversalCoefficients) {
  for (const auto& a : sample_algebras()) {
    auto z = hh_via_dual(a, Ring::integers(), 6);
    auto f2 = hh_via_dual(a, Ring::prime_field(2), 6);
    for (const auto& [e, g] : f2.groups) {
      if (!z.groups.count(e) || !z.groups.count(e - 1)) continue;
      std::size_t expected = z.groups.at(e).free_rank;
      for (const auto& t : z.groups.at(e).torsion) expected += t % 2 == 0;
      for (const auto& t : z.groups.at(e - 1).torsion) expected += t % 2 == 0;
      EXPECT_EQ(g.dimension(), expected) << e;
    }
  }
}
