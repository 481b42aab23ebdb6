#include <gtest/gtest.h>

#include <random>

#include "hayman/symbolic.hpp"
#include "test_util.hpp"

using namespace hayman;
using hayman::testing::q;
using hayman::testing::Z;

TEST(ResidueSpectrum, LogDerivativeOfQuadratic) {
  auto s = residue_spectrum(2 * Z / (Z * Z - 1));
  EXPECT_TRUE(s.all_poles_simple);
  EXPECT_FALSE(s.nonrational_residues_present);
  ASSERT_EQ(s.rational_residues.size(), 1U);
  EXPECT_EQ(s.rational_residues[0].residue, 1);
  EXPECT_EQ(RatFunc(s.rational_residues[0].component), Z * Z - 1);
}

TEST(ResidueSpectrum, HalfResidue) {
  auto s = residue_spectrum(-1 / (2 * Z));
  ASSERT_EQ(s.rational_residues.size(), 1U);
  EXPECT_EQ(s.rational_residues[0].residue, Rational(-1, 2));
  EXPECT_EQ(s.rational_residues[0].component, Poly::z());
}

TEST(ResidueSpectrum, DoublePoleAndIrrationalResidues) {
  EXPECT_FALSE(residue_spectrum(1 / (Z * Z)).all_poles_simple);
  // residues of 1/(z^2 - 2) are +-1/(2 sqrt 2)
  auto s = residue_spectrum(1 / (Z * Z - 2));
  EXPECT_TRUE(s.nonrational_residues_present);
  EXPECT_TRUE(s.rational_residues.empty());
  // mixed: simple pole at 1 with residue 3 next to a double pole at 0
  auto m = residue_spectrum(3 / (Z - 1) + 1 / (Z * Z));
  EXPECT_FALSE(m.all_poles_simple);
  ASSERT_EQ(m.rational_residues.size(), 1U);
  EXPECT_EQ(m.rational_residues[0].residue, 3);
}

TEST(ResidueSpectrum, ComponentsDivideDenominator) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    RatFunc f = hayman::testing::random_ratfunc(rng, 4);
    auto s = residue_spectrum(f);
    for (std::size_t a = 0; a < s.rational_residues.size(); ++a) {
      EXPECT_TRUE(divmod(f.denom(), s.rational_residues[a].component).second.is_zero());
      for (std::size_t b = a + 1; b < s.rational_residues.size(); ++b)
        EXPECT_EQ(gcd(s.rational_residues[a].component, s.rational_residues[b].component).degree(), 0);
    }
  }
}

TEST(ExpIntegral, Examples) {
  auto c1 = exp_integral_form(3 * Z * Z / (Z * Z * Z - 2));
  ASSERT_TRUE(std::holds_alternative<RationalU>(c1));
  EXPECT_EQ(std::get<RationalU>(c1).u, Z * Z * Z - 2);

  auto c2 = exp_integral_form(2 + 1 / Z);
  ASSERT_TRUE(std::holds_alternative<MeromorphicUeV>(c2));
  EXPECT_EQ(std::get<MeromorphicUeV>(c2).u, Z);
  EXPECT_EQ(RatFunc(std::get<MeromorphicUeV>(c2).v), 2 * Z);

  EXPECT_TRUE(std::holds_alternative<HalfIntegerAlgebroid>(exp_integral_form(-1 / (2 * Z))));
  EXPECT_TRUE(std::holds_alternative<NotMeromorphic>(exp_integral_form(1 / (Z * Z))));
  EXPECT_TRUE(std::holds_alternative<NotMeromorphic>(exp_integral_form(1 / (3 * Z))));
  EXPECT_TRUE(std::holds_alternative<NotMeromorphic>(exp_integral_form(1 / (Z * Z - 2))));

  auto zero = exp_integral_form(RatFunc());
  ASSERT_TRUE(std::holds_alternative<RationalU>(zero));
  EXPECT_EQ(std::get<RationalU>(zero).u, RatFunc(1));
}

TEST(ExpIntegral, RationalRoundTripProperty) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    RatFunc u = hayman::testing::random_linear_product(rng) * q(1 + i % 5, 3);
    RatFunc f = u.derivative() / u;
    auto cls = exp_integral_form(f);
    ASSERT_TRUE(std::holds_alternative<RationalU>(cls)) << to_string(f);
    const RatFunc& got = std::get<RationalU>(cls).u;
    EXPECT_EQ(got.derivative() / got, f);
    // equal up to a constant factor
    EXPECT_TRUE(constant_value(got / u).has_value());
  }
}

TEST(ExpIntegral, MeromorphicRoundTripProperty) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    RatFunc u = hayman::testing::random_linear_product(rng);
    Poly v = hayman::testing::random_poly(rng, 3);
    if (v.degree() < 1) v += Poly::monomial(Rational(1), 1);
    v -= Poly(v.coeff(0));
    RatFunc f = u.derivative() / u + RatFunc(v.derivative());
    auto cls = exp_integral_form(f);
    ASSERT_TRUE(std::holds_alternative<MeromorphicUeV>(cls)) << to_string(f);
    const auto& m = std::get<MeromorphicUeV>(cls);
    EXPECT_EQ(m.u.derivative() / m.u + RatFunc(m.v.derivative()), f);
    EXPECT_EQ(m.v, v);
    EXPECT_EQ(m.v.coeff(0), 0);
  }
}

TEST(IsSquare, Examples) {
  auto s1 = is_square((Z * Z + 2 * Z + 1) / (Z * Z));
  ASSERT_TRUE(s1);
  EXPECT_EQ(*s1, (Z + 1) / Z);
  auto s2 = is_square(4 * Z * Z);
  ASSERT_TRUE(s2);
  EXPECT_EQ(*s2, 2 * Z);
  EXPECT_FALSE(is_square(2 * Z * Z));
  EXPECT_FALSE(is_square(-Z * Z));
  EXPECT_FALSE(is_square(Z));
}

TEST(IsSquare, RoundTripProperty) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    RatFunc s = hayman::testing::random_ratfunc(rng, 4);
    auto r = is_square(s * s);
    ASSERT_TRUE(r);
    EXPECT_TRUE(*r == s || *r == -s);
  }
}

TEST(ConstantValue, Examples) {
  EXPECT_EQ(constant_value(q(5)), Rational(5));
  EXPECT_EQ(constant_value(Z / Z), Rational(1));
  EXPECT_FALSE(constant_value(1 / Z));
  EXPECT_EQ(constant_value(RatFunc()), Rational(0));
}

TEST(SolveScalarForConstancy, Examples) {
  auto a = solve_scalar_for_constancy(Z, -Z);
  EXPECT_EQ(a.kind, ConstancySolution::Kind::Unique);
  EXPECT_EQ(a.value, 1);
  EXPECT_EQ(solve_scalar_for_constancy(q(1), q(2)).kind, ConstancySolution::Kind::All);
  EXPECT_EQ(solve_scalar_for_constancy(Z * Z, Z).kind, ConstancySolution::Kind::None);
}

TEST(SolveScalarForConstancy, SubstitutionProperty) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> cs(-5, 5);
  for (int i = 0; i < 200; ++i) {
    RatFunc Q = hayman::testing::random_ratfunc(rng, 3);
    Rational c(cs(rng), 2);
    RatFunc P = q(cs(rng)) - RatFunc(c) * Q;
    auto s = solve_scalar_for_constancy(P, Q);
    ASSERT_NE(s.kind, ConstancySolution::Kind::None);
    Rational used = s.kind == ConstancySolution::Kind::Unique ? s.value : c;
    EXPECT_TRUE(constant_value(P + RatFunc(used) * Q).has_value());
  }
}

TEST(PolyAntiderivative, Examples) {
  EXPECT_EQ(RatFunc(poly_antiderivative((2 * Z).numer())), Z * Z);
  EXPECT_TRUE(poly_antiderivative(Poly()).is_zero());
  EXPECT_EQ(RatFunc(poly_antiderivative((3 * Z * Z + 1).numer())), Z * Z * Z + Z);
}

TEST(RationalAntiderivative, Examples) {
  auto a = rational_antiderivative(Z);
  ASSERT_TRUE(a);
  EXPECT_EQ(*a, Z * Z / 2);
  auto b = rational_antiderivative(-1 / (Z * Z) + 1);
  ASSERT_TRUE(b);
  EXPECT_EQ(*b, 1 / Z + Z);
  EXPECT_FALSE(rational_antiderivative(1 / Z));
}

TEST(LinearOde, Examples) {
  // y' = 2z: z^2 + c
  auto f1 = rational_solutions_linear_ode(RatFunc(), 2 * Z);
  ASSERT_FALSE(f1.empty());
  ASSERT_TRUE(f1.homogeneous);
  EXPECT_TRUE(constant_value(*f1.particular - Z * Z).has_value());
  EXPECT_TRUE(constant_value(*f1.homogeneous).has_value());
  EXPECT_TRUE(f1.complete);

  // y' = y/z: c z
  auto f2 = rational_solutions_linear_ode(1 / Z, RatFunc());
  ASSERT_TRUE(f2.homogeneous);
  EXPECT_TRUE(constant_value(*f2.homogeneous / Z).has_value());
  EXPECT_TRUE(f2.particular->is_zero());

  // y' = -y/z + 1: z/2 + c/z
  auto f3 = rational_solutions_linear_ode(-1 / Z, q(1));
  ASSERT_FALSE(f3.empty());
  ASSERT_TRUE(f3.homogeneous);
  EXPECT_TRUE(constant_value(*f3.homogeneous * Z).has_value());
  EXPECT_TRUE(constant_value((*f3.particular - Z / 2) * Z).has_value());
}

TEST(LinearOde, NoRationalSolution) {
  // y' = y has only c e^z
  auto fam = rational_solutions_linear_ode(q(1), RatFunc());
  ASSERT_FALSE(fam.empty());
  EXPECT_TRUE(fam.particular->is_zero());
  EXPECT_FALSE(fam.homogeneous);
  // y' = 1/z has no rational solution (log)
  EXPECT_TRUE(rational_solutions_linear_ode(RatFunc(), 1 / Z).empty());
}

TEST(LinearOde, BoundExhaustionIsReported) {
  // y = z^40 solves y' = 40 y / z, beyond a numerator bound of 10
  LinearOdeBounds tight{30, 10};
  auto fam = rational_solutions_linear_ode(40 / Z, RatFunc(), tight);
  EXPECT_FALSE(fam.complete);
  EXPECT_FALSE(fam.diagnostic.empty());
  auto full = rational_solutions_linear_ode(40 / Z, RatFunc(), LinearOdeBounds{30, 50});
  EXPECT_TRUE(full.complete);
  ASSERT_TRUE(full.homogeneous);
  // pole multiplicity above the bound
  auto poles = rational_solutions_linear_ode(-40 / Z, RatFunc(), LinearOdeBounds{30, 30});
  EXPECT_FALSE(poles.complete);
}

TEST(LinearOde, BackSubstitutionProperty) {
  // Build y' = f y + g from a known rational y and random f, so a solution exists.
  std::mt19937_64 rng(57);
  int with_solution = 0;
  for (int i = 0; i < 250; ++i) {
    RatFunc y = hayman::testing::random_ratfunc(rng, 3, 3);
    RatFunc f = hayman::testing::random_ratfunc(rng, 2, 3);
    RatFunc g = y.derivative() - f * y;
    auto fam = rational_solutions_linear_ode(f, g);
    ASSERT_TRUE(fam.complete);
    ASSERT_FALSE(fam.empty()) << "y=" << to_string(y) << " f=" << to_string(f);
    ++with_solution;
    EXPECT_TRUE((fam.particular->derivative() - f * *fam.particular - g).is_zero());
    if (fam.homogeneous) EXPECT_TRUE((fam.homogeneous->derivative() - f * *fam.homogeneous).is_zero());
    // y itself is a member of the family
    RatFunc diff = y - *fam.particular;
    if (!diff.is_zero()) {
      ASSERT_TRUE(fam.homogeneous);
      EXPECT_TRUE(constant_value(diff / *fam.homogeneous).has_value());
    }
  }
  EXPECT_EQ(with_solution, 250);
}
