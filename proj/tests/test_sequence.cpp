#include <doctest.h>

#include <array>
#include <stdexcept>

#include "triprod/family.hpp"
#include "triprod/sequence.hpp"

using namespace triprod;

namespace {

const Poly kC = Poly::variable();
const Poly kDen{-1, 2, 1};     // c^2 + 2c - 1
const Poly kDNum{0, 1, 0, 3};  // 3c^3 + c

Poly2 d_var() { return Poly2::variable(); }
Poly2 c_var() { return Poly2(kC); }

// Residual numerators, frozen from an independent computer-algebra run of the
// odd/even recursions (canonical form, monic denominator).
const Poly kResidual33{0, -3, 4, 2, 2, -1, -6, 2};
const Poly kResidual35{0, 3, -13, 25, -31, 41, -35, 35, -33, 8};

} // namespace

TEST_CASE("family_value") {
  CHECK(family_value(FamilyId::Triangular, 6) == Rational(21));
  CHECK(family_value(FamilyId::Period3, 7) == Rational(1));
  CHECK(family_value(FamilyId::CeilHalf, 0) == Rational(0));
  CHECK(family_value(FamilyId::Half, 12) == Rational(1, 2));
  CHECK(family_value(FamilyId::Zero, 99) == Rational(0));
  CHECK(family_value(FamilyId::Triangular, 20) == Rational(210));
  CHECK(family_value(FamilyId::Triangular, 90000) == Rational(int64_t{4050045000}));
}

TEST_CASE("ceilhalf matches the pairwise definition") {
  CHECK(family_value(FamilyId::CeilHalf, 0) == Rational(0));
  for (std::uint64_t k = 1; k <= 200; ++k) {
    CHECK(family_value(FamilyId::CeilHalf, 2 * k) == Rational(static_cast<std::int64_t>(k)));
    CHECK(family_value(FamilyId::CeilHalf, 2 * k - 1) == Rational(static_cast<std::int64_t>(k)));
  }
}

TEST_CASE("period3 pattern") {
  for (std::uint64_t k = 0; k <= 100; ++k) {
    CHECK(family_value(FamilyId::Period3, 3 * k).is_zero());
    CHECK(family_value(FamilyId::Period3, 3 * k + 1) == Rational(1));
    CHECK(family_value(FamilyId::Period3, 3 * k + 2).is_zero());
  }
}

TEST_CASE("triangular differences") {
  for (std::uint64_t n = 1; n <= 128; ++n)
    CHECK(family_value(FamilyId::Triangular, n) - family_value(FamilyId::Triangular, n - 1) ==
          Rational(static_cast<std::int64_t>(n)));
}

TEST_CASE("family names round-trip") {
  for (auto f : kAllFamilies)
    CHECK(parse_family(family_name(f)) == f);
  CHECK_FALSE(parse_family("square").has_value());
}

TEST_CASE("derive_d") {
  const DDerivation dd = derive_d_steps();
  CHECK(dd.d == RatFunc(kDNum, kDen));
  CHECK(dd.d.to_string() == "(3c^3 + c)/(c^2 + 2c - 1)");
  CHECK(dd.difference.degree() == 1);
  CHECK(equal_up_to_scalar(dd.difference.coeff(1), kDen));
  CHECK(dd.d.eval(3) == Rational(6));
  CHECK(dd.d.eval(1) == Rational(2));
  CHECK(dd.d.eval(0) == Rational(0));
  CHECK(gcd(kDNum, kDen).degree() == 0);
}

TEST_CASE("bivariate_T") {
  BivariateTable t;
  const Poly2 c = c_var();
  const Poly2 d = d_var();
  CHECK(t.at(0).is_zero());
  CHECK(t.at(1) == Poly2(Poly::constant(1)));
  CHECK(t.at(2) == c);
  CHECK(t.at(3) == d);
  CHECK(t.at(4) == c * c + Poly2(Poly::constant(1)));
  CHECK(t.at(5) == d + c * d - c * c);
  CHECK(t.at(6) == c * d + c);
  CHECK(t.at(8) == c * c * c + c + d);
  CHECK_THROWS_AS(BivariateTable(10).at(11), std::out_of_range);
}

TEST_CASE("symbolic_T base cases and small values") {
  SymbolicTable t;
  CHECK(t.at(0).is_zero());
  CHECK(t.at(0).den() == Poly::constant(1));
  CHECK(t.at(1) == RatFunc::constant(1));
  CHECK(t.at(2) == RatFunc(kC));
  CHECK(t.at(3) == RatFunc(kDNum, kDen));
  CHECK(t.at(4) == RatFunc(Poly{1, 0, 1}));
  CHECK(t.at(5) == RatFunc(Poly{0, 1, 2, 1, 2}, kDen));
  // T(9) from the odd-index recursion, T(5) + (d - c) T(4).
  CHECK(t.at(9) == RatFunc(Poly{0, 3, 0, 5, 0, 2}, kDen));
  CHECK(t.at(20) == RatFunc(Poly{0, 2, 2, 6, 4, 4, 2}, kDen));
}

TEST_CASE("symbolic T(9) differs from T(3)^2 + T(2)^2 by the (3,3) residual") {
  SymbolicTable t;
  const RatFunc d = t.d();
  const RatFunc product_rule = d * d + RatFunc(kC * kC);
  CHECK(product_rule == RatFunc(kDNum * kDNum + kC * kC * kDen * kDen, kDen * kDen));
  CHECK(t.at(9) - product_rule == residual(t, 3, 3));
  CHECK_FALSE(t.at(9) == product_rule);
}

TEST_CASE("symbolic table range is enforced") {
  SymbolicTable small(16);
  CHECK(small.max_index() == 16);
  CHECK_NOTHROW(small.at(16));
  CHECK_THROWS_AS(small.at(17), std::out_of_range);
  CHECK_THROWS_AS(residual(small, 3, 6), std::out_of_range);
  SymbolicTable def;
  CHECK(def.max_index() == SymbolicTable::kDefaultMaxIndex);
  CHECK_NOTHROW(def.at(1024));
  CHECK_THROWS_AS(def.at(1025), std::out_of_range);
}

TEST_CASE("symbolic and bivariate routes agree") {
  SymbolicTable sym(256);
  BivariateTable biv(256);
  for (std::size_t n = 0; n <= 256; ++n)
    CHECK(biv.at(n).substitute(sym.d()) == sym.at(n));
}

TEST_CASE("specializations match the families") {
  SymbolicTable t(128);
  const std::array<std::pair<Rational, FamilyId>, 3> cases = {{
      {0, FamilyId::Period3},
      {1, FamilyId::CeilHalf},
      {3, FamilyId::Triangular},
  }};
  CHECK(kDen.eval(0) == Rational(-1));
  CHECK(kDen.eval(1) == Rational(2));
  CHECK(kDen.eval(3) == Rational(14));
  for (const auto& [c0, family] : cases)
    for (std::uint64_t n = 0; n <= 128; ++n)
      CHECK(t.at(n).eval(c0) == family_value(family, n));
}

TEST_CASE("residual_numerator for the two probes") {
  SymbolicTable t(64);
  const Poly r33 = residual_numerator(t, 3, 3);
  const Poly r35 = residual_numerator(t, 3, 5);
  CHECK(r33 == kResidual33);
  CHECK(r35 == kResidual35);

  const Poly shared = kC * Poly{-3, 1} * Poly{-1, 1};
  CHECK(equal_up_to_scalar(r33, shared * Poly{1, 1} * Poly{-1, 1, 0, 2}));
  CHECK(equal_up_to_scalar(r35, shared * Poly{1, -3, 4, -4, 7, -1, 8}));
  CHECK(residual(t, 3, 3).den() == kDen * kDen);
  CHECK(residual(t, 3, 5).den() == pow(kDen, 3));
}

TEST_CASE("residuals implied by the recursions vanish") {
  SymbolicTable t(512);
  for (std::size_t n = 1; n <= 256; ++n) {
    CHECK(residual_numerator(t, 2, n).is_zero());
    CHECK(residual_numerator(t, n, 2).is_zero());
    CHECK(residual_numerator(t, 1, n).is_zero());
  }
  // Pairs with a factor 4 follow from the two expansions of T(4n).
  for (std::size_t n = 1; n <= 100; ++n)
    CHECK(residual_numerator(t, 4, n).is_zero());
  CHECK(residual_numerator(2, 2).is_zero());
}

TEST_CASE("residuals vanish at the surviving values") {
  SymbolicTable t(64);
  for (std::size_t m = 1; m <= 64; ++m)
    for (std::size_t n = 1; m * n <= 64; ++n) {
      const Poly r = residual_numerator(t, m, n);
      for (int c0 : {0, 1, 3})
        CHECK(r.eval(c0).is_zero());
      CHECK(r == residual_numerator(t, n, m));
    }
}

TEST_CASE("recursive T(9) would leave a d^2 term in the T(18) equation") {
  BivariateTable t;
  const Poly2 c = c_var();
  const Poly2 from_3_6 = t.at(3) * t.at(6) + t.at(2) * t.at(5);
  const Poly2 via_recursion = c * t.at(9) + t.at(8);
  CHECK((from_3_6 - via_recursion).coeff(2) == kC);
  const Poly2 t9_rule = t.at(3) * t.at(3) + t.at(2) * t.at(2);
  CHECK((from_3_6 - (c * t9_rule + t.at(8))).coeff(2).is_zero());
}
