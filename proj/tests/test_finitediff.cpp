#include <catch2/catch_amalgamated.hpp>

#include <subpower/core.hpp>
#include <subpower/finitediff.hpp>

#include <random>

using namespace subpowers;

namespace {

Rational q(long num, long den = 1) { return make_rational(Int(num), Int(den)); }

BasisPolynomial mono(std::vector<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return BasisPolynomial(Basis::monomial, std::move(c));
}

}  // namespace

TEST_CASE("falling factorial values") {
  CHECK(falling_factorial(Rational(5), 3) == 60);
  CHECK(falling_factorial(Rational(3), 5) == 0);  // the factor (3-3) appears
  CHECK(falling_factorial(q(-7, 3), 0) == 1);
  CHECK(falling_factorial(q(5, 2), 2) == q(15, 4));
}

TEST_CASE("polynomial normal form") {
  CHECK(BasisPolynomial(Basis::monomial, {q(1), q(2), q(0), q(0)}) ==
        BasisPolynomial(Basis::monomial, {q(1), q(2)}));
  CHECK(BasisPolynomial(Basis::monomial, {q(0)}).is_zero());
  CHECK(BasisPolynomial().degree() == -1);
  CHECK(mono({3, 0, 1}).degree() == 2);
}

TEST_CASE("basis conversion of x^3") {
  const BasisPolynomial cube = BasisPolynomial::power(3);
  const auto in_binomial = convert_basis(cube, Basis::binomial);
  CHECK(in_binomial ==
        BasisPolynomial(Basis::binomial, {q(0), q(1), q(6), q(6)}));
  const auto in_falling = convert_basis(cube, Basis::falling_factorial);
  CHECK(in_falling ==
        BasisPolynomial(Basis::falling_factorial, {q(0), q(1), q(3), q(1)}));
  CHECK(convert_basis(cube, Basis::monomial) == cube);
}

TEST_CASE("basis conversions round trip on random polynomials") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> deg(0, 10), num(-50, 50), den(1, 12);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> coeffs(deg(rng) + 1);
    for (auto& c : coeffs) c = q(num(rng), den(rng));
    const BasisPolynomial p(Basis::monomial, coeffs);
    for (Basis other : {Basis::falling_factorial, Basis::binomial})
      CHECK(convert_basis(convert_basis(p, other), Basis::monomial) == p);
    // the two non-monomial forms agree through either route
    CHECK(convert_basis(convert_basis(p, Basis::falling_factorial), Basis::binomial) ==
          convert_basis(p, Basis::binomial));
  }
}

TEST_CASE("shift expands p(x + a)") {
  CHECK(shift(BasisPolynomial::power(2), Rational(1)) == mono({1, 2, 1}));
  CHECK(shift(BasisPolynomial::power(3), Rational(2)) == mono({8, 12, 6, 1}));
  const auto p = mono({4, -1, 7});
  CHECK(shift(p, Rational(0)) == p);
  CHECK_THROWS_AS(shift(convert_basis(p, Basis::binomial), Rational(1)),
                  std::invalid_argument);
  // shifts compose: p(x+a+b)
  CHECK(shift(shift(p, q(1, 2)), q(-3, 2)) == shift(p, Rational(-1)));
}

TEST_CASE("forward differences of monomials") {
  const StepSize unit{Rational(1)};
  CHECK(forward_difference(BasisPolynomial::power(2), unit, 1) == mono({1, 2}));
  CHECK(forward_difference(BasisPolynomial::power(2), unit, 2) == mono({2}));
  CHECK(forward_difference(BasisPolynomial::power(3), unit, 2) == mono({6, 6}));
  const auto p = mono({1, 0, -2, 5});
  CHECK(forward_difference(p, unit, 0) == p);
  CHECK_THROWS_AS(StepSize{Rational(0)}, std::invalid_argument);
}

TEST_CASE("difference operator in the factorial bases") {
  const StepSize unit{Rational(1)};
  for (unsigned m = 1; m <= 10; ++m) {
    std::vector<Rational> want(m, Rational(0));
    want[m - 1] = m;
    CHECK(forward_difference(
              BasisPolynomial::basis_element(Basis::falling_factorial, m), unit, 1) ==
          BasisPolynomial(Basis::falling_factorial, want));
    CHECK(forward_difference(BasisPolynomial::basis_element(Basis::binomial, m), unit,
                             1) == BasisPolynomial::basis_element(Basis::binomial, m - 1));
  }
}

TEST_CASE("differences of zero recover the subpowers") {
  const StepSize unit{Rational(1)};
  for (unsigned m = 0; m <= 10; ++m)
    for (unsigned n = 0; n <= 10; ++n)
      CHECK(evaluate(forward_difference(BasisPolynomial::power(m), unit, n),
                     Rational(0)) == Rational(subpower(n, m)));
}

TEST_CASE("closed monomial form of the n-th difference") {
  CHECK(euler_difference_monomial(3, 2, Rational(1)) == mono({6, 6}));
  CHECK(euler_difference_monomial(2, 3, Rational(1)).is_zero());
  CHECK(euler_difference_monomial(2, 1, Rational(2)) == mono({4, 4}));
  CHECK_THROWS_AS(euler_difference_monomial(3, 1, Rational(0)), std::invalid_argument);

  const Rational steps[] = {Rational(1), q(1, 2), Rational(-2), q(3, 7)};
  for (const Rational& h : steps)
    for (unsigned m = 0; m <= 8; ++m)
      for (unsigned n = 0; n <= 8; ++n)
        CHECK(euler_difference_monomial(m, n, h) ==
              forward_difference(BasisPolynomial::power(m), StepSize{h}, n));
}

TEST_CASE("evaluation in every basis") {
  CHECK(evaluate(BasisPolynomial(Basis::binomial, {q(0), q(1), q(6), q(6)}),
                 Rational(4)) == 64);
  CHECK(evaluate(BasisPolynomial(), q(9, 7)) == 0);
  CHECK(evaluate(mono({0, -1, 1}), q(3, 2)) == q(3, 4));
  // all bases agree as functions at rational points
  const BasisPolynomial p = mono({2, -3, 0, 5, 1});
  for (long num = -6; num <= 6; ++num) {
    const Rational x = q(num, 3);
    CHECK(evaluate(convert_basis(p, Basis::falling_factorial), x) == evaluate(p, x));
    CHECK(evaluate(convert_basis(p, Basis::binomial), x) == evaluate(p, x));
  }
}

TEST_CASE("alternating subpower expansion sums to one at x = 1") {
  for (unsigned m = 0; m <= 30; ++m) {
    Rational acc(0);
    for (unsigned n = 0; n <= m; ++n) {
      const Rational term = Rational(subpower(n, m)) *
                            falling_factorial(Rational(n), n) / Rational(factorial(n));
      if ((m - n) % 2)
        acc -= term;
      else
        acc += term;
    }
    CHECK(acc == 1);
  }
}
