#include <catch2/catch_amalgamated.hpp>

#include <subpower/analytic.hpp>
#include <subpower/core.hpp>

#include <cmath>
#include <complex>

using namespace subpowers;

namespace {

Rational q(long num, long den = 1) { return make_rational(Int(num), Int(den)); }

bool rel_close(double actual, double expected, double tol) {
  return std::abs(actual - expected) <= tol * std::max(1.0, std::abs(expected));
}

}  // namespace

TEST_CASE("complex-exponent subpowers at integer points") {
  CHECK(subpower_real(2, 3.0) == 6.0);
  CHECK(subpower_real(3, 0.0) == 1.0);
  CHECK(subpower_real(2, 0.0) == -1.0);
  CHECK(subpower_real(0, 2.5) == 0.0);  // empty sum
  for (double z : {0.0, 2.5, -1.3}) CHECK(subpower_real(1, z) == 1.0);
  CHECK(subpower_complex(1, {2.0, 3.0}) == std::complex<double>{1.0, 0.0});

  SECTION("matches the exact integers for n, m <= 15") {
    for (unsigned n = 1; n <= 15; ++n)
      for (unsigned m = 1; m <= 15; ++m)
        CHECK(rel_close(subpower_real(n, m), mpz_get_d(subpower(n, m).get_mpz_t()),
                        1e-9));
  }

  SECTION("values at exponent zero follow the analytic convention") {
    for (unsigned n = 0; n <= 20; ++n) {
      const double want = n == 0 ? 0.0 : (n % 2 ? 1.0 : -1.0);
      CHECK(std::abs(subpower_real(n, 0.0) - want) <= 1e-12);
    }
  }
}

TEST_CASE("the recurrence survives arbitrary exponents") {
  const std::complex<double> exponents[] = {{0.5, 0.0}, {-1.3, 0.0}, {2.0, 1.0}};
  for (const auto& z : exponents)
    for (unsigned n = 1; n <= 12; ++n) {
      const auto lhs = subpower_complex(n, z);
      const auto rhs = double(n) * (subpower_complex(n, z - 1.0) +
                                    subpower_complex(n - 1, z - 1.0));
      CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("negative-exponent subpowers are exact rationals") {
  CHECK(subpower_negative(3, 1) == q(11, 6));
  CHECK(subpower_negative(3, 2) == q(85, 36));
  CHECK(subpower_negative(3, 3) == q(575, 216));
  for (unsigned m = 1; m <= 6; ++m) CHECK(subpower_negative(1, m) == 1);
  CHECK_THROWS_AS(subpower_negative(3, 0), std::invalid_argument);

  SECTION("exponent -1 gives signed harmonic numbers") {
    for (unsigned n = 0; n <= 100; ++n) {
      const Rational sign = n % 2 ? Rational(1) : Rational(-1);
      CHECK(subpower_negative(n, 1) == Rational(sign * harmonic(n)));
    }
  }
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(1) == 1);
  CHECK(harmonic(4) == q(25, 12));
}

TEST_CASE("antiderivative coefficients of powers of the logarithm") {
  const auto c31 = harmonic_log_coefficients(3, 1);
  REQUIRE(c31.values.size() == 2);
  CHECK(c31.values[0] == 1);
  CHECK(c31.values[1] == q(11, 6));

  const auto c32 = harmonic_log_coefficients(3, 2);
  CHECK(c32.values == std::vector<Rational>{q(1), q(11, 6), q(85, 36)});

  const auto c11 = harmonic_log_coefficients(1, 1);
  CHECK(c11.values == std::vector<Rational>{q(1), q(1)});

  CHECK_THROWS_AS(harmonic_log_coefficients(0, 2), std::invalid_argument);

  SECTION("the linear coefficient is always the harmonic number") {
    for (unsigned n = 1; n <= 20; ++n)
      CHECK(harmonic_log_coefficients(n, 1).values[1] == harmonic(n));
  }
}

TEST_CASE("binomial-transform duality at arbitrary exponents") {
  for (const double z : {-2.0, -1.0, 0.5})
    for (unsigned n = 1; n <= 10; ++n) {
      double acc = 0;
      for (unsigned k = 1; k <= n; ++k)
        acc += mpz_get_d(binomial(n, k).get_mpz_t()) * subpower_real(k, z);
      CHECK(rel_close(acc, std::pow(double(n), z), 1e-8));
    }
  // negative integer exponents: the duality holds exactly over the rationals
  for (unsigned m = 1; m <= 2; ++m)
    for (unsigned n = 1; n <= 10; ++n) {
      Rational acc(0);
      for (unsigned k = 1; k <= n; ++k)
        acc += Rational(binomial(n, k)) * subpower_negative(k, m);
      CHECK(acc == make_rational(Int(1), pow_int(Int(n), m)));
    }
}

TEST_CASE("integral representation agrees with the exact values") {
  CHECK(std::abs(integral_check(1, 1, 1e-8) - 1.0) < 1e-7);
  CHECK(std::abs(integral_check(2, 1, 1e-8) - (-1.5)) < 1e-7);
  CHECK(std::abs(integral_check(3, 2, 1e-8) - 85.0 / 36.0) < 1e-7);
  // full accuracy contract: |result - exact| < tol for n <= 8, m <= 5
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned m = 1; m <= 5; ++m)
      CHECK(std::abs(integral_check(n, m, 1e-8) - to_double(subpower_negative(n, m))) <
            1e-8);
  CHECK_THROWS_AS(integral_check(0, 1, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(integral_check(1, 0, 1e-8), std::invalid_argument);
}

TEST_CASE("curve sampling") {
  SECTION("base 1 is constantly one") {
    const auto samples = curve_samples(1, 0.0, 2.0, 0.5);
    REQUIRE(samples.size() == 5);
    for (const auto& s : samples) CHECK(s.value == 1.0);
  }
  SECTION("single-point grids") {
    const auto samples = curve_samples(2, 3.0, 3.0, 1.0);
    REQUIRE(samples.size() == 2);
    CHECK(samples[1].n == 2);
    CHECK(samples[1].value == 6.0);
  }
  SECTION("diagonal anchor") {
    const auto samples = curve_samples(5, 5.0, 5.0, 1.0);
    REQUIRE(samples.size() == 5);
    CHECK(samples[4].value == 120.0);
  }
  SECTION("grid size and ordering") {
    const auto samples = curve_samples(5, 0.0, 5.0, 0.1);
    REQUIRE(samples.size() == 51 * 5);
    CHECK(samples[0].n == 1);
    CHECK(samples[4].n == 5);
    CHECK(samples[5].z == Catch::Approx(0.1));
  }
  SECTION("integer anchors match the exact values for n <= 15") {
    for (const auto& s : curve_samples(15, 0.0, 15.0, 1.0)) {
      const auto m = static_cast<unsigned>(s.z + 0.5);
      const double want = m == 0 ? (s.n % 2 ? 1.0 : -1.0)
                                 : mpz_get_d(subpower(s.n, m).get_mpz_t());
      CHECK(rel_close(s.value, want, 1e-9));
    }
  }
  SECTION("input validation") {
    CHECK_THROWS_AS(curve_samples(3, 2.0, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(curve_samples(3, 0.0, 1.0, 0.0), std::invalid_argument);
  }
}
