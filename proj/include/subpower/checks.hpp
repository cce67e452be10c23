#pragma once

#include <subpower/analytic.hpp>
#include <subpower/core.hpp>
#include <subpower/families.hpp>
#include <subpower/finitediff.hpp>
#include <subpower/oeis.hpp>
#include <subpower/oracles.hpp>
#include <subpower/transforms.hpp>

#include <cmath>
#include <complex>
#include <filesystem>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

// Runnable verification suites behind the `check` command: every identity
// the library claims, checked at its default bounds.
namespace subpowers::checks {

struct CheckFailure {
  std::string check;
  std::string params;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::size_t checks_run = 0;
  std::vector<CheckFailure> failures;
  std::vector<std::string> notes;  // documented deviations; reported, never failures

  bool passed() const { return failures.empty(); }

  void merge(const SuiteResult& other) {
    checks_run += other.checks_run;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

struct SuiteOptions {
  std::optional<double> tol;        // overrides floating-point tolerances
  std::filesystem::path data_dir;   // bundled OEIS snapshots (oeis suite only)
};

namespace detail {

class Checker {
 public:
  explicit Checker(SuiteResult& result) : result_(result) {}

  void require(bool ok, const std::string& check, const std::string& params,
               const std::string& detail_on_fail) {
    ++result_.checks_run;
    if (!ok) result_.failures.push_back({check, params, detail_on_fail});
  }

  void require_exact(const Rational& residual, const std::string& check,
                     const std::string& params) {
    require(residual == 0, check, params, "residual " + to_string(residual));
  }

  template <class T>
  void require_eq(const T& actual, const T& expected, const std::string& check,
                  const std::string& params) {
    std::ostringstream detail;
    if (!(actual == expected)) detail << "got " << actual << ", want " << expected;
    require(actual == expected, check, params, detail.str());
  }

 private:
  SuiteResult& result_;
};

inline std::string fmt(std::initializer_list<std::pair<const char*, long long>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) os << " ";
    os << k << "=" << v;
    first = false;
  }
  return os.str();
}

inline bool rel_close(double actual, double expected, double tol) {
  const double scale = std::max(1.0, std::abs(expected));
  return std::abs(actual - expected) <= tol * scale;
}

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-999, 999);
  std::uniform_int_distribution<int> den(1, 60);
  return make_rational(Int(num(rng)), Int(den(rng)));
}

}  // namespace detail

inline SuiteResult run_core_suite(const SuiteOptions& = {}) {
  SuiteResult result{.suite = "core"};
  detail::Checker ck(result);

  // the three subpower algorithms agree pairwise
  for (unsigned m = 0; m <= 12; ++m)
    for (unsigned n = 0; n <= m; ++n) {
      const Int s = subpower(n, m, SubpowerMethod::sum);
      const Int r = subpower(n, m, SubpowerMethod::recurrence);
      const Int t = subpower(n, m, SubpowerMethod::stirling);
      ck.require(s == r && r == t, "subpower_method_agreement",
                 detail::fmt({{"n", n}, {"m", m}}),
                 "sum=" + to_string(s) + " recurrence=" + to_string(r) +
                     " stirling=" + to_string(t));
    }

  // binomial expansion over subpowers:
  // (a+b)^{m} = sum_k C(m,k) a^{k} b^{m-k}
  for (unsigned a = 0; a <= 6; ++a)
    for (unsigned b = 0; b <= 6; ++b)
      for (unsigned m = 0; m <= 12; ++m) {
        Int rhs(0);
        for (unsigned k = 0; k <= m; ++k)
          rhs += binomial(m, k) * subpower(a, k) * subpower(b, m - k);
        ck.require_eq(subpower(a + b, m), rhs, "subpower_binomial_expansion",
                      detail::fmt({{"a", a}, {"b", b}, {"m", m}}));
      }

  // every power is a binomial combination of subpowers
  for (unsigned n = 0; n <= 10; ++n)
    for (unsigned m = 0; m <= 10; ++m) {
      Int rhs(0);
      for (unsigned k = 0; k <= n; ++k) rhs += binomial(n, k) * subpower(k, m);
      const Int lhs = m == 0 ? Int(1) : pow_int(Int(n), m);
      ck.require_eq(lhs, rhs, "power_from_subpowers",
                    detail::fmt({{"n", n}, {"m", m}}));
    }

  // every factorial is a binomial combination of subfactorials
  for (unsigned n = 0; n <= 12; ++n) {
    Int rhs(0);
    for (unsigned k = 0; k <= n; ++k) rhs += binomial(n, k) * subfactorial(k);
    ck.require_eq(factorial(n), rhs, "factorial_from_subfactorials",
                  detail::fmt({{"n", n}}));
  }

  // closed-form diagonals against the recurrence
  for (unsigned n = 0; n <= 30; ++n)
    for (unsigned offset = 0; offset <= 2; ++offset)
      ck.require_eq(subpower_diagonal(n, offset),
                    subpower(n, n + offset, SubpowerMethod::recurrence),
                    "diagonal_closed_form",
                    detail::fmt({{"n", n}, {"offset", offset}}));

  // exhaustive surjection counting
  for (unsigned m = 0; m <= 7; ++m)
    for (unsigned n = 0; n <= 7; ++n)
      ck.require_eq(subpower(n, m, SubpowerMethod::sum),
                    oracle::count_surjections_exhaustive(n, m),
                    "surjection_enumeration", detail::fmt({{"n", n}, {"m", m}}));

  // transform round trips on random exact sequences
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> value(-1000000, 1000000);
  std::uniform_int_distribution<std::size_t> length(1, 64);
  for (unsigned trial = 0; trial < 60; ++trial) {
    IntSequence a;
    a.values.resize(length(rng));
    for (auto& v : a.values) v = value(rng);
    ck.require(inverse_binomial_transform(binomial_transform(a)) == a &&
                   binomial_transform(inverse_binomial_transform(a)) == a,
               "binomial_transform_round_trip",
               detail::fmt({{"trial", trial}, {"length", (long long)a.values.size()}}),
               "round trip is not the identity");
  }
  for (unsigned trial = 0; trial < 30; ++trial) {
    RationalSequence a;
    a.values.resize(length(rng));
    for (auto& v : a.values) v = detail::random_rational(rng);
    ck.require(inverse_binomial_transform(binomial_transform(a)) == a &&
                   binomial_transform(inverse_binomial_transform(a)) == a,
               "binomial_transform_round_trip_rational",
               detail::fmt({{"trial", trial}, {"length", (long long)a.values.size()}}),
               "round trip is not the identity");
  }

  // subpower columns are the inverse binomial transform of power columns
  for (unsigned m = 0; m <= 10; ++m) {
    IntSequence powers;
    for (unsigned n = 0; n <= 12; ++n)
      powers.values.push_back(m == 0 ? Int(1) : pow_int(Int(n), m));
    const IntSequence sub = inverse_binomial_transform(powers);
    for (unsigned n = 0; n <= 12; ++n)
      ck.require_eq(sub.values[n], subpower(n, m), "subpower_column_inversion",
                    detail::fmt({{"n", n}, {"m", m}}));
  }

  // subfactorials are the inverse binomial transform of factorials
  {
    IntSequence facts;
    for (unsigned n = 0; n <= 12; ++n) facts.values.push_back(factorial(n));
    const IntSequence subs = inverse_binomial_transform(facts);
    for (unsigned n = 0; n <= 12; ++n)
      ck.require_eq(subs.values[n], subfactorial(n), "subfactorial_inversion",
                    detail::fmt({{"n", n}}));
  }

  return result;
}

inline SuiteResult run_finitediff_suite(const SuiteOptions& = {}) {
  SuiteResult result{.suite = "finitediff"};
  detail::Checker ck(result);
  const StepSize unit{Rational(1)};

  // basis conversion round trips on random rational polynomials
  std::mt19937 rng(0xd1ff);
  std::uniform_int_distribution<int> deg(0, 10);
  for (unsigned trial = 0; trial < 40; ++trial) {
    std::vector<Rational> coeffs(deg(rng) + 1);
    for (auto& c : coeffs) c = detail::random_rational(rng);
    const BasisPolynomial p(Basis::monomial, coeffs);
    const bool falling_ok =
        convert_basis(convert_basis(p, Basis::falling_factorial), Basis::monomial) == p;
    const bool binomial_ok =
        convert_basis(convert_basis(p, Basis::binomial), Basis::monomial) == p;
    ck.require(falling_ok && binomial_ok, "basis_round_trip",
               detail::fmt({{"trial", trial}, {"degree", p.degree()}}),
               "conversion round trip changed the polynomial");
  }

  // difference operator lowers falling powers: delta x^(falling m) = m x^(falling m-1)
  for (unsigned m = 1; m <= 10; ++m) {
    const auto lhs =
        forward_difference(BasisPolynomial::basis_element(Basis::falling_factorial, m),
                           unit, 1);
    std::vector<Rational> want(m, Rational(0));
    want[m - 1] = m;
    ck.require(lhs == BasisPolynomial(Basis::falling_factorial, want),
               "difference_lowers_falling_power", detail::fmt({{"m", m}}),
               "delta of the falling power has the wrong coefficients");
  }

  // normalized form: delta C(x,m) = C(x,m-1)
  for (unsigned m = 1; m <= 10; ++m) {
    const auto lhs = forward_difference(
        BasisPolynomial::basis_element(Basis::binomial, m), unit, 1);
    ck.require(lhs == BasisPolynomial::basis_element(Basis::binomial, m - 1),
               "difference_lowers_binomial_element", detail::fmt({{"m", m}}),
               "delta of C(x,m) is not C(x,m-1)");
  }

  // differences of zero are the subpowers
  for (unsigned m = 0; m <= 10; ++m)
    for (unsigned n = 0; n <= 10; ++n)
      ck.require_eq(evaluate(forward_difference(BasisPolynomial::power(m), unit, n),
                             Rational(0)),
                    Rational(subpower(n, m)), "differences_of_zero",
                    detail::fmt({{"m", m}, {"n", n}}));

  // closed monomial form of the n-th difference equals the iterated operator
  const Rational steps[] = {Rational(1), make_rational(Int(1), Int(2)), Rational(-2),
                            make_rational(Int(3), Int(7))};
  for (const Rational& h : steps)
    for (unsigned m = 0; m <= 8; ++m)
      for (unsigned n = 0; n <= 8; ++n)
        ck.require(euler_difference_monomial(m, n, h) ==
                       forward_difference(BasisPolynomial::power(m), StepSize{h}, n),
                   "difference_closed_form",
                   detail::fmt({{"m", m}, {"n", n}}) + " h=" + to_string(h),
                   "closed form and iterated differences disagree");

  // alternating form of the subpower expansion evaluates to 1 at x = 1
  for (unsigned m = 0; m <= 30; ++m) {
    Rational acc(0);
    for (unsigned n = 0; n <= m; ++n) {
      // C(x+n-1, n) at x = 1 via the falling-factorial kernel
      Rational term = Rational(subpower(n, m)) *
                      falling_factorial(Rational(n), n) / Rational(factorial(n));
      if ((m - n) % 2)
        acc -= term;
      else
        acc += term;
    }
    ck.require_exact(acc - 1, "alternating_row_sum_at_one", detail::fmt({{"m", m}}));
  }

  // shifted samples of x^m are the binomial transform of its differences
  const Rational points[] = {Rational(0), Rational(2), make_rational(Int(-1), Int(2))};
  const Rational hs[] = {Rational(1), make_rational(Int(1), Int(3)), Rational(-2)};
  for (const Rational& x0 : points)
    for (const Rational& h : hs)
      for (unsigned m = 0; m <= 6; ++m) {
        const BasisPolynomial p = BasisPolynomial::power(m);
        RationalSequence samples;
        for (unsigned n = 0; n <= 8; ++n)
          samples.values.push_back(evaluate(p, x0 + Rational(n) * h));
        const RationalSequence diffs = inverse_binomial_transform(samples);
        bool ok = true;
        for (unsigned n = 0; n <= 8 && ok; ++n)
          ok = diffs.values[n] == evaluate(forward_difference(p, StepSize{h}, n), x0);
        ck.require(ok, "difference_transform_duality",
                   detail::fmt({{"m", m}}) + " x0=" + to_string(x0) +
                       " h=" + to_string(h),
                   "inverse transform of shifted samples is not the differences");
      }

  return result;
}

inline SuiteResult run_families_suite(const SuiteOptions& opts = {}) {
  SuiteResult result{.suite = "families"};
  detail::Checker ck(result);

  // the two Bernoulli routes agree, and odd values vanish
  {
    const BernoulliCache rec = bernoulli(40, BernoulliMethod::recurrence);
    const BernoulliCache exp = bernoulli(40, BernoulliMethod::explicit_form);
    for (unsigned m = 0; m <= 40; ++m)
      ck.require_eq(rec.values[m], exp.values[m], "bernoulli_method_agreement",
                    detail::fmt({{"m", m}}));
    for (unsigned m = 3; m <= 39; m += 2)
      ck.require_exact(rec.values[m], "bernoulli_odd_vanishing",
                       detail::fmt({{"m", m}}));
  }

  // power sums: direct, binomial and Bernoulli routes agree
  for (unsigned m = 0; m <= 10; ++m)
    for (unsigned n = 0; n <= 50; ++n) {
      const Int d = sum_powers(m, n, PowerSumMethod::direct);
      const Int b = sum_powers(m, n, PowerSumMethod::binomial);
      const Int e = sum_powers(m, n, PowerSumMethod::bernoulli);
      ck.require(d == b && b == e, "power_sum_method_agreement",
                 detail::fmt({{"m", m}, {"n", n}}),
                 "direct=" + to_string(d) + " binomial=" + to_string(b) +
                     " bernoulli=" + to_string(e));
    }

  // the power-sum polynomial interpolates the sums
  for (unsigned m = 0; m <= 10; ++m) {
    const BasisPolynomial p = faulhaber_polynomial(m);
    for (unsigned n = 0; n <= 30; ++n)
      ck.require_eq(evaluate(p, Rational(n)),
                    Rational(sum_powers(m, n, PowerSumMethod::direct)),
                    "faulhaber_interpolation", detail::fmt({{"m", m}, {"n", n}}));
  }

  // Fubini: row sums match the recurrence, and the series form converges
  for (unsigned m = 0; m <= 25; ++m)
    ck.require_eq(fubini(m, FubiniMethod::rowsum), fubini(m, FubiniMethod::recurrence),
                  "fubini_method_agreement", detail::fmt({{"m", m}}));
  {
    const Rational tol = opts.tol
                             ? make_rational(Int(*opts.tol * 1e18), pow_int(Int(10), 18))
                             : make_rational(Int(1), pow_int(Int(10), 9));
    for (unsigned m = 0; m <= 10; ++m) {
      const Rational series = fubini_series(m, tol);
      const Rational exact(fubini(m));
      ck.require(abs(series - exact) < tol, "fubini_series_tolerance",
                 detail::fmt({{"m", m}}),
                 "series value " + to_string(series) + " vs " + to_string(exact));
    }
  }

  // Worpitzky numbers: quotient form, sum form, differences of one
  for (unsigned m = 0; m <= 20; ++m)
    for (unsigned n = 0; n <= 20; ++n)
      ck.require_eq(worpitzky(m, n), Int(subpower(n, m) + subpower(n + 1, m)),
                    "worpitzky_sum_form", detail::fmt({{"m", m}, {"n", n}}));
  for (unsigned m = 0; m <= 10; ++m)
    for (unsigned n = 0; n <= 10; ++n)
      ck.require_eq(Rational(worpitzky(m, n)),
                    evaluate(forward_difference(BasisPolynomial::power(m),
                                                StepSize{Rational(1)}, n),
                             Rational(1)),
                    "worpitzky_differences_of_one", detail::fmt({{"m", m}, {"n", n}}));

  // identity residuals
  for (unsigned m = 0; m <= 30; ++m)
    ck.require_exact(check_identity(IdentityCheck::alt_row_sum, m),
                     "identity_alt_row_sum", detail::fmt({{"m", m}}));
  for (unsigned m = 0; m <= 30; ++m)
    ck.require_exact(check_identity(IdentityCheck::weighted_row_delta, m),
                     "identity_weighted_row_delta", detail::fmt({{"m", m}}));
  const Rational xs[] = {Rational(0), Rational(1), Rational(2), Rational(-1),
                         make_rational(Int(5), Int(2))};
  for (const Rational& x : xs)
    for (unsigned m = 0; m <= 10; ++m)
      ck.require_exact(check_identity(IdentityCheck::worpitzky_expansion_at, m, x),
                       "identity_worpitzky_expansion",
                       detail::fmt({{"m", m}}) + " x=" + to_string(x));

  // Fermat-style equation: solutions exist only at m = 2, 5 and 7
  {
    const SubpowerTable table(40);
    for (unsigned m = 1; m <= 40; ++m) {
      const auto sols = fermat_search(m, table);
      const bool expect_some = m == 2 || m == 5 || m == 7;
      ck.require(sols.empty() != expect_some, "fermat_solution_set",
                 detail::fmt({{"m", m}}),
                 "found " + std::to_string(sols.size()) + " solutions");
    }
  }

  return result;
}

inline SuiteResult run_analytic_suite(const SuiteOptions& opts = {}) {
  SuiteResult result{.suite = "analytic"};
  detail::Checker ck(result);
  const auto tol = [&](double fallback) { return opts.tol.value_or(fallback); };

  // real-exponent values match the exact integers
  for (unsigned n = 1; n <= 15; ++n)
    for (unsigned m = 1; m <= 15; ++m) {
      const double approx = subpower_real(n, m);
      const double exact = mpz_get_d(subpower(n, m).get_mpz_t());
      ck.require(detail::rel_close(approx, exact, tol(1e-9)),
                 "complex_integer_consistency", detail::fmt({{"n", n}, {"m", m}}),
                 "got " + std::to_string(approx) + ", want " + std::to_string(exact));
    }

  // values at exponent 0 follow the analytic convention
  for (unsigned n = 0; n <= 20; ++n) {
    const double want = n == 0 ? 0.0 : (n % 2 ? 1.0 : -1.0);
    const double got = subpower_real(n, 0.0);
    ck.require(std::abs(got - want) <= tol(1e-12), "complex_value_at_zero",
               detail::fmt({{"n", n}}),
               "got " + std::to_string(got) + ", want " + std::to_string(want));
  }

  // the subpower recurrence survives the analytic extension
  const std::complex<double> exponents[] = {{0.5, 0.0}, {-1.3, 0.0}, {2.0, 1.0}};
  for (const auto& z : exponents)
    for (unsigned n = 1; n <= 12; ++n) {
      const std::complex<double> lhs = subpower_complex(n, z);
      const std::complex<double> rhs =
          double(n) * (subpower_complex(n, z - 1.0) + subpower_complex(n - 1, z - 1.0));
      const double scale = std::max(1.0, std::abs(rhs));
      ck.require(std::abs(lhs - rhs) <= tol(1e-8) * scale, "complex_recurrence",
                 detail::fmt({{"n", n}}) + " z=(" + std::to_string(z.real()) + "," +
                     std::to_string(z.imag()) + ")",
                 "recurrence residual " + std::to_string(std::abs(lhs - rhs)));
    }

  // harmonic numbers are the exponent -1 values, exactly
  for (unsigned n = 0; n <= 100; ++n) {
    const Rational sign = n % 2 ? Rational(1) : Rational(-1);
    ck.require_eq(subpower_negative(n, 1), Rational(sign * harmonic(n)),
                  "harmonic_is_negative_exponent", detail::fmt({{"n", n}}));
  }

  // binomial-transform duality at real and negative-integer exponents
  for (const double z : {-2.0, -1.0, 0.5})
    for (unsigned n = 1; n <= 10; ++n) {
      double acc = 0;
      for (unsigned k = 1; k <= n; ++k)
        acc += mpz_get_d(binomial(n, k).get_mpz_t()) * subpower_real(k, z);
      const double want = std::pow(double(n), z);
      ck.require(detail::rel_close(acc, want, tol(1e-8)),
                 "binomial_duality_float", detail::fmt({{"n", n}}) + " z=" +
                     std::to_string(z),
                 "got " + std::to_string(acc) + ", want " + std::to_string(want));
    }
  for (unsigned m = 1; m <= 2; ++m)
    for (unsigned n = 1; n <= 10; ++n) {
      Rational acc(0);
      for (unsigned k = 1; k <= n; ++k)
        acc += Rational(binomial(n, k)) * subpower_negative(k, m);
      ck.require_eq(acc, make_rational(Int(1), pow_int(Int(n), m)),
                    "binomial_duality_exact", detail::fmt({{"n", n}, {"m", m}}));
    }

  // quadrature representation agrees with the exact rationals
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned m = 1; m <= 4; ++m) {
      const double got = integral_check(n, m, 1e-8);
      const double want = to_double(subpower_negative(n, m));
      ck.require(std::abs(got - want) < tol(1e-7), "integral_representation",
                 detail::fmt({{"n", n}, {"m", m}}),
                 "got " + std::to_string(got) + ", want " + std::to_string(want));
    }

  // curve samples hit the exact anchors at integer exponents
  for (const auto& sample : curve_samples(15, 0.0, 15.0, 1.0)) {
    const unsigned m = static_cast<unsigned>(sample.z + 0.5);
    const double want = m == 0 ? (sample.n % 2 ? 1.0 : -1.0)
                               : mpz_get_d(subpower(sample.n, m).get_mpz_t());
    ck.require(detail::rel_close(sample.value, want, tol(1e-9)),
               "curve_anchor_values", detail::fmt({{"n", sample.n}, {"m", m}}),
               "got " + std::to_string(sample.value) + ", want " + std::to_string(want));
  }

  // documented deviation: the worked third-order coefficient
  {
    const Rational c33 = harmonic_log_coefficients(3, 3).values[3];
    ck.require_eq(c33, make_rational(Int(575), Int(216)),
                  "harmonic_log_third_coefficient", "n=3 m=3");
    result.notes.push_back(
        "c_3^(3) = " + to_string(c33) +
        " by direct evaluation; the published table prints 576/216 (suspected "
        "misprint); documented deviation, not a failure");
  }

  return result;
}

inline SuiteResult run_oeis_suite(const SuiteOptions& opts = {}) {
  SuiteResult result{.suite = "oeis"};
  detail::Checker ck(result);
  if (opts.data_dir.empty())
    throw oeis::IoError("oeis suite: no snapshot directory configured");

  // flattened-triangle length is triangular
  for (unsigned max_m : {0u, 1u, 5u, 12u})
    ck.require_eq((long long)oeis::flatten_triangle(SubpowerTable(max_m)).values.size(),
                  (long long)(max_m + 1) * (max_m + 2) / 2, "flatten_length",
                  detail::fmt({{"max_m", max_m}}));

  const oeis::FetchOptions fetch{.snapshot_dirs = {opts.data_dir}};

  {
    const auto record =
        oeis::parse_bfile(oeis::fetch_bfile("A131689", fetch), "A131689");
    const auto report = oeis::compare(oeis::flatten_triangle(SubpowerTable(12)), record);
    ck.require(report.clean() && report.compared == 91, "triangle_vs_A131689",
               detail::fmt({{"max_m", 12}}),
               report.first_mismatch
                   ? "first mismatch at index " +
                         std::to_string(report.first_mismatch->index)
                   : "compared " + std::to_string(report.compared));
  }
  {
    const auto record =
        oeis::parse_bfile(oeis::fetch_bfile("A000670", fetch), "A000670");
    IntSequence fub;
    for (unsigned m = 0; m <= 25; ++m) fub.values.push_back(fubini(m));
    const auto report = oeis::compare(fub, record);
    ck.require(report.clean() && report.compared >= 13, "fubini_vs_A000670",
               detail::fmt({{"terms", 26}}),
               report.first_mismatch
                   ? "first mismatch at index " +
                         std::to_string(report.first_mismatch->index)
                   : "compared " + std::to_string(report.compared));
  }

  return result;
}

inline SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {}) {
  if (name == "core") return run_core_suite(opts);
  if (name == "finitediff") return run_finitediff_suite(opts);
  if (name == "families") return run_families_suite(opts);
  if (name == "analytic") return run_analytic_suite(opts);
  if (name == "oeis") return run_oeis_suite(opts);
  if (name == "all") {
    SuiteResult total{.suite = "all"};
    for (const char* sub : {"core", "finitediff", "families", "analytic", "oeis"})
      total.merge(run_suite(sub, opts));
    return total;
  }
  throw std::invalid_argument("unknown suite \"" + name + "\"");
}

}  // namespace subpowers::checks
