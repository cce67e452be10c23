#pragma once

#include <subpower/core.hpp>
#include <subpower/finitediff.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace subpowers {

enum class BernoulliMethod { recurrence, explicit_form };

// B_0..B_upto with the B_1 = +1/2 sign convention. The other common
// convention (B_1 = -1/2) breaks the power-sum formula used throughout
// this library, so it is deliberately not offered.
struct BernoulliCache {
  std::vector<Rational> values;

  const Rational& at(unsigned k) const { return values.at(k); }
  unsigned upto() const { return static_cast<unsigned>(values.size()) - 1; }
};

inline BernoulliCache bernoulli(unsigned upto,
                                BernoulliMethod method = BernoulliMethod::recurrence) {
  BernoulliCache cache;
  cache.values.reserve(upto + 1);
  if (method == BernoulliMethod::recurrence) {
    // solve sum_{k=0}^{m} C(m+1,k) B_k = m+1 stepwise for B_m
    for (unsigned m = 0; m <= upto; ++m) {
      Rational rhs(m + 1);
      for (unsigned k = 0; k < m; ++k)
        rhs -= Rational(binomial(m + 1, k)) * cache.values[k];
      cache.values.push_back(rhs / Rational(m + 1));
    }
  } else {
    // B_m = sum_{n=0}^{m} (-1)^{m-n} n^{m} / (n+1)
    const SubpowerTable table(upto);
    for (unsigned m = 0; m <= upto; ++m) {
      Rational acc(0);
      for (unsigned n = 0; n <= m; ++n) {
        Rational term = make_rational(table.entry(m, n), Int(n + 1));
        if ((m - n) % 2)
          acc -= term;
        else
          acc += term;
      }
      cache.values.push_back(acc);
    }
  }
  return cache;
}

enum class PowerSumMethod { direct, binomial, bernoulli };

// S_m(n) = 1^m + 2^m + ... + n^m
inline Int sum_powers(unsigned m, unsigned n, PowerSumMethod method) {
  switch (method) {
    case PowerSumMethod::direct: {
      Int acc(0);
      for (unsigned k = 1; k <= n; ++k) acc += pow_int(Int(k), m);
      return acc;
    }
    case PowerSumMethod::binomial: {
      // sum_{p} p^{m} C(n+1, p+1); the hockey-stick sum over k = 0..n picks
      // up one spurious k = 0 term exactly when m = 0
      Int acc(0);
      for (unsigned p = 0; p <= m; ++p)
        acc += subpower(p, m) * binomial(n + 1, p + 1);
      if (m == 0) acc -= 1;
      return acc;
    }
    case PowerSumMethod::bernoulli: {
      const BernoulliCache b = bernoulli(m);
      Rational acc(0);
      for (unsigned k = 0; k <= m; ++k)
        acc += Rational(binomial(m + 1, k)) * b.values[k] *
               Rational(pow_int(Int(n), m + 1 - k));
      acc /= Rational(m + 1);
      if (acc.get_den() != 1)
        throw std::logic_error("sum_powers: Bernoulli form gave a non-integer");
      return acc.get_num();
    }
  }
  throw std::invalid_argument("sum_powers: unknown method");
}

// the monomial polynomial P with P(n) = S_m(n); coefficient of n^{m+1-k} is
// C(m+1,k) B_k / (m+1)
inline BasisPolynomial faulhaber_polynomial(unsigned m) {
  const BernoulliCache b = bernoulli(m);
  std::vector<Rational> coeffs(m + 2, Rational(0));
  for (unsigned k = 0; k <= m; ++k)
    coeffs[m + 1 - k] = Rational(binomial(m + 1, k)) * b.values[k] / Rational(m + 1);
  return BasisPolynomial(Basis::monomial, std::move(coeffs));
}

enum class FubiniMethod { rowsum, recurrence };

// F(m): row sums of the subpower triangle / ordered set partitions
inline Int fubini(unsigned m, FubiniMethod method = FubiniMethod::rowsum) {
  if (method == FubiniMethod::rowsum) {
    const SubpowerTable table(m);
    Int acc(0);
    for (const Int& v : table.row(m)) acc += v;
    return acc;
  }
  // F(m+1) = sum_{k=0}^{m} C(m+1,k) F(k), F(0) = 1
  std::vector<Int> f{Int(1)};
  for (unsigned i = 1; i <= m; ++i) {
    Int acc(0);
    for (unsigned k = 0; k < i; ++k) acc += binomial(i, k) * f[k];
    f.push_back(acc);
  }
  return f[m];
}

// partial sum of (1/2) sum_{n>=0} n^m / 2^n, truncated under a certified
// geometric tail bound; the result is within tol of F(m). All arithmetic
// and the stopping comparison are exact rational.
inline Rational fubini_series(unsigned m, const Rational& tol) {
  if (tol <= 0) throw std::invalid_argument("fubini_series: tol must be positive");
  // beyond `start` the term ratio (1+1/n)^m / 2 is certifiably <= 3/4, so the
  // tail after term n is at most 4 * a_{n+1}
  unsigned start = std::max(4 * m, 32u);
  while (2 * pow_int(Int(start + 1), m) > 3 * pow_int(Int(start), m)) ++start;

  Rational sum(0);
  Int pow2(1);  // 2^n
  for (unsigned n = 0;; ++n) {
    sum += make_rational(pow_int(Int(n), m), pow2);
    pow2 *= 2;
    const Rational next = make_rational(pow_int(Int(n + 1), m), pow2);
    if (n + 1 >= start && 2 * next < tol) break;
  }
  return sum / 2;
}

// exact value of sum_{n>=1} n^m x^n for x in (0,1), via the closed form
// (1/(1-x)) sum_{k=1}^{m} k^{m} (x/(1-x))^k. The series is taken from
// n = 1 (0^z = 0 convention), so the m = 0 case is the geometric series.
inline Rational power_series_value(unsigned m, const Rational& x) {
  if (x <= 0 || x >= 1)
    throw std::invalid_argument("power_series_value: x must lie in (0,1)");
  const Rational one_minus = Rational(1) - x;
  if (m == 0) return x / one_minus;
  const Rational r = x / one_minus;
  Rational acc(0);
  Rational rk(1);
  for (unsigned k = 1; k <= m; ++k) {
    rk *= r;
    acc += Rational(subpower(k, m)) * rk;
  }
  return acc / one_minus;
}

// W_{m,n} = (n+1)^{m+1} / (n+1), the "differences of one"; also equals
// n^{m} + (n+1)^{m}
inline Int worpitzky(unsigned m, unsigned n) {
  return exact_div(subpower(n + 1, m + 1), Int(n + 1), "worpitzky");
}

enum class IdentityCheck { alt_row_sum, worpitzky_expansion_at, weighted_row_delta };

// left-minus-right residual of a named identity; exact 0 on success
inline Rational check_identity(IdentityCheck name, unsigned m,
                               const std::optional<Rational>& x = std::nullopt) {
  switch (name) {
    case IdentityCheck::alt_row_sum: {
      // sum_{n=0}^{m} (-1)^{m-n} n^{m} = 1
      Int acc(0);
      for (unsigned n = 0; n <= m; ++n) {
        Int term = subpower(n, m);
        if ((m - n) % 2)
          acc -= term;
        else
          acc += term;
      }
      return Rational(Int(acc - 1));
    }
    case IdentityCheck::worpitzky_expansion_at: {
      // x^m = sum_{n=0}^{m} (-1)^{m-n} W_{m,n} C(x+n, n)
      if (!x)
        throw std::invalid_argument(
            "check_identity: worpitzky_expansion_at needs an evaluation point");
      Rational rhs(0);
      for (unsigned n = 0; n <= m; ++n) {
        Rational term = Rational(worpitzky(m, n)) *
                        falling_factorial(*x + Rational(n), n) /
                        Rational(factorial(n));
        if ((m - n) % 2)
          rhs -= term;
        else
          rhs += term;
      }
      return pow_rational(*x, m) - rhs;
    }
    case IdentityCheck::weighted_row_delta: {
      // sum_{n=1}^{m} (-1)^{n+1} n^{m} / n = [m == 1]
      Rational acc(0);
      for (unsigned n = 1; n <= m; ++n) {
        Rational term = make_rational(subpower(n, m), Int(n));
        if (n % 2)
          acc += term;
        else
          acc -= term;
      }
      return acc - Rational(m == 1 ? 1 : 0);
    }
  }
  throw std::invalid_argument("check_identity: unknown identity");
}

// solution of x^{m} + y^{m} = z^{m} with x, y, z in 1..m
struct FermatSolution {
  unsigned m = 0;
  unsigned x = 0, y = 0, z = 0;

  friend bool operator==(const FermatSolution&, const FermatSolution&) = default;
};

// exhaustive search in lexicographic (x, y, z) order; table must cover row m
inline std::vector<FermatSolution> fermat_search(unsigned m, const SubpowerTable& table) {
  if (m < 1) throw std::invalid_argument("fermat_search: m must be >= 1");
  std::vector<FermatSolution> found;
  for (unsigned x = 1; x <= m; ++x)
    for (unsigned y = 1; y <= m; ++y) {
      const Int lhs = table.entry(m, x) + table.entry(m, y);
      for (unsigned z = 1; z <= m; ++z)
        if (lhs == table.entry(m, z)) found.push_back({m, x, y, z});
    }
  return found;
}

inline std::vector<FermatSolution> fermat_search(unsigned m) {
  if (m < 1) throw std::invalid_argument("fermat_search: m must be >= 1");
  return fermat_search(m, SubpowerTable(m));
}

}  // namespace subpowers
