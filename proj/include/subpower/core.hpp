#pragma once

#include <subpower/numeric.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace subpowers {

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);  // 0 when k > n
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Triangle of the subpower numbers n^{m} (surjection counts) for
// 0 <= n <= m <= max_m, filled row by row with the recurrence
//   n^{m} = n * (n^{m-1} + (n-1)^{m-1})
// from the seeds 0^{0} = 1 and 0^{m} = n^{0} = 0 for m, n >= 1.
// Immutable after construction; entries for n > m are zero and not stored.
class SubpowerTable {
 public:
  explicit SubpowerTable(unsigned max_m) : rows_(max_m + 1) {
    rows_[0] = {Int(1)};
    for (unsigned m = 1; m <= max_m; ++m) {
      auto& row = rows_[m];
      const auto& prev = rows_[m - 1];
      row.resize(m + 1);
      row[0] = 0;
      for (unsigned n = 1; n <= m; ++n) {
        const Int& above = n < prev.size() ? prev[n] : zero();
        row[n] = n * (above + prev[n - 1]);
      }
    }
  }

  unsigned max_m() const { return static_cast<unsigned>(rows_.size()) - 1; }

  // n^{m}; zero for n > m
  const Int& entry(unsigned m, unsigned n) const {
    const auto& row = rows_.at(m);
    return n < row.size() ? row[n] : zero();
  }

  // entries n = 0..m of row m
  const std::vector<Int>& row(unsigned m) const { return rows_.at(m); }

 private:
  static const Int& zero() {
    static const Int z(0);
    return z;
  }

  std::vector<std::vector<Int>> rows_;
};

inline SubpowerTable subpower_table(unsigned max_m) { return SubpowerTable(max_m); }

enum class SubpowerMethod { sum, recurrence, stirling };

namespace detail {

// inclusion-exclusion sum over k, with the conventions 0^0 = 1 and 0^m = 0
inline Int subpower_sum(unsigned n, unsigned m) {
  Int acc(0);
  for (unsigned k = 0; k <= n; ++k) {
    Int term = k == 0 ? Int(m == 0 ? 1 : 0) : pow_int(Int(k), m);
    term *= binomial(n, k);
    if ((n - k) % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

// Stirling set triangle by its own recurrence S(m,n) = n*S(m-1,n) + S(m-1,n-1),
// then scaled by n!; an algorithm independent of the other two routes.
inline Int subpower_stirling(unsigned n, unsigned m) {
  if (n > m) return 0;
  std::vector<std::vector<Int>> s(m + 1);
  s[0] = {Int(1)};
  for (unsigned i = 1; i <= m; ++i) {
    const unsigned width = std::min(i, n);
    s[i].assign(width + 1, Int(0));
    for (unsigned j = 1; j <= width; ++j) {
      s[i][j] = s[i - 1][j - 1];
      if (j < s[i - 1].size()) s[i][j] += Int(j) * s[i - 1][j];
    }
  }
  return factorial(n) * s[m][n];
}

}  // namespace detail

// n^{m}: the number of surjections from an m-set onto an n-set, with the
// combinatorial convention n^{0} = [n == 0]. All three methods agree.
inline Int subpower(unsigned n, unsigned m,
                    SubpowerMethod method = SubpowerMethod::recurrence) {
  switch (method) {
    case SubpowerMethod::sum:
      return detail::subpower_sum(n, m);
    case SubpowerMethod::recurrence:
      return n > m ? Int(0) : SubpowerTable(m).entry(m, n);
    case SubpowerMethod::stirling:
      return detail::subpower_stirling(n, m);
  }
  throw std::invalid_argument("subpower: unknown method");
}

// {m n}: partitions of an m-set into n non-empty blocks, computed as n^{m}/n!.
// The division is exact for every valid input; failure signals a kernel bug.
inline Int stirling_set(unsigned m, unsigned n) {
  return exact_div(subpower(n, m), factorial(n), "stirling_set");
}

// !n, the number of derangements of n objects
inline Int subfactorial(unsigned n) {
  Int acc(0);
  for (unsigned k = 0; k <= n; ++k) {
    Int term = binomial(n, k) * factorial(k);
    if ((n - k) % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

// closed forms for n^{n+offset}, offset in {0, 1, 2}
inline Int subpower_diagonal(unsigned n, unsigned offset) {
  switch (offset) {
    case 0:
      return factorial(n);
    case 1:
      return exact_div(factorial(n + 1) * n, Int(2), "subpower_diagonal");
    case 2:
      return exact_div(factorial(n + 2) * n * Int(3ul * n + 1), Int(24),
                       "subpower_diagonal");
    default:
      throw std::invalid_argument("subpower_diagonal: offset must be 0, 1 or 2");
  }
}

}  // namespace subpowers
