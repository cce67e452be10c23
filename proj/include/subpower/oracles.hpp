#pragma once

#include <subpower/numeric.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

// Brute-force counting oracles. Everything here is deliberately naive and
// shares no code with the closed-form kernels it is used to check.
namespace subpowers::oracle {

// surjections from an m-set onto an n-set, by enumerating all n^m functions
inline Int count_surjections_exhaustive(unsigned n, unsigned m) {
  if (n == 0) return m == 0 ? 1 : 0;
  std::vector<unsigned> f(m, 0);  // f[i] in 0..n-1
  Int count(0);
  while (true) {
    std::vector<bool> hit(n, false);
    for (unsigned v : f) hit[v] = true;
    if (std::find(hit.begin(), hit.end(), false) == hit.end()) ++count;
    unsigned i = 0;
    for (; i < m; ++i) {
      if (++f[i] < n) break;
      f[i] = 0;
    }
    if (i == m) break;
  }
  return count;
}

// derangements of n objects, by walking every permutation
inline Int count_derangements_exhaustive(unsigned n) {
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  Int count(0);
  do {
    bool fixed_point = false;
    for (unsigned i = 0; i < n; ++i)
      if (perm[i] == i) {
        fixed_point = true;
        break;
      }
    if (!fixed_point) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// additive Pascal triangle, rows 0..max_n
inline std::vector<std::vector<Int>> pascal_triangle(unsigned max_n) {
  std::vector<std::vector<Int>> rows(max_n + 1);
  for (unsigned n = 0; n <= max_n; ++n) {
    rows[n].assign(n + 1, Int(1));
    for (unsigned k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
  }
  return rows;
}

}  // namespace subpowers::oracle
