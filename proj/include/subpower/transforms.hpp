#pragma once

#include <subpower/core.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace subpowers {

// Finite sequence of exact values with an explicit index of its first element.
template <class Value>
struct Sequence {
  unsigned offset = 0;
  std::vector<Value> values;

  friend bool operator==(const Sequence&, const Sequence&) = default;
};

using IntSequence = Sequence<Int>;
using RationalSequence = Sequence<Rational>;

namespace detail {

template <class Value>
void require_transform_input(const Sequence<Value>& s, const char* what) {
  if (s.offset != 0)
    throw std::invalid_argument(std::string(what) +
                                ": transform is defined from index 0");
  if (s.values.empty())
    throw std::invalid_argument(std::string(what) + ": empty sequence");
}

}  // namespace detail

// b_n = sum_{k=0}^{n} C(n,k) a_k
template <class Value>
Sequence<Value> binomial_transform(const Sequence<Value>& a) {
  detail::require_transform_input(a, "binomial_transform");
  Sequence<Value> b{a.offset, std::vector<Value>(a.values.size())};
  for (std::size_t n = 0; n < a.values.size(); ++n) {
    Value acc{};
    for (std::size_t k = 0; k <= n; ++k) acc += Value(binomial(n, k)) * a.values[k];
    b.values[n] = acc;
  }
  return b;
}

// a_n = sum_{k=0}^{n} (-1)^{n-k} C(n,k) b_k
template <class Value>
Sequence<Value> inverse_binomial_transform(const Sequence<Value>& b) {
  detail::require_transform_input(b, "inverse_binomial_transform");
  Sequence<Value> a{b.offset, std::vector<Value>(b.values.size())};
  for (std::size_t n = 0; n < b.values.size(); ++n) {
    Value acc{};
    for (std::size_t k = 0; k <= n; ++k) {
      Value term = Value(binomial(n, k)) * b.values[k];
      if ((n - k) % 2)
        acc -= term;
      else
        acc += term;
    }
    a.values[n] = acc;
  }
  return a;
}

}  // namespace subpowers
