#pragma once

#include <subpower/core.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace subpowers {

enum class Basis { monomial, falling_factorial, binomial };

// x(x-1)...(x-n+1) over the rationals; the empty product is 1
inline Rational falling_factorial(const Rational& x, unsigned n) {
  Rational r(1);
  for (unsigned i = 0; i < n; ++i) r *= x - Rational(i);
  return r;
}

// Exact-coefficient polynomial expressed in a named basis: coefficients[k]
// multiplies x^k, the falling power x(x-1)...(x-k+1), or C(x,k).
// Normal form: no trailing zero coefficients; the zero polynomial stores none.
class BasisPolynomial {
 public:
  BasisPolynomial() = default;  // zero polynomial, monomial basis

  BasisPolynomial(Basis basis, std::vector<Rational> coefficients)
      : basis_(basis), coefficients_(std::move(coefficients)) {
    while (!coefficients_.empty() && coefficients_.back() == 0)
      coefficients_.pop_back();
  }

  // x^m
  static BasisPolynomial power(unsigned m) {
    return basis_element(Basis::monomial, m);
  }

  // the degree-m element of the given basis
  static BasisPolynomial basis_element(Basis basis, unsigned m) {
    std::vector<Rational> c(m + 1, Rational(0));
    c[m] = 1;
    return BasisPolynomial(basis, std::move(c));
  }

  Basis basis() const { return basis_; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  bool is_zero() const { return coefficients_.empty(); }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

  Rational coefficient(unsigned k) const {
    return k < coefficients_.size() ? coefficients_[k] : Rational(0);
  }

  // representational equality: same basis, same coefficients
  friend bool operator==(const BasisPolynomial&, const BasisPolynomial&) = default;

 private:
  Basis basis_ = Basis::monomial;
  std::vector<Rational> coefficients_;
};

// nonzero step of the forward-difference operator
struct StepSize {
  Rational h;

  explicit StepSize(Rational value) : h(std::move(value)) {
    if (h == 0) throw std::invalid_argument("StepSize: h must be nonzero");
  }
};

namespace detail {

using Coeffs = std::vector<Rational>;

inline Coeffs add_coeffs(const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

inline Coeffs sub_coeffs(const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

inline Coeffs scaled_coeffs(const Coeffs& a, const Rational& s) {
  Coeffs r(a);
  for (auto& c : r) c *= s;
  return r;
}

// monomial coefficients of the falling power x(x-1)...(x-n+1)
inline Coeffs falling_power_coeffs(unsigned n) {
  Coeffs r{Rational(1)};
  for (unsigned i = 0; i < n; ++i) {
    Coeffs next(r.size() + 1, Rational(0));
    for (std::size_t k = 0; k < r.size(); ++k) {
      next[k + 1] += r[k];
      next[k] -= Rational(i) * r[k];
    }
    r = std::move(next);
  }
  return r;
}

}  // namespace detail

// the same polynomial function re-expressed in the target basis
inline BasisPolynomial convert_basis(const BasisPolynomial& p, Basis target) {
  if (p.basis() == target || p.is_zero())
    return BasisPolynomial(target, p.coefficients());

  // falling and binomial coefficients differ only by a factorial scale
  if (p.basis() != Basis::monomial && target != Basis::monomial) {
    std::vector<Rational> c = p.coefficients();
    for (unsigned k = 0; k < c.size(); ++k) {
      if (target == Basis::binomial)
        c[k] *= Rational(factorial(k));
      else
        c[k] /= Rational(factorial(k));
    }
    return BasisPolynomial(target, std::move(c));
  }

  if (target == Basis::monomial) {
    // expand each basis element into monomials by exact multiplication
    detail::Coeffs acc;
    for (unsigned k = 0; k < p.coefficients().size(); ++k) {
      Rational c = p.coefficients()[k];
      if (c == 0) continue;
      if (p.basis() == Basis::binomial) c /= Rational(factorial(k));
      acc = detail::add_coeffs(acc,
                               detail::scaled_coeffs(detail::falling_power_coeffs(k), c));
    }
    return BasisPolynomial(Basis::monomial, std::move(acc));
  }

  // monomial -> falling uses Stirling set coefficients, monomial -> binomial
  // uses subpower coefficients
  std::vector<Rational> out(p.coefficients().size(), Rational(0));
  for (unsigned m = 0; m < p.coefficients().size(); ++m) {
    const Rational& c = p.coefficients()[m];
    if (c == 0) continue;
    for (unsigned n = 0; n <= m; ++n) {
      Int w = target == Basis::falling_factorial ? stirling_set(m, n)
                                                 : subpower(n, m);
      if (w != 0) out[n] += c * Rational(w);
    }
  }
  return BasisPolynomial(target, std::move(out));
}

// q with q(x) = p(x + a); p must be in the monomial basis
inline BasisPolynomial shift(const BasisPolynomial& p, const Rational& a) {
  if (p.basis() != Basis::monomial)
    throw std::invalid_argument("shift: polynomial must be in the monomial basis");
  if (a == 0 || p.is_zero()) return p;
  const auto& c = p.coefficients();
  detail::Coeffs out(c.size(), Rational(0));
  for (unsigned m = 0; m < c.size(); ++m) {
    if (c[m] == 0) continue;
    Rational apow(1);
    for (unsigned j = m + 1; j-- > 0;) {
      out[j] += c[m] * Rational(binomial(m, j)) * apow;
      apow *= a;
    }
  }
  return BasisPolynomial(Basis::monomial, std::move(out));
}

// exact value of p at x
inline Rational evaluate(const BasisPolynomial& p, const Rational& x) {
  const auto& c = p.coefficients();
  if (c.empty()) return Rational(0);
  switch (p.basis()) {
    case Basis::monomial: {
      Rational acc(0);
      for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
      return acc;
    }
    case Basis::falling_factorial:
    case Basis::binomial: {
      Rational acc(0);
      Rational prod(1);  // running falling power x(x-1)...(x-k+1)
      for (unsigned k = 0; k < c.size(); ++k) {
        if (k > 0) prod *= x - Rational(k - 1);
        Rational term = c[k] * prod;
        if (p.basis() == Basis::binomial) term /= Rational(factorial(k));
        acc += term;
      }
      return acc;
    }
  }
  throw std::logic_error("evaluate: unknown basis");
}

// n-fold forward difference of p with step h, computed independently by
// iterated shift-and-subtract and by the alternating binomial sum over
// shifted copies; the two routes must agree.
inline BasisPolynomial forward_difference(const BasisPolynomial& p,
                                          const StepSize& step, unsigned n) {
  const BasisPolynomial q = convert_basis(p, Basis::monomial);

  BasisPolynomial iterated = q;
  for (unsigned i = 0; i < n; ++i)
    iterated = BasisPolynomial(
        Basis::monomial, detail::sub_coeffs(shift(iterated, step.h).coefficients(),
                                            iterated.coefficients()));

  detail::Coeffs direct;
  for (unsigned k = 0; k <= n; ++k) {
    Rational w = Rational(binomial(n, k));
    if ((n - k) % 2) w = -w;
    direct = detail::add_coeffs(
        direct, detail::scaled_coeffs(shift(q, Rational(k) * step.h).coefficients(), w));
  }

  if (!(iterated == BasisPolynomial(Basis::monomial, direct)))
    throw std::logic_error(
        "forward_difference: iterated and direct forms disagree");
  return convert_basis(iterated, p.basis());
}

// the n-th forward difference of x^m with step h, written directly in the
// monomial basis with subpower coefficients:
//   sum_{k=n}^{m} C(m,k) n^{k} h^k x^{m-k}
inline BasisPolynomial euler_difference_monomial(unsigned m, unsigned n,
                                                 const Rational& h) {
  if (h == 0)
    throw std::invalid_argument("euler_difference_monomial: h must be nonzero");
  std::vector<Rational> out(m + 1, Rational(0));
  for (unsigned k = n; k <= m; ++k)
    out[m - k] = Rational(binomial(m, k) * subpower(n, k)) * pow_rational(h, k);
  return BasisPolynomial(Basis::monomial, std::move(out));
}

}  // namespace subpowers
