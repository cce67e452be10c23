#pragma once

#include <subpower/core.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace subpowers {

namespace detail {

// Neumaier-compensated accumulation; the alternating sums below cancel
// roughly n bits, so plain summation noise is worth suppressing.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }

  double value() const { return sum + comp; }
};

}  // namespace detail

// Subpower of arbitrary exponent: sum_{k=1}^{n} (-1)^{n-k} C(n,k) k^z.
// Dropping the k = 0 term makes this entire function analytic in z; the
// value at z = 0 becomes (-1)^{n+1} for n >= 1, and 0^{z} = 0 throughout.
// Terms are accumulated in increasing k with compensated summation; the
// cancellation grows with n, so the accuracy contract covers n <= 20.
// Nonnegative integer exponents have exactly representable integer terms,
// so that case is summed exactly and rounded once.
inline std::complex<double> subpower_complex(unsigned n, std::complex<double> z) {
  if (z.imag() == 0.0 && z.real() >= 0.0 && z.real() <= 4096.0 &&
      z.real() == std::floor(z.real())) {
    const auto m = static_cast<unsigned long>(z.real());
    Int acc(0);
    for (unsigned k = 1; k <= n; ++k) {
      const Int term = binomial(n, k) * pow_int(Int(k), m);
      if ((n - k) % 2)
        acc -= term;
      else
        acc += term;
    }
    return {mpz_get_d(acc.get_mpz_t()), 0.0};
  }
  detail::CompensatedSum re, im;
  for (unsigned k = 1; k <= n; ++k) {
    const double weight = mpz_get_d(binomial(n, k).get_mpz_t());
    const double sign = (n - k) % 2 ? -1.0 : 1.0;
    std::complex<double> term;
    if (z.imag() == 0.0)
      term = std::pow(static_cast<double>(k), z.real());
    else
      term = std::exp(z * std::log(static_cast<double>(k)));
    term *= sign * weight;
    re.add(term.real());
    im.add(term.imag());
  }
  return {re.value(), im.value()};
}

inline double subpower_real(unsigned n, double z) {
  return subpower_complex(n, {z, 0.0}).real();
}

// exact rational n^{-m} = sum_{k=1}^{n} (-1)^{n-k} C(n,k) / k^m for m >= 1
inline Rational subpower_negative(unsigned n, unsigned m) {
  if (m < 1)
    throw std::invalid_argument(
        "subpower_negative: m must be >= 1 (exponent 0 belongs to subpower_complex)");
  Rational acc(0);
  for (unsigned k = 1; k <= n; ++k) {
    Rational term = make_rational(binomial(n, k), pow_int(Int(k), m));
    if ((n - k) % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

// H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0
inline Rational harmonic(unsigned n) {
  Rational acc(0);
  for (unsigned k = 1; k <= n; ++k) acc += make_rational(Int(1), Int(k));
  return acc;
}

// Coefficients c_n^(k) of the closed form of the n-th antiderivative of
// ln^m x: values[k] = c_n^(k) for k = 0..m, with c_n^(0) = 1 and
// c_n^(k) = (-1)^{n-1} n^{-k} for k >= 1. values[1] is the harmonic number H_n.
struct HarmonicCoefficients {
  unsigned n = 0;
  std::vector<Rational> values;
};

inline HarmonicCoefficients harmonic_log_coefficients(unsigned n, unsigned m) {
  if (n < 1)
    throw std::invalid_argument("harmonic_log_coefficients: n must be >= 1");
  HarmonicCoefficients c{n, {Rational(1)}};
  c.values.reserve(m + 1);
  const int sign = n % 2 ? 1 : -1;
  for (unsigned k = 1; k <= m; ++k)
    c.values.push_back(Rational(sign) * subpower_negative(n, k));
  return c;
}

namespace detail {

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration
inline void gauss_legendre_nodes(unsigned order, std::vector<double>& x,
                                 std::vector<double>& w) {
  x.assign(order, 0.0);
  w.assign(order, 0.0);
  const unsigned half = (order + 1) / 2;
  for (unsigned i = 0; i < half; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (double z1 = 2.0; std::abs(z - z1) > 1e-15;) {
      double p0 = 1.0, p1 = 0.0;
      for (unsigned j = 0; j < order; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = order * (z * p0 - p1) / (z * z - 1.0);
      z1 = z;
      z = z1 - p0 / pp;
    }
    x[i] = -z;
    x[order - 1 - i] = z;
    w[i] = w[order - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

}  // namespace detail

// Numerical value of the integral representation of n^{-m},
//   (-1)^{n-1} n/m! * integral_0^1 (1-x)^{n-1} ln(1/x)^m dx.
// The substitution t = -ln x turns the integrand into
// (1-e^{-t})^{n-1} t^m e^{-t} on [0, inf), removing the endpoint
// singularity; the range is cut at T with certified tail
// n (T+1)^m e^{-T} < tol/2, then integrated by Gauss-Legendre panels,
// doubling the panel count until successive values differ by < tol/4.
inline double integral_check(unsigned n, unsigned m, double tol) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("integral_check: n and m must be >= 1");

  double cut = 1.0;
  while (n * std::pow(cut + 1.0, static_cast<int>(m)) * std::exp(-cut) >= tol / 2)
    cut += 1.0;

  static const auto reference = [] {
    std::vector<double> x, w;
    detail::gauss_legendre_nodes(16, x, w);
    return std::pair(x, w);
  }();
  const auto& [nodes, weights] = reference;

  const auto integrand = [&](double t) {
    return std::pow(1.0 - std::exp(-t), static_cast<int>(n) - 1) *
           std::pow(t, static_cast<int>(m)) * std::exp(-t);
  };
  const auto integrate = [&](unsigned panels) {
    double total = 0.0;
    const double width = cut / panels;
    for (unsigned p = 0; p < panels; ++p) {
      const double mid = (p + 0.5) * width;
      double acc = 0.0;
      for (std::size_t i = 0; i < nodes.size(); ++i)
        acc += weights[i] * integrand(mid + 0.5 * width * nodes[i]);
      total += acc * 0.5 * width;
    }
    return total;
  };

  // the n/m! prefactor scales the quadrature error, so it scales the
  // convergence threshold too
  const double scale = n / mpz_get_d(factorial(m).get_mpz_t());
  double prev = integrate(4);
  for (unsigned panels = 8; panels <= 4096; panels *= 2) {
    const double curr = integrate(panels);
    const bool converged = scale * std::abs(curr - prev) < tol / 4;
    prev = curr;
    if (converged) break;
  }

  const double sign = n % 2 ? 1.0 : -1.0;
  return sign * scale * prev;
}

// one point of the real-exponent curves: value = n^{z} for real z
struct CurveSample {
  unsigned n = 0;
  double z = 0.0;
  double value = 0.0;
};

// deterministic grid z_min + j*step truncated at z_max, bases 1..n_max;
// samples are ordered grid-point first, base second
inline std::vector<CurveSample> curve_samples(unsigned n_max, double z_min,
                                              double z_max, double step) {
  if (z_min > z_max)
    throw std::invalid_argument("curve_samples: z_min must be <= z_max");
  if (step <= 0) throw std::invalid_argument("curve_samples: step must be positive");
  std::vector<CurveSample> out;
  for (unsigned j = 0;; ++j) {
    const double z = z_min + j * step;
    if (z > z_max + step * 1e-9) break;
    for (unsigned n = 1; n <= n_max; ++n) out.push_back({n, z, subpower_real(n, z)});
  }
  return out;
}

}  // namespace subpowers
