#ifndef KERRLAB_SPECIAL_FUNCTIONS_HPP
#define KERRLAB_SPECIAL_FUNCTIONS_HPP

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace kerrlab {

/// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
template <typename Scalar>
Scalar log_gamma(Scalar x) {
  static_assert(std::is_floating_point_v<Scalar>, "log_gamma needs a floating point type");
  if (!(x > Scalar(0)))
    throw std::domain_error("log_gamma: argument must be positive, got " + std::to_string(x));
#if defined(__GLIBC__)
  // lgamma() writes the global signgam; the reentrant form does not.
  int sign = 0;
  if constexpr (std::is_same_v<Scalar, float>)
    return ::lgammaf_r(x, &sign);
  else if constexpr (std::is_same_v<Scalar, long double>)
    return ::lgammal_r(x, &sign);
  else
    return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

/// ln n! for integer n >= 0.
template <typename Scalar = double>
Scalar log_factorial(int n) {
  if (n < 0) throw std::domain_error("log_factorial: negative argument");
  return n < 2 ? Scalar(0) : log_gamma(Scalar(n) + Scalar(1));
}

/// Fills out[j] = L_j^a(x) for j = 0..out.size()-1 by the three-term recurrence
///   (j+1) L_{j+1} = (2j+1+a-x) L_j - (j+a) L_{j-1}.
/// The recurrence is a polynomial identity in a, so any real a is accepted here.
template <typename Scalar>
void associated_laguerre_sequence(Scalar a, Scalar x, std::span<Scalar> out) {
  if (out.empty()) return;
  out[0] = Scalar(1);
  if (out.size() == 1) return;
  out[1] = Scalar(1) + a - x;
  for (std::size_t j = 1; j + 1 < out.size(); ++j) {
    const Scalar jj = static_cast<Scalar>(j);
    out[j + 1] = ((Scalar(2) * jj + Scalar(1) + a - x) * out[j] - (jj + a) * out[j - 1]) / (jj + Scalar(1));
  }
}

namespace detail {

template <typename Scalar>
Scalar laguerre_recurrence(int n, Scalar a, Scalar x) {
  Scalar prev = Scalar(1);
  if (n == 0) return prev;
  Scalar cur = Scalar(1) + a - x;
  for (int j = 1; j < n; ++j) {
    const Scalar jj = static_cast<Scalar>(j);
    const Scalar next = ((Scalar(2) * jj + Scalar(1) + a - x) * cur - (jj + a) * prev) / (jj + Scalar(1));
    prev = cur;
    cur = next;
  }
  return cur;
}

// L_n^a(x) = sum_j (-1)^j binom(n+a, n-j) x^j / j!, with the generalized binomial
// built as a running product so that negative integer a is fine.
template <typename Scalar>
Scalar laguerre_explicit(int n, int a, Scalar x) {
  Scalar sum = Scalar(0);
  for (int j = 0; j <= n; ++j) {
    // binom(n+a, n-j) = prod_{i=1}^{n-j} (a + j + i) / i
    Scalar coeff = Scalar(1);
    for (int i = 1; i <= n - j; ++i) coeff *= Scalar(a + j + i) / Scalar(i);
    Scalar xp = Scalar(1);
    for (int i = 1; i <= j; ++i) xp *= -x / Scalar(i);
    sum += coeff * xp;
  }
  return sum;
}

}  // namespace detail

/// Associated Laguerre polynomial L_n^a(x) with integer superscript of either sign.
///
/// For a >= 0 the forward recurrence is used; it loses less to cancellation than the explicit sum.
/// For a = -k < 0 and n >= k the exact reduction
///   L_n^{-k}(x) = (-x)^k (n-k)!/n! L_{n-k}^k(x)
/// is applied. When n < k the explicit finite sum is evaluated directly.
template <typename Scalar>
Scalar associated_laguerre(int n, int a, Scalar x) {
  if (n < 0) throw std::domain_error("associated_laguerre: order must be non-negative");
  if (a >= 0) return detail::laguerre_recurrence(n, static_cast<Scalar>(a), x);
  const int k = -a;
  if (n < k) return detail::laguerre_explicit(n, a, x);
  Scalar scale = Scalar(1);
  for (int i = 0; i < k; ++i) scale *= -x / Scalar(n - i);
  return scale * associated_laguerre(n - k, k, x);
}

/// Physicists' Hermite polynomial H_m(x), H_{j+1} = 2x H_j - 2j H_{j-1}.
template <typename Scalar>
Scalar hermite(int m, Scalar x) {
  if (m < 0) throw std::domain_error("hermite: order must be non-negative");
  Scalar prev = Scalar(1);
  if (m == 0) return prev;
  Scalar cur = Scalar(2) * x;
  for (int j = 1; j < m; ++j) {
    const Scalar next = Scalar(2) * x * cur - Scalar(2) * static_cast<Scalar>(j) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Hermite functions h_j(x) = H_j(x) e^{-x^2/2} / sqrt(2^j j!), j = 0..out.size()-1, with
/// int h_j h_k dx = sqrt(pi) delta_jk. These stay O(1) where H_j itself would overflow.
template <typename Scalar>
void hermite_function_sequence(Scalar x, std::span<Scalar> out) {
  if (out.empty()) return;
  out[0] = std::exp(-x * x / Scalar(2));
  if (out.size() == 1) return;
  out[1] = std::sqrt(Scalar(2)) * x * out[0];
  for (std::size_t j = 1; j + 1 < out.size(); ++j) {
    const Scalar jj = static_cast<Scalar>(j);
    out[j + 1] = std::sqrt(Scalar(2) / (jj + Scalar(1))) * x * out[j] - std::sqrt(jj / (jj + Scalar(1))) * out[j - 1];
  }
}

}  // namespace kerrlab

#endif  // KERRLAB_SPECIAL_FUNCTIONS_HPP
