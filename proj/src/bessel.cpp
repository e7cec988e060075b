#include "psgen/bessel.hpp"

#include <cmath>

namespace psgen {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Power series sum_k (-x^2/4)^k / (k!)^2. Alternating-term cancellation
// stays below ~e^4 for x <= 2, so the result keeps full precision there.
double j0_series(double x) {
  const double q = -0.25 * x * x;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 40; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Miller's downward recurrence with the normalization
// J0 + 2*J2 + 2*J4 + ... = 1. Robust at moderate arguments where the
// series cancels and the asymptotic expansion has not yet converged.
double j0_miller(double x) {
  const int start = 2 * ((static_cast<int>(x) + 48) / 2);
  double above = 0.0;    // J_{k+1}
  double current = 1e-30;  // J_k, arbitrary small seed at k = start
  double even_sum = 0.0;   // sum of J_k over even k >= 2 (unnormalized)
  for (int k = start; k >= 1; --k) {
    const double below = (2.0 * k / x) * current - above;  // J_{k-1}
    above = current;
    current = below;
    const int idx = k - 1;
    if (idx >= 2 && idx % 2 == 0) even_sum += current;
    if (std::abs(current) > 1e200) {
      current *= 1e-200;
      above *= 1e-200;
      even_sum *= 1e-200;
    }
  }
  return current / (current + 2.0 * even_sum);
}

// Hankel asymptotic expansion, good to ~1e-15 for x >= 18:
//   J0(x) = sqrt(2/(pi x)) [P(x) cos(x - pi/4) - Q(x) sin(x - pi/4)]
// built from term_m = ((2m-1)!!)^2 / (m! 8^m x^m); even m feed P with
// sign (-1)^(m/2), odd m feed Q with sign (-1)^((m+1)/2).
double j0_asymptotic(double x) {
  double p = 0.0, q = 0.0;
  double term = 1.0;
  double prev = 1.0;
  for (int m = 0; m < 30; ++m) {
    if (m % 2 == 0)
      p += (m % 4 == 0) ? term : -term;
    else
      q += (m % 4 == 3) ? term : -term;
    const double odd = 2.0 * m + 1.0;
    term *= odd * odd / (8.0 * (m + 1.0) * x);
    if (term > prev || term < 1e-18) break;  // asymptotic tail: stop at smallest term
    prev = term;
  }
  const double chi = x - 0.25 * kPi;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

double bessel_j0(double x) {
  x = std::abs(x);
  if (x < 2.0) return j0_series(x);
  if (x < 18.0) return j0_miller(x);
  return j0_asymptotic(x);
}

}  // namespace psgen
