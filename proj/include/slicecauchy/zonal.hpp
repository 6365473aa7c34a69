#pragma once

#include <cmath>

#include "slicecauchy/quaternion.hpp"

namespace slicecauchy {

// Zonal harmonic Z_n at x = alpha + J beta, beta^2 = x1^2+x2^2+x3^2:
//   Z_n = sum_{k odd} (-1)^{(k-1)/2} C(n+1,k) alpha^{n+1-k} (beta^2)^{(k-1)/2}.
// Real-valued; stable down to (and on) the real axis.
inline double ipow(double a, int e) {
  double r = 1.0;
  for (int t = 0; t < e; ++t) r *= a;
  return r;
}

inline double zonal_value(int n, double alpha, double beta2) {
  double acc = 0.0;
  double binom = n + 1;  // C(n+1, 1)
  double bp = 1.0;
  int sign = 1;
  for (int k = 1; k <= n + 1; k += 2) {
    acc += sign * binom * ipow(alpha, n + 1 - k) * bp;
    binom *= double(n + 1 - k) * double(n - k) / (double(k + 1) * double(k + 2));
    bp *= beta2;
    sign = -sign;
  }
  return acc;
}

inline double zonal_value(int n, const Quat& x) {
  return zonal_value(n, x.w, x.x * x.x + x.y * x.y + x.z * x.z);
}

// sin(b)/b with the removable singularity filled in.
inline double sinc(double b) {
  if (std::abs(b) < 1e-8) return 1.0 - b * b / 6.0;
  return std::sin(b) / b;
}

// d/db sinc(b) = (b cos b - sin b) / b^2
inline double sinc_deriv(double b) {
  if (std::abs(b) < 1e-4) return -b / 3.0 + b * b * b / 30.0;
  return (b * std::cos(b) - std::sin(b)) / (b * b);
}

}  // namespace slicecauchy
