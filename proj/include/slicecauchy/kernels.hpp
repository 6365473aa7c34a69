#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "slicecauchy/fueter.hpp"
#include "slicecauchy/quaternion.hpp"

namespace slicecauchy {

inline constexpr double kTwoPiSq = 2.0 * M_PI * M_PI;

// Cauchy-Fueter kernel E(x) = (1/2pi^2) conj(x)/|x|^4.
inline Quat cauchy_fueter_E(const Quat& x) {
  double n2 = norm2(x);
  if (n2 == 0.0) throw std::domain_error("cauchy_fueter_E: singularity at 0");
  return conj(x) / (kTwoPiSq * n2 * n2);
}

// Interior point x, boundary point y, outward unit normal at y.
struct KernelPoint {
  Quat x, y, normal;
};

// Right-acting prefactors: the integrand of the Cauchy formula is
// a1 * f(y) + a2 * Sf(y), with the surface measure weight applied by the caller.
struct KernelPair {
  Quat a1, a2;
};

// K1, K2 densities with Dy realized as normal * dsigma:
//   a1 = (E(y-x) n y - conj(x) E(y-x) n) (y - conj(y))^{-1}
//   a2 = (conj(x) E(y-x) n - E(y-x) n conj(y)) (y - conj(y))^{-1}
inline KernelPair k1k2(const KernelPoint& p) {
  if (is_real(p.y)) throw std::domain_error("k1k2: density singular at real y");
  Quat En = cauchy_fueter_E(p.y - p.x) * p.normal;
  Quat inv_ymyc = inv(p.y - conj(p.y));
  Quat xEn = conj(p.x) * En;
  return {(En * p.y - xEn) * inv_ymyc, (xEn - En * conj(p.y)) * inv_ymyc};
}

// x0-derivative kernels K1^{(n)}, K2^{(n)} built from P_{-n-2}, P_{-n-3}:
//   c = n!/2pi^2, Pm3 = P_{-n-3}(y-x), Pm2 = P_{-n-2}(y-x)
//   a1 = c (Pm3 n y - (Pm2 + conj(x) Pm3) n)(y - conj(y))^{-1}
//   a2 = c ((Pm2 + conj(x) Pm3) n - Pm3 n conj(y))(y - conj(y))^{-1}
// n = 0 reduces to k1k2.
inline KernelPair k1k2_deriv(FueterFamily& fam, int n, const KernelPoint& p) {
  if (n < 0) throw std::domain_error("k1k2_deriv: n must be nonnegative");
  if (is_real(p.y)) throw std::domain_error("k1k2_deriv: density singular at real y");
  double c = 1.0;
  for (int t = 2; t <= n; ++t) c *= t;
  c /= kTwoPiSq;
  Quat d = p.y - p.x;
  Quat pm3 = fam.eval_p(-n - 3, d);
  Quat pm2 = fam.eval_p(-n - 2, d);
  Quat inv_ymyc = inv(p.y - conj(p.y));
  Quat pm3n = pm3 * p.normal;
  Quat mixn = (pm2 + conj(p.x) * pm3) * p.normal;
  return {(pm3n * p.y - mixn) * inv_ymyc * c, (mixn - pm3n * conj(p.y)) * inv_ymyc * c};
}

// Integrand of the Cauchy formula, regular across the real axis.
// For |Im y| >= eps this is K1 f + K2 Sf; below eps the regrouped form
//   E n (f + Sf)/2 + (E n y0 - conj(x) E n) q
// is used, with q the limit of (2 Im y)^{-1}(f - Sf) supplied by fslope.
inline Quat combined_integrand(const KernelPoint& p, const Quat& fval, const Quat& sfval,
                               const std::optional<Quat>& fslope, double eps) {
  if (imag_norm(p.y) >= eps) {
    KernelPair k = k1k2(p);
    return k.a1 * fval + k.a2 * sfval;
  }
  if (!fslope)
    throw std::domain_error("combined_integrand: near-axis node requires the f-slope value");
  Quat En = cauchy_fueter_E(p.y - p.x) * p.normal;
  return En * ((fval + sfval) * 0.5) + (En * p.y.w - conj(p.x) * En) * (*fslope);
}

// Same regrouping for the derivative kernels:
//   c (Pm3 n ((f+Sf)/2 + y0 q) - (Pm2 + conj(x) Pm3) n q)
inline Quat combined_integrand_deriv(FueterFamily& fam, int n, const KernelPoint& p,
                                     const Quat& fval, const Quat& sfval,
                                     const std::optional<Quat>& fslope, double eps) {
  if (imag_norm(p.y) >= eps) {
    KernelPair k = k1k2_deriv(fam, n, p);
    return k.a1 * fval + k.a2 * sfval;
  }
  if (!fslope)
    throw std::domain_error("combined_integrand_deriv: near-axis node requires the f-slope value");
  double c = 1.0;
  for (int t = 2; t <= n; ++t) c *= t;
  c /= kTwoPiSq;
  Quat d = p.y - p.x;
  Quat pm3n = fam.eval_p(-n - 3, d) * p.normal;
  Quat mixn = (fam.eval_p(-n - 2, d) + conj(p.x) * fam.eval_p(-n - 3, d)) * p.normal;
  return (pm3n * ((fval + sfval) * 0.5 + p.y.w * (*fslope)) - mixn * (*fslope)) * c;
}

}  // namespace slicecauchy
