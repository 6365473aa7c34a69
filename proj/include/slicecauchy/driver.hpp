#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "slicecauchy/kernels.hpp"
#include "slicecauchy/quadrature.hpp"
#include "slicecauchy/slicefn.hpp"

namespace slicecauchy {

struct ReconstructionReport {
  Quat value, reference;
  double abs_err = 0.0, rel_err = 0.0;
  int deriv = 0;
  int order = 0;
  std::size_t node_count = 0;
  double runtime_ms = 0.0;
};

namespace detail {

inline bool region_contains_origin(const Surface& s) {
  return surface_contains(s, Quat{}) || boundary_distance(s, Quat{}) == 0.0;
}

// closed region meets the closed negative real axis {t <= 0}
inline bool region_hits_neg_axis(const Surface& s) {
  if (std::holds_alternative<Sphere3>(s)) {
    const auto& sp = std::get<Sphere3>(s);
    double d = sp.center.w <= 0.0 ? imag_norm(sp.center) : norm(sp.center);
    return d <= sp.radius;
  }
  const auto& b = std::get<Box4>(s);
  if (b.lo[0] > 0.0) return false;
  for (int k = 1; k < 4; ++k)
    if (b.lo[k] > 0.0 || b.hi[k] < 0.0) return false;
  return true;
}

inline void check_function_domain(const SliceFn& f, const Surface& s) {
  bool needs_nonzero = f.kind() == SliceFn::Kind::Power && f.power_exponent() < 0;
  bool needs_cut = f.kind() == SliceFn::Kind::Log ||
                   (f.kind() == SliceFn::Kind::Power && f.power_exponent() == -1);
  if (needs_nonzero && region_contains_origin(s))
    throw std::domain_error("reconstruct: region closure contains the singularity at 0");
  if (needs_cut && region_hits_neg_axis(s))
    throw std::domain_error("reconstruct: region closure meets the Log branch cut");
}

}  // namespace detail

// Evaluates the boundary-integral reconstruction of the deriv-th slice
// derivative of f at x over the surface s, and compares against direct
// evaluation. With probe_outside, x must lie outside and the reference is 0.
inline ReconstructionReport reconstruct(FueterFamily& fam, const SliceFn& f, const Surface& s,
                                        const Quat& x, int deriv, int order,
                                        bool probe_outside = false) {
  if (deriv < 0) throw std::invalid_argument("reconstruct: deriv must be nonnegative");
  if (!f.has_primitive())
    throw std::runtime_error("reconstruct: f has no registered slice primitive for S f");
  detail::check_function_domain(f, s);
  const double scale = surface_scale(s);
  const bool inside = surface_contains(s, x);
  if (!probe_outside && !inside)
    throw std::invalid_argument("reconstruct: x is not inside the region");
  if (probe_outside && inside)
    throw std::invalid_argument("reconstruct: probe point is not outside the region");
  if (boundary_distance(s, x) < 1e-3 * scale)
    throw std::invalid_argument("reconstruct: x too close to the boundary");

  const double eps = 1e-4 * scale;
  const auto t0 = std::chrono::steady_clock::now();

  // Near-axis slope q = g2(y); exact P-basis form for polynomials.
  std::optional<MonogenicPair> poly_pair;
  if (f.kind() == SliceFn::Kind::Poly) poly_pair = decompose_poly(f.as_poly());
  auto fslope = [&](const Quat& y) -> Quat {
    if (poly_pair) return eval_p_combination(fam, poly_pair->q2, y);
    return decompose_slicefn(f, y, 1e-2 * std::max(1.0, norm(y))).second;
  };

  auto density = [&](const Quat& y, const Quat& n) -> Quat {
    KernelPoint p{x, y, n};
    Quat fval = f.eval(y);
    Quat sfval = f.s_op(y);
    std::optional<Quat> q;
    if (imag_norm(y) < eps) q = fslope(y);
    if (deriv == 0) return combined_integrand(p, fval, sfval, q, eps);
    return combined_integrand_deriv(fam, deriv, p, fval, sfval, q, eps);
  };

  ReconstructionReport rep;
  rep.value = integrate(s, order, density);
  rep.reference = probe_outside ? Quat{} : f.slice_derivative_value(x, deriv);
  rep.deriv = deriv;
  rep.order = order;
  rep.node_count = nodes(s, order).size();
  rep.abs_err = norm(rep.value - rep.reference);
  rep.rel_err = rep.abs_err / std::max(1e-300, norm(rep.reference));
  rep.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// Monogenic route for polynomials: integrate E(y-x) n Q1(y) - conj(x) E(y-x) n Q2(y)
// with (Q1, Q2) the monogenic decomposition of f. Robust when the boundary
// crosses the real axis; must agree with the kernel path.
inline Quat reconstruct_monogenic_poly(FueterFamily& fam, const QPoly& f, const Surface& s,
                                       const Quat& x, int order) {
  MonogenicPair pair = decompose_poly(f);
  auto density = [&](const Quat& y, const Quat& n) -> Quat {
    Quat En = cauchy_fueter_E(y - x) * n;
    Quat v = En * eval_p_combination(fam, pair.q1, y);
    if (!pair.q2.empty()) v -= conj(x) * (En * eval_p_combination(fam, pair.q2, y));
    return v;
  };
  return integrate(s, order, density);
}

inline std::vector<ReconstructionReport> convergence_sweep(FueterFamily& fam, const SliceFn& f,
                                                           const Surface& s, const Quat& x,
                                                           int deriv,
                                                           const std::vector<int>& orders,
                                                           bool probe_outside = false) {
  std::vector<ReconstructionReport> out;
  out.reserve(orders.size());
  for (int o : orders) out.push_back(reconstruct(fam, f, s, x, deriv, o, probe_outside));
  return out;
}

}  // namespace slicecauchy
