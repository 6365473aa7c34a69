#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "slicecauchy/quaternion.hpp"
#include "slicecauchy/zonal.hpp"

namespace slicecauchy {

// One-variable quaternionic polynomial with right coefficients,
// f(x) = sum_n x^n a_n. Canonical form: trailing coefficient nonzero.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Quat> coeffs) : c_(std::move(coeffs)) { canonicalize(); }

  const std::vector<Quat>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Quat coeff(int n) const {
    return (n >= 0 && n < static_cast<int>(c_.size())) ? c_[n] : Quat{};
  }

  // Horner from the left: f(x) = a_0 + x(a_1 + x(...))
  Quat eval(const Quat& x) const {
    Quat acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = x * acc + *it;
    return acc;
  }

  QPoly derivative() const {
    std::vector<Quat> d;
    for (std::size_t n = 1; n < c_.size(); ++n) d.push_back(c_[n] * double(n));
    return QPoly(std::move(d));
  }

  // Primitive with constant term 0; derivative(primitive(f)) == f.
  QPoly primitive() const {
    std::vector<Quat> p(c_.size() + 1);
    for (std::size_t n = 0; n < c_.size(); ++n) p[n + 1] = c_[n] / double(n + 1);
    return QPoly(std::move(p));
  }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Quat> s(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t n = 0; n < s.size(); ++n) s[n] = a.coeff(int(n)) + b.coeff(int(n));
    return QPoly(std::move(s));
  }

 private:
  void canonicalize() {
    while (!c_.empty() && c_.back() == Quat{}) c_.pop_back();
  }
  std::vector<Quat> c_;
};

// Stem function pair (F1, F2) on the upper half-plane; induces
// f(alpha + J beta) = F1 + J F2. F2(alpha, 0) = 0 where the axis is in the domain.
struct StemFn {
  std::function<Quat(double, double)> F1, F2;
  std::function<bool(double, double)> domain;                 // optional
  std::optional<std::pair<std::function<Quat(double, double)>,
                          std::function<Quat(double, double)>>>
      primitive;                                              // stem of a slice primitive
};

namespace detail {
inline std::complex<double> cpow_int(std::complex<double> z, int n) {
  if (n < 0) {
    z = 1.0 / z;
    n = -n;
  }
  std::complex<double> r{1.0, 0.0};
  while (n > 0) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}
}  // namespace detail

// Slice function given as a polynomial, one of the registered elementary
// stems (integer power, exp, Log), or a raw stem-function pair.
class SliceFn {
 public:
  enum class Kind { Poly, Power, Exp, Log, Stem };

  static SliceFn poly(QPoly p) {
    SliceFn f;
    f.kind_ = Kind::Poly;
    f.poly_ = std::move(p);
    return f;
  }
  static SliceFn power(int n) {
    if (n >= 0) return poly(monomial(n));
    SliceFn f;
    f.kind_ = Kind::Power;
    f.n_ = n;
    return f;
  }
  static SliceFn exp_fn() {
    SliceFn f;
    f.kind_ = Kind::Exp;
    return f;
  }
  static SliceFn log_fn() {
    SliceFn f;
    f.kind_ = Kind::Log;
    return f;
  }
  static SliceFn stem(StemFn s) {
    SliceFn f;
    f.kind_ = Kind::Stem;
    f.stem_ = std::move(s);
    return f;
  }

  Kind kind() const { return kind_; }
  const QPoly& as_poly() const { return poly_; }
  int power_exponent() const { return n_; }

  Quat eval(const Quat& x) const {
    switch (kind_) {
      case Kind::Poly:
        return poly_.eval(x);
      case Kind::Power:
      case Kind::Exp:
      case Kind::Log:
        return lift(x, [this](std::complex<double> z) { return h(z, 0); });
      case Kind::Stem: {
        auto d = decompose(x);
        check_stem_domain(d.alpha, d.beta);
        Quat v = stem_.F1(d.alpha, d.beta);
        if (d.axis) v += (*d.axis) * stem_.F2(d.alpha, d.beta);
        return v;
      }
    }
    throw std::logic_error("unreachable");
  }

  // vs f = (f(x) + f(conj x)) / 2
  Quat spherical_value(const Quat& x) const {
    if (kind_ == Kind::Stem) {
      auto d = decompose(x);
      check_stem_domain(d.alpha, d.beta);
      return stem_.F1(d.alpha, d.beta);
    }
    if (kind_ == Kind::Poly) return (poly_.eval(x) + poly_.eval(conj(x))) * 0.5;
    auto d = decompose(x);
    return Quat(h(std::complex<double>(d.alpha, d.beta), 0).real());
  }

  // f'_s; constant on 2-spheres, extends as the slice derivative on the real
  // axis for the registered slice-regular kinds.
  Quat spherical_derivative(const Quat& x) const {
    auto d = decompose(x);
    switch (kind_) {
      case Kind::Poly: {
        // sd(x^n) = Z_{n-1}; stable on and near the axis
        double b2 = d.beta * d.beta;
        Quat acc{};
        const auto& c = poly_.coeffs();
        for (std::size_t n = 1; n < c.size(); ++n)
          acc += zonal_value(int(n) - 1, d.alpha, b2) * c[n];
        return acc;
      }
      case Kind::Power:
      case Kind::Exp:
      case Kind::Log:
        return Quat(stem_sd(d.alpha, d.beta, 0));
      case Kind::Stem: {
        if (!d.axis)
          throw std::domain_error("spherical_derivative: stem branch undefined at real x");
        check_stem_domain(d.alpha, d.beta);
        if (d.beta < 1e-6) return richardson_sd(d.alpha, stem_.F2);
        return stem_.F2(d.alpha, d.beta) / d.beta;
      }
    }
    throw std::logic_error("unreachable");
  }

  // The operator S: spherical derivative of a slice primitive.
  Quat s_op(const Quat& x) const {
    auto d = decompose(x);
    switch (kind_) {
      case Kind::Poly: {
        double b2 = d.beta * d.beta;
        Quat acc{};
        const auto& c = poly_.coeffs();
        for (std::size_t n = 0; n < c.size(); ++n)
          acc += zonal_value(int(n), d.alpha, b2) * c[n] / double(n + 1);
        return acc;
      }
      case Kind::Power:
      case Kind::Exp:
      case Kind::Log:
        return Quat(stem_sd_primitive(d.alpha, d.beta));
      case Kind::Stem: {
        if (!stem_.primitive)
          throw std::runtime_error("s_op: stem has no registered slice primitive");
        check_stem_domain(d.alpha, d.beta);
        const auto& F2p = stem_.primitive->second;
        if (d.beta < 1e-6) return richardson_sd(d.alpha, F2p);
        return F2p(d.alpha, d.beta) / d.beta;
      }
    }
    throw std::logic_error("unreachable");
  }

  bool has_primitive() const { return kind_ != Kind::Stem || stem_.primitive.has_value(); }

  // A slice-regular primitive g with dg/dx = f.
  Quat primitive_eval(const Quat& x) const {
    switch (kind_) {
      case Kind::Poly:
        return poly_.primitive().eval(x);
      case Kind::Power:
        if (n_ == -1) return lift(x, [](std::complex<double> z) { return std::log(z); });
        return lift(x, [this](std::complex<double> z) {
          return detail::cpow_int(z, n_ + 1) / double(n_ + 1);
        });
      case Kind::Exp:
        return lift(x, [](std::complex<double> z) { return std::exp(z); });
      case Kind::Log:
        // x Log x - x
        return lift(x, [](std::complex<double> z) { return z * std::log(z) - z; });
      case Kind::Stem: {
        if (!stem_.primitive)
          throw std::runtime_error("primitive_eval: no registered slice primitive");
        auto d = decompose(x);
        check_stem_domain(d.alpha, d.beta);
        Quat v = stem_.primitive->first(d.alpha, d.beta);
        if (d.axis) v += (*d.axis) * stem_.primitive->second(d.alpha, d.beta);
        return v;
      }
    }
    throw std::logic_error("unreachable");
  }

  // Reference oracle for the n-th slice derivative; d^n f/dx^n = d^n f/dx0^n.
  Quat slice_derivative_value(const Quat& x, int order) const {
    if (order < 0) throw std::domain_error("slice_derivative_value: negative order");
    if (order == 0) return eval(x);
    switch (kind_) {
      case Kind::Poly: {
        QPoly d = poly_;
        for (int t = 0; t < order; ++t) d = d.derivative();
        return d.eval(x);
      }
      case Kind::Power:
      case Kind::Exp:
      case Kind::Log:
        return lift(x, [this, order](std::complex<double> z) { return h(z, order); });
      case Kind::Stem:
        return x0_stencil_derivative(x, order);
    }
    throw std::logic_error("unreachable");
  }

 private:
  static QPoly monomial(int n) {
    std::vector<Quat> c(n + 1);
    c[n] = Quat(1.0);
    return QPoly(std::move(c));
  }

  // Complex stem h(z) and its derivatives for the slice-preserving kinds.
  std::complex<double> h(std::complex<double> z, int order) const {
    switch (kind_) {
      case Kind::Power: {
        double fac = 1.0;
        for (int t = 0; t < order; ++t) fac *= double(n_ - t);
        return fac * detail::cpow_int(z, n_ - order);
      }
      case Kind::Exp:
        return std::exp(z);
      case Kind::Log: {
        if (order == 0) return std::log(z);
        // d^k Log = (-1)^{k-1} (k-1)! z^{-k}
        double fac = (order % 2 == 1) ? 1.0 : -1.0;
        for (int t = 1; t < order; ++t) fac *= double(t);
        return fac * detail::cpow_int(z, -order);
      }
      default:
        throw std::logic_error("h: not a complex-stem kind");
    }
  }

  // sd of the lifted function: Im h(z)/beta, with the axis limit h'(alpha).
  double stem_sd(double alpha, double beta, int extra_order) const {
    std::complex<double> z(alpha, beta);
    if (beta < 1e-8 * std::max(1.0, std::abs(alpha)))
      return h(std::complex<double>(alpha, 0.0), extra_order + 1).real();
    return h(z, extra_order).imag() / beta;
  }

  // sd of the registered slice primitive (the operator S).
  double stem_sd_primitive(double alpha, double beta) const {
    std::complex<double> z(alpha, beta);
    switch (kind_) {
      case Kind::Power: {
        if (n_ == -1) {
          // primitive Log: sd = arg(z)/beta -> 1/alpha on the axis
          if (beta < 1e-12 * std::max(1.0, std::abs(alpha))) {
            if (alpha <= 0.0) throw std::domain_error("s_op: on the Log branch cut");
            return 1.0 / alpha;
          }
          return std::arg(z) / beta;
        }
        double m = double(n_ + 1);
        if (beta < 1e-8 * std::max(1.0, std::abs(alpha)))
          return detail::cpow_int(std::complex<double>(alpha, 0.0), n_).real();
        return detail::cpow_int(z, n_ + 1).imag() / (m * beta);
      }
      case Kind::Exp:
        return std::exp(alpha) * sinc(beta);
      case Kind::Log: {
        // S(Log) = vs(Log) + x0 sd(Log) - 1
        double arg_over_beta;
        if (beta < 1e-12 * std::max(1.0, std::abs(alpha))) {
          if (alpha <= 0.0) throw std::domain_error("s_op: on the Log branch cut");
          arg_over_beta = 1.0 / alpha;
        } else {
          arg_over_beta = std::arg(z) / beta;
        }
        return 0.5 * std::log(alpha * alpha + beta * beta) + alpha * arg_over_beta - 1.0;
      }
      default:
        throw std::logic_error("stem_sd_primitive: not a complex-stem kind");
    }
  }

  template <class H>
  Quat lift(const Quat& x, H&& hf) const {
    auto d = decompose(x);
    check_lift_domain(x, d);
    std::complex<double> w = hf(std::complex<double>(d.alpha, d.beta));
    Quat v{w.real()};
    if (d.axis) v += (*d.axis) * w.imag();
    return v;
  }

  void check_lift_domain(const Quat& x, const SliceDecomp& d) const {
    if (kind_ == Kind::Power && n_ < 0 && norm(x) == 0.0)
      throw std::domain_error("power: evaluation at 0");
    if ((kind_ == Kind::Log || (kind_ == Kind::Power && n_ == -1)) && !d.axis && d.alpha <= 0.0)
      throw std::domain_error("Log: evaluation on the closed negative real axis");
  }

  void check_stem_domain(double alpha, double beta) const {
    if (stem_.domain && !stem_.domain(alpha, beta))
      throw std::domain_error("stem: point outside the induced domain");
  }

  // One-sided limit of F2(alpha, b)/b via 3-point Richardson in b^2.
  static Quat richardson_sd(double alpha, const std::function<Quat(double, double)>& F2) {
    const double b = 1e-3;
    Quat a0 = F2(alpha, b) / b;
    Quat a1 = F2(alpha, b / 2) / (b / 2);
    Quat a2 = F2(alpha, b / 4) / (b / 4);
    Quat r1 = (a1 * 4.0 - a0) / 3.0;
    Quat r2 = (a2 * 4.0 - a1) / 3.0;
    return (r2 * 16.0 - r1) / 15.0;
  }

  Quat x0_stencil_derivative(const Quat& x, int order) const {
    const double h0 = 1e-4 * std::max(1.0, norm(x));
    auto shift = [&](double t) { return eval(x + Quat(t)); };
    if (order == 1)
      return (shift(-2 * h0) - shift(-h0) * 8.0 + shift(h0) * 8.0 - shift(2 * h0)) / (12 * h0);
    if (order == 2)
      return (-shift(-2 * h0) + shift(-h0) * 16.0 - shift(0) * 30.0 + shift(h0) * 16.0 -
              shift(2 * h0)) /
             (12 * h0 * h0);
    // higher orders by nesting
    SliceFn self = *this;
    auto d1 = [&](const Quat& p) { return self.x0_stencil_derivative(p, order - 1); };
    return (d1(x + Quat(h0)) - d1(x - Quat(h0))) / (2 * h0);
  }

  Kind kind_ = Kind::Poly;
  QPoly poly_;
  int n_ = 0;
  StemFn stem_;
};

// Central finite-difference approximation of df/dx^c at x = alpha + J beta,
// via the stem reconstruction F1 = vs f, F2 = beta f'_s from point values.
inline Quat slice_dbar_fd(const std::function<Quat(const Quat&)>& f, const Quat& x, double h) {
  auto d = decompose(x);
  if (!d.axis) throw std::domain_error("slice_dbar_fd: x must not be real");
  const Quat J = *d.axis;
  auto F = [&](double a, double b) -> std::pair<Quat, Quat> {
    Quat p = Quat(a) + J * b;
    Quat vp = f(p), vm = f(conj(p));
    Quat F1 = (vp + vm) * 0.5;
    Quat F2 = (J * (-0.5)) * (vp - vm);  // beta * sd = -J (f(x)-f(conj x))/2
    return {F1, F2};
  };
  auto [f1_ap, f2_ap] = F(d.alpha + h, d.beta);
  auto [f1_am, f2_am] = F(d.alpha - h, d.beta);
  auto [f1_bp, f2_bp] = F(d.alpha, d.beta + h);
  auto [f1_bm, f2_bm] = F(d.alpha, d.beta - h);
  Quat dF1_da = (f1_ap - f1_am) / (2 * h);
  Quat dF2_da = (f2_ap - f2_am) / (2 * h);
  Quat dF1_db = (f1_bp - f1_bm) / (2 * h);
  Quat dF2_db = (f2_bp - f2_bm) / (2 * h);
  // dF/dzbar = (dF1/da - dF2/db)/2 + u (dF1/db + dF2/da)/2, u -> J
  return (dF1_da - dF2_db) * 0.5 + J * ((dF1_db + dF2_da) * 0.5);
}

inline Quat slice_dbar_numeric(const SliceFn& f, const Quat& x, double h) {
  return slice_dbar_fd([&](const Quat& p) { return f.eval(p); }, x, h);
}

}  // namespace slicecauchy
