#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "slicecauchy/quaternion.hpp"
#include "slicecauchy/rationalh.hpp"
#include "slicecauchy/rpoly4.hpp"
#include "slicecauchy/slicefn.hpp"

namespace slicecauchy {

// Cached construction of the zonal harmonics Z_n and the axially monogenic
// family P_n = -1/4 Delta(x^{n+2}) for all integer indices.
// P_{-1} = P_{-2} = 0; P_{-3} = conj(x)/|x|^4; descending indices follow the
// recurrence P_{n-1} = crf_conj(P_n)/(n+2).
class FueterFamily {
 public:
  // Z_n from the complex binomial route: expand Im((a+ib)^{n+1})/b and
  // substitute b^2 = x1^2+x2^2+x3^2.
  const RPoly4& zonal(int n) {
    if (n < 0) throw std::domain_error("zonal: n must be nonnegative");
    std::lock_guard<std::mutex> lk(mu_);
    auto it = zonal_.find(n);
    if (it != zonal_.end()) return it->second;
    RPoly4 z;
    RPoly4 b2;  // x1^2+x2^2+x3^2
    b2.set({0, 2, 0, 0}, QuatQ(1));
    b2.set({0, 0, 2, 0}, QuatQ(1));
    b2.set({0, 0, 0, 2}, QuatQ(1));
    Rat binom = n + 1;  // C(n+1,1)
    RPoly4 b2pow = RPoly4::one();
    int sign = 1;
    for (int k = 1; k <= n + 1; k += 2) {
      RPoly4 term = b2pow.scale(binom * sign);
      RPoly4 a_pow = RPoly4::one();
      for (int t = 0; t < n + 1 - k; ++t) a_pow = a_pow * RPoly4::variable(0);
      z = z + a_pow * term;
      binom = binom * (n + 1 - k) * (n - k) / ((k + 1) * (k + 2));
      b2pow = b2pow * b2;
      sign = -sign;
    }
    return zonal_.emplace(n, std::move(z)).first->second;
  }

  bool p_is_zero(int n) const { return n == -1 || n == -2; }

  const RPoly4& p_poly(int n) {
    if (n < 0) throw std::domain_error("p_poly: n must be nonnegative");
    std::lock_guard<std::mutex> lk(mu_);
    return p_poly_locked(n);
  }

  const RationalH& p_neg(int n) {
    if (n > -3) throw std::domain_error("p_neg: n must be <= -3");
    std::lock_guard<std::mutex> lk(mu_);
    return p_neg_locked(n);
  }

  // P_n as a RationalH for any index (zero for n = -1, -2).
  RationalH p_rational(int n) {
    if (p_is_zero(n)) return {};
    if (n >= 0) return RationalH::from_poly(p_poly(n));
    return p_neg(n);
  }

  Quat eval_p(int n, const Quat& x) {
    if (p_is_zero(n)) return {};
    std::lock_guard<std::mutex> lk(mu_);
    auto it = compiled_.find(n);
    if (it == compiled_.end()) {
      RationalEval re;
      if (n >= 0) {
        re = {p_poly_locked(n).compile(), 0};
      } else {
        const RationalH& p = p_neg_locked(n);
        re = {p.num().compile(), p.denom_exp()};
      }
      it = compiled_.emplace(n, std::move(re)).first;
    }
    return it->second(x);
  }

  double eval_zonal(int n, const Quat& x) { return zonal_value(n, x); }

 private:
  const RPoly4& p_poly_locked(int n) {
    auto it = ppos_.find(n);
    if (it != ppos_.end()) return it->second;
    RPoly4 p = RPoly4::expand_power(n + 2).laplacian().scale(Rat(-1, 4));
    return ppos_.emplace(n, std::move(p)).first->second;
  }

  const RationalH& p_neg_locked(int n) {
    auto it = pneg_.find(n);
    if (it != pneg_.end()) return it->second;
    if (n == -3) {
      RationalH p(RPoly4::x_conj(), 2);
      return pneg_.emplace(n, std::move(p)).first->second;
    }
    const RationalH& up = p_neg_locked(n + 1);
    // crf_conj(P_{n+1}) = (n+3) P_n
    RationalH p = up.crf_conj().scale(Rat(1) / (n + 3));
    return pneg_.emplace(n, std::move(p)).first->second;
  }

  std::mutex mu_;
  std::map<int, RPoly4> zonal_;
  std::map<int, RPoly4> ppos_;
  std::map<int, RationalH> pneg_;
  std::map<int, RationalEval> compiled_;
};

// Coefficient sequences against the P_n basis (right coefficients);
// the represented functions are axially monogenic by construction.
struct MonogenicPair {
  std::vector<Quat> q1;  // Q1 = sum_n P_n q1[n]
  std::vector<Quat> q2;  // Q2 = sum_n P_n q2[n]
};

inline Quat eval_p_combination(FueterFamily& fam, const std::vector<Quat>& c, const Quat& x) {
  Quat acc{};
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n] == Quat{}) continue;
    acc += fam.eval_p(int(n), x) * c[n];
  }
  return acc;
}

// f = sum x^n a_n  ->  Q1 = sum P_n a_n/(n+1), Q2 = sum P_{n-1} a_n/(n+1),
// with f(x) = Q1(x) - conj(x) Q2(x) pointwise.
inline MonogenicPair decompose_poly(const QPoly& f) {
  MonogenicPair out;
  int d = f.degree();
  if (d < 0) return out;
  out.q1.resize(d + 1);
  if (d >= 1) out.q2.resize(d);
  for (int n = 0; n <= d; ++n) {
    Quat a = f.coeff(n) / double(n + 1);
    out.q1[n] = a;
    if (n >= 1) out.q2[n - 1] = a;
  }
  return out;
}

// P-basis coefficients b_n (n >= 0) -> slice-regular preimage sum -1/4 x^{n+2} b_n
// of the Laplacian (right inverse on the monogenic polynomial basis).
inline QPoly fueter_preimage(const std::vector<Quat>& b) {
  std::vector<Quat> c(b.size() + 2);
  for (std::size_t n = 0; n < b.size(); ++n) c[n + 2] = b[n] * (-0.25);
  return QPoly(std::move(c));
}

// crf(conj(x) P_n) == (n+2) Z_n, exactly.
inline bool l_operator_check(FueterFamily& fam, int n) {
  if (n < 0) throw std::domain_error("l_operator_check: n must be nonnegative");
  RPoly4 lhs = (RPoly4::x_conj() * fam.p_poly(n)).crf();
  RPoly4 rhs = fam.zonal(n).scale(Rat(n + 2));
  return lhs == rhs;
}

namespace detail {
// Fourth-order 5-point Laplacian of a quaternion-valued map on R^4.
template <class F>
Quat laplacian_fd(F&& f, const Quat& x, double h) {
  static const double axes[4][4] = {
      {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  Quat acc{};
  Quat f0 = f(x);
  for (int k = 0; k < 4; ++k) {
    Quat e{axes[k][0], axes[k][1], axes[k][2], axes[k][3]};
    acc += (-f(x + e * (2 * h)) + f(x + e * h) * 16.0 - f0 * 30.0 + f(x - e * h) * 16.0 -
            f(x - e * (2 * h))) /
           (12 * h * h);
  }
  return acc;
}
}  // namespace detail

// Numeric axially monogenic components of f at x:
// g1 = (2 Im x)^{-1}(-conj(x) S f + x f), g2 = (2 Im x)^{-1}(-S f + f);
// within 1e-3 of the real axis, fall back to finite-difference Laplacians of
// the slice primitive: g1 = -1/4 Delta(x g), g2 = -1/4 Delta g.
inline std::pair<Quat, Quat> decompose_slicefn(const SliceFn& f, const Quat& x, double h) {
  if (!f.has_primitive())
    throw std::runtime_error("decompose_slicefn: f has no registered slice primitive");
  if (imag_norm(x) >= 1e-3) {
    Quat sf = f.s_op(x);
    Quat fv = f.eval(x);
    Quat inv2im = inv(imag(x) * 2.0);
    Quat g1 = inv2im * (-conj(x) * sf + x * fv);
    Quat g2 = inv2im * (-sf + fv);
    return {g1, g2};
  }
  auto g = [&](const Quat& p) { return f.primitive_eval(p); };
  auto xg = [&](const Quat& p) { return p * f.primitive_eval(p); };
  Quat g1 = detail::laplacian_fd(xg, x, h) * (-0.25);
  Quat g2 = detail::laplacian_fd(g, x, h) * (-0.25);
  return {g1, g2};
}

// Residual of the slice-regularity condition
//   d g1/dx^c = g2 + conj(x) d g2/dx^c
// for a P-basis pair, via finite differences on the reconstructed stems.
inline double nec_condition_residual(FueterFamily& fam, const MonogenicPair& q, const Quat& x,
                                     double h) {
  if (is_real(x)) throw std::domain_error("nec_condition_residual: x must not be real");
  auto g1 = [&](const Quat& p) { return eval_p_combination(fam, q.q1, p); };
  auto g2 = [&](const Quat& p) { return eval_p_combination(fam, q.q2, p); };
  Quat d1 = slice_dbar_fd(g1, x, h);
  Quat d2 = slice_dbar_fd(g2, x, h);
  return norm(d1 - g2(x) - conj(x) * d2);
}

}  // namespace slicecauchy
