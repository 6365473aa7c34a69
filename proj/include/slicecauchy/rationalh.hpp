#pragma once

#include <stdexcept>
#include <string>

#include "slicecauchy/rpoly4.hpp"

namespace slicecauchy {

// Double-precision evaluator for N(x)/|x|^{2m}.
struct RationalEval {
  PolyEval num;
  int m = 0;

  Quat operator()(const Quat& p) const {
    double n2 = norm2(p);
    double d = 1.0;
    for (int t = 0; t < m; ++t) d *= n2;
    return num(p) / d;
  }
};

// Homogeneous rational function N(x)/|x|^{2m}, canonical: N not divisible by |x|^2.
class RationalH {
 public:
  RationalH() = default;
  RationalH(RPoly4 num, int m) : num_(std::move(num)), m_(m) {
    if (m < 0) throw std::domain_error("RationalH: negative denominator exponent");
    canonicalize();
  }

  static RationalH from_poly(RPoly4 p) { return RationalH(std::move(p), 0); }

  const RPoly4& num() const { return num_; }
  int denom_exp() const { return m_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalH operator+(const RationalH& a, const RationalH& b) {
    int m = std::max(a.m_, b.m_);
    RPoly4 na = a.lift_num(m), nb = b.lift_num(m);
    return RationalH(na + nb, m);
  }
  friend RationalH operator-(const RationalH& a, const RationalH& b) {
    int m = std::max(a.m_, b.m_);
    return RationalH(a.lift_num(m) - b.lift_num(m), m);
  }
  friend RationalH operator-(const RationalH& a) { return RationalH(-a.num_, a.m_); }
  friend bool operator==(const RationalH& a, const RationalH& b) {
    return a.m_ == b.m_ && a.num_ == b.num_;
  }

  RationalH scale(const Rat& s) const { return RationalH(num_.scale(s), m_); }
  RationalH scale_left(const QuatQ& q) const { return RationalH(num_.scale_left(q), m_); }
  RationalH scale_right(const QuatQ& q) const { return RationalH(num_.scale_right(q), m_); }

  // Multiplication by a polynomial on the left (used for x_conj * P_n).
  RationalH mul_poly_left(const RPoly4& p) const { return RationalH(p * num_, m_); }

  // Quotient rule: d_k (N/Q^m) = (d_k N * Q - 2 m x_k N) / Q^{m+1}, Q = |x|^2.
  RationalH partial(int k) const {
    if (m_ == 0) return RationalH(num_.partial(k), 0);
    RPoly4 t = num_.partial(k) * RPoly4::norm2_poly();
    t = t - (RPoly4::variable(k) * num_).scale(Rat(2 * m_));
    return RationalH(std::move(t), m_ + 1);
  }

  RationalH laplacian() const {
    RationalH r;
    for (int k = 0; k < 4; ++k) r = r + partial(k).partial(k);
    return r;
  }

  RationalH crf() const {
    RationalH r = partial(0);
    r = r + partial(1).scale_left(QuatQ::i());
    r = r + partial(2).scale_left(QuatQ::j());
    r = r + partial(3).scale_left(QuatQ::k());
    return r.scale(Rat(1, 2));
  }

  RationalH crf_conj() const {
    RationalH r = partial(0);
    r = r - partial(1).scale_left(QuatQ::i());
    r = r - partial(2).scale_left(QuatQ::j());
    r = r - partial(3).scale_left(QuatQ::k());
    return r.scale(Rat(1, 2));
  }

  QuatQ eval_exact(const QuatQ& p) const {
    Rat n2 = p.w * p.w + p.x * p.x + p.y * p.y + p.z * p.z;
    if (n2 == 0 && m_ > 0) throw std::domain_error("RationalH: evaluation at the singularity x = 0");
    Rat d = 1;
    for (int t = 0; t < m_; ++t) d *= n2;
    QuatQ v = num_.eval_exact(p);
    return {v.w / d, v.x / d, v.y / d, v.z / d};
  }

  Quat eval(const Quat& p) const { return eval_exact(QuatQ::from(p)).to_quat(); }

  RationalEval compile() const { return {num_.compile(), m_}; }

  std::string str() const {
    if (m_ == 0) return num_.str();
    return "(" + num_.str() + ") / |x|^" + std::to_string(2 * m_);
  }

 private:
  void canonicalize() {
    while (m_ > 0) {
      auto q = divide_by_norm2(num_);
      if (!q) break;
      num_ = std::move(*q);
      --m_;
    }
    if (num_.is_zero()) m_ = 0;
  }

  RPoly4 lift_num(int m) const {
    RPoly4 n = num_;
    for (int t = m_; t < m; ++t) n = n * RPoly4::norm2_poly();
    return n;
  }

  RPoly4 num_;
  int m_ = 0;
};

}  // namespace slicecauchy
