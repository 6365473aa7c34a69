#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "slicecauchy/quaternion.hpp"
#include "slicecauchy/rational.hpp"

namespace slicecauchy {

// Exponents of x0^e0 x1^e1 x2^e2 x3^e3.
using MultiIndex = std::array<int, 4>;

inline int total_degree(const MultiIndex& m) { return m[0] + m[1] + m[2] + m[3]; }

// Compiled double-precision evaluator for the quadrature hot path.
struct PolyEval {
  struct Term {
    MultiIndex e;
    Quat c;
  };
  std::vector<Term> terms;

  Quat operator()(const Quat& p) const {
    double pw[4][32];
    int maxe[4] = {0, 0, 0, 0};
    for (const auto& t : terms)
      for (int k = 0; k < 4; ++k) maxe[k] = std::max(maxe[k], t.e[k]);
    if (std::max({maxe[0], maxe[1], maxe[2], maxe[3]}) >= 32)
      throw std::domain_error("PolyEval: exponent too large");
    const double comp[4] = {p.w, p.x, p.y, p.z};
    for (int k = 0; k < 4; ++k) {
      pw[k][0] = 1.0;
      for (int e = 1; e <= maxe[k]; ++e) pw[k][e] = pw[k][e - 1] * comp[k];
    }
    Quat acc{};
    for (const auto& t : terms) {
      double m = pw[0][t.e[0]] * pw[1][t.e[1]] * pw[2][t.e[2]] * pw[3][t.e[3]];
      acc += t.c * m;
    }
    return acc;
  }
};

// Polynomial in the real variables x0..x3 with quaternion coefficients whose
// components are exact rationals. Canonical form: no stored zero coefficients.
class RPoly4 {
 public:
  RPoly4() = default;

  static RPoly4 constant(QuatQ c) {
    RPoly4 p;
    p.set({0, 0, 0, 0}, std::move(c));
    return p;
  }
  static RPoly4 one() { return constant(QuatQ(1)); }
  static RPoly4 variable(int k) {
    RPoly4 p;
    MultiIndex m{0, 0, 0, 0};
    m[k] = 1;
    p.set(m, QuatQ(1));
    return p;
  }

  // x = x0 + i x1 + j x2 + k x3
  static RPoly4 x() {
    RPoly4 p;
    p.set({1, 0, 0, 0}, QuatQ(1));
    p.set({0, 1, 0, 0}, QuatQ::i());
    p.set({0, 0, 1, 0}, QuatQ::j());
    p.set({0, 0, 0, 1}, QuatQ::k());
    return p;
  }
  static RPoly4 x_conj() {
    RPoly4 p;
    p.set({1, 0, 0, 0}, QuatQ(1));
    p.set({0, 1, 0, 0}, -QuatQ::i());
    p.set({0, 0, 1, 0}, -QuatQ::j());
    p.set({0, 0, 0, 1}, -QuatQ::k());
    return p;
  }
  // |x|^2 = x0^2 + x1^2 + x2^2 + x3^2
  static RPoly4 norm2_poly() {
    RPoly4 p;
    p.set({2, 0, 0, 0}, QuatQ(1));
    p.set({0, 2, 0, 0}, QuatQ(1));
    p.set({0, 0, 2, 0}, QuatQ(1));
    p.set({0, 0, 0, 2}, QuatQ(1));
    return p;
  }

  // Expanded quaternion power x^n.
  static RPoly4 expand_power(int n) {
    if (n < 0) throw std::domain_error("expand_power: n must be nonnegative");
    RPoly4 acc = one();
    RPoly4 base = x();
    for (int t = 0; t < n; ++t) acc = acc * base;
    return acc;
  }

  const std::map<MultiIndex, QuatQ>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }

  bool is_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
      if (total_degree(m) != d) return false;
    return true;
  }

  void set(const MultiIndex& m, QuatQ c) {
    if (c.is_zero())
      terms_.erase(m);
    else
      terms_[m] = std::move(c);
  }

  void add_term(const MultiIndex& m, const QuatQ& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(m, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  QuatQ coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? QuatQ() : it->second;
  }

  friend RPoly4 operator+(const RPoly4& a, const RPoly4& b) {
    RPoly4 r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend RPoly4 operator-(const RPoly4& a, const RPoly4& b) {
    RPoly4 r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  friend RPoly4 operator-(const RPoly4& a) {
    RPoly4 r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }

  // Coefficient product keeps left-to-right order (quaternions do not commute).
  friend RPoly4 operator*(const RPoly4& a, const RPoly4& b) {
    RPoly4 r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        MultiIndex m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]};
        r.add_term(m, ca * cb);
      }
    return r;
  }

  friend bool operator==(const RPoly4& a, const RPoly4& b) { return a.terms_ == b.terms_; }

  RPoly4 scale_left(const QuatQ& q) const {
    RPoly4 r;
    for (const auto& [m, c] : terms_) r.add_term(m, q * c);
    return r;
  }
  RPoly4 scale_right(const QuatQ& q) const {
    RPoly4 r;
    for (const auto& [m, c] : terms_) r.add_term(m, c * q);
    return r;
  }
  RPoly4 scale(const Rat& s) const {
    if (s == 0) return {};
    RPoly4 r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
  }

  RPoly4 partial(int k) const {
    RPoly4 r;
    for (const auto& [m, c] : terms_) {
      if (m[k] == 0) continue;
      MultiIndex d = m;
      d[k] -= 1;
      r.add_term(d, c * Rat(m[k]));
    }
    return r;
  }

  RPoly4 laplacian() const {
    RPoly4 r;
    for (int k = 0; k < 4; ++k) r = r + partial(k).partial(k);
    return r;
  }

  // 1/2 (d0 + i d1 + j d2 + k d3), units multiply coefficients on the left.
  RPoly4 crf() const {
    RPoly4 r = partial(0);
    r = r + partial(1).scale_left(QuatQ::i());
    r = r + partial(2).scale_left(QuatQ::j());
    r = r + partial(3).scale_left(QuatQ::k());
    return r.scale(Rat(1, 2));
  }

  // 1/2 (d0 - i d1 - j d2 - k d3)
  RPoly4 crf_conj() const {
    RPoly4 r = partial(0);
    r = r - partial(1).scale_left(QuatQ::i());
    r = r - partial(2).scale_left(QuatQ::j());
    r = r - partial(3).scale_left(QuatQ::k());
    return r.scale(Rat(1, 2));
  }

  QuatQ eval_exact(const QuatQ& p) const {
    const Rat comp[4] = {p.w, p.x, p.y, p.z};
    int maxe[4] = {0, 0, 0, 0};
    for (const auto& [m, c] : terms_)
      for (int k = 0; k < 4; ++k) maxe[k] = std::max(maxe[k], m[k]);
    std::vector<Rat> pw[4];
    for (int k = 0; k < 4; ++k) {
      pw[k].resize(maxe[k] + 1);
      pw[k][0] = 1;
      for (int e = 1; e <= maxe[k]; ++e) pw[k][e] = pw[k][e - 1] * comp[k];
    }
    QuatQ acc;
    for (const auto& [m, c] : terms_)
      acc += c * (pw[0][m[0]] * pw[1][m[1]] * pw[2][m[2]] * pw[3][m[3]]);
    return acc;
  }

  // Exact rational evaluation, rounded once at the end.
  Quat eval(const Quat& p) const { return eval_exact(QuatQ::from(p)).to_quat(); }

  PolyEval compile() const {
    PolyEval pe;
    pe.terms.reserve(terms_.size());
    for (const auto& [m, c] : terms_) pe.terms.push_back({m, c.to_quat()});
    return pe;
  }

  // Terms sorted by total degree then lexicographic multi-index;
  // rational components printed "p/q".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<MultiIndex, QuatQ>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
      int da = total_degree(a.first), db = total_degree(b.first);
      if (da != db) return da < db;
      return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : ts) {
      if (!first) os << " + ";
      first = false;
      os << c.str();
      static const char* names[4] = {"x0", "x1", "x2", "x3"};
      for (int k = 0; k < 4; ++k) {
        if (m[k] == 0) continue;
        os << " " << names[k];
        if (m[k] > 1) os << "^" << m[k];
      }
    }
    return os.str();
  }

 private:
  std::map<MultiIndex, QuatQ> terms_;
};

// Exact division by |x|^2, if possible. Single-divisor reduction in lex order
// with leading term x0^2; zero remainder iff divisible.
inline std::optional<RPoly4> divide_by_norm2(const RPoly4& p) {
  std::map<MultiIndex, QuatQ> rem(p.terms().begin(), p.terms().end());
  RPoly4 quot;
  for (;;) {
    auto it = rem.rbegin();
    for (; it != rem.rend(); ++it)
      if (it->first[0] >= 2) break;
    if (it == rem.rend()) break;
    MultiIndex q = it->first;
    q[0] -= 2;
    QuatQ c = it->second;
    quot.add_term(q, c);
    // subtract c * x^q * (x0^2 + x1^2 + x2^2 + x3^2)
    for (int k = 0; k < 4; ++k) {
      MultiIndex m = q;
      m[k] += 2;
      auto jt = rem.find(m);
      if (jt == rem.end()) {
        rem.emplace(m, -c);
      } else {
        jt->second -= c;
        if (jt->second.is_zero()) rem.erase(jt);
      }
    }
  }
  if (!rem.empty()) return std::nullopt;
  return quot;
}

}  // namespace slicecauchy
