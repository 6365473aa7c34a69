#pragma once

#include <array>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace slicecauchy {

// Quaternion x = w + i x + j y + k z with double components.
// The symbolic layer (rpoly4.hpp) carries its own exact scalars.
struct Quat {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

  constexpr Quat() = default;
  constexpr Quat(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  constexpr Quat(double real) : w(real) {}

  static constexpr Quat i() { return {0, 1, 0, 0}; }
  static constexpr Quat j() { return {0, 0, 1, 0}; }
  static constexpr Quat k() { return {0, 0, 0, 1}; }

  friend constexpr Quat operator+(const Quat& a, const Quat& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Quat operator-(const Quat& a, const Quat& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr Quat operator-(const Quat& a) { return {-a.w, -a.x, -a.y, -a.z}; }

  // Hamilton product, i^2 = j^2 = k^2 = -1, ij = k.
  friend constexpr Quat operator*(const Quat& a, const Quat& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend constexpr Quat operator*(const Quat& a, double s) {
    return {a.w * s, a.x * s, a.y * s, a.z * s};
  }
  friend constexpr Quat operator*(double s, const Quat& a) { return a * s; }
  friend constexpr Quat operator/(const Quat& a, double s) {
    return {a.w / s, a.x / s, a.y / s, a.z / s};
  }
  Quat& operator+=(const Quat& b) { return *this = *this + b; }
  Quat& operator-=(const Quat& b) { return *this = *this - b; }
  Quat& operator*=(const Quat& b) { return *this = *this * b; }

  friend constexpr bool operator==(const Quat& a, const Quat& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

constexpr Quat conj(const Quat& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double norm2(const Quat& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }
inline double norm(const Quat& q) { return std::sqrt(norm2(q)); }

constexpr Quat imag(const Quat& q) { return {0, q.x, q.y, q.z}; }
constexpr double real(const Quat& q) { return q.w; }
inline double imag_norm(const Quat& q) {
  return std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
}

inline Quat inv(const Quat& q) {
  double n2 = norm2(q);
  if (n2 == 0.0) throw std::domain_error("Quat::inv: zero quaternion");
  return conj(q) / n2;
}

inline Quat operator/(const Quat& a, const Quat& b) { return a * inv(b); }

// Threshold below which x counts as real: |Im(x)| <= 1e-13 * max(1, |x|).
inline bool is_real(const Quat& q) {
  return imag_norm(q) <= 1e-13 * std::max(1.0, norm(q));
}

// x = alpha + J beta with J^2 = -1, beta = |Im(x)| >= 0; J absent for real x.
struct SliceDecomp {
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<Quat> axis;  // unit imaginary J
};

inline SliceDecomp decompose(const Quat& q) {
  SliceDecomp d;
  d.alpha = q.w;
  double b = imag_norm(q);
  if (is_real(q)) return d;
  d.beta = b;
  d.axis = Quat{0, q.x / b, q.y / b, q.z / b};
  return d;
}

inline Quat pow_int(Quat q, int n) {
  if (n < 0) {
    q = inv(q);
    n = -n;
  }
  Quat r{1.0};
  while (n > 0) {
    if (n & 1) r *= q;
    q *= q;
    n >>= 1;
  }
  return r;
}

inline bool finite(const Quat& q) {
  return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
}

// CLI text form: four decimal literals "w,x,y,z".
inline Quat parse_quat(const std::string& s) {
  std::array<double, 4> c{};
  std::size_t pos = 0;
  for (int idx = 0; idx < 4; ++idx) {
    std::size_t next = (idx < 3) ? s.find(',', pos) : s.size();
    if (next == std::string::npos)
      throw std::invalid_argument("quaternion literal needs 4 comma-separated components: " + s);
    std::string piece = s.substr(pos, next - pos);
    char* end = nullptr;
    c[idx] = std::strtod(piece.c_str(), &end);
    if (end == piece.c_str() || *end != '\0')
      throw std::invalid_argument("bad quaternion component '" + piece + "' at position " +
                                  std::to_string(pos));
    pos = next + 1;
  }
  return {c[0], c[1], c[2], c[3]};
}

inline std::string format_quat(const Quat& q) {
  std::ostringstream os;
  os.precision(17);
  os << q.w << ',' << q.x << ',' << q.y << ',' << q.z;
  return os.str();
}

}  // namespace slicecauchy
