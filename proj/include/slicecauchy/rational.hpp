#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "slicecauchy/quaternion.hpp"

namespace slicecauchy {

// Exact scalar of the symbolic layer.
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

inline std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Quaternion with exact rational components.
struct QuatQ {
  Rat w, x, y, z;

  QuatQ() = default;
  QuatQ(Rat w_, Rat x_, Rat y_, Rat z_)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  QuatQ(long real) : w(real) {}
  explicit QuatQ(Rat real) : w(std::move(real)) {}

  static QuatQ i() { return {0, 1, 0, 0}; }
  static QuatQ j() { return {0, 0, 1, 0}; }
  static QuatQ k() { return {0, 0, 0, 1}; }

  // double -> rational is exact
  static QuatQ from(const Quat& q) { return {Rat(q.w), Rat(q.x), Rat(q.y), Rat(q.z)}; }

  bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }

  friend QuatQ operator+(const QuatQ& a, const QuatQ& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend QuatQ operator-(const QuatQ& a, const QuatQ& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend QuatQ operator-(const QuatQ& a) { return {-a.w, -a.x, -a.y, -a.z}; }
  friend QuatQ operator*(const QuatQ& a, const QuatQ& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend QuatQ operator*(const QuatQ& a, const Rat& s) {
    return {a.w * s, a.x * s, a.y * s, a.z * s};
  }
  friend QuatQ operator*(const Rat& s, const QuatQ& a) { return a * s; }
  QuatQ& operator+=(const QuatQ& b) { return *this = *this + b; }
  QuatQ& operator-=(const QuatQ& b) { return *this = *this - b; }

  friend bool operator==(const QuatQ& a, const QuatQ& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }

  QuatQ conj() const { return {w, -x, -y, -z}; }

  Quat to_quat() const { return {to_double(w), to_double(x), to_double(y), to_double(z)}; }

  std::string str() const {
    return "(" + rat_str(w) + "," + rat_str(x) + "," + rat_str(y) + "," + rat_str(z) + ")";
  }
};

}  // namespace slicecauchy
