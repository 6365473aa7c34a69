#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <variant>
#include <vector>

#include "slicecauchy/quaternion.hpp"

namespace slicecauchy {

// 3-sphere of radius r centred at c.
struct Sphere3 {
  Quat center;
  double radius = 1.0;
};

// Boundary of the axis-aligned box [lo, hi] in R^4 (8 cubic faces).
struct Box4 {
  std::array<double, 4> lo{}, hi{};
};

using Surface = std::variant<Sphere3, Box4>;

struct QuadNode {
  Quat y, normal;
  double weight = 0.0;
};

// Gauss-Legendre nodes/weights on [-1, 1], Newton on the Legendre recurrence.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p0 = 0, p1 = 0;
    for (int it = 0; it < 100; ++it) {
      p0 = 1.0;
      p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2 * k + 1) * t * p1 - k * p2) / (k + 1);
      }
      double dp = n * (t * p0 - p1) / (t * t - 1.0);
      double dt = p0 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    p0 = 1.0;
    p1 = 0.0;
    for (int k = 0; k < n; ++k) {
      double p2 = p1;
      p1 = p0;
      p0 = ((2 * k + 1) * t * p1 - k * p2) / (k + 1);
    }
    double dp = n * (t * p0 - p1) / (t * t - 1.0);
    x[i] = -t;
    x[n - 1 - i] = t;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

inline double surface_scale(const Surface& s) {
  if (std::holds_alternative<Sphere3>(s)) return std::get<Sphere3>(s).radius;
  const auto& b = std::get<Box4>(s);
  double m = 0.0;
  for (int k = 0; k < 4; ++k) m = std::max(m, b.hi[k] - b.lo[k]);
  return 0.5 * m;
}

inline bool surface_contains(const Surface& s, const Quat& x) {
  if (std::holds_alternative<Sphere3>(s)) {
    const auto& sp = std::get<Sphere3>(s);
    return norm(x - sp.center) < sp.radius;
  }
  const auto& b = std::get<Box4>(s);
  const double c[4] = {x.w, x.x, x.y, x.z};
  for (int k = 0; k < 4; ++k)
    if (c[k] <= b.lo[k] || c[k] >= b.hi[k]) return false;
  return true;
}

inline double boundary_distance(const Surface& s, const Quat& x) {
  if (std::holds_alternative<Sphere3>(s)) {
    const auto& sp = std::get<Sphere3>(s);
    return std::abs(norm(x - sp.center) - sp.radius);
  }
  const auto& b = std::get<Box4>(s);
  const double c[4] = {x.w, x.x, x.y, x.z};
  if (surface_contains(s, x)) {
    double d = 1e300;
    for (int k = 0; k < 4; ++k) d = std::min({d, c[k] - b.lo[k], b.hi[k] - c[k]});
    return d;
  }
  double d2 = 0.0;
  for (int k = 0; k < 4; ++k) {
    double t = std::max({b.lo[k] - c[k], 0.0, c[k] - b.hi[k]});
    d2 += t * t;
  }
  return std::sqrt(d2);
}

namespace detail {

inline std::vector<QuadNode> build_sphere_nodes(const Sphere3& s, int order) {
  std::vector<double> xg, wg;
  gauss_legendre(order, xg, wg);
  std::vector<QuadNode> nodes;
  nodes.reserve(std::size_t(order) * order * order);
  const double r = s.radius;
  const double r3 = r * r * r;
  // psi, theta in (0, pi) by Gauss-Legendre; periodic trapezoid in phi with a
  // half-step offset so no node lands on the real axis for real centres.
  for (int a = 0; a < order; ++a) {
    double psi = M_PI * 0.5 * (xg[a] + 1.0);
    double wpsi = M_PI * 0.5 * wg[a];
    double sp = std::sin(psi), cp = std::cos(psi);
    for (int b = 0; b < order; ++b) {
      double th = M_PI * 0.5 * (xg[b] + 1.0);
      double wth = M_PI * 0.5 * wg[b];
      double st = std::sin(th), ct = std::cos(th);
      for (int c = 0; c < order; ++c) {
        double phi = 2.0 * M_PI * (c + 0.5) / order;
        double wphi = 2.0 * M_PI / order;
        Quat dir{cp, sp * ct, sp * st * std::cos(phi), sp * st * std::sin(phi)};
        QuadNode n;
        n.y = s.center + dir * r;
        n.normal = dir;
        n.weight = r3 * sp * sp * st * wpsi * wth * wphi;
        nodes.push_back(n);
      }
    }
  }
  // generic-position check: real-centred rules must keep every node off the axis
  if (imag(s.center) == Quat{}) {
    for (const auto& n : nodes)
      if (imag_norm(n.y) == 0.0)
        throw std::logic_error("sphere quadrature node on the real axis");
  }
  return nodes;
}

inline std::vector<QuadNode> build_box_nodes(const Box4& b, int order) {
  std::vector<double> xg, wg;
  gauss_legendre(order, xg, wg);
  std::vector<QuadNode> nodes;
  nodes.reserve(std::size_t(8) * order * order * order);
  for (int d = 0; d < 4; ++d) {
    int od[3], idx = 0;
    for (int k = 0; k < 4; ++k)
      if (k != d) od[idx++] = k;
    for (int side = 0; side < 2; ++side) {
      double coord = side == 0 ? b.lo[d] : b.hi[d];
      double sign = side == 0 ? -1.0 : 1.0;
      for (int a = 0; a < order; ++a)
        for (int e = 0; e < order; ++e)
          for (int c = 0; c < order; ++c) {
            double u[3] = {xg[a], xg[e], xg[c]};
            double wu = wg[a] * wg[e] * wg[c];
            double comp[4];
            comp[d] = coord;
            double jac = 1.0;
            int ui = 0;
            for (int k : od) {
              double half = 0.5 * (b.hi[k] - b.lo[k]);
              comp[k] = b.lo[k] + half * (u[ui] + 1.0);
              jac *= half;
              ++ui;
            }
            QuadNode n;
            n.y = {comp[0], comp[1], comp[2], comp[3]};
            double nc[4] = {0, 0, 0, 0};
            nc[d] = sign;
            n.normal = {nc[0], nc[1], nc[2], nc[3]};
            n.weight = wu * jac;
            nodes.push_back(n);
          }
    }
  }
  return nodes;
}

}  // namespace detail

// Node list for a surface at the given order; cached, single-threaded fill.
inline const std::vector<QuadNode>& nodes(const Surface& s, int order) {
  if (order < 2) throw std::domain_error("nodes: order must be >= 2");
  static std::mutex mu;
  static std::map<std::string, std::vector<QuadNode>> cache;
  std::ostringstream key;
  key.precision(17);
  if (std::holds_alternative<Sphere3>(s)) {
    const auto& sp = std::get<Sphere3>(s);
    key << "S|" << format_quat(sp.center) << "|" << sp.radius << "|" << order;
  } else {
    const auto& b = std::get<Box4>(s);
    key << "B|";
    for (int k = 0; k < 4; ++k) key << b.lo[k] << "," << b.hi[k] << "|";
    key << order;
  }
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(key.str());
  if (it != cache.end()) return it->second;
  std::vector<QuadNode> ns = std::holds_alternative<Sphere3>(s)
                                 ? detail::build_sphere_nodes(std::get<Sphere3>(s), order)
                                 : detail::build_box_nodes(std::get<Box4>(s), order);
  return cache.emplace(key.str(), std::move(ns)).first->second;
}

namespace detail {
inline Quat pairwise_sum(const Quat* v, std::size_t n) {
  if (n == 1) return v[0];
  if (n == 2) return v[0] + v[1];
  std::size_t half = n / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}
}  // namespace detail

// Weighted sum of density(y, normal) over the rule's nodes, reduced by a
// deterministic pairwise tree over the canonical node ordering.
inline Quat integrate(const Surface& s, int order,
                      const std::function<Quat(const Quat&, const Quat&)>& density) {
  const auto& ns = nodes(s, order);
  if (ns.empty()) return {};
  std::vector<Quat> contrib(ns.size());
  for (std::size_t idx = 0; idx < ns.size(); ++idx) {
    contrib[idx] = density(ns[idx].y, ns[idx].normal) * ns[idx].weight;
    if (!finite(contrib[idx]))
      throw std::runtime_error("integrate: non-finite density at node " + std::to_string(idx) +
                               " (y = " + format_quat(ns[idx].y) + ")");
  }
  return detail::pairwise_sum(contrib.data(), contrib.size());
}

}  // namespace slicecauchy
