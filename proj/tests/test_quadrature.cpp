#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "slicecauchy/kernels.hpp"
#include "slicecauchy/quadrature.hpp"

using namespace slicecauchy;

namespace {
std::mt19937_64 rng(2024);
Quat random_quat(double lo = -2.0, double hi = 2.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  return {u(rng), u(rng), u(rng), u(rng)};
}
}  // namespace

TEST_CASE("gauss-legendre rules") {
  std::vector<double> x, w;
  gauss_legendre(2, x, w);
  CHECK(x[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(w[0] == doctest::Approx(1.0).epsilon(1e-14));
  // exactness on polynomials up to degree 2n-1
  for (int n = 2; n <= 12; ++n) {
    gauss_legendre(n, x, w);
    double ws = 0.0;
    for (double v : w) ws += v;
    CHECK(ws == doctest::Approx(2.0).epsilon(1e-14));
    for (int d = 0; d <= 2 * n - 1; ++d) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += w[i] * std::pow(x[i], d);
      double exact = (d % 2 == 1) ? 0.0 : 2.0 / (d + 1);
      CHECK(std::abs(s - exact) < 1e-13);
    }
  }
}

TEST_CASE("sphere rule: total measure and flux") {
  Sphere3 s{Quat{0.3, -0.1, 0.2, 0.4}, 1.7};
  for (int order : {8, 16, 24}) {
    const auto& ns = nodes(Surface{s}, order);
    CHECK(ns.size() == std::size_t(order) * order * order);
    double total = 0.0;
    Quat flux{};
    for (const auto& n : ns) {
      total += n.weight;
      flux += n.normal * n.weight;
      CHECK(std::abs(norm(n.y - s.center) - s.radius) < 1e-12);
      CHECK(std::abs(norm(n.normal) - 1.0) < 1e-12);
    }
    double r3 = s.radius * s.radius * s.radius;
    CHECK(total == doctest::Approx(2.0 * M_PI * M_PI * r3).epsilon(1e-10));
    CHECK(norm(flux) < 1e-10 * total);
  }
}

TEST_CASE("box rule: total measure and flux") {
  Box4 b{{-1, -1, -1, -1}, {1, 1, 1, 1}};
  const auto& ns = nodes(Surface{b}, 6);
  CHECK(ns.size() == std::size_t(8) * 6 * 6 * 6);
  double total = 0.0;
  Quat flux{};
  for (const auto& n : ns) {
    total += n.weight;
    flux += n.normal * n.weight;
  }
  CHECK(total == doctest::Approx(8.0 * 8.0).epsilon(1e-12));  // 8 faces of area 2^3
  CHECK(norm(flux) < 1e-12 * total);
}

TEST_CASE("no node on the real axis for real-centred rules") {
  for (int order : {2, 3, 8, 15, 16, 33, 48}) {
    for (const auto& n : nodes(Surface{Sphere3{Quat(0.0), 1.0}}, order))
      CHECK(imag_norm(n.y) > 0.0);
  }
}

TEST_CASE("gauss flux of the kernel: 1 inside, 0 outside") {
  Surface s{Sphere3{Quat(0.0), 1.0}};
  auto flux = [&](const Quat& x, int order) {
    // integral of E(y - x) n dsigma, scalar part ~ winding
    return integrate(s, order, [&](const Quat& y, const Quat& nrm) {
      return cauchy_fueter_E(y - x) * nrm;
    });
  };
  CHECK(norm(flux(Quat{0.2, 0.3, 0.1, -0.1}, 48) - Quat(1.0)) < 1e-8);
  CHECK(norm(flux(Quat{0, 0, 0, 0.5}, 48) - Quat(1.0)) < 1e-8);
  CHECK(norm(flux(Quat{3, 0, 0, 0}, 48)) < 1e-8);
  CHECK(norm(flux(Quat{0, 1.4, 0, 0}, 48)) < 1e-6);
  // same check on a box boundary
  Surface b{Box4{{-1, -1, -1, -1}, {1, 1, 1, 1}}};
  Quat inside{0.2, 0.3, 0.1, -0.1};
  Quat v = integrate(b, 24, [&](const Quat& y, const Quat& nrm) {
    return cauchy_fueter_E(y - inside) * nrm;
  });
  CHECK(norm(v - Quat(1.0)) < 1e-8);
}

TEST_CASE("spectral convergence of the kernel flux") {
  Surface s{Sphere3{Quat{0, 0, 1, 0}, 0.8}};
  Quat x{0, 0, 0.9, 0.2};
  auto err = [&](int order) {
    Quat v = integrate(s, order, [&](const Quat& y, const Quat& nrm) {
      return cauchy_fueter_E(y - x) * nrm;
    });
    return norm(v - Quat(1.0));
  };
  double e8 = err(8), e16 = err(16), e32 = err(32);
  CHECK(e16 < 0.5 * e8);
  CHECK(e32 < 0.5 * e16);
  CHECK(e32 < 1e-10);
}

TEST_CASE("deterministic node lists and sums") {
  Surface s{Sphere3{Quat(0.0), 1.0}};
  auto density = [](const Quat& y, const Quat& nrm) { return y * nrm * conj(y); };
  Quat a = integrate(s, 17, density);
  Quat b = integrate(s, 17, density);
  CHECK(a.w == b.w);
  CHECK(a.x == b.x);
  CHECK(a.y == b.y);
  CHECK(a.z == b.z);
  const auto& n1 = nodes(s, 17);
  const auto& n2 = nodes(s, 17);
  CHECK(&n1 == &n2);  // cached
}

TEST_CASE("error paths") {
  Surface s{Sphere3{Quat(0.0), 1.0}};
  CHECK_THROWS_AS(nodes(s, 1), std::domain_error);
  CHECK_THROWS_WITH_AS(
      integrate(s, 4, [](const Quat&, const Quat&) { return Quat{std::nan(""), 0, 0, 0}; }),
      doctest::Contains("non-finite density at node"), std::runtime_error);
}

TEST_CASE("surface helpers") {
  Surface s{Sphere3{Quat{1, 0, 0, 0}, 2.0}};
  CHECK(surface_scale(s) == 2.0);
  CHECK(surface_contains(s, Quat{1, 1, 0, 0}));
  CHECK(!surface_contains(s, Quat{4, 0, 0, 0}));
  CHECK(boundary_distance(s, Quat{1, 1, 0, 0}) == doctest::Approx(1.0));
  Surface b{Box4{{0, 0, 0, 0}, {2, 2, 2, 2}}};
  CHECK(surface_scale(b) == 1.0);
  CHECK(surface_contains(b, Quat{1, 1, 1, 1}));
  CHECK(!surface_contains(b, Quat{1, 1, 1, 2.5}));
  CHECK(boundary_distance(b, Quat{1, 1, 1, 0.5}) == doctest::Approx(0.5));
  CHECK(boundary_distance(b, Quat{1, 1, 1, 3.0}) == doctest::Approx(1.0));
}
