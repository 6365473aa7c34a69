#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "slicecauchy/kernels.hpp"

using namespace slicecauchy;

namespace {
std::mt19937_64 rng(31415);
Quat random_quat(double lo = -2.0, double hi = 2.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  return {u(rng), u(rng), u(rng), u(rng)};
}

KernelPoint random_point() {
  for (;;) {
    Quat x = random_quat(-0.5, 0.5);
    Quat y = random_quat();
    if (norm(y - x) < 0.5 || imag_norm(y) < 0.1) continue;
    Quat n = random_quat();
    if (norm(n) < 0.2) continue;
    return {x, y, n / norm(n)};
  }
}
}  // namespace

TEST_CASE("kernel point values") {
  const double pi2 = M_PI * M_PI;
  CHECK(norm(cauchy_fueter_E(Quat(1.0)) - Quat(1.0 / (2 * pi2))) < 1e-16);
  CHECK(norm(cauchy_fueter_E(Quat{0, 2, 0, 0}) - Quat{0, -1.0 / (16 * pi2), 0, 0}) < 1e-16);
  CHECK(norm(cauchy_fueter_E(Quat{1, 1, 0, 0}) -
             Quat{1.0 / (8 * pi2), -1.0 / (8 * pi2), 0, 0}) < 1e-16);
  CHECK_THROWS_AS(cauchy_fueter_E(Quat{}), std::domain_error);
}

TEST_CASE("E matches P_-3 up to the 1/2pi^2 factor") {
  FueterFamily fam;
  for (int t = 0; t < 50; ++t) {
    Quat x = random_quat();
    if (norm(x) < 0.3) continue;
    CHECK(norm(cauchy_fueter_E(x) - fam.eval_p(-3, x) / kTwoPiSq) < 1e-14);
  }
}

TEST_CASE("x0-derivative of E(y-x) in x equals P_-4(y-x)/2pi^2") {
  FueterFamily fam;
  const double h = 1e-5;
  for (int t = 0; t < 30; ++t) {
    KernelPoint p = random_point();
    Quat fd = (cauchy_fueter_E(p.y - (p.x + Quat(h))) -
               cauchy_fueter_E(p.y - (p.x - Quat(h)))) /
              (2 * h);
    Quat exact = fam.eval_p(-4, p.y - p.x) / kTwoPiSq;
    CHECK(norm(fd - exact) < 1e-6 * std::max(1.0, norm(exact)));
  }
}

TEST_CASE("second transcription of the density prefactors") {
  for (int t = 0; t < 100; ++t) {
    KernelPoint p = random_point();
    KernelPair k = k1k2(p);
    // independent association order
    Quat En = cauchy_fueter_E(p.y - p.x) * p.normal;
    Quat w = inv(imag(p.y) * 2.0);
    Quat a1 = En * (p.y * w) - conj(p.x) * (En * w);
    Quat a2 = conj(p.x) * (En * w) - En * (conj(p.y) * w);
    CHECK(norm(k.a1 - a1) < 1e-12 * std::max(1.0, norm(a1)));
    CHECK(norm(k.a2 - a2) < 1e-12 * std::max(1.0, norm(a2)));
  }
}

TEST_CASE("prefactor sum identities") {
  FueterFamily fam;
  for (int t = 0; t < 50; ++t) {
    KernelPoint p = random_point();
    KernelPair k = k1k2(p);
    Quat En = cauchy_fueter_E(p.y - p.x) * p.normal;
    CHECK(norm(k.a1 + k.a2 - En) < 1e-12 * std::max(1.0, norm(En)));
    for (int n = 1; n <= 2; ++n) {
      KernelPair kd = k1k2_deriv(fam, n, p);
      double c = (n == 1 ? 1.0 : 2.0) / kTwoPiSq;
      Quat expect = fam.eval_p(-n - 3, p.y - p.x) * p.normal * c;
      CHECK(norm(kd.a1 + kd.a2 - expect) < 1e-12 * std::max(1.0, norm(expect)));
    }
  }
}

TEST_CASE("derivative kernels at n = 0 reduce to the base kernels") {
  FueterFamily fam;
  for (int t = 0; t < 100; ++t) {
    KernelPoint p = random_point();
    KernelPair k = k1k2(p);
    KernelPair k0 = k1k2_deriv(fam, 0, p);
    CHECK(norm(k.a1 - k0.a1) < 1e-13 * std::max(1.0, norm(k.a1)));
    CHECK(norm(k.a2 - k0.a2) < 1e-13 * std::max(1.0, norm(k.a2)));
  }
}

TEST_CASE("singular at real boundary points") {
  KernelPoint p{Quat{0.1, 0.1, 0, 0}, Quat(1.5), Quat(1.0)};
  CHECK_THROWS_AS(k1k2(p), std::domain_error);
  FueterFamily fam;
  CHECK_THROWS_AS(k1k2_deriv(fam, 1, p), std::domain_error);
}

TEST_CASE("constant input collapses to E n a") {
  Quat a = random_quat();
  for (int t = 0; t < 30; ++t) {
    KernelPoint p = random_point();
    KernelPair k = k1k2(p);
    Quat En = cauchy_fueter_E(p.y - p.x) * p.normal;
    CHECK(norm(k.a1 * a + k.a2 * a - En * a) < 1e-12 * std::max(1.0, norm(a)));
  }
}

TEST_CASE("combined integrand is continuous across the branch switch") {
  // f(x) = x: Sf(y) = y0, slope q = 1/2
  FueterFamily fam;
  for (int t = 0; t < 40; ++t) {
    KernelPoint p = random_point();
    // move y close to the axis, keep it off it
    auto d = decompose(p.y);
    p.y = Quat(d.alpha) + (*d.axis) * 1e-4;
    if (norm(p.y - p.x) < 0.3) continue;
    Quat fval = p.y;
    Quat sfval = Quat(p.y.w);
    std::optional<Quat> q = Quat(0.5);
    Quat lo = combined_integrand(p, fval, sfval, q, 0.9e-4);   // exact-density branch
    Quat hi = combined_integrand(p, fval, sfval, q, 1.1e-4);   // regrouped branch
    CHECK(norm(lo - hi) < 1e-6 * std::max(1.0, norm(lo)));
    Quat dlo = combined_integrand_deriv(fam, 0, p, fval, sfval, q, 0.9e-4);
    Quat dhi = combined_integrand_deriv(fam, 0, p, fval, sfval, q, 1.1e-4);
    CHECK(norm(dlo - dhi) < 1e-6 * std::max(1.0, norm(dlo)));
    CHECK(norm(lo - dlo) < 1e-12 * std::max(1.0, norm(lo)));
  }
  // near-axis node without a slope value is an error
  KernelPoint p{Quat{0.2, 0, 0, 0}, Quat{1.5, 1e-6, 0, 0}, Quat(1.0)};
  CHECK_THROWS_AS(combined_integrand(p, Quat(1.0), Quat(1.0), std::nullopt, 1e-4),
                  std::domain_error);
}
