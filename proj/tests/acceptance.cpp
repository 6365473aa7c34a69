// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "slicecauchy/slicecauchy.hpp"

using namespace slicecauchy;

namespace {

int failures = 0;

void report(int idx, const char* what, bool ok) {
  std::printf("%s  criterion %2d: %s\n", ok ? "PASS" : "FAIL", idx, what);
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::mt19937_64 rng(20240817);
Quat random_quat(double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return {u(rng), u(rng), u(rng), u(rng)};
}

}  // namespace

int main() {
  FueterFamily fam;

  {  // 1: (n+1) x^n = P_n - conj(x) P_{n-1}, symbolic, 0 <= n <= 10
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int n = 0; n <= 10 && ok; ++n) {
      RPoly4 lhs = RPoly4::expand_power(n).scale(Rat(n + 1));
      RPoly4 rhs = fam.p_poly(n);
      if (n >= 1) rhs = rhs - RPoly4::x_conj() * fam.p_poly(n - 1);
      ok = lhs == rhs;
    }
    ok = ok && seconds_since(t0) < 5.0;
    report(1, "power identity holds symbolically for n = 0..10", ok);
  }

  {  // 2: negative-index family exactness
    auto t0 = std::chrono::steady_clock::now();
    bool ok = fam.p_rational(-1).is_zero() && fam.p_rational(-2).is_zero() &&
              fam.p_neg(-3) == RationalH(RPoly4::x_conj(), 2);
    for (int n = -8; n <= 10 && ok; ++n) {
      if (fam.p_is_zero(n)) continue;
      RationalH p = fam.p_rational(n);
      ok = p.laplacian().is_zero() && p.crf().is_zero();
    }
    for (int n = -7; n <= 8 && ok; ++n) {
      if (n == -2) continue;
      ok = fam.p_rational(n).crf_conj() == fam.p_rational(n - 1).scale(Rat(n + 2));
    }
    ok = ok && seconds_since(t0) < 10.0;
    report(2, "P_n exact values, harmonicity, monogenicity, lowering recurrence", ok);
  }

  {  // 3: negative-index power identity, numeric
    bool ok = true;
    int tested = 0;
    while (tested < 100 && ok) {
      Quat x = random_quat(-2, 2);
      double r = norm(x);
      if (r < 0.5 || r > 2.0) continue;
      ++tested;
      for (int n = -8; n <= -1 && ok; ++n) {
        Quat lhs = pow_int(x, n) * double(n + 1);
        Quat rhs = fam.eval_p(n, x) - conj(x) * fam.eval_p(n - 1, x);
        ok = norm(lhs - rhs) < 1e-9 * std::max(1.0, norm(lhs));
      }
    }
    report(3, "power identity for n = -8..-1 at 100 random points, rel 1e-9", ok);
  }

  {  // 4: L-operator identity
    bool ok = true;
    for (int n = 0; n <= 8 && ok; ++n) ok = l_operator_check(fam, n);
    report(4, "crf(conj(x) P_n) = (n+2) Z_n exactly for n = 0..8", ok);
  }

  Surface unit_sphere{Sphere3{Quat(0.0), 1.0}};
  SliceFn fx = SliceFn::poly(QPoly({Quat{}, Quat(1.0)}));
  Quat x1{0.2, 0.3, 0.1, -0.1};

  {  // 5: identity-function reconstruction plus outside probe
    auto t0 = std::chrono::steady_clock::now();
    auto rep = reconstruct(fam, fx, unit_sphere, x1, 0, 64);
    auto probe = reconstruct(fam, fx, unit_sphere, Quat{3, 0, 0, 0}, 0, 64, true);
    bool ok = rep.rel_err < 1e-6 && norm(probe.value) < 1e-6 && seconds_since(t0) < 30.0;
    report(5, "f(x)=x over the unit sphere: rel 1e-6 inside, |value| < 1e-6 outside", ok);
  }

  {  // 6: derivative reconstruction of the identity function
    auto r1 = reconstruct(fam, fx, unit_sphere, x1, 1, 64);
    auto r2 = reconstruct(fam, fx, unit_sphere, x1, 2, 64);
    bool ok = norm(r1.value - Quat(1.0)) < 1e-6 && norm(r2.value) < 1e-5;
    report(6, "derivatives of f(x)=x: order 1 gives 1 (1e-6), order 2 gives 0 (1e-5)", ok);
  }

  {  // 7: random degree-5 polynomial over a sphere disjoint from the real axis
    std::vector<Quat> c(6);
    for (auto& a : c) a = random_quat(-1, 1);
    SliceFn f = SliceFn::poly(QPoly(c));
    Surface s{Sphere3{Quat{0, 2, 0, 0}, 0.5}};
    bool ok = true;
    for (int t = 0; t < 5 && ok; ++t) {
      Quat x = Quat{0, 2, 0, 0} + random_quat(-0.2, 0.2);
      ok = reconstruct(fam, f, s, x, 0, 48).rel_err < 1e-8;
    }
    report(7, "random degree-5 polynomial over an off-axis sphere, rel 1e-8 at 5 points", ok);
  }

  {  // 8: exponential reconstruction and its Laplacian closed form
    SliceFn e = SliceFn::exp_fn();
    Surface s{Sphere3{Quat::j(), 0.3}};
    Quat x = Quat::j() + Quat{0.05, 0.02, -0.04, 0.03};
    bool ok = reconstruct(fam, e, s, x, 0, 48).rel_err < 1e-6;
    for (int t = 0; t < 50 && ok; ++t) {
      Quat p = random_quat(-1, 1);
      if (imag_norm(p) < 0.1) {
        --t;
        continue;
      }
      auto d = decompose(p);
      double sc = sinc(d.beta);
      double sderiv = (std::cos(d.beta) - sc) / d.beta;  // d(sinc)/dbeta
      Quat closed = (Quat(sc) - (*d.axis) * sderiv) * (-2.0 * std::exp(d.alpha));
      Quat g2 = decompose_slicefn(e, p, 1e-2).second;
      ok = norm(closed - g2 * (-4.0)) < 1e-6 * std::max(1.0, norm(closed));
    }
    report(8, "exp over a sphere at j, rel 1e-6; Laplacian closed form matches -4 g2", ok);
  }

  {  // 9: inverse over a sphere whose closure avoids 0 and the branch cut
    SliceFn f = SliceFn::power(-1);
    Surface s{Sphere3{Quat{1, 2, 0, 0}, 0.4}};
    Quat x{1.1, 2.05, 0.1, -0.05};
    bool ok = reconstruct(fam, f, s, x, 0, 48).rel_err < 1e-6;
    report(9, "x^-1 over a sphere avoiding 0 and the cut, rel 1e-6", ok);
  }

  {  // 10: slice-regularity compatibility residual and negative control
    bool ok = true;
    for (int t = 0; t < 20 && ok; ++t) {
      std::vector<Quat> c(6);
      for (auto& a : c) a = random_quat(-1, 1);
      auto pair = decompose_poly(QPoly(c));
      int pts = 0;
      while (pts < 20 && ok) {
        Quat p = random_quat(-2, 2);
        if (imag_norm(p) < 0.1) continue;
        ++pts;
        ok = nec_condition_residual(fam, pair, p, 1e-4) < 1e-5;
      }
    }
    MonogenicPair bad;
    bad.q1 = {Quat{}, Quat(1.0)};
    ok = ok && nec_condition_residual(fam, bad, Quat{1, 0, 1, 0}, 1e-4) > 1e-2;
    report(10, "compatibility residual < 1e-5 on 20x20 samples, negative control fails", ok);
  }

  {  // 11: surface independence
    SliceFn f = SliceFn::poly(QPoly({Quat{}, Quat{}, Quat(1.0)}));
    Quat x{0.1, 0.2, -0.15, 0.05};
    auto a = reconstruct(fam, f, unit_sphere, x, 0, 48);
    Surface bx{Box4{{-0.8, -0.8, -0.8, -0.8}, {0.8, 0.8, 0.8, 0.8}}};
    auto b = reconstruct(fam, f, bx, x, 0, 32);
    bool ok = norm(a.value - b.value) < 1e-5;
    report(11, "sphere and box reconstructions of x^2 agree to 1e-5", ok);
  }

  if (failures == 0) {
    std::printf("all 11 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
