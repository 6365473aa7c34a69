#pragma once

#include <random>
#include <string>
#include <vector>

#include "slicecauchy/fueter.hpp"
#include "slicecauchy/kernels.hpp"

namespace slicecauchy {

struct IdentityResult {
  std::string name;
  std::string range;
  bool pass = false;
};

// Exact and numeric identity suite over the P_n / Z_n families and the
// derivative kernels. tamper_p1 perturbs P_1 (fault-injection hook for tests
// of the reporting path).
inline std::vector<IdentityResult> run_identities(FueterFamily& fam, unsigned seed = 0,
                                                  bool tamper_p1 = false) {
  std::vector<IdentityResult> out;
  auto get_p = [&](int n) -> RationalH {
    RationalH p = fam.p_rational(n);
    if (tamper_p1 && n == 1) {
      RPoly4 bump;
      bump.set({1, 0, 0, 0}, QuatQ(1));
      p = p + RationalH::from_poly(bump);
    }
    return p;
  };

  {
    // (n+1) x^n = P_n - conj(x) P_{n-1}
    bool ok = true;
    for (int n = 0; n <= 10 && ok; ++n) {
      RationalH lhs = RationalH::from_poly(RPoly4::expand_power(n).scale(Rat(n + 1)));
      RationalH rhs = get_p(n) - get_p(n - 1).mul_poly_left(RPoly4::x_conj());
      ok = lhs == rhs;
    }
    out.push_back({"eq_powers", "[0,10]", ok});
  }
  {
    bool ok = get_p(-1).is_zero() && get_p(-2).is_zero() &&
              get_p(-3) == RationalH(RPoly4::x_conj(), 2);
    out.push_back({"p_negative_base", "{-1,-2,-3}", ok});
  }
  {
    bool ok = true;
    for (int n = -8; n <= 10 && ok; ++n) ok = get_p(n).laplacian().is_zero();
    out.push_back({"harmonicity", "[-8,10]", ok});
  }
  {
    bool ok = true;
    for (int n = -8; n <= 10 && ok; ++n) ok = get_p(n).crf().is_zero();
    out.push_back({"monogenicity", "[-8,10]", ok});
  }
  {
    // crf_conj(P_n) = (n+2) P_{n-1}
    bool ok = true;
    for (int n = -7; n <= 8 && ok; ++n) {
      if (n == -2) continue;
      ok = get_p(n).crf_conj() == get_p(n - 1).scale(Rat(n + 2));
    }
    out.push_back({"crf_conj_recurrence", "[-7,8]\\{-2}", ok});
  }
  {
    // Delta Z_n = 0 and x^{n+1} = Z_{n+1} - conj(x) Z_n
    bool ok = true;
    for (int n = 0; n <= 10 && ok; ++n) {
      ok = fam.zonal(n).laplacian().is_zero() &&
           RPoly4::expand_power(n + 1) == fam.zonal(n + 1) - RPoly4::x_conj() * fam.zonal(n);
    }
    out.push_back({"zonal_harmonics", "[0,10]", ok});
  }
  {
    bool ok = true;
    for (int n = 0; n <= 8 && ok; ++n) {
      if (tamper_p1 && n == 1) {
        RPoly4 lhs = (RPoly4::x_conj() * get_p(1).num()).crf();
        ok = lhs == fam.zonal(1).scale(Rat(3));
      } else {
        ok = l_operator_check(fam, n);
      }
    }
    out.push_back({"l_operator", "[0,8]", ok});
  }
  {
    // K1^{(n)} + K2^{(n)} = (n!/2pi^2) P_{-n-3}(y-x) n_q, numerically
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto rq = [&]() { return Quat{u(rng), u(rng), u(rng), u(rng)}; };
    bool ok = true;
    for (int n = 0; n <= 6 && ok; ++n) {
      for (int t = 0; t < 20 && ok; ++t) {
        Quat x = rq();
        Quat y = rq() + Quat{0, 1.5, 0, 0};  // keep |Im y| >= 0.1 and y != x
        if (imag_norm(y) < 0.1 || norm(y - x) < 0.3) continue;
        Quat nq = rq();
        nq = nq / norm(nq);
        KernelPair k = k1k2_deriv(fam, n, {x, y, nq});
        double c = 1.0;
        for (int s = 2; s <= n; ++s) c *= s;
        Quat rhs = fam.eval_p(-n - 3, y - x) * nq * (c / kTwoPiSq);
        double err = norm(k.a1 + k.a2 - rhs) / std::max(1e-300, norm(rhs));
        ok = err < 1e-12;
      }
    }
    out.push_back({"k_deriv_sum", "[0,6]", ok});
  }
  return out;
}

}  // namespace slicecauchy
