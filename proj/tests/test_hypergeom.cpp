#include "doctest.h"

#include <cmath>
#include <functional>
#include <random>

#include "detail/series.hpp"
#include "oracle_values.hpp"
#include "solvops/complexmath.hpp"
#include "solvops/hypergeom.hpp"

using namespace solvops;

static double rel(cplx got, cplx want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

TEST_CASE("f01_reg basics") {
  // at w = 0 only the n = 0 term survives
  for (cplx c : {cplx(1.0, 0.0), cplx(0.25, -1.0), cplx(-2.0, 0.0)}) {
    auto v = f01_reg(c, cplx(0.0, 0.0));
    CHECK(rel(v.value, reciprocal_gamma(c)) < 1e-15);
  }
  // direct 50-term summation oracle: sum 1/(n!)^2
  auto v = f01_reg(cplx(1.0, 0.0), cplx(1.0, 0.0));
  CHECK(rel(v.value, oracle::sum_inv_fact_sq) < 1e-15);
  CHECK(v.err_est < 1e-14);
  // entire in c across the pole: F_(1/2)(r^2/4) vs sinh through the 1d Bessel
  // normalization: sqrt(pi) (r/2)^(1/2+1/2) f01(3/2, r^2/4) = sinh(r)
  for (double r : {0.7, 2.5}) {
    cplx lhs = sqrt_pi * std::pow(r / 2.0, 1.0) * f01_reg(cplx(1.5, 0.0), cplx(r * r / 4.0, 0.0)).value;
    CHECK(rel(lhs, std::sinh(r) * 2.0 / r / 1.0 * (r / 2.0)) < 1e-14);
  }
}

TEST_CASE("f01_reg nonconvergence carries the partial sum") {
  SeriesPolicy pol;
  pol.max_terms = 3;
  CHECK_THROWS_AS(f01_reg(cplx(1.0, 0.0), cplx(40.0, 0.0), pol), NonconvergenceError);
}

TEST_CASE("f11_reg basics and Kummer identity") {
  for (cplx a : {cplx(0.4, 0.2), cplx(2.0, 0.0)}) {
    auto v = f11_reg(a, cplx(0.7, -0.3), cplx(0.0, 0.0));
    CHECK(rel(v.value, reciprocal_gamma(cplx(0.7, -0.3))) < 1e-15);
  }
  // termwise identity: 1F1_reg(a, a, r) = e^r / Gamma(a)
  cplx a{1.3, 0.4}, r{0.9, 1.1};
  CHECK(rel(f11_reg(a, a, r).value, std::exp(r) * reciprocal_gamma(a)) < 5e-15);
  // oracle sample
  CHECK(rel(f11_reg(cplx(0.3, 0.1), cplx(1.7, 0.0), cplx(2.0, -1.0)).value,
            cplx(oracle::f11_sample_re, oracle::f11_sample_im)) < 1e-14);
  // 1st Kummer identity
  cplx aa{0.3, 0.1}, cc{1.7, 0.0}, rr{2.0, -1.0};
  cplx lhs = f11_reg(aa, cc, rr).value;
  cplx rhs = std::exp(rr) * f11_reg(cc - aa, cc, -rr).value;
  CHECK(rel(lhs, rhs) < 1e-12);
}

TEST_CASE("f20_asymptotic basics") {
  CHECK(f20_asymptotic(cplx(0.4, 0.0), cplx(1.1, 0.0), cplx(0.0, 0.0)).value == cplx(1.0, 0.0));
  // polynomial (terminating) case is exact: a = -2
  auto v = f20_asymptotic(cplx(-2.0, 0.0), cplx(0.7, 0.0), cplx(0.3, 0.0));
  cplx expect = 1.0 + (-2.0) * 0.7 * 0.3 + ((-2.0) * (-1.0) / 2.0) * (0.7 * 1.7) * 0.09;
  CHECK(rel(v.value, expect) < 1e-15);
  CHECK(v.err_est < 1e-14);
  // far outside the asymptotic regime the sum must refuse
  CHECK_THROWS_AS(f20_asymptotic(cplx(3.0, 0.0), cplx(4.0, 0.0), cplx(2.0, 0.0)),
                  AsymptoticRegimeError);
}

TEST_CASE("u_alpha against the multiprecision Macdonald oracle") {
  for (int i = 0; i < oracle::n_u_cases; ++i) {
    const double* c = oracle::u_alpha_cases[i];
    cplx alpha{c[0], c[1]}, z{c[2], c[3]}, want{c[4], c[5]};
    auto v = u_alpha(alpha, z);
    INFO("case ", i, " path ", to_string(v.path), " err_est ", v.err_est);
    double tol = v.path == EvalPath::EpsilonLimit ? 1e-6 : 5e-13;
    CHECK(rel(v.value, want) < tol);
    // the reported error estimate must cover the actual error
    CHECK(std::abs(v.value - want) < std::max(v.err_est * 4.0, 1e-15 * std::abs(want)));
  }
}

TEST_CASE("u_alpha reflection symmetry U_a = z^-a U_-a") {
  cplx alpha{0.3, 0.0}, z{2.0, 1.0};
  cplx lhs = u_alpha(alpha, z).value;
  cplx rhs = principal_pow(z, -alpha) * u_alpha(-alpha, z).value;
  CHECK(rel(lhs, rhs) < 1e-10);
}

TEST_CASE("u_alpha asymptotic normalization at large z") {
  cplx alpha{0.7, 0.0};
  cplx z{1e4, 0.0};
  auto v = u_alpha(alpha, z);
  cplx ratio = v.value * std::exp(2.0 * std::sqrt(1e4)) * principal_pow(z, alpha / 2.0 + 0.25);
  CHECK(std::abs(ratio - 1.0) < 1e-3);
}

TEST_CASE("u_alpha epsilon-limit at integer alpha") {
  // integer alpha hits the connection-formula pole; the two-sided average
  // must agree with the multiprecision value (case 3 is alpha = 0, z = 4)
  const double* c = oracle::u_alpha_cases[3];
  cplx want{c[4], c[5]};
  auto v = u_alpha(cplx(0.0, 0.0), cplx(4.0, 0.0));
  CHECK(v.path == EvalPath::EpsilonLimit);
  CHECK(rel(v.value, want) < 1e-6);
  CHECK(rel(v.value, want) < std::max(v.err_est / std::abs(want), 1e-12));
}

TEST_CASE("series and asymptotic paths of u_alpha agree on the overlap shell") {
  // both sides assembled from public pieces: connection combination of the
  // two 0F1 series vs the 2F0 asymptotic form, each with its propagated
  // error estimate
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(50.0, 200.0), ph(-1.2, 1.2);
  for (cplx alpha : {cplx(0.3, 0.0), cplx(1.7, 0.0), cplx(-0.4, 0.2)}) {
    for (int i = 0; i < 12; ++i) {
      double m = u(rng);
      cplx z = std::polar(m, ph(rng));
      auto fp = f01_reg(alpha + 1.0, z);
      auto fm = f01_reg(1.0 - alpha, z);
      cplx s = std::sin(pi * alpha);
      cplx za = principal_pow(z, -alpha);
      cplx conn = -sqrt_pi / s * fp.value + sqrt_pi / s * za * fm.value;
      double big = std::max(std::abs(sqrt_pi / s * fp.value), std::abs(sqrt_pi / s * za * fm.value));
      double errc = sqrt_pi / std::abs(s) * (fp.err_est + std::abs(za) * fm.err_est) + 5e-16 * big;

      auto s20 = f20_asymptotic(0.5 + alpha, 0.5 - alpha, -0.25 / sqrt_principal(z));
      cplx pre = std::exp(-2.0 * sqrt_principal(z)) * principal_pow(z, -alpha / 2.0 - 0.25);
      cplx asym = pre * s20.value;
      double erra = std::abs(pre) * s20.err_est;

      double tol = std::max(1e-8, (erra + errc) / std::max(std::abs(asym), 1e-300));
      CHECK(rel(conn, asym) < tol);
    }
  }
}

TEST_CASE("ODE residual by finite differences for F_alpha and U_alpha") {
  // (z d2/dz2 + (alpha+1) d/dz - 1) v = 0
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> mag(0.5, 20.0), ph(-2.0, 2.0);
  const double h = 1e-3;
  for (cplx alpha : {cplx(0.3, 0.0), cplx(1.7, 0.0), cplx(-0.4, 0.2)}) {
    for (int i = 0; i < 100; ++i) {
      cplx z = std::polar(mag(rng), ph(rng));
      auto F = [&](cplx zz) { return f01_reg(alpha + 1.0, zz).value; };
      auto U = [&](cplx zz) { return u_alpha(alpha, zz).value; };
      for (int which = 0; which < 2; ++which) {
        auto f = which == 0 ? std::function<cplx(cplx)>(F) : std::function<cplx(cplx)>(U);
        cplx fm2 = f(z - 2 * h), fm1 = f(z - h), f0 = f(z), fp1 = f(z + h), fp2 = f(z + 2 * h);
        cplx d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
        cplx d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
        cplx resid = z * d2 + (alpha + 1.0) * d1 - f0;
        CHECK(std::abs(resid) < 1e-6 * (1.0 + std::abs(f0)));
      }
    }
  }
}

TEST_CASE("Kummer 2nd transformation: 0F1(c; z) = e^{-2 sqrt z} 1F1(c - 1/2; 2c - 1; 4 sqrt z)") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> cu(-3.0, 4.0), zu(-8.0, 8.0);
  int done = 0;
  while (done < 100) {
    cplx c{cu(rng), cu(rng)};
    cplx z{zu(rng), zu(rng)};
    if (near_nonpositive_integer(2.0 * c - 1.0, 0.05)) continue;
    ++done;
    cplx sz = sqrt_principal(z);
    // unregularize both sides: 0F1(c; z) = Gamma(c) f01_reg(c, z)
    cplx lhs = gamma(c).value * f01_reg(c, z).value;
    cplx rhs = std::exp(-2.0 * sz) * gamma(2.0 * c - 1.0).value *
               f11_reg(c - 0.5, 2.0 * c - 1.0, 4.0 * sz).value;
    CHECK(rel(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("u_alpha derivative relation") {
  cplx alpha{0.37, 0.11};
  cplx z{3.2, 0.7};
  const double h = 1e-4;
  cplx num = (u_alpha(alpha, z + h).value - u_alpha(alpha, z - h).value) / (2.0 * h);
  CHECK(rel(u_alpha_deriv(alpha, z).value, num) < 1e-7);
}
