#include "doctest.h"

#include <cmath>
#include <random>

#include "solvops/operators.hpp"

using namespace solvops;

static double rel(cplx got, cplx want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

TEST_CASE("validation and endpoint index tables") {
  CHECK_THROWS_AS(OperatorSpec::bessel(cplx(-1.2, 0.0)), ValidationError);
  CHECK_THROWS_AS(OperatorSpec::exponential(cplx(-0.3, 1.0)), ValidationError);
  CHECK_THROWS_AS(OperatorSpec::whittaker(cplx(0.0, 0.0), cplx(-0.5, 0.0)), ValidationError);
  CHECK_THROWS_AS(OperatorSpec::morse(cplx(0.5, 0.0), cplx(0.0, 1.0)), UnsupportedRegimeError);
  CHECK_THROWS_AS(OperatorSpec::isotonic(cplx(-1.0, 0.0), cplx(0.5, 0.0)), ValidationError);

  auto e1 = endpoint_indices(OperatorSpec::bessel(cplx(0.5, 0.0)));
  CHECK(e1.at_left == 2);
  CHECK(e1.at_right == 0);
  auto e2 = endpoint_indices(OperatorSpec::bessel(cplx(1.5, 0.0)));
  CHECK(e2.at_left == 0);
  auto e3 = endpoint_indices(OperatorSpec::exponential(cplx(1.0, 0.0)));
  CHECK(e3.at_left == 0);
  CHECK(e3.at_right == 0);
  auto e4 = endpoint_indices(OperatorSpec::neg_exponential(1.0, cplx(0.0, 0.0)));
  CHECK(e4.at_left == 0);
  CHECK(e4.at_right == 2);
  CHECK(OperatorSpec::bessel(cplx(0.5, 0.0)).interval() == Interval::HalfLine);
  CHECK(OperatorSpec::harmonic(cplx(1.0, 0.0)).interval() == Interval::FullLine);
}

TEST_CASE("free-resolvent reductions") {
  // Harmonic k = 0: e^{-p|u-v|}/(2p)
  auto k0 = resolvent_kernel(OperatorSpec::harmonic(cplx(0.0, 0.0)), cplx(-1.0, 0.0), 0.0, 1.0);
  CHECK(rel(k0.value, std::exp(-1.0) / 2.0) < 1e-14);
  // Bessel m = 1/2 is the Dirichlet half-line resolvent:
  // (1/k) sinh(k x) e^{-k y} = (e^{-|x-y|} - e^{-(x+y)})/2 at k = 1
  auto kb = resolvent_kernel(OperatorSpec::bessel(cplx(0.5, 0.0)), cplx(-1.0, 0.0), 0.5, 1.0);
  CHECK(rel(kb.value, std::sinh(0.5) * std::exp(-1.0)) < 1e-13);
  CHECK(rel(kb.value, (std::exp(-0.5) - std::exp(-1.5)) / 2.0) < 1e-13);
  // Exponential k = 0 is the free line resolvent
  auto ke = resolvent_kernel(OperatorSpec::exponential(cplx(0.0, 0.0)), cplx(-4.0, 0.0), -0.3, 0.4);
  CHECK(rel(ke.value, std::exp(-2.0 * 0.7) / 4.0) < 1e-14);
}

TEST_CASE("kernel symmetry in x and y") {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> up(0.2, 3.0), ul(-2.0, 2.0);
  cplx z{-1.3, 0.4};
  std::vector<OperatorSpec> half = {
      OperatorSpec::bessel(cplx(0.7, 0.0)),
      OperatorSpec::whittaker(cplx(0.5, 0.0), cplx(0.7, 0.1)),
      OperatorSpec::isotonic(cplx(1.0, 0.2), cplx(0.7, 0.0)),
  };
  std::vector<OperatorSpec> full = {
      OperatorSpec::exponential(cplx(1.0, 0.3)),
      OperatorSpec::neg_exponential(1.0, cplx(0.0, 2.0)),
      OperatorSpec::morse(cplx(0.5, 0.0), cplx(1.0, 0.3)),
      OperatorSpec::harmonic(cplx(1.0, 0.2)),
  };
  for (int i = 0; i < 6; ++i) {
    double a = up(rng), b = up(rng);
    for (const auto& s : half) {
      CHECK(rel(resolvent_kernel(s, z, a, b).value, resolvent_kernel(s, z, b, a).value) < 1e-13);
    }
    double c = ul(rng), d = ul(rng);
    for (const auto& s : full) {
      CHECK(rel(resolvent_kernel(s, z, c, d).value, resolvent_kernel(s, z, d, c).value) < 1e-13);
    }
  }
}

TEST_CASE("derivative jump of the Green kernel is -1") {
  cplx z{-1.1, 0.3};
  std::vector<std::pair<OperatorSpec, double>> cases = {
      {OperatorSpec::bessel(cplx(0.7, 0.0)), 1.1},
      {OperatorSpec::exponential(cplx(1.0, 0.0)), 0.4},
      {OperatorSpec::neg_exponential(1.0, cplx(0.0, 2.0)), -0.2},
      {OperatorSpec::whittaker(cplx(0.5, 0.0), cplx(0.7, 0.0)), 1.3},
      {OperatorSpec::morse(cplx(0.5, 0.0), cplx(1.0, 0.3)), 0.3},
      {OperatorSpec::isotonic(cplx(1.0, 0.0), cplx(0.7, 0.0)), 0.9},
      {OperatorSpec::harmonic(cplx(1.0, 0.0)), 0.6},
  };
  for (const auto& [spec, y] : cases) {
    cplx jp = resolvent_kernel_dx(spec, z, y, y, +1);
    cplx jm = resolvent_kernel_dx(spec, z, y, y, -1);
    INFO(spec.family_name());
    CHECK(std::abs(jp - jm + 1.0) < 1e-8);
  }
}

TEST_CASE("spectra match the closed forms") {
  // Harmonic(k=1): {1, 3, 5, ...}
  auto sh = spectrum(OperatorSpec::harmonic(cplx(1.0, 0.0)), 8);
  CHECK(sh.continuous == ContinuousSpectrum::Empty);
  CHECK(sh.truncated);
  for (int n = 0; n < 8; ++n) CHECK(rel(sh.point[n].eigenvalue, 2.0 * n + 1.0) < 1e-14);
  // Whittaker(beta=2, m=1/2): -1/(n+1)^2
  auto sw = spectrum(OperatorSpec::whittaker(cplx(2.0, 0.0), cplx(0.5, 0.0)), 5);
  REQUIRE(sw.point.size() == 5);
  for (int n = 0; n < 5; ++n) {
    CHECK(rel(sw.point[n].eigenvalue, -1.0 / ((n + 1.0) * (n + 1.0))) < 1e-12);
  }
  // Isotonic(k=1, m=3/2): smallest eigenvalue 2 k (m + 1) = 5
  auto si = spectrum(OperatorSpec::isotonic(cplx(1.0, 0.0), cplx(1.5, 0.0)), 3);
  CHECK(rel(si.point[0].eigenvalue, 5.0) < 1e-14);
  // NegExponential(gamma = e^{i pi 0.6}): -(0.6 + n)^2, n even >= 0
  cplx g = std::exp(cplx(0.0, pi * 0.6));
  auto sn = spectrum(OperatorSpec::neg_exponential(1.0, g), 3);
  REQUIRE(sn.point.size() == 3);
  CHECK(rel(sn.point[0].eigenvalue, -0.36) < 1e-12);
  CHECK(rel(sn.point[1].eigenvalue, -6.76) < 1e-12);
  CHECK(sn.point[1].n == 2);
  // Morse: m_n = beta/2k - n - 1/2 with Re m_n > 0 -> finitely many
  auto sm = spectrum(OperatorSpec::morse(cplx(7.0, 0.0), cplx(1.0, 0.0)), 64);
  CHECK(sm.point.size() == 3); // m_n = 3, 2, 1
  CHECK_FALSE(sm.truncated);
  for (int n = 0; n < 3; ++n) CHECK(rel(sm.point[n].eigenvalue, -(3.0 - n) * (3.0 - n)) < 1e-13);
  // Bessel / Exponential / M^{0,inf}: empty point spectrum
  CHECK(spectrum(OperatorSpec::bessel(cplx(0.5, 0.0))).point.empty());
  CHECK(spectrum(OperatorSpec::exponential(cplx(1.0, 0.0))).point.empty());
  CHECK(spectrum(OperatorSpec::neg_exponential(1.0, cplx(0.0, 0.0))).point.empty());
  auto sinf = spectrum(OperatorSpec::neg_exponential(1.0, cplx(0.0, 0.0), true));
  CHECK(sinf.point.empty());
}

TEST_CASE("kernel prefactor poles coincide with the point spectrum") {
  // scan the first eigenvalues: the resolvent must reject them and evaluate
  // finitely a small distance away
  std::vector<OperatorSpec> specs = {
      OperatorSpec::whittaker(cplx(2.0, 0.0), cplx(0.5, 0.0)),
      OperatorSpec::morse(cplx(7.0, 0.0), cplx(1.0, 0.0)),
      OperatorSpec::isotonic(cplx(1.0, 0.0), cplx(0.7, 0.0)),
      OperatorSpec::harmonic(cplx(1.0, 0.0)),
  };
  for (const auto& s : specs) {
    auto sd = spectrum(s, 3);
    for (const auto& e : sd.point) {
      INFO(s.family_name(), " n=", e.n);
      CHECK_THROWS_AS(resolvent_kernel(s, e.eigenvalue, 0.7, 1.1), SpectralPointError);
      auto near = resolvent_kernel(s, e.eigenvalue + cplx(1e-4, 1e-4), 0.7, 1.1);
      CHECK(std::isfinite(std::abs(near.value)));
      // kernel blows up like 1/dist approaching the pole
      auto nearer = resolvent_kernel(s, e.eigenvalue + cplx(1e-6, 1e-6), 0.7, 1.1);
      CHECK(std::abs(nearer.value) > 10.0 * std::abs(near.value));
    }
  }
}

TEST_CASE("eigenfunctions satisfy the eigenvalue equation pointwise") {
  const double h = 1e-4;
  auto check_eig = [&](const OperatorSpec& s, int n, auto&& potential, double x0) {
    auto sd = spectrum(s, n + 9);
    const EigenEntry* ent = nullptr;
    for (auto& e : sd.point)
      if (e.n == n) ent = &e;
    REQUIRE(ent != nullptr);
    auto f = ent->eigfun;
    cplx d2 = (f(x0 + h) - 2.0 * f(x0) + f(x0 - h)) / (h * h);
    cplx resid = -d2 + potential(x0) * f(x0) - ent->eigenvalue * f(x0);
    CHECK(std::abs(resid) < 1e-5 * (1.0 + std::abs(f(x0))));
  };
  cplx beta{2.0, 0.0}, m{0.5, 0.0};
  check_eig(OperatorSpec::whittaker(beta, m), 1,
            [&](double r) { return (m * m - 0.25) / (r * r) - beta / r; }, 1.7);
  check_eig(OperatorSpec::morse(cplx(7.0, 0.0), cplx(1.0, 0.0)), 0,
            [&](double x) { return std::exp(2.0 * x) - 7.0 * std::exp(x); }, 0.2);
  check_eig(OperatorSpec::isotonic(cplx(1.0, 0.0), cplx(0.7, 0.0)), 2,
            [&](double v) { return (0.7 * 0.7 - 0.25) / (v * v) + v * v; }, 1.1);
  check_eig(OperatorSpec::harmonic(cplx(1.0, 0.0)), 3, [&](double v) { return v * v; }, 0.8);
  cplx g = std::exp(cplx(0.0, pi * 0.6));
  check_eig(OperatorSpec::neg_exponential(1.0, g), 0,
            [&](double x) { return -std::exp(2.0 * x); }, 0.4);
}

TEST_CASE("harmonic eigenfunction n = 0 is the Gaussian ground state") {
  auto f = eigenfunction(OperatorSpec::harmonic(cplx(1.0, 0.0)), 0);
  cplx r0 = f(0.4) / std::exp(-0.4 * 0.4 / 2.0);
  for (double v : {-1.5, 0.9, 2.0}) {
    CHECK(rel(f(v) / std::exp(-v * v / 2.0), r0) < 1e-8);
  }
  CHECK_THROWS_AS(eigenfunction(OperatorSpec::bessel(cplx(0.5, 0.0)), 0), ValidationError);
}

TEST_CASE("family-boundary continuity") {
  cplx z{-1.7, 0.6};
  // Whittaker(beta=0, m) = Bessel(m)
  cplx m{0.6, 0.1};
  CHECK(rel(resolvent_kernel(OperatorSpec::whittaker(cplx(0.0, 0.0), m), z, 0.7, 1.9).value,
            resolvent_kernel(OperatorSpec::bessel(m), z, 0.7, 1.9).value) < 1e-10);
  // Isotonic(k=0, m) = Bessel(m)
  CHECK(rel(resolvent_kernel(OperatorSpec::isotonic(cplx(0.0, 0.0), m), z, 0.7, 1.9).value,
            resolvent_kernel(OperatorSpec::bessel(m), z, 0.7, 1.9).value) < 1e-14);
  // Morse(beta=0, k) = Exponential(k)
  CHECK(rel(resolvent_kernel(OperatorSpec::morse(cplx(0.0, 0.0), cplx(1.0, 0.2)), z, -0.4, 0.8).value,
            resolvent_kernel(OperatorSpec::exponential(cplx(1.0, 0.2)), z, -0.4, 0.8).value) < 1e-10);
}

TEST_CASE("hydrogen pole structure of the Whittaker kernel") {
  // H_{2,1/2}: off-spectrum z evaluates finitely; z near -beta^2/(4(n+1)^2)
  // blows up with the Gamma prefactor
  auto spec = OperatorSpec::whittaker(cplx(2.0, 0.0), cplx(0.5, 0.0));
  auto v = resolvent_kernel(spec, cplx(-1.0 + 0.5, 0.0), 0.7, 1.3); // z = -0.5, off spectrum
  CHECK(std::isfinite(std::abs(v.value)));
}

TEST_CASE("transmutation identities") {
  // ExpBessel at (k, m) = (1 + 0.2i, 0.7), x=0.3, y=0.9
  TransmuteParams p;
  p.k = cplx(1.0, 0.2);
  p.m = cplx(0.7, 0.0);
  auto t1 = transmute(TransmutePair::ExpBessel, p, 0.3, 0.9);
  CHECK(rel(t1.lhs, t1.rhs) < 1e-10);
  // IsotonicWhittaker at (k, m, beta) = (1, 0.8, 0.3), u=0.7, v=1.4
  TransmuteParams p2;
  p2.k = cplx(1.0, 0.0);
  p2.m = cplx(0.8, 0.0);
  p2.beta = cplx(0.3, 0.0);
  auto t2 = transmute(TransmutePair::IsotonicWhittaker, p2, 0.7, 1.4);
  CHECK(rel(t2.lhs, t2.rhs) < 1e-10);
  // MorseWhittaker
  TransmuteParams p3;
  p3.k = cplx(1.0, 0.3);
  p3.m = cplx(0.9, 0.0);
  p3.beta = cplx(0.5, 0.0);
  auto t3 = transmute(TransmutePair::MorseWhittaker, p3, -0.4, 0.6);
  CHECK(rel(t3.lhs, t3.rhs) < 1e-10);
  // IsotonicMorse
  auto t4 = transmute(TransmutePair::IsotonicMorse, p2, 0.9, 1.6);
  CHECK(rel(t4.lhs, t4.rhs) < 1e-10);
  // NegExpBessel at (l, gamma, m) = (1, 2i, 0.6), x=0.2, y=0.8
  TransmuteParams p5;
  p5.ell = 1.0;
  p5.gamma_bc = cplx(0.0, 2.0);
  p5.m = cplx(0.6, 0.0);
  auto t5 = transmute(TransmutePair::NegExpBessel, p5, 0.2, 0.8);
  CHECK(rel(t5.lhs, t5.rhs) < 1e-9);
}

TEST_CASE("neg-exponential boundary realizations and the Krein formula") {
  cplx z{-0.49, 0.0}; // z = -m^2 with m = 0.7 > 0: off [0, inf)
  double ell = 1.0;
  // kappa -> 0 recovers the gamma = 0 kernel
  cplx r0 = resolvent_kernel(OperatorSpec::neg_exponential(ell, cplx(0.0, 0.0)), z, 0.2, 0.8).value;
  CHECK(rel(krein_resolvent(ell, cplx(0.0, 0.0), false, z, 0.2, 0.8), r0) < 1e-14);
  // kappa = inf recovers the gamma = inf kernel
  cplx rinf = resolvent_kernel(OperatorSpec::neg_exponential(ell, cplx(0.0, 0.0), true), z, 0.2, 0.8).value;
  CHECK(rel(krein_resolvent(ell, cplx(0.0, 0.0), true, z, 0.2, 0.8), rinf) < 1e-12);
  // generic kappa equals the closed-form mixed kernel with gamma = kappa
  for (cplx kappa : {cplx(0.7, 0.3), cplx(0.0, 2.0), cplx(-1.2, 0.4)}) {
    cplx kr = krein_resolvent(ell, kappa, false, z, 0.2, 0.8);
    cplx direct = resolvent_kernel(OperatorSpec::neg_exponential(ell, kappa), z, 0.2, 0.8).value;
    CHECK(rel(kr, direct) < 1e-10);
  }
}

TEST_CASE("Mehler kernel: the classical cross term is the consistent reading") {
  // eigen-relation at a single quadrature-free point pair is deferred to the
  // verify tests; here: t -> 0 concentration and the singular-time guard
  CHECK_THROWS_AS(mehler_kernel(pi, cplx(0.1, 0.0), cplx(0.2, 0.0)), ValidationError);
  // symmetric in u <-> v
  cplx a = mehler_kernel(0.3, cplx(0.5, 0.0), cplx(-0.2, 0.0));
  cplx b = mehler_kernel(0.3, cplx(-0.2, 0.0), cplx(0.5, 0.0));
  CHECK(rel(a, b) < 1e-15);
}

TEST_CASE("Hankel multiplier has unit modulus for real order") {
  for (double m : {-0.5, 0.3, 1.0, 2.7}) {
    for (double t : {-3.0, 0.4, 11.0}) {
      CHECK(std::abs(std::abs(xi_multiplier(cplx(m, 0.0), t)) - 1.0) < 1e-13);
    }
  }
}

TEST_CASE("heat and propagator kernels: m = 1/2 reduces to image charges") {
  double t = 0.7, x = 1.0, y = 1.4;
  cplx got = heat_kernel_bessel(cplx(0.5, 0.0), cplx(t, 0.0), x, y);
  double want = (std::exp(-(x - y) * (x - y) / (2.0 * t)) - std::exp(-(x + y) * (x + y) / (2.0 * t))) /
                std::sqrt(2.0 * pi * t);
  CHECK(rel(got, want) < 1e-13);
  // t -> infinity normalization: K_t / [sqrt(2/(pi t)) (xy/t)^{m+1/2} / Gamma(m+1)] -> 1
  cplx m{0.7, 0.0};
  double T = 4e4;
  cplx lead = sqrt_principal(2.0 / (pi * T)) * principal_pow(x * y / T, m + 0.5) *
              reciprocal_gamma(m + 1.0) * sqrt_pi / principal_pow(2.0, m + 0.0);
  // cI_m(s) ~ sqrt(pi) (s/2)^{1/2+m}/Gamma(m+1) for small s
  cplx kt = heat_kernel_bessel(m, cplx(T, 0.0), x, y);
  cplx lead2 = sqrt_principal(2.0 / (pi * T)) * sqrt_pi *
               principal_pow((x * y) / (2.0 * T), m + 0.5) * reciprocal_gamma(m + 1.0) *
               std::exp(-(x * x + y * y) / (2.0 * T));
  CHECK(rel(kt, lead2) < 1e-3);
  // propagator at m = 1/2: e^{i pi (m+1)/2} sqrt(2/(pi t)) sin(xy/t) e^{-i(x^2+y^2)/2t}
  cplx pr = propagator_bessel(cplx(0.5, 0.0), t, +1, x, y);
  cplx pw = std::exp(cplx(0.0, pi * 0.75)) * std::sqrt(2.0 / (pi * t)) * std::sin(x * y / t) *
            std::exp(cplx(0.0, -(x * x + y * y) / (2.0 * t)));
  CHECK(rel(pr, pw) < 1e-13);
}
