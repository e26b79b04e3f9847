#include "solvops/operators.hpp"

#include <cmath>

#include "detail/kernel_basis.hpp"
#include "solvops/bessel.hpp"
#include "solvops/hypergeom.hpp"
#include "solvops/whittaker.hpp"

namespace solvops {

namespace {

bool is_zero(cplx z) { return z == cplx(0.0, 0.0); }

// z approaches the continuous ray [0, inf)
bool on_positive_ray(cplx z) { return z.imag() == 0.0 && z.real() >= 0.0; }

// principal sqrt(-z); Re > 0 whenever z avoids [0, inf)
cplx spectral_root(cplx z) { return sqrt_principal(-z); }

void require(bool ok, const char* msg) {
  if (!ok) throw ValidationError(msg);
}

} // namespace

Interval OperatorSpec::interval() const {
  return std::visit(
      [](const auto& f) -> Interval {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, BesselOp> || std::is_same_v<T, WhittakerOp> ||
                      std::is_same_v<T, IsotonicOp>) {
          return Interval::HalfLine;
        } else {
          return Interval::FullLine;
        }
      },
      family);
}

const char* OperatorSpec::family_name() const {
  return std::visit(
      [](const auto& f) -> const char* {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, BesselOp>) return "bessel";
        else if constexpr (std::is_same_v<T, ExponentialOp>) return "exponential";
        else if constexpr (std::is_same_v<T, NegExponentialOp>) return "neg-exponential";
        else if constexpr (std::is_same_v<T, WhittakerOp>) return "whittaker";
        else if constexpr (std::is_same_v<T, MorseOp>) return "morse";
        else if constexpr (std::is_same_v<T, IsotonicOp>) return "isotonic";
        else return "harmonic";
      },
      family);
}

OperatorSpec OperatorSpec::bessel(cplx m) {
  require(m.real() > -1.0, "bessel: requires Re m > -1");
  return {BesselOp{m}};
}

OperatorSpec OperatorSpec::exponential(cplx k) {
  require(k.real() > 0.0 || is_zero(k), "exponential: requires Re k > 0 or k = 0");
  return {ExponentialOp{k}};
}

OperatorSpec OperatorSpec::neg_exponential(double ell, cplx gamma_bc, bool gamma_infinite) {
  require(ell > 0.0, "neg-exponential: requires ell > 0");
  return {NegExponentialOp{ell, gamma_bc, gamma_infinite}};
}

OperatorSpec OperatorSpec::whittaker(cplx beta, cplx m) {
  require(m.real() > -1.0, "whittaker: requires Re m > -1");
  require(!(is_zero(beta) && m == cplx(-0.5, 0.0)), "whittaker: (beta, m) = (0, -1/2) excluded");
  return {WhittakerOp{beta, m}};
}

OperatorSpec OperatorSpec::morse(cplx beta, cplx k) {
  if (k.real() == 0.0 && !is_zero(k))
    throw UnsupportedRegimeError("morse: Re k = 0, k != 0 is not covered");
  require(k.real() > 0.0, "morse: requires Re k > 0");
  return {MorseOp{beta, k}};
}

OperatorSpec OperatorSpec::isotonic(cplx k, cplx m) {
  require(k.real() >= 0.0, "isotonic: requires Re k >= 0");
  require(m.real() > -1.0, "isotonic: requires Re m > -1");
  return {IsotonicOp{k, m}};
}

OperatorSpec OperatorSpec::harmonic(cplx k) {
  require(k.real() >= 0.0, "harmonic: requires Re k >= 0");
  return {HarmonicOp{k}};
}

EndpointIndex endpoint_indices(const OperatorSpec& spec) {
  return std::visit(
      [](const auto& f) -> EndpointIndex {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, BesselOp> || std::is_same_v<T, IsotonicOp>) {
          return {std::abs(f.m.real()) < 1.0 ? 2 : 0, 0};
        } else if constexpr (std::is_same_v<T, WhittakerOp>) {
          return {std::abs(f.m.real()) < 1.0 ? 2 : 0, 0};
        } else if constexpr (std::is_same_v<T, NegExponentialOp>) {
          return {0, 2}; // Re k = 0, k != 0 at +inf
        } else {
          return {0, 0};
        }
      },
      spec.family);
}

namespace detail {

namespace {

KernelBasis bessel_basis(cplx m, cplx z) {
  cplx k = spectral_root(z);
  KernelBasis b;
  b.z = z;
  b.wronskian = k;
  b.psi_a = [m, k](double x) { return bessel_i1d(m, k * x).value; };
  b.dpsi_a = [m, k](double x) { return k * bessel_i1d_deriv(m, k * x).value; };
  b.psi_b = [m, k](double x) { return macdonald_k1d(m, k * x).value; };
  b.dpsi_b = [m, k](double x) { return k * macdonald_k1d_deriv(m, k * x).value; };
  return b;
}

KernelBasis free_line_basis(cplx z) {
  cplx p = spectral_root(z);
  KernelBasis b;
  b.z = z;
  b.wronskian = 2.0 * p;
  b.psi_a = [p](double x) { return std::exp(p * x); };
  b.dpsi_a = [p](double x) { return p * std::exp(p * x); };
  b.psi_b = [p](double x) { return std::exp(-p * x); };
  b.dpsi_b = [p](double x) { return -p * std::exp(-p * x); };
  return b;
}

KernelBasis exponential_basis(const ExponentialOp& f, cplx z) {
  if (is_zero(f.k)) return free_line_basis(z);
  cplx m = spectral_root(z);
  cplx k = f.k;
  KernelBasis b;
  b.z = z;
  b.wronskian = cplx(1.0, 0.0);
  b.psi_a = [m, k](double x) { return bessel_i2d(m, k * std::exp(x)).value; };
  b.dpsi_a = [m, k](double x) {
    return k * std::exp(x) * bessel_i2d_deriv(m, k * std::exp(x)).value;
  };
  b.psi_b = [m, k](double x) { return macdonald_k2d(m, k * std::exp(x)).value; };
  b.dpsi_b = [m, k](double x) {
    return k * std::exp(x) * macdonald_k2d_deriv(m, k * std::exp(x)).value;
  };
  return b;
}

KernelBasis neg_exponential_basis(const NegExponentialOp& f, cplx z) {
  cplx m = spectral_root(z);
  double ell = f.ell;
  cplx eimp = std::exp(cplx(0.0, pi) * m);
  // Psi_b = e^{i m pi} H^+ + gamma H^-; W(Psi_b, J) = (2i/pi)(gamma - e^{i m pi})
  cplx ca, cb;
  cplx w;
  if (f.gamma_infinite) {
    ca = 0.0, cb = 1.0;
    w = cplx(0.0, 2.0 / pi);
  } else {
    ca = eimp;
    cb = f.gamma_bc;
    w = cplx(0.0, 2.0 / pi) * (f.gamma_bc - eimp);
    if (std::abs(w) < 1e-12 * (1.0 + std::abs(f.gamma_bc)))
      throw SpectralPointError("neg-exponential: z is an eigenvalue of the mixed realization");
  }
  KernelBasis b;
  b.z = z;
  b.wronskian = w;
  b.psi_a = [m, ell](double x) { return bessel_j2d(m, ell * std::exp(x)).value; };
  b.dpsi_a = [m, ell](double x) {
    return ell * std::exp(x) * bessel_j2d_deriv(m, ell * std::exp(x)).value;
  };
  b.psi_b = [m, ell, ca, cb](double x) {
    cplx r = ell * std::exp(x);
    cplx h = ca == cplx(0.0, 0.0) ? cplx(0.0, 0.0) : ca * hankel2d(+1, m, r).value;
    if (cb != cplx(0.0, 0.0)) h += cb * hankel2d(-1, m, r).value;
    return h;
  };
  b.dpsi_b = [m, ell, ca, cb](double x) {
    cplx r = ell * std::exp(x);
    cplx h = ca == cplx(0.0, 0.0) ? cplx(0.0, 0.0) : ca * hankel2d_deriv(+1, m, r).value;
    if (cb != cplx(0.0, 0.0)) h += cb * hankel2d_deriv(-1, m, r).value;
    return r * h;
  };
  return b;
}

KernelBasis whittaker_basis(const WhittakerOp& f, cplx z) {
  cplx k = spectral_root(z);
  cplx bk = f.beta / (2.0 * k);
  cplx garg = 0.5 + f.m - bk;
  if (near_nonpositive_integer(garg, 1e-12))
    throw SpectralPointError("whittaker: z is a point eigenvalue (Gamma prefactor pole)");
  WhittakerParams p{bk, f.m};
  KernelBasis b;
  b.z = z;
  b.wronskian = 2.0 * k * reciprocal_gamma(garg);
  b.psi_a = [p, k](double x) { return whit_i1d(p, 2.0 * k * x).value; };
  b.dpsi_a = [p, k](double x) { return 2.0 * k * whit_i1d_deriv(p, 2.0 * k * x).value; };
  b.psi_b = [p, k](double x) { return whit_k1d(p, 2.0 * k * x).value; };
  b.dpsi_b = [p, k](double x) { return 2.0 * k * whit_k1d_deriv(p, 2.0 * k * x).value; };
  return b;
}

KernelBasis morse_basis(const MorseOp& f, cplx z) {
  cplx m = spectral_root(z);
  cplx bk = f.beta / (2.0 * f.k);
  cplx garg = 0.5 + m - bk;
  if (near_nonpositive_integer(garg, 1e-12))
    throw SpectralPointError("morse: z is a point eigenvalue (Gamma prefactor pole)");
  WhittakerParams p{bk, m};
  cplx k = f.k;
  KernelBasis b;
  b.z = z;
  b.wronskian = reciprocal_gamma(garg);
  b.psi_a = [p, k](double x) { return whit_i2d(p, 2.0 * k * std::exp(x)).value; };
  b.dpsi_a = [p, k](double x) {
    return 2.0 * k * std::exp(x) * whit_i2d_deriv(p, 2.0 * k * std::exp(x)).value;
  };
  b.psi_b = [p, k](double x) { return whit_k2d(p, 2.0 * k * std::exp(x)).value; };
  b.dpsi_b = [p, k](double x) {
    return 2.0 * k * std::exp(x) * whit_k2d_deriv(p, 2.0 * k * std::exp(x)).value;
  };
  return b;
}

// effective k for the boundary Re k = 0 realizations per the half-plane rule
cplx oscillator_effective_k(cplx k, cplx z, const char* who) {
  if (k.real() > 0.0) return k;
  if (z.imag() == 0.0)
    throw SpectralPointError(std::string(who) + ": real z lies in the continuous spectrum at Re k = 0");
  if (k.imag() < 0.0) k = -k;        // the -il and +il realizations coincide
  return z.imag() > 0.0 ? -k : k;    // ktilde = -+ k for +- Im z > 0
}

KernelBasis isotonic_basis(const IsotonicOp& f, cplx z) {
  if (is_zero(f.k)) return bessel_basis(f.m, z); // N_{0,m} = H_m
  cplx beta = z / 2.0;
  cplx kt = oscillator_effective_k(f.k, z, "isotonic");
  cplx bk2 = 0.5 + f.m / 2.0 - beta / (2.0 * kt);
  if (near_nonpositive_integer(bk2, 1e-12))
    throw SpectralPointError("isotonic: z is a point eigenvalue (Gamma prefactor pole)");
  cplx sk = sqrt_principal(kt);
  WhittakerParams p{beta / kt, f.m};
  KernelBasis b;
  b.z = z;
  b.wronskian = 2.0 * sk * reciprocal_gamma(bk2);
  b.psi_a = [p, sk](double v) { return isotonic_i(p, sk * v).value; };
  b.dpsi_a = [p, sk](double v) { return sk * isotonic_i_deriv(p, sk * v).value; };
  b.psi_b = [p, sk](double v) { return isotonic_k(p, sk * v).value; };
  b.dpsi_b = [p, sk](double v) { return sk * isotonic_k_deriv(p, sk * v).value; };
  return b;
}

KernelBasis harmonic_basis(const HarmonicOp& f, cplx z) {
  if (is_zero(f.k)) return free_line_basis(z);
  cplx beta = z / 2.0;
  cplx kt = oscillator_effective_k(f.k, z, "harmonic");
  cplx bk = beta / kt;
  if (near_nonpositive_integer(0.5 - bk, 1e-12))
    throw SpectralPointError("harmonic: z is a point eigenvalue (Gamma prefactor pole)");
  cplx sk = sqrt_principal(kt);
  KernelBasis b;
  b.z = z;
  // W = 2 sqrt(2 pi k) / (2^{beta/k} Gamma(1/2 - beta/k))
  b.wronskian = 2.0 * std::sqrt(2.0 * pi) * sk * principal_pow(2.0, -bk) * reciprocal_gamma(0.5 - bk);
  b.psi_a = [bk, sk](double u) { return weber_k(bk, -sk * u).value; };
  b.dpsi_a = [bk, sk](double u) { return -sk * weber_k_deriv(bk, -sk * u).value; };
  b.psi_b = [bk, sk](double u) { return weber_k(bk, sk * u).value; };
  b.dpsi_b = [bk, sk](double u) { return sk * weber_k_deriv(bk, sk * u).value; };
  return b;
}

} // namespace

KernelBasis make_kernel_basis(const OperatorSpec& spec, cplx z) {
  return std::visit(
      [&](const auto& f) -> KernelBasis {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, BesselOp>) {
          if (on_positive_ray(z)) throw SpectralPointError("bessel: z on the continuous ray");
          return bessel_basis(f.m, z);
        } else if constexpr (std::is_same_v<T, ExponentialOp>) {
          if (on_positive_ray(z)) throw SpectralPointError("exponential: z on the continuous ray");
          return exponential_basis(f, z);
        } else if constexpr (std::is_same_v<T, NegExponentialOp>) {
          if (on_positive_ray(z)) throw SpectralPointError("neg-exponential: z on the continuous ray");
          return neg_exponential_basis(f, z);
        } else if constexpr (std::is_same_v<T, WhittakerOp>) {
          if (on_positive_ray(z)) throw SpectralPointError("whittaker: z on the continuous ray");
          return whittaker_basis(f, z);
        } else if constexpr (std::is_same_v<T, MorseOp>) {
          if (on_positive_ray(z)) throw SpectralPointError("morse: z on the continuous ray");
          return morse_basis(f, z);
        } else if constexpr (std::is_same_v<T, IsotonicOp>) {
          if (is_zero(f.k) && on_positive_ray(z))
            throw SpectralPointError("isotonic: z on the continuous ray");
          return isotonic_basis(f, z);
        } else {
          if (is_zero(f.k) && on_positive_ray(z))
            throw SpectralPointError("harmonic: z on the continuous ray");
          return harmonic_basis(f, z);
        }
      },
      spec.family);
}

} // namespace detail

KernelEval resolvent_kernel(const OperatorSpec& spec, cplx z, double x, double y) {
  auto basis = detail::make_kernel_basis(spec, z);
  return {z, x, y, basis.kernel(x, y), basis.wronskian};
}

cplx resolvent_kernel_dx(const OperatorSpec& spec, cplx z, double x, double y, int side) {
  auto basis = detail::make_kernel_basis(spec, z);
  return basis.kernel_dx(x, y, side);
}

cplx z_from_bessel_k(cplx k) { return -k * k; }
cplx z_from_exponential_m(cplx m) { return -m * m; }
cplx z_from_oscillator_beta(cplx beta) { return 2.0 * beta; }

namespace {

struct PointSpectrumBuilder {
  std::vector<EigenEntry> entries;
  bool truncated = false;
};

} // namespace

SpectrumDescriptor spectrum(const OperatorSpec& spec, int max_count) {
  SpectrumDescriptor out;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, BesselOp> || std::is_same_v<T, ExponentialOp>) {
          out.continuous = ContinuousSpectrum::RayFromZero;
        } else if constexpr (std::is_same_v<T, NegExponentialOp>) {
          out.continuous = ContinuousSpectrum::RayFromZero;
          if (!f.gamma_infinite && !is_zero(f.gamma_bc)) {
            // gamma = e^{i pi alpha}, Re alpha in (-1, 1]; eigenvalues
            // -(alpha+n)^2 for even n with Re(alpha+n) > 0
            cplx alpha = log_principal(f.gamma_bc) / cplx(0.0, pi);
            double ell = f.ell;
            for (int n = (alpha.real() > 0.0 ? 0 : 2);; n += 2) {
              if (int(out.point.size()) >= max_count) {
                out.truncated = true;
                break;
              }
              cplx an = alpha + double(n);
              out.point.push_back(
                  {-an * an, n, [an, ell](double x) { return bessel_j2d(an, ell * std::exp(x)).value; }});
            }
          }
        } else if constexpr (std::is_same_v<T, WhittakerOp>) {
          out.continuous = ContinuousSpectrum::RayFromZero;
          cplx beta = f.beta, m = f.m;
          for (int n = 0; n < 100000; ++n) {
            if (int(out.point.size()) >= max_count) {
              out.truncated = true;
              break;
            }
            cplx t = m + double(n) + 0.5;
            if (is_zero(t)) continue;
            cplx kn = beta / (2.0 * t);
            if (kn.real() <= 0.0) {
              // Re(beta/t) only grows harder to satisfy once n passes |m|+|beta|
              if (double(n) > std::abs(m) + std::abs(beta) + 4.0) break;
              continue;
            }
            WhittakerParams p{t, m};
            out.point.push_back({-kn * kn, n, [p, kn](double r) {
                                   return whit_i1d(p, 2.0 * kn * r).value;
                                 }});
          }
        } else if constexpr (std::is_same_v<T, MorseOp>) {
          out.continuous = ContinuousSpectrum::RayFromZero;
          cplx bk = f.beta / (2.0 * f.k), k = f.k;
          for (int n = 0;; ++n) {
            if (int(out.point.size()) >= max_count) {
              out.truncated = true;
              break;
            }
            cplx mn = bk - double(n) - 0.5;
            if (mn.real() <= 0.0) break;
            WhittakerParams p{bk, mn};
            out.point.push_back({-mn * mn, n, [p, k](double x) {
                                   return whit_i2d(p, 2.0 * k * std::exp(x)).value;
                                 }});
          }
        } else if constexpr (std::is_same_v<T, IsotonicOp>) {
          if (is_zero(f.k)) {
            out.continuous = ContinuousSpectrum::RayFromZero; // N_{0,m} = H_m
          } else if (f.k.real() == 0.0) {
            out.continuous = ContinuousSpectrum::FullRealLine;
          } else {
            out.continuous = ContinuousSpectrum::Empty; // sigma = sigma_p
            cplx k = f.k, m = f.m;
            cplx sk = sqrt_principal(k);
            for (int n = 0;; ++n) {
              if (int(out.point.size()) >= max_count) {
                out.truncated = true;
                break;
              }
              cplx eig = 2.0 * k * (2.0 * n + m + 1.0);
              WhittakerParams p{2.0 * n + m + 1.0, m};
              out.point.push_back({eig, n, [p, sk](double v) {
                                     return isotonic_i(p, sk * v).value;
                                   }});
            }
          }
        } else if constexpr (std::is_same_v<T, HarmonicOp>) {
          if (is_zero(f.k)) {
            out.continuous = ContinuousSpectrum::RayFromZero;
          } else if (f.k.real() == 0.0) {
            out.continuous = ContinuousSpectrum::FullRealLine;
          } else {
            out.continuous = ContinuousSpectrum::Empty;
            cplx k = f.k;
            cplx sk = sqrt_principal(k);
            for (int n = 0;; ++n) {
              if (int(out.point.size()) >= max_count) {
                out.truncated = true;
                break;
              }
              cplx bk = double(n) + 0.5;
              out.point.push_back({k * (2.0 * n + 1.0), n, [bk, sk](double v) {
                                     return weber_k(bk, sk * v).value;
                                   }});
            }
          }
        }
      },
      spec.family);
  return out;
}

std::function<cplx(double)> eigenfunction(const OperatorSpec& spec, int n) {
  auto sd = spectrum(spec, n + 1 + 8);
  for (const auto& e : sd.point) {
    if (e.n == n) return e.eigfun;
  }
  throw ValidationError("eigenfunction: index n is not an admissible eigenvalue index");
}

cplx heat_kernel_bessel(cplx m, cplx t, double x, double y) {
  if (m.real() <= -1.0) throw ValidationError("heat_kernel_bessel: Re m > -1 required");
  if (t.real() <= 0.0) throw ValidationError("heat_kernel_bessel: Re t > 0 required");
  cplx pref = sqrt_principal(2.0 / (pi * t));
  return pref * bessel_i1d(m, x * y / t).value * std::exp(-(x * x + y * y) / (2.0 * t));
}

cplx propagator_bessel(cplx m, double t, int sign, double x, double y) {
  if (m.real() <= -1.0) throw ValidationError("propagator_bessel: Re m > -1 required");
  if (t == 0.0) throw ValidationError("propagator_bessel: t must be nonzero");
  double s = sign >= 0 ? 1.0 : -1.0;
  cplx pref = std::exp(cplx(0.0, s * pi / 2.0) * (m + 1.0)) * sqrt_principal(2.0 / (pi * t));
  cplx osc = std::exp(cplx(0.0, -s * (x * x + y * y) / (2.0 * t)));
  return pref * bessel_j1d(m, cplx(x * y / t, 0.0)).value * osc;
}

cplx mehler_kernel(double t, cplx u, cplx v, bool classical_cross_term) {
  cplx rho = std::exp(cplx(0.0, -t));
  cplx om = 1.0 - rho * rho;
  if (std::abs(om) < 1e-12) throw ValidationError("mehler_kernel: singular at t in pi Z");
  double cross = classical_cross_term ? 4.0 : 2.0;
  cplx num = (1.0 + rho * rho) * (u * u + v * v) - cross * rho * u * v;
  return sqrt_principal(rho / om) / sqrt_pi * std::exp(-num / (2.0 * om));
}

cplx hankel_transform_kernel(cplx m, double x, double y) {
  if (m.real() <= -1.0) throw ValidationError("hankel_transform_kernel: Re m > -1 required");
  return std::sqrt(2.0 / pi) * bessel_j1d(m, cplx(x * y, 0.0)).value;
}

cplx xi_multiplier(cplx m, double t) {
  cplx it{0.0, t};
  return std::exp(cplx(0.0, std::log(2.0) * t)) * gamma((m + 1.0 + it) / 2.0).value /
         gamma((m + 1.0 - it) / 2.0).value;
}

cplx bessel_resolvent_boundary(cplx m, double ell, int sign, double x, double y) {
  double s = sign >= 0 ? 1.0 : -1.0;
  double xs = x < y ? x : y;
  double xl = x < y ? y : x;
  cplx pref = cplx(0.0, s / ell);
  return pref * bessel_j1d(m, cplx(ell * xs, 0.0)).value *
         hankel1d(sign, m, cplx(ell * xl, 0.0)).value;
}

TransmuteResult transmute(TransmutePair pair, const TransmuteParams& p, double x, double y) {
  switch (pair) {
    case TransmutePair::ExpBessel: {
      cplx lhs = resolvent_kernel(OperatorSpec::exponential(p.k), -p.m * p.m, x, y).value;
      cplx rhs = std::exp(-(x + y) / 2.0) *
                 resolvent_kernel(OperatorSpec::bessel(p.m), -p.k * p.k, std::exp(x), std::exp(y)).value;
      return {lhs, rhs};
    }
    case TransmutePair::MorseWhittaker: {
      cplx lhs = resolvent_kernel(OperatorSpec::morse(p.beta, p.k), -p.m * p.m, x, y).value;
      cplx rhs = std::exp(-(x + y) / 2.0) *
                 resolvent_kernel(OperatorSpec::whittaker(p.beta, p.m), -p.k * p.k,
                                  std::exp(x), std::exp(y)).value;
      return {lhs, rhs};
    }
    case TransmutePair::IsotonicWhittaker: {
      cplx lhs = resolvent_kernel(OperatorSpec::isotonic(p.k, p.m), 2.0 * p.beta, x, y).value;
      double ru = x * x / 2.0, rv = y * y / 2.0;
      cplx rhs = std::pow(2.0, -0.5) * std::pow(ru, -0.25) * std::pow(rv, -0.25) *
                 resolvent_kernel(OperatorSpec::whittaker(p.beta, p.m / 2.0), -p.k * p.k, ru, rv).value;
      return {lhs, rhs};
    }
    case TransmutePair::IsotonicMorse: {
      cplx lhs = resolvent_kernel(OperatorSpec::isotonic(p.k, p.m), 2.0 * p.beta, x, y).value;
      double ru = x * x / 2.0, rv = y * y / 2.0;
      cplx rhs = std::pow(2.0, -0.5) * std::pow(ru, 0.25) * std::pow(rv, 0.25) *
                 resolvent_kernel(OperatorSpec::morse(p.beta, p.k), -(p.m / 2.0) * (p.m / 2.0),
                                  std::log(ru), std::log(rv)).value;
      return {lhs, rhs};
    }
    case TransmutePair::NegExpBessel: {
      cplx lhs = resolvent_kernel(OperatorSpec::neg_exponential(p.ell, p.gamma_bc), -p.m * p.m, x, y).value;
      cplx eimp = std::exp(cplx(0.0, pi) * p.m);
      cplx d = eimp - p.gamma_bc;
      cplx wx = std::exp(-(x + y) / 2.0);
      cplx rplus = bessel_resolvent_boundary(p.m, p.ell, +1, std::exp(x), std::exp(y));
      cplx rminus = bessel_resolvent_boundary(p.m, p.ell, -1, std::exp(x), std::exp(y));
      // coefficients that reproduce the closed-form mixed kernel; the gamma
      // term carries gamma/(gamma - e^{i m pi})
      cplx rhs = eimp / d * wx * rplus - p.gamma_bc / d * wx * rminus;
      return {lhs, rhs};
    }
  }
  throw ValidationError("transmute: unsupported pair");
}

cplx krein_resolvent(double ell, cplx kappa, bool kappa_infinite, cplx z, double x, double y) {
  // R_0: the gamma = 0 realization; Psi_b(z, .) = J_m(l e^.), and with the
  // frozen normalization (dictionary gamma = kappa) the denominator is
  // kappa^{-1} W0 + W1 with W0 = e^{i m pi}/(i pi), W1 = i/pi.
  cplx r0 = resolvent_kernel(OperatorSpec::neg_exponential(ell, cplx(0.0, 0.0)), z, x, y).value;
  if (!kappa_infinite && is_zero(kappa)) return r0;
  cplx m = spectral_root(z);
  cplx w0 = std::exp(cplx(0.0, pi) * m) / cplx(0.0, pi);
  cplx w1 = cplx(0.0, 1.0 / pi);
  cplx denom = kappa_infinite ? w1 : w0 / kappa + w1;
  if (std::abs(denom) < 1e-13)
    throw SpectralPointError("krein_resolvent: eigenvalue of the mixed realization");
  cplx jb_x = bessel_j2d(m, ell * std::exp(x)).value;
  cplx jb_y = bessel_j2d(m, ell * std::exp(y)).value;
  return r0 + jb_x * jb_y / denom;
}

} // namespace solvops
