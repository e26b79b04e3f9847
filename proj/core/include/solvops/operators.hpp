#pragma once

// The operator families
//   Bessel          H_m      = -d^2/dr^2 + (m^2-1/4)/r^2            on (0,oo)
//   Exponential     M_k      = -d^2/dx^2 + k^2 e^{2x}               on R
//   NegExponential  M^g_{il} = -d^2/dx^2 - l^2 e^{2x}  (b.c. at +oo) on R
//   Whittaker       H_{b,m}  = -d^2/dr^2 + (m^2-1/4)/r^2 - b/r      on (0,oo)
//   Morse           M_{b,k}  = -d^2/dx^2 + k^2 e^{2x} - b e^x       on R
//   Isotonic        N_{k,m}  = -d^2/dv^2 + (m^2-1/4)/v^2 + k^2 v^2  on (0,oo)
//   Harmonic        N_k      = -d^2/dv^2 + k^2 v^2                  on R
// with closed-form resolvent kernels, spectra, eigenfunctions, the Bessel
// heat/propagator and Hankel kernels, Mehler's formula, the transmutation
// identities relating the families, and the Krein rank-one composition for
// the mixed negative-exponential realizations.

#include <functional>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "solvops/complexmath.hpp"

namespace solvops {

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class SpectralPointError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class UnsupportedRegimeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BesselOp { cplx m; };
struct ExponentialOp { cplx k; };
struct NegExponentialOp {
  double ell = 1.0;
  cplx gamma_bc{0.0, 0.0};
  bool gamma_infinite = false;
};
struct WhittakerOp { cplx beta; cplx m; };
struct MorseOp { cplx beta; cplx k; };
struct IsotonicOp { cplx k; cplx m; };
struct HarmonicOp { cplx k; };

using OperatorFamily =
    std::variant<BesselOp, ExponentialOp, NegExponentialOp, WhittakerOp, MorseOp, IsotonicOp, HarmonicOp>;

enum class Interval { HalfLine, FullLine };

struct OperatorSpec {
  OperatorFamily family;

  Interval interval() const;
  const char* family_name() const;

  // factories validate the family invariants and throw ValidationError
  static OperatorSpec bessel(cplx m);
  static OperatorSpec exponential(cplx k);
  static OperatorSpec neg_exponential(double ell, cplx gamma_bc, bool gamma_infinite = false);
  static OperatorSpec whittaker(cplx beta, cplx m);
  static OperatorSpec morse(cplx beta, cplx k);
  static OperatorSpec isotonic(cplx k, cplx m);
  static OperatorSpec harmonic(cplx k);
};

// endpoint index: 0 (no b.c. needed) or 2, per family parameter tables
struct EndpointIndex {
  int at_left = 0;
  int at_right = 0;
};
EndpointIndex endpoint_indices(const OperatorSpec& spec);

enum class ContinuousSpectrum { RayFromZero, FullRealLine, Empty };

struct EigenEntry {
  cplx eigenvalue;
  int n = 0;
  std::function<cplx(double)> eigfun; // unnormalized closed form
};

struct SpectrumDescriptor {
  ContinuousSpectrum continuous = ContinuousSpectrum::RayFromZero;
  std::vector<EigenEntry> point;
  bool truncated = false; // more eigenvalues exist beyond max_count
};

SpectrumDescriptor spectrum(const OperatorSpec& spec, int max_count = 64);
std::function<cplx(double)> eigenfunction(const OperatorSpec& spec, int n);

struct KernelEval {
  cplx z;
  double x = 0.0, y = 0.0;
  cplx value;
  cplx wronskian_used; // W(Psi_b, Psi_a), the 1/prefactor of eq. the kernel divides by
};

// (L - z)^{-1}(x, y); z is the true resolvent parameter
KernelEval resolvent_kernel(const OperatorSpec& spec, cplx z, double x, double y);
// d/dx of the kernel in its first argument (one-sided at x = y; pass side=+1
// for the x > y branch, -1 for x < y)
cplx resolvent_kernel_dx(const OperatorSpec& spec, cplx z, double x, double y, int side = 0);

// natural-parameter adapter: the paper states each family in terms of
// (H+k^2)^{-1}, (M+m^2)^{-1} or (N-2b)^{-1}; z_plane maps those to z
cplx z_from_bessel_k(cplx k);       // z = -k^2
cplx z_from_exponential_m(cplx m);  // z = -m^2
cplx z_from_oscillator_beta(cplx beta); // z = 2 beta

// exp(-t H_m / 2)(x, y), Re t > 0
cplx heat_kernel_bessel(cplx m, cplx t, double x, double y);
// exp(+- i t H_m / 2)(x, y), t real nonzero
cplx propagator_bessel(cplx m, double t, int sign, double x, double y);

// exp(-i t N_1 / 2)(u, v) by Mehler's formula; the cross term in the
// Gaussian is -4 rho u v (classical reading); the printed -2 rho u v variant
// stays available for comparison
cplx mehler_kernel(double t, cplx u, cplx v, bool classical_cross_term = true);

// Hankel transformation kernel sqrt(2/pi) cJ_m(x y) and the multiplier
// Xi_m(t) = e^{i ln2 t} Gamma((m+1+it)/2)/Gamma((m+1-it)/2)
cplx hankel_transform_kernel(cplx m, double x, double y);
cplx xi_multiplier(cplx m, double t);

// boundary values (-l^2 +- i0 + H_m)^{-1}(x,y) of the trigonometric Bessel
// resolvent: +- i0 selects the cH^+- factor
cplx bessel_resolvent_boundary(cplx m, double ell, int sign, double x, double y);

enum class TransmutePair {
  ExpBessel,          // (M_k+m^2)^{-1}(x,y) = e^{-x/2}(H_m+k^2)^{-1}(e^x,e^y)e^{-y/2}
  IsotonicWhittaker,  // (N_{k,m}-2b)^{-1}(u,v) = 2^{-1/2}(u^2/2)^{-1/4}(H_{b,m/2}+k^2)^{-1}(u^2/2,v^2/2)(v^2/2)^{-1/4}
  MorseWhittaker,     // (M_{b,k}+m^2)^{-1}(x,y) = e^{-x/2}(H_{b,m}+k^2)^{-1}(e^x,e^y)e^{-y/2}
  IsotonicMorse,      // (N_{k,m}-2b)^{-1}(u,v) = 2^{-1/2}(u^2/2)^{1/4}(M_{b,k}+(m/2)^2)^{-1}(log u^2/2, log v^2/2)(v^2/2)^{1/4}
  NegExpBessel,       // (M^g_{il}+m^2)^{-1} from the +-i0 boundary values of (H_m-l^2)^{-1}
};

struct TransmuteParams {
  cplx k{1.0, 0.0};
  cplx m{0.5, 0.0};
  cplx beta{0.0, 0.0};
  double ell = 1.0;
  cplx gamma_bc{0.0, 0.0};
};

struct TransmuteResult {
  cplx lhs, rhs;
};

TransmuteResult transmute(TransmutePair pair, const TransmuteParams& p, double x, double y);

// Krein rank-one form for the mixed negative-exponential family:
// R_kappa(z;x,y) = R_0(z;x,y) + Psi_b(z,x) Psi_b(z,y) / (kappa^{-1} W0(z) + W1(z)),
// instantiated so that kappa = gamma reproduces the closed-form kernel.
cplx krein_resolvent(double ell, cplx kappa, bool kappa_infinite, cplx z, double x, double y);

} // namespace solvops
