#include "solvops/complexmath.hpp"

#include <cmath>

namespace solvops {

double arg_principal(cplx z) {
  double im = z.imag();
  if (im == 0.0) im = +0.0; // fold -0 onto the upper lip
  return std::atan2(im, z.real());
}

cplx log_principal(cplx z) {
  return {std::log(std::abs(z)), arg_principal(z)};
}

cplx principal_pow(cplx z, cplx a) {
  if (z == cplx(0.0, 0.0)) {
    if (a.real() > 0.0) return {0.0, 0.0};
    throw std::domain_error("principal_pow: zero base with Re(a) <= 0");
  }
  if (a == cplx(0.0, 0.0)) return {1.0, 0.0};
  return std::exp(a * log_principal(z));
}

cplx sqrt_principal(cplx z) {
  return principal_pow(z, cplx(0.5, 0.0));
}

double Phased::theta() const {
  return arg_principal(base) + quarter_turns * (pi / 2.0);
}

cplx Phased::value() const {
  switch (((quarter_turns % 4) + 4) % 4) {
    case 0: return base;
    case 1: return {-base.imag(), base.real()};
    case 2: return -base;
    default: return {base.imag(), -base.real()};
  }
}

cplx Phased::pow(cplx a) const {
  if (base == cplx(0.0, 0.0)) {
    if (a.real() > 0.0) return {0.0, 0.0};
    throw std::domain_error("Phased::pow: zero base with Re(a) <= 0");
  }
  return std::exp(a * cplx(std::log(std::abs(base)), theta()));
}

Phased Phased::squared() const {
  // keep |arg base| <= pi/2 in the new base so the doubled phase is explicit
  Phased z = *this;
  double a = arg_principal(z.base);
  if (a > pi / 2.0) {
    z.base = cplx(z.base.imag(), -z.base.real()); // divide by i
    z.quarter_turns += 1;
  } else if (a <= -pi / 2.0) {
    z.base = cplx(-z.base.imag(), z.base.real()); // multiply by i
    z.quarter_turns -= 1;
  }
  return {z.base * z.base, 2 * z.quarter_turns};
}

Phased phased(cplx z) { return {z, 0}; }

Phased rotate(Phased z, double delta) {
  int q = int(std::lround(delta / (pi / 2.0)));
  return {z.base, z.quarter_turns + q};
}

Phased rotate(cplx z, double delta) { return rotate(phased(z), delta); }

bool near_nonpositive_integer(cplx z, double tol) {
  double n = std::round(z.real());
  if (n > 0.5) return false;
  return std::abs(z.real() - n) <= tol && std::abs(z.imag()) <= tol;
}

namespace {

// Lanczos g = 607/128, 15 coefficients (Godfrey's set).
constexpr double lanczos_g = 4.7421875; // 607/128
constexpr double lanczos_c[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// valid for Re z >= 0.5
cplx gamma_lanczos_right(cplx z) {
  cplx x = z - 1.0;
  cplx sum = lanczos_c[0];
  for (int i = 1; i < 15; ++i) sum += lanczos_c[i] / (x + double(i));
  cplx t = x + lanczos_g + 0.5;
  // Gamma(z) = sqrt(2 pi) t^(x+1/2) e^(-t) sum
  return std::sqrt(2.0 * pi) * std::exp((x + 0.5) * log_principal(t) - t) * sum;
}

} // namespace

GammaValue gamma(cplx z) {
  if (near_nonpositive_integer(z)) {
    return {cplx(INFINITY, 0.0), true, 1};
  }
  if (z.real() >= 0.5) return {gamma_lanczos_right(z), false, 0};
  // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
  cplx s = std::sin(pi * z);
  return {pi / (s * gamma_lanczos_right(1.0 - z)), false, 0};
}

cplx reciprocal_gamma(cplx z) {
  if (near_nonpositive_integer(z)) return {0.0, 0.0};
  if (z.real() >= 0.5) return 1.0 / gamma_lanczos_right(z);
  return std::sin(pi * z) * gamma_lanczos_right(1.0 - z) / pi;
}

cplx pochhammer(cplx c, int k) {
  cplx p{1.0, 0.0};
  for (int j = 0; j < k; ++j) p *= c + double(j);
  return p;
}

} // namespace solvops
