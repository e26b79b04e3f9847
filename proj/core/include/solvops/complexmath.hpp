#pragma once

// Complex scalar utilities with pinned branch conventions: principal argument
// in (-pi, pi], powers and logs on that branch everywhere, plus the complex
// gamma function, Pochhammer symbols and phase-tracked ("winding") arguments
// for evaluations that leave the principal sheet.

#include <complex>
#include <stdexcept>

namespace solvops {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline const double sqrt_pi = std::sqrt(pi);

// Principal argument in (-pi, pi].  A negative-zero imaginary part is treated
// as +0 so that values on the negative real axis always land on the upper lip
// of the cut.
double arg_principal(cplx z);

// log z = ln|z| + i arg(z) with arg as above.
cplx log_principal(cplx z);

// z^a on the principal branch.  z == 0 returns 0 when Re(a) > 0 and throws
// std::domain_error otherwise.
cplx principal_pow(cplx z, cplx a);

// Principal square root with Re >= 0; the Im > 0 lip is chosen on the cut.
cplx sqrt_principal(cplx z);

// A complex number with an explicit winding: the carried argument is
// arg_principal(base) + quarter_turns * pi/2, NOT wrapped back to (-pi, pi].
// Rotations by multiples of pi/2 adjust the count exactly, so expressions
// like e^{+i pi} r and e^{-i pi} r stay on their intended sheets and the
// winding survives squaring.
struct Phased {
  cplx base{0.0, 0.0};
  int quarter_turns = 0;

  double theta() const; // total carried argument
  cplx value() const;   // base * i^quarter_turns, exact axis flips
  cplx pow(cplx a) const; // z^a honoring the carried argument
  double abs() const { return std::abs(base); }
  Phased squared() const; // z^2 with doubled winding
};

Phased phased(cplx z); // principal sheet
// delta must be a multiple of pi/2 (asserted to the nearest quarter turn)
Phased rotate(Phased z, double delta);
Phased rotate(cplx z, double delta);

struct GammaValue {
  cplx value{0.0, 0.0};
  bool is_pole = false;
  int pole_order = 0;
};

// Gamma by the 15-term Lanczos rational approximation (g = 607/128) with the
// reflection formula for Re z < 0.5.  Poles at nonpositive integers are
// reported in-band: is_pole set, value infinite, never NaN.
GammaValue gamma(cplx z);

// Entire reciprocal 1/Gamma(z); exactly 0 at nonpositive integers.
cplx reciprocal_gamma(cplx z);

// (c)_k = c (c+1) ... (c+k-1), direct product; (c)_0 = 1.
cplx pochhammer(cplx c, int k);

// true if z is within tol of a nonpositive integer (pole set of Gamma)
bool near_nonpositive_integer(cplx z, double tol = 0.0);

} // namespace solvops
