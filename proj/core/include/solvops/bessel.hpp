#pragma once

// The eight Bessel-type functions of the hyperbolic/trigonometric, 1d/2d
// grid, in the normalizations used throughout:
//   I_m(r)  = (r/2)^m 0F1reg(m+1; r^2/4)          hyperbolic 2d
//   K_m(r)  = (sqrt(pi)/2) (r/2)^m U_m(r^2/4)     2d Macdonald
//   cI_m    = sqrt(pi r/2) I_m,   cK_m = sqrt(2r/pi) K_m     (1d gauge)
//   J_m(r)  = e^{+-i pi m/2} I_m(e^{-+i pi/2} r)  trigonometric 2d
//   H^pm_m  = (2/pi) e^{-+i pi (m+1)/2} K_m(e^{-+i pi/2} r)
//   cJ_m    = sqrt(pi r/2) J_m,   cH^pm_m = sqrt(pi r/2) H^pm_m
// Rotations are carried as explicit windings so both sign choices in the
// defining formulas land on the same values.  Each function has a paired
// _deriv evaluation (analytic d/dr, never finite differences).

#include "solvops/complexmath.hpp"
#include "solvops/hypergeom.hpp"

namespace solvops {

enum class BesselDim { OneD, TwoD };
enum class BesselFlavor { HyperbolicI, MacdonaldK, TrigJ, HankelPlus, HankelMinus };

struct BesselKind {
  BesselDim dim;
  BesselFlavor flavor;
};

SpecialValue bessel_i2d(cplx m, Phased r);
SpecialValue bessel_i2d_deriv(cplx m, Phased r);
SpecialValue macdonald_k2d(cplx m, Phased r);
SpecialValue macdonald_k2d_deriv(cplx m, Phased r);
SpecialValue bessel_i1d(cplx m, Phased r);
SpecialValue bessel_i1d_deriv(cplx m, Phased r);
SpecialValue macdonald_k1d(cplx m, Phased r);
SpecialValue macdonald_k1d_deriv(cplx m, Phased r);
SpecialValue bessel_j2d(cplx m, Phased r);
SpecialValue bessel_j2d_deriv(cplx m, Phased r);
SpecialValue hankel2d(int sign, cplx m, Phased r);
SpecialValue hankel2d_deriv(int sign, cplx m, Phased r);
SpecialValue bessel_j1d(cplx m, Phased r);
SpecialValue bessel_j1d_deriv(cplx m, Phased r);
SpecialValue hankel1d(int sign, cplx m, Phased r);
SpecialValue hankel1d_deriv(int sign, cplx m, Phased r);

// principal-sheet conveniences
inline SpecialValue bessel_i2d(cplx m, cplx r) { return bessel_i2d(m, phased(r)); }
inline SpecialValue bessel_i2d_deriv(cplx m, cplx r) { return bessel_i2d_deriv(m, phased(r)); }
inline SpecialValue macdonald_k2d(cplx m, cplx r) { return macdonald_k2d(m, phased(r)); }
inline SpecialValue macdonald_k2d_deriv(cplx m, cplx r) { return macdonald_k2d_deriv(m, phased(r)); }
inline SpecialValue bessel_i1d(cplx m, cplx r) { return bessel_i1d(m, phased(r)); }
inline SpecialValue bessel_i1d_deriv(cplx m, cplx r) { return bessel_i1d_deriv(m, phased(r)); }
inline SpecialValue macdonald_k1d(cplx m, cplx r) { return macdonald_k1d(m, phased(r)); }
inline SpecialValue macdonald_k1d_deriv(cplx m, cplx r) { return macdonald_k1d_deriv(m, phased(r)); }
inline SpecialValue bessel_j2d(cplx m, cplx r) { return bessel_j2d(m, phased(r)); }
inline SpecialValue bessel_j2d_deriv(cplx m, cplx r) { return bessel_j2d_deriv(m, phased(r)); }
inline SpecialValue hankel2d(int sign, cplx m, cplx r) { return hankel2d(sign, m, phased(r)); }
inline SpecialValue hankel2d_deriv(int sign, cplx m, cplx r) { return hankel2d_deriv(sign, m, phased(r)); }
inline SpecialValue bessel_j1d(cplx m, cplx r) { return bessel_j1d(m, phased(r)); }
inline SpecialValue bessel_j1d_deriv(cplx m, cplx r) { return bessel_j1d_deriv(m, phased(r)); }
inline SpecialValue hankel1d(int sign, cplx m, cplx r) { return hankel1d(sign, m, phased(r)); }
inline SpecialValue hankel1d_deriv(int sign, cplx m, cplx r) { return hankel1d_deriv(sign, m, phased(r)); }

} // namespace solvops
