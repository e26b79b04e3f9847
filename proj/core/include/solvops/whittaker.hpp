#pragma once

// Whittaker-type functions in Olver normalization:
//   cI_{b,m}(r) = r^{1/2+m} e^{-+r/2} 1F1reg(1/2+m-+b; 1+2m; +-r)
//   cK_{b,m}(r) = r^b e^{-r/2} 2F0(1/2+m-b, 1/2-m-b; -; -1/r)
//   I_{b,m} = sqrt(2/(pi r)) cI,   K_{b,m} = sqrt(pi/(2r)) cK      (2d)
//   isotonic II_{b,m}(v) = v^{-1/2} cI_{b/2,m/2}(v^2),  KK likewise
//   Weber II_{b,+-}(v) = II_{b,-+1/2}(v) extended by parity,
//         KK_b(v) = KK_{b,+-1/2}(v) continued to the whole plane.
// cK path selection: asymptotic 2F0 for large r, connection formula (with
// compensated summation once cancellation would cost double more than ~3
// digits), two-sided epsilon limit when 2m sits within 1e-3 of an integer.

#include "solvops/complexmath.hpp"
#include "solvops/hypergeom.hpp"

namespace solvops {

struct WhittakerParams {
  cplx beta{0.0, 0.0};
  cplx m{0.0, 0.0};
};

SpecialValue whit_i1d(WhittakerParams p, Phased r);
SpecialValue whit_i1d_deriv(WhittakerParams p, Phased r);
SpecialValue whit_k1d(WhittakerParams p, Phased r);
SpecialValue whit_k1d_deriv(WhittakerParams p, Phased r);
SpecialValue whit_i2d(WhittakerParams p, Phased r);
SpecialValue whit_i2d_deriv(WhittakerParams p, Phased r);
SpecialValue whit_k2d(WhittakerParams p, Phased r);
SpecialValue whit_k2d_deriv(WhittakerParams p, Phased r);

SpecialValue isotonic_i(WhittakerParams p, Phased v);
SpecialValue isotonic_i_deriv(WhittakerParams p, Phased v);
SpecialValue isotonic_k(WhittakerParams p, Phased v);
SpecialValue isotonic_k_deriv(WhittakerParams p, Phased v);

// direct 1F1 form of II (the defining series, rather than the composed
// v^{-1/2} cI(v^2) route); the two must agree and tests hold them to it
SpecialValue isotonic_i_direct(WhittakerParams p, Phased v);

// parity = +1 (even) or -1 (odd); entire in v
SpecialValue weber_i(cplx beta, int parity, cplx v);
SpecialValue weber_i_deriv(cplx beta, int parity, cplx v);
// recessive solution as v -> +inf, continued to the whole plane through the
// even/odd decomposition
SpecialValue weber_k(cplx beta, cplx v);
SpecialValue weber_k_deriv(cplx beta, cplx v);

inline SpecialValue whit_i1d(WhittakerParams p, cplx r) { return whit_i1d(p, phased(r)); }
inline SpecialValue whit_i1d_deriv(WhittakerParams p, cplx r) { return whit_i1d_deriv(p, phased(r)); }
inline SpecialValue whit_k1d(WhittakerParams p, cplx r) { return whit_k1d(p, phased(r)); }
inline SpecialValue whit_k1d_deriv(WhittakerParams p, cplx r) { return whit_k1d_deriv(p, phased(r)); }
inline SpecialValue whit_i2d(WhittakerParams p, cplx r) { return whit_i2d(p, phased(r)); }
inline SpecialValue whit_i2d_deriv(WhittakerParams p, cplx r) { return whit_i2d_deriv(p, phased(r)); }
inline SpecialValue whit_k2d(WhittakerParams p, cplx r) { return whit_k2d(p, phased(r)); }
inline SpecialValue whit_k2d_deriv(WhittakerParams p, cplx r) { return whit_k2d_deriv(p, phased(r)); }
inline SpecialValue isotonic_i(WhittakerParams p, cplx v) { return isotonic_i(p, phased(v)); }
inline SpecialValue isotonic_i_deriv(WhittakerParams p, cplx v) { return isotonic_i_deriv(p, phased(v)); }
inline SpecialValue isotonic_k(WhittakerParams p, cplx v) { return isotonic_k(p, phased(v)); }
inline SpecialValue isotonic_k_deriv(WhittakerParams p, cplx v) { return isotonic_k_deriv(p, phased(v)); }
inline SpecialValue isotonic_i_direct(WhittakerParams p, cplx v) { return isotonic_i_direct(p, phased(v)); }

} // namespace solvops
