#pragma once

// Shared series engines behind hypergeom/bessel/whittaker.  Each engine
// exists in a plain-double and a double-double flavor; the dd flavor is used
// when a connection formula is about to cancel more digits than double can
// spare.

#include "ddcomplex.hpp"
#include "solvops/complexmath.hpp"
#include "solvops/hypergeom.hpp"

namespace solvops::detail {

struct SeriesOut {
  cplx sum{0.0, 0.0};
  double err = 0.0;      // |last term| + rounding * peak
  double peak = 0.0;     // largest |term| seen (cancellation witness)
  int terms = 0;
};

SeriesOut f01_series(cplx c, cplx w, const SeriesPolicy& policy);
SeriesOut f11_series(cplx a, cplx c, cplx r, const SeriesPolicy& policy);

struct SeriesOutDD {
  ddc sum;
  double err = 0.0;
  double peak = 0.0;
  int terms = 0;
};

// parameters arrive as ddc so that shifts like 1 - alpha or 1/2 + m - beta
// can be formed exactly instead of pre-rounded to double
SeriesOutDD f01_series_dd(ddc c, cplx w, const SeriesPolicy& policy);
SeriesOutDD f11_series_dd(ddc a, ddc c, cplx r, const SeriesPolicy& policy);

struct F20Out {
  cplx sum{0.0, 0.0};
  double err = 0.0;
  bool ok = false;           // usable (decreasing initial segment or exact)
  bool terminated = false;   // polynomial case, summed exactly
  int terms = 0;
};

F20Out f20_sum(cplx a, cplx b, cplx w);

// U_alpha and U_{alpha+1} (the derivative partner) evaluated together on a
// phase-tracked argument.
struct UPair {
  cplx u{0.0, 0.0};
  cplx u_next{0.0, 0.0}; // U_{alpha+1}(z); dU/dz = -u_next
  EvalPath path = EvalPath::SeriesAt0;
  double err_u = 0.0;
  double err_next = 0.0;
};

UPair u_alpha_pair(cplx alpha, Phased z);

// exp(a * log z) with the winding of z honored, computed in dd.
ddc dd_pow_phased(const Phased& z, ddc a);

double dist_to_integers(cplx z);

} // namespace solvops::detail
