#include "solvops/bessel.hpp"

#include <cmath>

#include "detail/series.hpp"

namespace solvops {

namespace {

using detail::dd;
using detail::ddc;

constexpr double eps_d = 2.2e-16;

struct VD {
  cplx f, df;
  EvalPath path;
  double err_f, err_df;
};

SpecialValue val_of(const VD& v) { return {v.f, v.path, v.err_f}; }
SpecialValue deriv_of(const VD& v) { return {v.df, v.path, v.err_df}; }

// I_m(r) and I_m'(r) from 0F1reg(m+1; .) and 0F1reg(m+2; .):
//   I_m = (r/2)^m F_m(w),  I_m' = (m/r) I_m + (r/2)^(m+1) F_{m+1}(w),
// with w = (r/2)^2.  The series alternates when r leans trigonometric; the
// compensated flavor takes over once double would lose more than ~3 digits.
VD i2d_vd(cplx m, Phased r) {
  Phased half{r.base / 2.0, r.quarter_turns};
  Phased w = half.squared();
  cplx rv = r.value();
  double amp = std::exp(std::abs(rv) - std::abs(rv.real()));
  SeriesPolicy pol;
  VD out;
  if (amp * eps_d < 1e-13) {
    auto s0 = detail::f01_series(m + 1.0, w.value(), pol);
    auto s1 = detail::f01_series(m + 2.0, w.value(), pol);
    cplx pref = half.pow(m);
    cplx prefp = half.pow(m + 1.0);
    out.f = pref * s0.sum;
    out.df = m / rv * out.f + prefp * s1.sum;
    out.err_f = std::abs(pref) * s0.err + 4.0 * eps_d * std::abs(out.f);
    out.err_df = std::abs(m / rv) * out.err_f + std::abs(prefp) * s1.err + 4.0 * eps_d * std::abs(out.df);
  } else {
    pol.tol = 1e-31;
    ddc one{dd(1.0), dd(0.0)};
    auto s0 = detail::f01_series_dd(one + ddc(m), w.value(), pol);
    auto s1 = detail::f01_series_dd(one + one + ddc(m), w.value(), pol);
    ddc pref = detail::dd_pow_phased(half, ddc(m));
    ddc prefp = detail::dd_pow_phased(half, one + ddc(m));
    ddc f = pref * s0.sum;
    ddc df = ddc(m) / ddc(rv) * f + prefp * s1.sum;
    out.f = f.to_cplx();
    out.df = df.to_cplx();
    double eps_eff = 1e-30;
    out.err_f = std::abs(pref.to_cplx()) * s0.err + eps_eff * amp * std::abs(out.f) + eps_d * std::abs(out.f);
    out.err_df = std::abs(prefp.to_cplx()) * s1.err + eps_eff * amp * std::abs(out.df) + eps_d * std::abs(out.df);
  }
  out.path = EvalPath::SeriesAt0;
  return out;
}

// K_m and K_m' through one u_alpha_pair call:
//   K_m = (sqrt(pi)/2)(r/2)^m U_m(w),  K_m' = (m/r) K_m - K_{m+1}.
VD k2d_vd(cplx m, Phased r) {
  Phased half{r.base / 2.0, r.quarter_turns};
  Phased w = half.squared();
  auto up = detail::u_alpha_pair(m, w);
  cplx pref = sqrt_pi / 2.0 * half.pow(m);
  cplx prefp = sqrt_pi / 2.0 * half.pow(m + 1.0);
  VD out;
  out.f = pref * up.u;
  cplx k_next = prefp * up.u_next;
  out.df = m / r.value() * out.f - k_next;
  out.path = up.path;
  out.err_f = std::abs(pref) * up.err_u + 4.0 * eps_d * std::abs(out.f);
  out.err_df = std::abs(m / r.value()) * out.err_f + std::abs(prefp) * up.err_next +
               4.0 * eps_d * std::abs(out.df);
  return out;
}

VD hankel2d_vd(int sign, cplx m, Phased r) {
  // H^pm_m(r) = (2/pi) e^{-+ i pi (m+1)/2} K_m(e^{-+ i pi/2} r)
  double s = sign >= 0 ? 1.0 : -1.0;
  Phased rot = rotate(r, -s * pi / 2.0);
  VD k = k2d_vd(m, rot);
  cplx phase = std::exp(cplx(0.0, -s * pi / 2.0) * (m + 1.0)) * (2.0 / pi);
  VD out;
  out.f = phase * k.f;
  // chain rule: d/dr K(e^{-+ i pi/2} r) = e^{-+ i pi/2} K'(arg), exact -+ i
  out.df = phase * cplx(0.0, -s) * k.df;
  out.path = k.path;
  out.err_f = std::abs(phase) * k.err_f;
  out.err_df = std::abs(phase) * k.err_df;
  return out;
}

VD j2d_vd(cplx m, Phased r) {
  if (std::abs(r.base) > 20.0) {
    // trig series would cancel ~ e^|r|; the Hankel split stays conditioned
    VD hp = hankel2d_vd(+1, m, r);
    VD hm = hankel2d_vd(-1, m, r);
    VD out;
    out.f = 0.5 * (hp.f + hm.f);
    out.df = 0.5 * (hp.df + hm.df);
    out.path = hp.path;
    out.err_f = 0.5 * (hp.err_f + hm.err_f);
    out.err_df = 0.5 * (hp.err_df + hm.err_df);
    return out;
  }
  // J_m(r) = e^{+i pi m/2} I_m(e^{-i pi/2} r)
  Phased rot = rotate(r, -pi / 2.0);
  VD i = i2d_vd(m, rot);
  cplx phase = std::exp(cplx(0.0, pi / 2.0) * m);
  VD out;
  out.f = phase * i.f;
  out.df = phase * cplx(0.0, -1.0) * i.df;
  out.path = i.path;
  out.err_f = std::abs(phase) * i.err_f;
  out.err_df = std::abs(phase) * i.err_df;
  return out;
}

// 1d gauge: g(r) = sqrt(pi r / 2) X(r) resp. sqrt(2 r / pi) K(r);
// g' = (1/(2r)) g + sqrt(. r .) X'.
VD gauge_1d(const VD& x, Phased r, double gauge_coef) {
  // gauge_coef: pi/2 for I, J, H; 2/pi for K
  cplx root = std::sqrt(gauge_coef) * r.pow(cplx(0.5, 0.0));
  cplx rv = r.value();
  VD out;
  out.f = root * x.f;
  out.df = 0.5 / rv * out.f + root * x.df;
  out.path = x.path;
  out.err_f = std::abs(root) * x.err_f + 2.0 * eps_d * std::abs(out.f);
  out.err_df = std::abs(0.5 / rv) * out.err_f + std::abs(root) * x.err_df + 2.0 * eps_d * std::abs(out.df);
  return out;
}

} // namespace

SpecialValue bessel_i2d(cplx m, Phased r) { return val_of(i2d_vd(m, r)); }
SpecialValue bessel_i2d_deriv(cplx m, Phased r) { return deriv_of(i2d_vd(m, r)); }
SpecialValue macdonald_k2d(cplx m, Phased r) { return val_of(k2d_vd(m, r)); }
SpecialValue macdonald_k2d_deriv(cplx m, Phased r) { return deriv_of(k2d_vd(m, r)); }
SpecialValue bessel_j2d(cplx m, Phased r) { return val_of(j2d_vd(m, r)); }
SpecialValue bessel_j2d_deriv(cplx m, Phased r) { return deriv_of(j2d_vd(m, r)); }
SpecialValue hankel2d(int sign, cplx m, Phased r) { return val_of(hankel2d_vd(sign, m, r)); }
SpecialValue hankel2d_deriv(int sign, cplx m, Phased r) { return deriv_of(hankel2d_vd(sign, m, r)); }

SpecialValue bessel_i1d(cplx m, Phased r) { return val_of(gauge_1d(i2d_vd(m, r), r, pi / 2.0)); }
SpecialValue bessel_i1d_deriv(cplx m, Phased r) { return deriv_of(gauge_1d(i2d_vd(m, r), r, pi / 2.0)); }
SpecialValue macdonald_k1d(cplx m, Phased r) { return val_of(gauge_1d(k2d_vd(m, r), r, 2.0 / pi)); }
SpecialValue macdonald_k1d_deriv(cplx m, Phased r) { return deriv_of(gauge_1d(k2d_vd(m, r), r, 2.0 / pi)); }
SpecialValue bessel_j1d(cplx m, Phased r) { return val_of(gauge_1d(j2d_vd(m, r), r, pi / 2.0)); }
SpecialValue bessel_j1d_deriv(cplx m, Phased r) { return deriv_of(gauge_1d(j2d_vd(m, r), r, pi / 2.0)); }
SpecialValue hankel1d(int sign, cplx m, Phased r) { return val_of(gauge_1d(hankel2d_vd(sign, m, r), r, pi / 2.0)); }
SpecialValue hankel1d_deriv(int sign, cplx m, Phased r) { return deriv_of(gauge_1d(hankel2d_vd(sign, m, r), r, pi / 2.0)); }

} // namespace solvops
