#include "solvops/whittaker.hpp"

#include <cmath>

#include "detail/series.hpp"

namespace solvops {

namespace {

using detail::dd;
using detail::ddc;

constexpr double eps_d = 2.2e-16;
constexpr double eps_dd = 1.0e-30;

struct VD {
  cplx f, df;
  EvalPath path;
  double err_f, err_df;
};

SpecialValue val_of(const VD& v) { return {v.f, v.path, v.err_f}; }
SpecialValue deriv_of(const VD& v) { return {v.df, v.path, v.err_df}; }

// cI_{b,m} and its r-derivative.  The sign branch keeps the 1F1 argument in
// the right half plane (the two choices coincide by Kummer's identity).
VD i1d_vd(cplx beta, cplx m, Phased r, bool force_dd = false) {
  cplx rv = r.value();
  double sgn = rv.real() >= 0.0 ? 1.0 : -1.0;
  cplx arg = sgn * rv;
  cplx a = 0.5 + m - sgn * beta;
  cplx c = 1.0 + 2.0 * m;
  double amp = std::exp(std::abs(rv) - std::abs(rv.real()));
  VD out;
  out.path = EvalPath::SeriesAt0;
  SeriesPolicy pol;
  if (!force_dd && amp * eps_d < 1e-13) {
    auto s0 = detail::f11_series(a, c, arg, pol);
    auto s1 = detail::f11_series(a + 1.0, c + 1.0, arg, pol);
    cplx pref = r.pow(0.5 + m) * std::exp(-sgn * rv / 2.0);
    out.f = pref * s0.sum;
    // d/dr: ((1/2+m)/r - sgn/2) cI + pref * a * 1F1'(a+1;c+1) * sgn
    out.df = ((0.5 + m) / rv - sgn * 0.5) * out.f + pref * a * s1.sum * sgn;
    out.err_f = std::abs(pref) * s0.err + 4.0 * eps_d * std::abs(out.f);
    out.err_df = std::abs((0.5 + m) / rv - sgn * 0.5) * out.err_f +
                 std::abs(pref * a) * s1.err + 4.0 * eps_d * std::abs(out.df);
  } else {
    pol.tol = 1e-31;
    ddc am = ddc{dd(0.5), dd(0.0)} + ddc(m) - (sgn > 0 ? ddc(beta) : -ddc(beta));
    ddc cm = ddc{dd(1.0), dd(0.0)} + ddc{dd(2.0), dd(0.0)} * ddc(m);
    auto s0 = detail::f11_series_dd(am, cm, arg, pol);
    auto s1 = detail::f11_series_dd(am + ddc{dd(1.0), dd(0.0)}, cm + ddc{dd(1.0), dd(0.0)}, arg, pol);
    ddc pref = detail::dd_pow_phased(r, ddc{dd(0.5), dd(0.0)} + ddc(m)) *
               detail::dd_cexp(ddc(-sgn * rv / 2.0));
    ddc f = pref * s0.sum;
    ddc df = ddc((0.5 + m) / rv - sgn * 0.5) * f + pref * ddc(a) * s1.sum * ddc(cplx(sgn, 0.0));
    out.f = f.to_cplx();
    out.df = df.to_cplx();
    out.err_f = std::abs(pref.to_cplx()) * s0.err + eps_dd * amp * std::abs(out.f) + eps_d * std::abs(out.f);
    out.err_df = std::abs(pref.to_cplx() * a) * s1.err + eps_dd * amp * std::abs(out.df) + eps_d * std::abs(out.df);
  }
  return out;
}

// asymptotic cK: r^b e^{-r/2} 2F0(a1, a2; -1/r), derivative via
// d/dw 2F0(a1,a2;w) = a1 a2 2F0(a1+1, a2+1; w) and dw/dr = 1/r^2.
bool k1d_asym(cplx beta, cplx m, Phased r, VD& out) {
  cplx rv = r.value();
  cplx a1 = 0.5 + m - beta, a2 = 0.5 - m - beta;
  cplx w = -1.0 / rv;
  auto s0 = detail::f20_sum(a1, a2, w);
  if (!s0.ok) return false;
  auto s1 = detail::f20_sum(a1 + 1.0, a2 + 1.0, w);
  cplx pref = r.pow(beta) * std::exp(-rv / 2.0);
  out.f = pref * s0.sum;
  cplx sderiv = a1 * a2 * (s1.ok ? s1.sum : cplx(0.0, 0.0));
  out.df = (beta / rv - 0.5) * out.f + pref * sderiv / (rv * rv);
  out.path = EvalPath::AsymptoticAtInf;
  out.err_f = std::abs(pref) * s0.err + 2.0 * eps_d * std::abs(out.f);
  double s1err = s1.ok ? s1.err : std::abs(s1.sum) + 1.0;
  out.err_df = std::abs(beta / rv - 0.5) * out.err_f +
               std::abs(pref / (rv * rv)) * (std::abs(a1 * a2) * s1err) +
               2.0 * eps_d * std::abs(out.df);
  return true;
}

// connection formula (valid when 2m is not an integer):
// cK = pi/sin(2 pi m) [ -cI_{b,m}/Gamma(1/2-m-b) + cI_{b,-m}/Gamma(1/2+m-b) ]
VD k1d_conn(cplx beta, cplx m, Phased r, bool use_dd) {
  VD out;
  out.path = EvalPath::ConnectionFormula;
  if (!use_dd) {
    VD ip = i1d_vd(beta, m, r);
    VD in = i1d_vd(beta, -m, r);
    cplx s = pi / std::sin(2.0 * pi * m);
    cplx g1 = reciprocal_gamma(0.5 - m - beta);
    cplx g2 = reciprocal_gamma(0.5 + m - beta);
    out.f = s * (-ip.f * g1 + in.f * g2);
    out.df = s * (-ip.df * g1 + in.df * g2);
    double big = std::abs(s) * std::max(std::abs(ip.f * g1), std::abs(in.f * g2));
    double bigd = std::abs(s) * std::max(std::abs(ip.df * g1), std::abs(in.df * g2));
    out.err_f = std::abs(s) * (ip.err_f * std::abs(g1) + in.err_f * std::abs(g2)) + 4.0 * eps_d * big;
    out.err_df = std::abs(s) * (ip.err_df * std::abs(g1) + in.err_df * std::abs(g2)) + 4.0 * eps_d * bigd;
    return out;
  }
  // compensated flavor: dd inner series, dd gamma/sine prefactors, and the
  // subtraction done in dd (the whole point)
  SeriesPolicy pol;
  pol.tol = 1e-31;
  cplx rv = r.value();
  ddc half{dd(0.5), dd(0.0)}, one{dd(1.0), dd(0.0)};
  ddc mm(m), bb(beta);
  double sgn = rv.real() >= 0.0 ? 1.0 : -1.0;
  cplx arg = sgn * rv;
  ddc sb = sgn > 0 ? bb : -bb;
  auto build = [&](ddc mu, ddc& f, ddc& df, double& errf, double& errdf) {
    ddc a = half + mu - sb;
    ddc c = one + ddc{dd(2.0), dd(0.0)} * mu;
    auto s0 = detail::f11_series_dd(a, c, arg, pol);
    auto s1 = detail::f11_series_dd(a + one, c + one, arg, pol);
    ddc pref = detail::dd_pow_phased(r, half + mu) * detail::dd_cexp(ddc(-sgn * rv / 2.0));
    f = pref * s0.sum;
    df = (half + mu) / ddc(rv) * f - ddc(cplx(sgn * 0.5, 0.0)) * f +
         pref * a * s1.sum * ddc(cplx(sgn, 0.0));
    errf = detail::ddc_abs_est(pref) * s0.err;
    errdf = detail::ddc_abs_est(pref * a) * s1.err + errf;
  };
  ddc ipf, ipdf, inf_, indf;
  double e1, e2, e3, e4;
  build(mm, ipf, ipdf, e1, e2);
  build(-mm, inf_, indf, e3, e4);
  ddc s = ddc{detail::dd_pi, dd(0.0)} / detail::dd_sin_pi(ddc{dd(2.0), dd(0.0)} * mm);
  ddc g1 = detail::dd_rgamma(half - mm - bb);
  ddc g2 = detail::dd_rgamma(half + mm - bb);
  ddc f = s * (-ipf * g1 + inf_ * g2);
  ddc df = s * (-ipdf * g1 + indf * g2);
  out.f = f.to_cplx();
  out.df = df.to_cplx();
  double smag = detail::ddc_abs_est(s);
  double big = smag * std::max(detail::ddc_abs_est(ipf * g1), detail::ddc_abs_est(inf_ * g2));
  double bigd = smag * std::max(detail::ddc_abs_est(ipdf * g1), detail::ddc_abs_est(indf * g2));
  out.err_f = smag * (e1 * detail::ddc_abs_est(g1) + e3 * detail::ddc_abs_est(g2)) +
              4.0 * eps_dd * big + eps_d * std::abs(out.f);
  out.err_df = smag * (e2 * detail::ddc_abs_est(g1) + e4 * detail::ddc_abs_est(g2)) +
               4.0 * eps_dd * bigd + eps_d * std::abs(out.df);
  return out;
}

VD k1d_vd(cplx beta, cplx m, Phased r) {
  cplx rv = r.value();
  double pscale = std::abs(beta) + std::abs(m);
  double threshold = 30.0 + 10.0 * pscale * pscale;
  VD out;
  if (std::abs(rv) > threshold && k1d_asym(beta, m, r, out)) return out;

  double amp = std::exp(std::abs(rv));
  double near = detail::dist_to_integers(2.0 * m);
  if (near > 1e-3) {
    bool use_dd = amp * eps_d >= 1e-13;
    if (use_dd && amp * eps_dd >= 1e-7) {
      // connection would cancel past the compensated precision too; the
      // asymptotic sum is the only hope below its nominal threshold
      if (k1d_asym(beta, m, r, out) && out.err_f < 1e-7 * std::abs(out.f)) return out;
      throw NoValidPathError("whit_k1d: cancellation exhausts working precision and the "
                             "asymptotic regime is not reached");
    }
    return k1d_conn(beta, m, r, use_dd);
  }
  // 2m within 1e-3 of an integer: two-sided epsilon limit in m
  double e = 1e-5 * (1.0 + std::abs(m));
  bool use_dd = amp * eps_d >= 1e-13;
  if (use_dd && amp * eps_dd >= 1e-7) {
    if (k1d_asym(beta, m, r, out) && out.err_f < 1e-7 * std::abs(out.f)) return out;
    throw NoValidPathError("whit_k1d: no valid path at near-integer 2m");
  }
  VD up = k1d_conn(beta, m + e, r, use_dd);
  VD dn = k1d_conn(beta, m - e, r, use_dd);
  out.f = 0.5 * (up.f + dn.f);
  out.df = 0.5 * (up.df + dn.df);
  out.path = EvalPath::EpsilonLimit;
  out.err_f = 0.5 * (up.err_f + dn.err_f) + 1e-7 * (1.0 + std::abs(out.f));
  out.err_df = 0.5 * (up.err_df + dn.err_df) + 1e-7 * (1.0 + std::abs(out.df));
  return out;
}

// 2d gauge: g = coef * r^{-1/2} f, g' = -(1/(2r)) g + coef r^{-1/2} f'
VD gauge_2d(const VD& x, Phased r, double coef2) {
  cplx root = std::sqrt(coef2) * r.pow(cplx(-0.5, 0.0));
  cplx rv = r.value();
  VD out;
  out.f = root * x.f;
  out.df = -0.5 / rv * out.f + root * x.df;
  out.path = x.path;
  out.err_f = std::abs(root) * x.err_f + 2.0 * eps_d * std::abs(out.f);
  out.err_df = std::abs(0.5 / rv) * out.err_f + std::abs(root) * x.err_df + 2.0 * eps_d * std::abs(out.df);
  return out;
}

// isotonic composition: F(v) = v^{-1/2} f(v^2), F' = -(1/(2v)) F + 2 v^{1/2} f'(v^2)
VD compose_isotonic(const VD& x, Phased v) {
  cplx vv = v.value();
  cplx root = v.pow(cplx(-0.5, 0.0));
  VD out;
  out.f = root * x.f;
  out.df = -0.5 / vv * out.f + 2.0 * v.pow(cplx(0.5, 0.0)) * x.df;
  out.path = x.path;
  out.err_f = std::abs(root) * x.err_f + 2.0 * eps_d * std::abs(out.f);
  out.err_df = std::abs(0.5 / vv) * out.err_f + 2.0 * std::abs(v.pow(cplx(0.5, 0.0))) * x.err_df +
               2.0 * eps_d * std::abs(out.df);
  return out;
}

VD isotonic_i_vd(cplx beta, cplx m, Phased v) {
  return compose_isotonic(i1d_vd(beta / 2.0, m / 2.0, v.squared()), v);
}

VD isotonic_k_vd(cplx beta, cplx m, Phased v) {
  return compose_isotonic(k1d_vd(beta / 2.0, m / 2.0, v.squared()), v);
}

// direct series form with derivative; regular at v = 0 for the Weber orders
VD iso_direct_vd(cplx beta, cplx m, Phased v) {
  Phased w = v.squared();
  cplx wv = w.value();
  cplx vv = v.value();
  double sgn = wv.real() >= 0.0 ? 1.0 : -1.0;
  SeriesPolicy pol;
  cplx a = (1.0 + m - sgn * beta) / 2.0;
  cplx c = 1.0 + m;
  auto s0 = detail::f11_series(a, c, sgn * wv, pol);
  auto s1 = detail::f11_series(a + 1.0, c + 1.0, sgn * wv, pol);
  cplx pref = v.pow(0.5 + m) * std::exp(-sgn * wv / 2.0);
  VD out;
  out.f = pref * s0.sum;
  // d/dv: ((1/2+m)/v - sgn v) II + pref * a 1F1'(.) * sgn * 2v
  out.df = ((0.5 + m) / vv - sgn * vv) * out.f + pref * a * s1.sum * sgn * 2.0 * vv;
  out.path = EvalPath::SeriesAt0;
  out.err_f = std::abs(pref) * s0.err + 2.0 * eps_d * std::abs(out.f);
  out.err_df = std::abs((0.5 + m) / vv - sgn * vv) * out.err_f +
               std::abs(pref * a * 2.0 * vv) * s1.err + 2.0 * eps_d * std::abs(out.df);
  return out;
}

VD weber_i_vd(cplx beta, int parity, cplx v) {
  cplx mw = parity > 0 ? cplx(-0.5, 0.0) : cplx(0.5, 0.0);
  if (v == cplx(0.0, 0.0)) {
    // II_{b,+}(0) = 1/Gamma(1/2), II_{b,-}(0) = 0 with slope 1/Gamma(3/2)
    VD out;
    out.path = EvalPath::SeriesAt0;
    if (parity > 0) {
      out.f = 1.0 / sqrt_pi;
      out.df = 0.0;
    } else {
      out.f = 0.0;
      out.df = 2.0 / sqrt_pi;
    }
    out.err_f = out.err_df = 1e-16;
    return out;
  }
  double flip = 1.0;
  cplx w = v;
  if (v.real() < 0.0 || (v.real() == 0.0 && v.imag() < 0.0)) {
    w = -v;
    flip = parity > 0 ? 1.0 : -1.0;
  }
  VD x = std::abs(w) < 0.5 ? iso_direct_vd(beta, mw, phased(w))
                           : isotonic_i_vd(beta, mw, phased(w));
  VD out;
  out.f = flip * x.f;
  out.df = (w == v ? 1.0 : -1.0) * flip * x.df;
  out.path = x.path;
  out.err_f = x.err_f;
  out.err_df = x.err_df;
  return out;
}

// KK_b(v) = pi [ II_{b,+}(v)/Gamma(3/4 - b/2) - II_{b,-}(v)/Gamma(1/4 - b/2) ],
// the even/odd decomposition of the recessive solution; as printed in the
// reference material the two Gamma factors are swapped and the pi is absent,
// which fails the Wronskian and direct-series cross-checks.
VD weber_k_conn(cplx beta, cplx v) {
  VD ip = weber_i_vd(beta, +1, v);
  VD im = weber_i_vd(beta, -1, v);
  cplx g1 = reciprocal_gamma(0.75 - beta / 2.0);
  cplx g2 = reciprocal_gamma(0.25 - beta / 2.0);
  VD out;
  out.f = pi * (ip.f * g1 - im.f * g2);
  out.df = pi * (ip.df * g1 - im.df * g2);
  out.path = EvalPath::ConnectionFormula;
  double big = pi * std::max(std::abs(ip.f * g1), std::abs(im.f * g2));
  out.err_f = pi * (ip.err_f * std::abs(g1) + im.err_f * std::abs(g2)) + 4.0 * eps_d * big;
  out.err_df = pi * (ip.err_df * std::abs(g1) + im.err_df * std::abs(g2)) + 4.0 * eps_d * std::abs(out.df);
  return out;
}

VD weber_k_vd(cplx beta, cplx v) {
  if (v.real() > 0.0) return isotonic_k_vd(beta, cplx(0.5, 0.0), phased(v));
  return weber_k_conn(beta, v);
}

} // namespace

SpecialValue whit_i1d(WhittakerParams p, Phased r) { return val_of(i1d_vd(p.beta, p.m, r)); }
SpecialValue whit_i1d_deriv(WhittakerParams p, Phased r) { return deriv_of(i1d_vd(p.beta, p.m, r)); }
SpecialValue whit_k1d(WhittakerParams p, Phased r) { return val_of(k1d_vd(p.beta, p.m, r)); }
SpecialValue whit_k1d_deriv(WhittakerParams p, Phased r) { return deriv_of(k1d_vd(p.beta, p.m, r)); }
SpecialValue whit_i2d(WhittakerParams p, Phased r) { return val_of(gauge_2d(i1d_vd(p.beta, p.m, r), r, 2.0 / pi)); }
SpecialValue whit_i2d_deriv(WhittakerParams p, Phased r) { return deriv_of(gauge_2d(i1d_vd(p.beta, p.m, r), r, 2.0 / pi)); }
SpecialValue whit_k2d(WhittakerParams p, Phased r) { return val_of(gauge_2d(k1d_vd(p.beta, p.m, r), r, pi / 2.0)); }
SpecialValue whit_k2d_deriv(WhittakerParams p, Phased r) { return deriv_of(gauge_2d(k1d_vd(p.beta, p.m, r), r, pi / 2.0)); }

SpecialValue isotonic_i(WhittakerParams p, Phased v) { return val_of(isotonic_i_vd(p.beta, p.m, v)); }
SpecialValue isotonic_i_deriv(WhittakerParams p, Phased v) { return deriv_of(isotonic_i_vd(p.beta, p.m, v)); }
SpecialValue isotonic_k(WhittakerParams p, Phased v) { return val_of(isotonic_k_vd(p.beta, p.m, v)); }
SpecialValue isotonic_k_deriv(WhittakerParams p, Phased v) { return deriv_of(isotonic_k_vd(p.beta, p.m, v)); }

SpecialValue isotonic_i_direct(WhittakerParams p, Phased v) {
  return val_of(iso_direct_vd(p.beta, p.m, v));
}

SpecialValue weber_i(cplx beta, int parity, cplx v) { return val_of(weber_i_vd(beta, parity, v)); }
SpecialValue weber_i_deriv(cplx beta, int parity, cplx v) { return deriv_of(weber_i_vd(beta, parity, v)); }
SpecialValue weber_k(cplx beta, cplx v) { return val_of(weber_k_vd(beta, v)); }
SpecialValue weber_k_deriv(cplx beta, cplx v) { return deriv_of(weber_k_vd(beta, v)); }

} // namespace solvops
