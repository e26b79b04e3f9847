// frozen oracle values; computed offline with a 60-digit multiprecision
// evaluation (independent of the code under test)
#pragma once
namespace oracle {
inline constexpr double gamma_1_2i_re = 0.15190400267003615;
inline constexpr double gamma_1_2i_im = 0.01980488016185498;
inline constexpr double rgamma_half_halfi_re = 0.653464572282199;
inline constexpr double rgamma_half_halfi_im = 0.6096559429124806;
inline constexpr double sum_inv_fact_sq = 2.2795853023360673;
struct ddc4 { double rh, rl, ih, il; };
inline constexpr double rgamma_dd_pts[5][2] = {
  {0.3, 0.0},
  {3.7, -1.2},
  {-2.3, 0.4},
  {12.0, 5.0},
  {0.5, 0.5},
};
inline constexpr ddc4 rgamma_dd_vals[5] = {
  {0.33427275256419053, 7.026131396381122e-18, 0.0, 0.0},
  {0.04274136758697906, 1.8823145311977357e-18, 0.29522912479320385, 1.6974996860176652e-17},
  {-0.8495317206610125, -3.515017433247749e-17, 1.235775988360005, -9.34516874528841e-17},
  {7.042136354285256e-08, -6.1518117803422656e-24, 1.4567902021391912e-08, 2.820556914287815e-26},
  {0.653464572282199, -1.2465313988512303e-17, 0.6096559429124806, 6.910807955389898e-18},
};
inline constexpr int n_u_cases = 8;
inline constexpr double u_alpha_cases[][6] = {  // re a, im a, re z, im z, re U, im U
  {0.3, 0.0, 2.0, 1.0, 0.024930585647897782, -0.029420281129772748},
  {1.7, 0.0, 0.9, 0.0, 0.29350413190288477, 0.0},
  {-0.4, 0.2, 5.0, 0.0, 0.010238785414599867, -0.001833384864090484},
  {0.0, 0.0, 4.0, 0.0, 0.012592346006810546, 0.0},
  {2.0, 0.0, 9.0, -3.0, 2.534814402076413e-05, 0.00017967124029290722},
  {0.25, 0.0, 22.0, 0.0, 2.620699668789291e-05, 0.0},
  {0.7, 0.0, 36.0, 0.0, 7.225363173902054e-07, 0.0},
  {1.1, 0.0, 120.0, 40.0, -3.629616644081449e-12, 3.1973655466472237e-12},
};
inline constexpr double f11_sample_re = 1.8342520325844853;
inline constexpr double f11_sample_im = -0.34537970734173035;
} // namespace oracle
