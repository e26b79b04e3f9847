#pragma once
// frozen multiprecision samples: Olver-normalized Whittaker, isotonic and
// Weber values  (cI = M_{b,m}/Gamma(1+2m), cK = W_{b,m})
namespace oracle_whit {
inline constexpr double i1d_cases[][5] = {
  {0.4, 0.3, 2.0, 1.3992551900848684, 0.0},
  {0.0, 0.3, 1.4, 1.6066324978603495, 0.0},
  {-0.7, 1.2, 3.3, 6.236674104373091, 0.0},
  {0.5, 0.25, 0.9, 0.7921228158471817, 0.0},
};
inline constexpr double k1d_cases[][5] = {
  {0.4, 0.3, 3.1, 0.34121743666449544, 0.0},
  {0.4, 0.3, 2.0, 0.5013803470631512, 0.0},
  {0.0, 0.3, 1.4, 0.46032303777623623, 0.0},
  {0.5, 0.25, 18.0, 0.0005253571961702608, 0.0},
  {0.4, 0.3, 80.0, 2.4540748924621807e-17, 0.0},
  {-0.2, 0.5, 2.5, 0.2224299799720139, 0.0},
  {0.3, 1.0, 4.0, 0.2522310342762016, 0.0},
};
inline constexpr double iso_cases[][7] = {   // b, m, v, re II, im II, re KK, im KK
  {0.8, 0.6, 1.3, 1.1017284214370988, 0.0, 0.4823498743870432, 0.0},
  {0.3, 0.8, 0.7, 0.6551584958709348, 0.0, 0.8731049554808605, 0.0},
  {1.0, 1.5, 2.0, 2.354154820545304, 0.0, 0.21712499410811878, 0.0},
};
inline constexpr double weber_k_cases[][4] = {
  {0.37, 1.2, 0.4668364318413497, 0.0},
  {0.37, -1.2, 0.997353726740863, 0.0},
  {1.1, 0.6, 0.6786054408021411, 0.0},
  {-0.4, -2.0, 21.473295673647435, 0.0},
};
}
