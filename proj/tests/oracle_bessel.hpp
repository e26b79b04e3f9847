#pragma once
// frozen multiprecision samples for the Bessel-type normalizations
namespace oracle_bessel {
inline constexpr double i2d_cases[][6] = {
  {0.3, 0.4, 1.7, 0.0, 1.836355492653682, -0.24590003560265775},
  {2.0, 0.0, 1.3, 0.0, 0.24261731336076028, 0.0},
  {0.37, 0.0, 1.1, 0.6, 1.018311752855366, 0.4429742756502736},
};
inline constexpr double k2d_cases[][6] = {
  {0.37, 0.0, 1.1, 0.0, 0.38292594525206664, 0.0},
  {0.2, 0.4, 2.0, 0.0, 0.11103660016872542, 0.0036925972495970545},
  {0.3, 0.0, 9.0, 0.0, 5.112359542661121e-05, 0.0},
  {1.5, 0.0, 14.0, 0.0, 2.984258210546564e-07, 0.0},
  {0.0, 0.0, 2.0, 0.0, 0.11389387274953344, 0.0},
  {0.7, 0.0, 40.0, 0.0, 8.443794235895236e-19, 0.0},
};
inline constexpr double j2d_cases[][6] = {
  {0.3, 0.0, 1.7, 0.0, 0.5575784034520822, 0.0},
  {0.5, 0.0, 12.0, 0.0, -0.12358853595594195, 0.0},
  {1.2, 0.0, 30.0, 0.0, -0.08771600982643926, 0.0},
  {0.2, 0.4, 2.0, 0.5, 0.3735439719436321, -0.009986909937771671},
};
inline constexpr double h2d_cases[][7] = {   // kind, re m, im m, re r, im r, re H, im H
  {1.0, 0.3, 0.0, 1.7, 0.0, 0.5575784034520822, 0.23658404548525758},
  {2.0, 0.3, 0.0, 1.7, 0.0, 0.5575784034520822, -0.23658404548525758},
  {1.0, 0.6, 0.0, 25.0, 0.0, -0.045269692082826156, -0.15302836904290204},
  {2.0, 1.1, 0.0, 3.0, 0.0, 0.37849214977289003, -0.2820317910095231},
};
}
