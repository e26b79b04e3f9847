#pragma once
// frozen oracle values for the acceptance suite (60-digit offline evaluation)
namespace oracle_accept {
inline constexpr double K0_at_2 = 0.11389387274953344;
inline constexpr double K1_at_15 = 0.2773878004568438;
inline constexpr double iso_k_b08_m1_v13 = 0.5192625086230869;
inline constexpr double U1_at_3 = 0.01510866824853819;
}
