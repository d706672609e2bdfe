#pragma once

// Generated by tests/oracles/reference_values.py (mpmath/sympy, 40 digits).

namespace ref {

inline constexpr double bound_s2_E0 = 30.842513753404246;
inline constexpr double bound_s2_E1 = 60.451326956672322;
inline constexpr double bound_s2_E2 = 99.929744561029756;
inline constexpr double bound_s2_E3 = 149.27776656647655;
inline constexpr double bound_s2_a2_E0 = 7.7106284383510614;
inline constexpr double bound_s09_E0 = 9.6722123130675714;
inline constexpr double band_s04_lower_E0 = 0.049348022005446793;
inline constexpr double band_s04_upper_E0 = 3.9971897824411902;
inline constexpr double band_s04_lower_E1 = 5.9711106626590620;
inline constexpr double band_s04_upper_E1 = 17.814635943966292;
inline constexpr double band_s04_lower_E2 = 21.762477704402036;
inline constexpr double band_s04_upper_E2 = 41.501686506580753;
inline constexpr double v_s2_mid = 18.505508252042547;
inline constexpr double v_s04_mid = -0.44413219804902114;
inline constexpr double v_s2_x013 = 117.32660311469002;
inline constexpr double cot_09 = -3.0776835371752534;
inline constexpr double inv_cot_m3 = 0.89758361765043327;
inline constexpr double p2_upper_s04_c0 = -0.35714285714285714;
inline constexpr double p2_upper_s04_root = 0.59761430466719682;
inline constexpr double p3_bound_s2_c1 = -0.50000000000000000;
inline constexpr double p2_lower_s04_c0 = -0.83333333333333333;
inline constexpr double p4_bound_s2_c0 = 0.062500000000000000;
inline constexpr double p4_bound_s2_c2 = -1.0000000000000000;
inline constexpr double psi_s2_n0_mid = 1.7161710616195669;
inline constexpr double psi_s2_n0_ratio_01 = 0.053083055132227177;
inline constexpr double psi_s04_upper_n2_x03 = 0.36470218250479482;
inline constexpr double psi_s2_n2_x02 = 1.4099706989185162;
inline constexpr double psi_s04_lower_n1_x02 = 1.2108024056392719;
inline constexpr double node_s2_n3_0 = 0.30408672398469636;
inline constexpr double node_s2_n3_1 = 0.50000000000000000;
inline constexpr double node_s2_n3_2 = 0.69591327601530364;
inline constexpr double frob_s2_E30_c2 = -3.9719162082198585;
inline constexpr double gap_s045_n1 = 1.9739208802178717;

}  // namespace ref
