// Generated by make_reference_values.py -- do not edit by hand.
// Canonical configuration: wperp=1, wpar=1.2, w12=1.1, beta=1e-3.
#pragma once

namespace refvals {

inline constexpr double kEps_1p1 = -1.0952380952380952;
inline constexpr double kNu_1p1 = 1.0465362369445672;
inline constexpr double kKappa_1p1 = 1.1511898606390239;
inline constexpr double kN_0p5 = 1.2596295751794123;
inline constexpr double kK_0p5 = 0.62981478758970614;
inline constexpr double kH_0p5 = -1.8315229403180085;
inline constexpr double kLinA = 0.72416238337258281;
inline constexpr double kLinB = 34.308095900378848;
inline constexpr double kPhi_1p099 = -0.00069065397128850548;
inline constexpr double kPhiPrime_1p099 = 0.65793157332601521;
inline constexpr double kKappa_1p099 = 1.1617269072687224;
inline constexpr double kKappaPrime_1p099 = -10.585428809959356;
inline constexpr double kXiPair = 1.0993095471244013;
inline constexpr double kKappaAtXiPair = 1.1584548895530014;
inline constexpr double kKappaPrimeAtXiPair = -10.555298588826484;
inline constexpr double kBetaOverA = 0.0013809057511973779;
inline constexpr double kE0_l5 = 10.965477356220066;
inline constexpr double kUd_4_1 = 0.0082854345071842672;
inline constexpr double kEp_l2 = 5.4917145654928157;
inline constexpr double kU1_l2 = 0.0041427172535921336;
inline constexpr double kDelta_l1 = 2.2585449539276703e-5;
inline constexpr double kDelta_l2 = 0.00011292724769638352;
inline constexpr double kOrdinaryOmega_Hm0p5 = 0.64585101755951400;
inline constexpr double kOrdinaryHPrime_Hm0p5 = 4.6150631779481444;
inline constexpr double kOrdinaryKPrime_Hm0p5 = 1.7325118427571672;
inline constexpr double kOrdinaryK_Hm0p5 = 0.85557026326287102;
inline constexpr double kXiExact_l1_H0 = 1.0992857846221497;

}  // namespace refvals
