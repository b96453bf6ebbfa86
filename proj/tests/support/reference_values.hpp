// Copyright 2026 The Trine Discrimination Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generated by tests/reference/generate_reference.py. Do not edit.
#pragma once

namespace trine::reference {

inline constexpr double kSuccessEqual = 0.66666666666666666667;  // SDP 0.666666667
inline constexpr double kSuccessHalfHalf = 0.93301270189221932338;  // SDP 0.933012701
inline constexpr double kSuccess_45_35_20 = 0.74731109973624511271;  // SDP 0.747311099
inline constexpr double kSuccess_50_30_20 = 0.75000000000000000000;  // SDP 0.749999999
inline constexpr double kSuccess_62_22_16 = 0.79722672227720029325;  // SDP 0.797226722
inline constexpr double kSuccess_40_32_28 = 0.68038926570333235034;  // SDP 0.680389265
inline constexpr double kQuarticEqual = -0.037037037037037037037;
inline constexpr double kDetMEqual = -0.041666666666666666667;
inline constexpr double kQuartic_62_22_16 = 0.015046560000000000000;
inline constexpr double kDetM_62_22_16 = 0.023280217235656537543;
inline constexpr double kCriticalDelta_0_374 = 0.036865638494256558772;
inline constexpr double kCriticalDelta_0_394 = 0.15878650185707291327;
inline constexpr double kCriticalDelta_0_414 = 0.23327224471946442782;
inline constexpr double kCriticalDelta_0_42 = 0.25353420725793001996;
inline constexpr double kCriticalDelta_0_45 = 0.34887269843971865344;
inline constexpr double kCriticalDelta_0_5 = 0.50000000000000000000;
inline constexpr double kBreakdownP = 0.37271534320159603623;
inline constexpr double kTanThetaHalfQuarter = -0.34641016151377545871;
inline constexpr double kMaxConfidence_50_30_20_0 = 0.80645161290322580645;
inline constexpr double kMaxConfidence_50_30_20_1 = 0.67741935483870967742;
inline constexpr double kMaxConfidence_50_30_20_2 = 0.51612903225806451613;
inline constexpr double kMinErrorConfidence_50_30_20_0 = 0.80357142857142857143;
inline constexpr double kMinErrorConfidence_50_30_20_1 = 0.66964285714285714286;

}  // namespace trine::reference
