// SPDX-License-Identifier: Apache-2.0
//
// irsuav: IRS-assisted cellular downlink simulation for UAV receivers
// Copyright (C) 2026 The irsuav developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

namespace irsuav
{
    // Vertical pattern of a down-tilted BS antenna (3GPP TR 36.814 form).
    // Angles are depression angles in degrees: positive below the horizon.
    struct AntennaParams
    {
        double downtilt_deg = 15.0;
        double theta3db_deg = 10.0;
        double sla_db = 20.0;
    };

    // Urban-macro ground-to-air path loss (3GPP TR 38.901 form as used here).
    struct PathlossParams
    {
        double f_ghz = 2.0;
        double breakpoint_height_m = 22.5; // receivers at or above use the aerial branch
    };

    void validate(const AntennaParams &params);
    void validate(const PathlossParams &params);

    // A(theta) = -min(12 ((theta - tilt) / theta3db)^2, SLA), in dB.
    double vertical_gain(double theta_deg, const AntennaParams &params);

    // P_T + A(theta), in dBm.
    double effective_tx_power(double p_t_dbm, double theta_deg, const AntennaParams &params);

    // 28 + 22 log10(d) + 20 log10(f). Throws InvalidParameter for d <= 0.
    double pl_los(double d_m, const PathlossParams &params);

    // Low-altitude NLoS term: 13.54 + 39.08 log10(d) + 20 log10(f) - 0.6 (h - 1.5).
    double pl_nlos_low(double d_m, double receiver_height_m, const PathlossParams &params);

    // Aerial NLoS term: -17.5 + (46 - 7 log10(h)) log10(d) + 20 log10(40 pi f / 3).
    double pl_nlos_aerial(double d_m, double receiver_height_m, const PathlossParams &params);

    // max(PL_LoS, low) below the breakpoint height, aerial at or above it.
    double pl_nlos(double d_m, double receiver_height_m, const PathlossParams &params);

    // BS -> element segment: PL_NLoS(d1).
    double pl_bs_to_element(double d1_m, double receiver_height_m, const PathlossParams &params);

    // Element -> UAV segment, distance-related part only: PL_NLoS(d1 + d2) - PL_NLoS(d1).
    double pl_element_to_uav(double d1_m, double d2_m, double receiver_height_m, const PathlossParams &params);
}
