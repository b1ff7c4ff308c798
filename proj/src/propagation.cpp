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

#include "irsuav/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "irsuav/error.hpp"

namespace irsuav
{
    namespace
    {
        void require_distance(double d_m)
        {
            if (!(d_m > 0.0) || !std::isfinite(d_m))
                throw InvalidParameter("path length must be positive and finite");
        }

        void require_height(double h_m)
        {
            if (!(h_m > 0.0) || !std::isfinite(h_m))
                throw InvalidParameter("receiver height must be positive and finite");
        }

        double frequency_term(const PathlossParams &params)
        {
            if (!(params.f_ghz > 0.0))
                throw InvalidParameter("carrier frequency must be positive");
            return 20.0 * std::log10(params.f_ghz);
        }
    }

    void validate(const AntennaParams &params)
    {
        if (!(params.theta3db_deg > 0.0))
            throw InvalidParameter("theta3db_deg must be > 0");
        if (!(params.sla_db > 0.0))
            throw InvalidParameter("sla_db must be > 0");
        if (!std::isfinite(params.downtilt_deg))
            throw InvalidParameter("downtilt must be finite");
    }

    void validate(const PathlossParams &params)
    {
        if (!(params.f_ghz > 0.0) || !std::isfinite(params.f_ghz))
            throw InvalidParameter("f_ghz must be positive and finite");
        if (!std::isfinite(params.breakpoint_height_m))
            throw InvalidParameter("breakpoint_height_m must be finite");
    }

    double vertical_gain(double theta_deg, const AntennaParams &params)
    {
        // Same expression as kernels::vertical_gain.
        const double u = (theta_deg - params.downtilt_deg) / params.theta3db_deg;
        return -std::min(12.0 * (u * u), params.sla_db);
    }

    double effective_tx_power(double p_t_dbm, double theta_deg, const AntennaParams &params)
    {
        return p_t_dbm + vertical_gain(theta_deg, params);
    }

    double pl_los(double d_m, const PathlossParams &params)
    {
        require_distance(d_m);
        return 28.0 + 22.0 * std::log10(d_m) + frequency_term(params);
    }

    double pl_nlos_low(double d_m, double receiver_height_m, const PathlossParams &params)
    {
        require_distance(d_m);
        require_height(receiver_height_m);
        return 13.54 + 39.08 * std::log10(d_m) + frequency_term(params) - 0.6 * (receiver_height_m - 1.5);
    }

    double pl_nlos_aerial(double d_m, double receiver_height_m, const PathlossParams &params)
    {
        require_distance(d_m);
        require_height(receiver_height_m);
        (void)frequency_term(params);
        return -17.5 + (46.0 - 7.0 * std::log10(receiver_height_m)) * std::log10(d_m) +
               20.0 * std::log10(40.0 * std::numbers::pi * params.f_ghz / 3.0);
    }

    double pl_nlos(double d_m, double receiver_height_m, const PathlossParams &params)
    {
        require_height(receiver_height_m);
        if (receiver_height_m < params.breakpoint_height_m)
            return std::max(pl_los(d_m, params), pl_nlos_low(d_m, receiver_height_m, params));
        return pl_nlos_aerial(d_m, receiver_height_m, params);
    }

    double pl_bs_to_element(double d1_m, double receiver_height_m, const PathlossParams &params)
    {
        return pl_nlos(d1_m, receiver_height_m, params);
    }

    double pl_element_to_uav(double d1_m, double d2_m, double receiver_height_m, const PathlossParams &params)
    {
        require_distance(d2_m);
        return pl_nlos(d1_m + d2_m, receiver_height_m, params) - pl_nlos(d1_m, receiver_height_m, params);
    }
}
