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

#include <stdexcept>
#include <string>

namespace irsuav
{
    // Out-of-range or malformed argument (counts, distances, heights, frequencies).
    class InvalidParameter : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Scene layout that makes a link undefined, e.g. coincident endpoints.
    class DegenerateGeometry : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Configuration text or flag value that cannot be parsed or fails validation.
    // `key` names the offending key when known; `line` is 1-based, 0 when not from a file.
    class ConfigError : public std::runtime_error
    {
    public:
        ConfigError(const std::string &message, std::string key = {}, int line = 0)
            : std::runtime_error(message), key_(std::move(key)), line_(line) {}

        const std::string &key() const noexcept { return key_; }
        int line() const noexcept { return line_; }

    private:
        std::string key_;
        int line_;
    };
}
