// SPDX-License-Identifier: Apache-2.0
//
// vlcsim: stochastic channel simulator for indoor visible light communication
// Copyright (C) 2026 The vlcsim authors
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
#include <string_view>

namespace vlcsim {

enum class Errc {
    ZeroVector,
    SingularFrame,
    DegenerateNormal,
    InvalidAdr,
    NegativeOrder,
    EmptyPattern,
    OutOfRange,
    DomainMismatch,
    NotNormalized,
    ZeroDistance,
    EmptyCir,
    ConfigMismatch,
    ZeroGain,
    NonPositivePower,
    DegenerateFit,
    TooFewSamples,
    InvalidArgument,
    ParseError,
    ValidationError,
    UnknownExperiment,
    IoError,
};

constexpr std::string_view errc_name(Errc code)
{
    switch (code)
    {
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::SingularFrame: return "SingularFrame";
    case Errc::DegenerateNormal: return "DegenerateNormal";
    case Errc::InvalidAdr: return "InvalidAdr";
    case Errc::NegativeOrder: return "NegativeOrder";
    case Errc::EmptyPattern: return "EmptyPattern";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::ZeroDistance: return "ZeroDistance";
    case Errc::EmptyCir: return "EmptyCir";
    case Errc::ConfigMismatch: return "ConfigMismatch";
    case Errc::ZeroGain: return "ZeroGain";
    case Errc::NonPositivePower: return "NonPositivePower";
    case Errc::DegenerateFit: return "DegenerateFit";
    case Errc::TooFewSamples: return "TooFewSamples";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::UnknownExperiment: return "UnknownExperiment";
    case Errc::IoError: return "IoError";
    }
    return "Unknown";
}

// All library failures are reported through this exception; code() tells them apart.
class Error : public std::runtime_error
{
public:
    Error(Errc code, const std::string &what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace vlcsim
