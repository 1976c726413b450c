/*
 *     Copyright 2026 The izeta Authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
 */

#include "izeta/error.hpp"

namespace izeta {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::AsymmetricEdge: return "AsymmetricEdge";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::InvalidAction: return "InvalidAction";
    case ErrorCode::NotFree: return "NotFree";
    case ErrorCode::RadiusTooSmall: return "RadiusTooSmall";
    case ErrorCode::ActionMismatch: return "ActionMismatch";
    case ErrorCode::BadConstantTerm: return "BadConstantTerm";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::HullContainsZero: return "HullContainsZero";
    case ErrorCode::BranchObstruction: return "BranchObstruction";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::TruncationNotConverged: return "TruncationNotConverged";
    case ErrorCode::OutsideOmega: return "OutsideOmega";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace izeta
