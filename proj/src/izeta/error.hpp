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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace izeta {

/// Failure categories shared by every module. The C API maps these one to
/// one onto its status codes, so keep the two lists in the same order.
enum class ErrorCode {
    Parse = 1,
    SelfLoop,
    DuplicateEdge,
    AsymmetricEdge,
    EmptyGraph,
    InvalidAction,
    NotFree,
    RadiusTooSmall,
    ActionMismatch,
    BadConstantTerm,
    DomainError,
    HullContainsZero,
    BranchObstruction,
    QuadratureNotConverged,
    TruncationNotConverged,
    OutsideOmega,
    NotRegular,
    InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace izeta
