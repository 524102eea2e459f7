// Copyright 2026 The qepad developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qepad {

/// Stable error identifiers. These values are mirrored one-to-one by the
/// qepad_status codes of the C API, so they must never be reordered.
enum class ErrorCode : int {
    internal = 1,
    non_hermitian = 2,
    no_convergence = 3,
    dimension_mismatch = 4,
    length_mismatch = 5,
    zero_index = 6,
    domain_too_large = 7,
    entropy_too_low = 8,
    mass_not_normalized = 9,
    bad_parameters = 10,
    bad_key = 11,
    bad_index = 12,
    label_mismatch = 13,
    no_witness = 14,
    constant_predicate = 15,
    config_parse = 16,
    io = 17,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace qepad
