// Copyright 2026 The KT Expander Authors.
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

#ifndef KT_ERROR_HPP_
#define KT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace kt {

enum class ErrorCode {
  kZeroDivisor,
  kFieldMismatch,
  kNonCoprimeModuli,
  kDuplicateNode,
  kCharTooSmall,
  kShapeError,
  kInvalidField,
  kInvalidParams,
  kTooLarge,
  kSameVertex,
  kBudgetExceeded,
  kNoPrimeInWindow,
  kWrongRegime,
  kWitnessTooLarge,
  kZeroVertex,
  kNotAGroupElement,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

// All library failures surface as this exception; code() is stable and
// what tests and the CLI dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kt

#endif  // KT_ERROR_HPP_
