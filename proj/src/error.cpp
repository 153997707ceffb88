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

#include "kt/error.hpp"

namespace kt {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroDivisor: return "ZeroDivisor";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kNonCoprimeModuli: return "NonCoprimeModuli";
    case ErrorCode::kDuplicateNode: return "DuplicateNode";
    case ErrorCode::kCharTooSmall: return "CharTooSmall";
    case ErrorCode::kShapeError: return "ShapeError";
    case ErrorCode::kInvalidField: return "InvalidField";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kSameVertex: return "SameVertex";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNoPrimeInWindow: return "NoPrimeInWindow";
    case ErrorCode::kWrongRegime: return "WrongRegime";
    case ErrorCode::kWitnessTooLarge: return "WitnessTooLarge";
    case ErrorCode::kZeroVertex: return "ZeroVertex";
    case ErrorCode::kNotAGroupElement: return "NotAGroupElement";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace kt
