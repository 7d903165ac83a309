// Copyright 2026 The Catchall Authors. All Rights Reserved.
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

#include "catchall/error.hpp"

namespace catchall {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
    case ErrorCode::kHorizonTooLarge:
      return "horizon-too-large";
    case ErrorCode::kNonpositiveRatio:
      return "nonpositive-ratio";
    case ErrorCode::kSeriesTooShort:
      return "series-too-short";
    case ErrorCode::kBadHalfWidth:
      return "bad-half-width";
    case ErrorCode::kSearchDomainEmpty:
      return "search-domain-empty";
    case ErrorCode::kConfigInvalid:
      return "config-invalid";
    case ErrorCode::kParse:
      return "parse-error";
    case ErrorCode::kInternal:
      return "internal-error";
  }
  return "unknown";
}

}  // namespace catchall
