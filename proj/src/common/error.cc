/*
 * Copyright 2026 The Area Graph Localization Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "areagraph/common/error.h"

namespace areagraph {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
      return "parse_error";
    case ErrorCode::kReference:
      return "reference_error";
    case ErrorCode::kOutOfRange:
      return "out_of_range";
    case ErrorCode::kEmptyMap:
      return "empty_map";
    case ErrorCode::kPoseOutOfMap:
      return "pose_out_of_map";
    case ErrorCode::kPriorOutOfMap:
      return "prior_out_of_map";
    case ErrorCode::kDivergence:
      return "divergence";
    case ErrorCode::kPlacement:
      return "placement_error";
    case ErrorCode::kInsufficientData:
      return "insufficient_data";
    case ErrorCode::kInvalidArgument:
      return "invalid_argument";
    case ErrorCode::kIo:
      return "io_error";
  }
  return "unknown";
}

}  // namespace areagraph
