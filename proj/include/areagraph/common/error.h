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

#ifndef AREAGRAPH_COMMON_ERROR_H_
#define AREAGRAPH_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace areagraph {

enum class ErrorCode {
  kParse,
  kReference,
  kOutOfRange,
  kEmptyMap,
  kPoseOutOfMap,
  kPriorOutOfMap,
  kDivergence,
  kPlacement,
  kInsufficientData,
  kInvalidArgument,
  kIo,
};

const char* ErrorCodeName(ErrorCode code);

// Base class of every error raised by the library. The code is stable and is
// what the command line tool maps onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(ErrorCode::kParse,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

class DivergenceError : public Error {
 public:
  explicit DivergenceError(const std::string& message)
      : Error(ErrorCode::kDivergence, message) {}
};

}  // namespace areagraph

#endif  // AREAGRAPH_COMMON_ERROR_H_
