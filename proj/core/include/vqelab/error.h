// Copyright 2026 The vqelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VQELAB_ERROR_H_
#define VQELAB_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vqelab {

enum class ErrorCode {
  kCapacity,
  kIndex,
  kUnboundParameter,
  kDimension,
  kArity,
  kParse,
  kSpec,
  kNumeric,
  kUndefined,
  kConfig,
  kData,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library is an Error; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Hamiltonian and config parse failures carry the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace vqelab

#endif  // VQELAB_ERROR_H_
