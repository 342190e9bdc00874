// Copyright 2026 The kgon Authors
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

#ifndef KGON_ERROR_HPP_
#define KGON_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kgon {

enum class ErrorCode {
  kInvalidInput,
  kTooFewVertices,
  kDuplicateVertex,
  kNotStrictlyConvex,
  kCoordinateOutOfRange,
  kNotCyclicallyOrdered,
  kOutOfRange,
  kInvalidK,
  kTooLarge,
  kGenerationFailed,
  kNotACounterexample,
  kSolverDisagreement,
  kSyntax,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every domain failure in the library is reported as an Error. `where` holds
// the vertex indices involved when the failure is local (a duplicate pair, a
// non-convex triple), or the line number for syntax errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::size_t> where = {})
      : std::runtime_error(message), code_(code), where_(std::move(where)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& where() const noexcept { return where_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> where_;
};

}  // namespace kgon

#endif  // KGON_ERROR_HPP_
