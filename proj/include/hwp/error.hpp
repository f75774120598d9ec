// Copyright 2026 The hwp-solver Authors
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

namespace hwp {

enum class ErrorKind {
  Domain,           // argument outside an operation's domain
  Unsupported,      // parameters the constructions deliberately do not cover
  Infeasible,       // request excluded by an existence condition
  InfeasibleSplit,  // no admissible r/s allocation for an instance
  NotAFactor,       // degree precondition of cycle extraction violated
  Overlap,          // arc-disjointness violated in a union
  SearchExhausted,  // search finished (or hit its budget) without a result
  CapExceeded,      // instance larger than the configured search cap
  NotFound,         // registry key absent
  Corrupt,          // malformed serialized data
  Verification,     // a produced or loaded artifact failed verification
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hwp
