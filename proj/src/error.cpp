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

#include "hwp/error.hpp"

namespace hwp {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::InfeasibleSplit: return "infeasible-split";
    case ErrorKind::NotAFactor: return "not-a-factor";
    case ErrorKind::Overlap: return "overlap";
    case ErrorKind::SearchExhausted: return "search-exhausted";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::NotFound: return "not-found";
    case ErrorKind::Corrupt: return "corrupt";
    case ErrorKind::Verification: return "verification";
  }
  return "?";
}

}  // namespace hwp
