// Copyright 2026 The Spindle Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPINDLE_ERROR_HPP
#define SPINDLE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace spindle {

enum class Errc {
  antipodal,
  bad_tangent,
  degenerate,
  coincident,
  out_of_range,
  too_far,
  degenerate_point,
  not_enclosable,
  cap_overlap,
  apex_too_far,
  empty,
  malformed_boundary,
  bad_range,
  projection_domain,
  usage,
  io,
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::antipodal: return "ANTIPODAL";
    case Errc::bad_tangent: return "BAD_TANGENT";
    case Errc::degenerate: return "DEGENERATE";
    case Errc::coincident: return "COINCIDENT";
    case Errc::out_of_range: return "OUT_OF_RANGE";
    case Errc::too_far: return "TOO_FAR";
    case Errc::degenerate_point: return "DEGENERATE_POINT";
    case Errc::not_enclosable: return "NOT_ENCLOSABLE";
    case Errc::cap_overlap: return "CAP_OVERLAP";
    case Errc::apex_too_far: return "APEX_TOO_FAR";
    case Errc::empty: return "EMPTY";
    case Errc::malformed_boundary: return "MALFORMED_BOUNDARY";
    case Errc::bad_range: return "BAD_RANGE";
    case Errc::projection_domain: return "PROJECTION_DOMAIN";
    case Errc::usage: return "USAGE";
    case Errc::io: return "IO";
  }
  return "UNKNOWN";
}

// Every failure in the library is reported through this exception; code()
// carries the machine-checkable reason.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace spindle

#endif  // SPINDLE_ERROR_HPP
