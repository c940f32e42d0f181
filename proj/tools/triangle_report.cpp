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

// Prints rho0, the incircle, the thickness and the area of the regular r-disk
// triangle for a few (w, r) pairs in each geometry.

#include <cstdio>

#include "spindle.hpp"

int main() {
  struct Pair {
    double w, r;
  };
  const Pair pairs[] = {{0.5, 1.0}, {1.0, 1.2}, {0.7, 1.5}};
  std::printf("%-10s %5s %5s %12s %12s %12s %12s\n", "geometry", "w", "r", "rho0",
              "incircle", "thickness", "area");
  for (const spindle::Geometry g : spindle::kAllGeometries) {
    for (const Pair& p : pairs) {
      const auto t = spindle::regular_disk_triangle(p.w, p.r, g);
      const auto in = spindle::incircle(t.polygon);
      const auto th = spindle::thickness(t.polygon);
      std::printf("%-10.*s %5.2f %5.2f %12.9f %12.9f %12.9f %12.9f\n",
                  static_cast<int>(g.name().size()), g.name().data(), p.w, p.r, t.rho0,
                  in.rho, th.width, spindle::area(t.polygon));
    }
  }
}
