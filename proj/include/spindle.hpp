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

// Umbrella header for the kernel, measurements, harness and front end.

#ifndef SPINDLE_SPINDLE_HPP
#define SPINDLE_SPINDLE_HPP

#include "spindle/arc_region.hpp"
#include "spindle/cap_domain.hpp"
#include "spindle/cli.hpp"
#include "spindle/enclosing.hpp"
#include "spindle/error.hpp"
#include "spindle/extremal.hpp"
#include "spindle/geometry.hpp"
#include "spindle/hull.hpp"
#include "spindle/io.hpp"
#include "spindle/measure.hpp"
#include "spindle/svg.hpp"
#include "spindle/vec3.hpp"
#include "spindle/verify.hpp"

#endif  // SPINDLE_SPINDLE_HPP
