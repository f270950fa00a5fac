// Copyright 2026 The Authors.
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

#ifndef RAINBOW_RAINBOW_HPP_
#define RAINBOW_RAINBOW_HPP_

#include "rainbow/element_set.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/instance.hpp"
#include "rainbow/matroid.hpp"
#include "rainbow/operations.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/trail.hpp"

#include "rainbow/lab/brute_force.hpp"
#include "rainbow/lab/generators.hpp"
#include "rainbow/lab/harness.hpp"
#include "rainbow/lab/intersection.hpp"
#include "rainbow/lab/verify.hpp"

#endif  // RAINBOW_RAINBOW_HPP_
