// Copyright 2026 The auraspace Authors
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

#ifndef AURASPACE_SRC_CHECK_HPP_
#define AURASPACE_SRC_CHECK_HPP_

#include <stdexcept>

#ifndef AURASPACE_INTERNAL_CHECKS
#define AURASPACE_INTERNAL_CHECKS 0
#endif

// Identity checks between two routes to the same value. A failure means an
// operator identity broke, which is a bug, so it throws std::logic_error.
#if AURASPACE_INTERNAL_CHECKS
#define AURASPACE_CHECK(cond, msg)                   \
  do {                                               \
    if (!(cond)) throw std::logic_error(msg);        \
  } while (false)
#else
#define AURASPACE_CHECK(cond, msg) \
  do {                             \
  } while (false)
#endif

#endif  // AURASPACE_SRC_CHECK_HPP_
