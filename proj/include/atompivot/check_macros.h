// Copyright 2026 The Atompivot Authors
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

#ifndef ATOMPIVOT_CHECK_MACROS_H_
#define ATOMPIVOT_CHECK_MACROS_H_

#include <stdexcept>
#include <string>

// Contract violations (dead vertices, empty clusters, out-of-domain
// parameters passed to hot-path routines) throw std::logic_error. Recoverable
// input errors (files, user parameters) are reported through absl::Status.
#define AP_CHECK(cond, msg)                                               \
  do {                                                                    \
    if (!(cond)) {                                                        \
      throw std::logic_error(std::string(__FILE__) + ":" +                \
                             std::to_string(__LINE__) + ": " + (msg));    \
    }                                                                     \
  } while (false)

#endif  // ATOMPIVOT_CHECK_MACROS_H_
