// Copyright 2026 The tilecode Authors
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

#include "tilecode/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace tilecode {

int configure_threads() {
  if (const char *env = std::getenv("TILECODE_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) omp_set_num_threads(n);
    } catch (const std::exception &) {
      // Ignore malformed values and keep the OpenMP default.
    }
  }
  return thread_count();
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace tilecode
