// Copyright 2026 The inball Authors
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

#pragma once

#include <string>
#include <utility>

#include "catch_amalgamated.hpp"

#include "inball/error.hpp"

namespace testutil {

// Runs f, requires that it throws inball::Error with the given code.
// Comparing code names as strings keeps Catch2's failure output readable.
template <typename F>
void require_error(inball::ErrorCode expected, F&& f) {
  try {
    std::forward<F>(f)();
    FAIL("expected error " << inball::to_string(expected)
                           << " but the call succeeded");
  } catch (const inball::Error& e) {
    INFO("message: " << e.what());
    REQUIRE(std::string(inball::to_string(e.code())) ==
            inball::to_string(expected));
  }
}

}  // namespace testutil
