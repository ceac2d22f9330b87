// Copyright psyn contributors
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

namespace psyn {

// Malformed or inconsistent input (files, matrices, term lists).
// The CLI maps this to exit code 2.
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A violated internal invariant. The CLI maps this to exit code 3.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace psyn
