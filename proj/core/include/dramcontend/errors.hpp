// Copyright 2026 The dramcontend Authors.
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

namespace dramcontend {

// Invalid geometry, timing, actor set or experiment factors. The message
// names the offending field.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A placement asks for more distinct rows than the target region holds.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// The simulator reached a state the mapping should make impossible.
class ModelError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dramcontend
