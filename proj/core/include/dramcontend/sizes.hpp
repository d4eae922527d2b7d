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

#include <string>
#include <string_view>

#include "dramcontend/geometry.hpp"

namespace dramcontend {

// Parses "1024", "1K", "256K", "4KB", "1M", "2MB", "1G" (binary units).
// Throws ConfigError on malformed or overflowing input.
Bytes parse_size(std::string_view text);

// Shortest exact suffixed form: 1024 -> "1K", 2097152 -> "2M", 1536 -> "1536".
std::string format_size(Bytes bytes);

}  // namespace dramcontend
