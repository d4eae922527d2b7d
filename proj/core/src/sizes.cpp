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

#include "dramcontend/sizes.hpp"

#include <cctype>
#include <charconv>

#include "dramcontend/errors.hpp"

namespace dramcontend {

Bytes parse_size(std::string_view text) {
  const std::string original(text);
  Bytes value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end == text.data()) throw ConfigError("invalid size '" + original + "'");

  std::string suffix;
  for (const char* p = end; p != text.data() + text.size(); ++p) {
    suffix.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(*p))));
  }
  unsigned shift = 0;
  if (suffix.empty() || suffix == "B") {
    shift = 0;
  } else if (suffix == "K" || suffix == "KB" || suffix == "KIB") {
    shift = 10;
  } else if (suffix == "M" || suffix == "MB" || suffix == "MIB") {
    shift = 20;
  } else if (suffix == "G" || suffix == "GB" || suffix == "GIB") {
    shift = 30;
  } else {
    throw ConfigError("invalid size suffix in '" + original + "' (use K, M or G)");
  }
  if (shift > 0 && value > (~Bytes{0} >> shift)) throw ConfigError("size '" + original + "' overflows");
  return value << shift;
}

std::string format_size(Bytes bytes) {
  static constexpr struct {
    unsigned shift;
    const char* suffix;
  } units[] = {{30, "G"}, {20, "M"}, {10, "K"}};
  for (const auto& unit : units) {
    const Bytes scale = Bytes{1} << unit.shift;
    if (bytes != 0 && bytes % scale == 0) return std::to_string(bytes / scale) + unit.suffix;
  }
  return std::to_string(bytes);
}

}  // namespace dramcontend
