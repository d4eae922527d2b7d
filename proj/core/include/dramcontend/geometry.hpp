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

#include <cstdint>
#include <string_view>

namespace dramcontend {

using Bits = std::uint64_t;
using Bytes = std::uint64_t;

enum class InterleaveMode { HighOrder, LowOrder };

std::string_view to_string(InterleaveMode mode);
InterleaveMode parse_interleave_mode(std::string_view text);

// Raw description of a DIMM. Defaults describe a single-rank 8 GB DDR4
// RDIMM built from eight x8 chips.
struct GeometryParams {
  std::uint32_t chips = 8;
  std::uint32_t bank_groups = 4;
  std::uint32_t banks_per_group = 4;
  std::uint32_t rows_per_bank = 1u << 16;
  std::uint32_t columns_per_row = 1u << 10;
  std::uint32_t column_width_bits = 8;
  Bytes row_slice_bytes = 1024;
  Bytes chip_chunk_bytes = 128 * 1024;
  InterleaveMode interleave_mode = InterleaveMode::HighOrder;

  bool operator==(const GeometryParams&) const = default;
};

// Validated, immutable DIMM geometry. Construction throws ConfigError naming
// the violated field; every capacity is guaranteed to fit in 64 bits.
class DramGeometry {
 public:
  DramGeometry() : DramGeometry(GeometryParams{}) {}
  explicit DramGeometry(const GeometryParams& params);

  const GeometryParams& params() const { return params_; }

  std::uint32_t chips() const { return params_.chips; }
  std::uint32_t bank_groups() const { return params_.bank_groups; }
  std::uint32_t banks_per_group() const { return params_.banks_per_group; }
  std::uint32_t banks_per_chip() const { return params_.bank_groups * params_.banks_per_group; }
  std::uint32_t total_banks() const { return banks_per_chip() * params_.chips; }
  std::uint32_t rows_per_bank() const { return params_.rows_per_bank; }
  std::uint32_t columns_per_row() const { return params_.columns_per_row; }
  std::uint32_t column_width_bits() const { return params_.column_width_bits; }
  Bytes row_slice_bytes() const { return params_.row_slice_bytes; }
  Bytes chip_chunk_bytes() const { return params_.chip_chunk_bytes; }
  InterleaveMode interleave_mode() const { return params_.interleave_mode; }

  // Address distance between two rows of the same bank in one chip chunk.
  Bytes bank_stride_bytes() const { return row_slice_bytes() * banks_per_chip(); }
  // Rows of each bank filled by one chip chunk.
  std::uint32_t rows_per_chunk() const {
    return static_cast<std::uint32_t>(chip_chunk_bytes() / bank_stride_bytes());
  }
  Bytes module_bytes() const { return module_bits_ / 8; }

  Bits bank_capacity_bits() const { return bank_bits_; }
  Bits chip_capacity_bits() const { return chip_bits_; }
  Bits module_capacity_bits() const { return module_bits_; }

  bool operator==(const DramGeometry& other) const { return params_ == other.params_; }

 private:
  GeometryParams params_;
  Bits bank_bits_ = 0;
  Bits chip_bits_ = 0;
  Bits module_bits_ = 0;
};

// rows x columns x column width.
inline Bits bank_capacity_bits(const DramGeometry& g) { return g.bank_capacity_bits(); }
// bank capacity x banks per chip.
inline Bits chip_capacity_bits(const DramGeometry& g) { return g.chip_capacity_bits(); }
// chip capacity x chips.
inline Bits module_capacity_bits(const DramGeometry& g) { return g.module_capacity_bits(); }

// Same chain on raw parameters, skipping the layout checks of DramGeometry
// (a 1-bit row has no byte-sized slice but still has a capacity). Throws
// ConfigError on a zero count or 64-bit overflow.
Bits bank_capacity_bits(const GeometryParams& p);
Bits chip_capacity_bits(const GeometryParams& p);
Bits module_capacity_bits(const GeometryParams& p);

}  // namespace dramcontend
