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

#include "dramcontend/geometry.hpp"

#include <string>

#include "dramcontend/errors.hpp"

namespace dramcontend {
namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ConfigError(std::string("geometry: ") + what + " overflows 64-bit capacity");
  }
  return out;
}

void require_positive(std::uint64_t value, const char* field) {
  if (value == 0) throw ConfigError(std::string("geometry: ") + field + " must be positive");
}

}  // namespace

std::string_view to_string(InterleaveMode mode) {
  return mode == InterleaveMode::HighOrder ? "HighOrder" : "LowOrder";
}

InterleaveMode parse_interleave_mode(std::string_view text) {
  if (text == "HighOrder" || text == "high" || text == "high_order") return InterleaveMode::HighOrder;
  if (text == "LowOrder" || text == "low" || text == "low_order") return InterleaveMode::LowOrder;
  throw ConfigError("interleave_mode: expected HighOrder or LowOrder, got '" + std::string(text) + "'");
}

DramGeometry::DramGeometry(const GeometryParams& p) : params_(p) {
  require_positive(p.chips, "chips");
  require_positive(p.bank_groups, "bank_groups");
  require_positive(p.banks_per_group, "banks_per_group");
  require_positive(p.rows_per_bank, "rows_per_bank");
  require_positive(p.columns_per_row, "columns_per_row");
  require_positive(p.column_width_bits, "column_width_bits");
  require_positive(p.row_slice_bytes, "row_slice_bytes");
  require_positive(p.chip_chunk_bytes, "chip_chunk_bytes");

  const std::uint64_t row_bits =
      checked_mul(p.columns_per_row, p.column_width_bits, "columns_per_row * column_width_bits");
  if (row_bits % 8 != 0 || row_bits / 8 != p.row_slice_bytes) {
    throw ConfigError("geometry: row_slice_bytes must equal columns_per_row * column_width_bits / 8 (" +
                      std::to_string(row_bits) + " bits per row)");
  }

  const std::uint64_t stride = checked_mul(p.row_slice_bytes, banks_per_chip(), "bank stride");
  if (p.chip_chunk_bytes % stride != 0) {
    throw ConfigError("geometry: chip_chunk_bytes must be a multiple of " + std::to_string(stride) +
                      " (banks per chip * row_slice_bytes)");
  }
  if (p.interleave_mode == InterleaveMode::HighOrder && p.rows_per_bank % rows_per_chunk() != 0) {
    throw ConfigError("geometry: rows_per_bank must be a multiple of the " + std::to_string(rows_per_chunk()) +
                      " rows consumed per chip chunk");
  }

  bank_bits_ = checked_mul(row_bits, p.rows_per_bank, "bank capacity");
  chip_bits_ = checked_mul(bank_bits_, banks_per_chip(), "chip capacity");
  module_bits_ = checked_mul(chip_bits_, p.chips, "module capacity");
}

Bits bank_capacity_bits(const GeometryParams& p) {
  require_positive(p.rows_per_bank, "rows_per_bank");
  require_positive(p.columns_per_row, "columns_per_row");
  require_positive(p.column_width_bits, "column_width_bits");
  return checked_mul(checked_mul(p.rows_per_bank, p.columns_per_row, "bank capacity"), p.column_width_bits,
                     "bank capacity");
}

Bits chip_capacity_bits(const GeometryParams& p) {
  require_positive(p.bank_groups, "bank_groups");
  require_positive(p.banks_per_group, "banks_per_group");
  return checked_mul(bank_capacity_bits(p), std::uint64_t{p.bank_groups} * p.banks_per_group, "chip capacity");
}

Bits module_capacity_bits(const GeometryParams& p) {
  require_positive(p.chips, "chips");
  return checked_mul(chip_capacity_bits(p), p.chips, "module capacity");
}

}  // namespace dramcontend
