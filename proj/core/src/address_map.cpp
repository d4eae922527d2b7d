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

#include "dramcontend/address_map.hpp"

#include <stdexcept>
#include <string>

#include "dramcontend/errors.hpp"

namespace dramcontend {

void ContiguousBlock::validate(const DramGeometry& geometry) const {
  if (size_bytes == 0 || size_bytes % geometry.row_slice_bytes() != 0) {
    throw ConfigError("block: size_bytes must be a positive multiple of row_slice_bytes (" +
                      std::to_string(geometry.row_slice_bytes()) + ")");
  }
  if (base_offset > geometry.module_bytes() || size_bytes > geometry.module_bytes() - base_offset) {
    throw ConfigError("block: [base_offset, base_offset + size_bytes) exceeds module capacity of " +
                      std::to_string(geometry.module_bytes()) + " bytes");
  }
}

DramAddress decompose(const DramGeometry& g, Bytes offset) {
  if (offset >= g.module_bytes()) {
    throw std::out_of_range("decompose: offset " + std::to_string(offset) + " outside module capacity of " +
                            std::to_string(g.module_bytes()) + " bytes");
  }

  const Bytes slice = g.row_slice_bytes();
  const Bytes banks = g.banks_per_chip();
  DramAddress out;
  out.column = static_cast<std::uint32_t>((offset % slice) * 8 / g.column_width_bits());

  if (g.interleave_mode() == InterleaveMode::HighOrder) {
    const Bytes chunk = g.chip_chunk_bytes();
    const Bytes epoch = offset / (chunk * g.chips());
    out.chip = static_cast<std::uint32_t>((offset / chunk) % g.chips());
    out.flat_bank = static_cast<std::uint32_t>((offset / slice) % banks);
    out.row = static_cast<std::uint32_t>((offset % chunk) / (slice * banks) + epoch * g.rows_per_chunk());
  } else {
    const Bytes slice_index = offset / slice;
    const Bytes rest = slice_index / g.chips();
    out.chip = static_cast<std::uint32_t>(slice_index % g.chips());
    out.flat_bank = static_cast<std::uint32_t>(rest % banks);
    out.row = static_cast<std::uint32_t>(rest / banks);
  }

  out.bank_group = out.flat_bank / g.banks_per_group();
  out.bank = out.flat_bank % g.banks_per_group();
  return out;
}

Bytes same_bank_stride(const DramGeometry& g) {
  if (g.interleave_mode() == InterleaveMode::HighOrder) return g.bank_stride_bytes();
  return g.row_slice_bytes() * g.chips() * g.banks_per_chip();
}

std::uint32_t max_same_bank_offsets(const DramGeometry& g, Bytes victim_offset) {
  if (victim_offset >= g.module_bytes()) {
    throw std::out_of_range("same_bank_offsets: victim offset " + std::to_string(victim_offset) +
                            " outside module capacity of " + std::to_string(g.module_bytes()) + " bytes");
  }
  Bytes limit = g.module_bytes();
  if (g.interleave_mode() == InterleaveMode::HighOrder) {
    const Bytes chunk = g.chip_chunk_bytes();
    limit = victim_offset - victim_offset % chunk + chunk;
  }
  return static_cast<std::uint32_t>((limit - 1 - victim_offset) / same_bank_stride(g));
}

std::vector<Bytes> same_bank_offsets(const DramGeometry& g, Bytes victim_offset, std::uint32_t count) {
  if (count == 0) throw ConfigError("same_bank_offsets: count must be at least 1");
  const std::uint32_t available = max_same_bank_offsets(g, victim_offset);
  if (count > available) {
    throw CapacityError("same_bank_offsets: requested " + std::to_string(count) + " rows but only " +
                        std::to_string(available) + " are available beside the victim (max " +
                        std::to_string(available) + ")");
  }
  const Bytes stride = same_bank_stride(g);
  std::vector<Bytes> out;
  out.reserve(count);
  for (std::uint32_t k = 1; k <= count; ++k) out.push_back(victim_offset + k * stride);
  return out;
}

}  // namespace dramcontend
