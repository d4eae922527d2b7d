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
#include <vector>

#include "dramcontend/geometry.hpp"

namespace dramcontend {

// Physical location of one byte inside the module.
struct DramAddress {
  std::uint32_t chip = 0;
  std::uint32_t bank_group = 0;
  std::uint32_t bank = 0;
  std::uint32_t flat_bank = 0;  // bank_group * banks_per_group + bank
  std::uint32_t row = 0;
  std::uint32_t column = 0;

  bool operator==(const DramAddress&) const = default;
};

// A physically contiguous allocation; offsets handed to the simulator are
// relative to base_offset.
struct ContiguousBlock {
  Bytes base_offset = 0;
  Bytes size_bytes = 1024 * 1024;

  void validate(const DramGeometry& geometry) const;
};

// Maps a module byte offset to (chip, bank, row, column).
//
// HighOrder is a chunked layout: each chip serves chip_chunk_bytes of
// contiguous space, and inside a chunk consecutive row slices rotate over the
// chip's banks. Once all chips have served one chunk (a chip epoch), the
// rotation restarts on chip 0 with the next free rows.
//
// LowOrder rotates chips first at row-slice granularity, then banks, then
// rows.
//
// Throws std::out_of_range when offset >= module capacity.
DramAddress decompose(const DramGeometry& geometry, Bytes offset);

// Index of the addressed bank across the whole module: chip * banks_per_chip + flat_bank.
inline std::uint32_t global_bank(const DramGeometry& geometry, const DramAddress& addr) {
  return addr.chip * geometry.banks_per_chip() + addr.flat_bank;
}

// Address distance between consecutive rows of one bank under the active mapping.
Bytes same_bank_stride(const DramGeometry& geometry);

// Largest count accepted by same_bank_offsets for this victim.
std::uint32_t max_same_bank_offsets(const DramGeometry& geometry, Bytes victim_offset);

// Returns victim_offset + k * same_bank_stride for k = 1..count. Every result
// lands in the victim's chip and bank on a distinct row; in HighOrder mode all
// of them stay inside the victim's chip chunk. Throws CapacityError when count
// exceeds max_same_bank_offsets and ConfigError when count is zero.
std::vector<Bytes> same_bank_offsets(const DramGeometry& geometry, Bytes victim_offset, std::uint32_t count);

}  // namespace dramcontend
