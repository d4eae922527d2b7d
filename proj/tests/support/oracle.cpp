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

#include "oracle.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace oracle {
namespace {

unsigned log2_exact(std::uint64_t v) {
  if (!std::has_single_bit(v)) throw std::invalid_argument("oracle: geometry field is not a power of two");
  return static_cast<unsigned>(std::countr_zero(v));
}

std::uint64_t field(std::uint64_t value, unsigned lo, unsigned bits) {
  return (value >> lo) & ((std::uint64_t{1} << bits) - 1);
}

}  // namespace

dramcontend::DramAddress bit_decompose(const dramcontend::GeometryParams& g, std::uint64_t offset) {
  const unsigned slice_bits = log2_exact(g.row_slice_bytes);
  const unsigned bank_bits = log2_exact(std::uint64_t{g.bank_groups} * g.banks_per_group);
  const unsigned chunk_bits = log2_exact(g.chip_chunk_bytes);
  const unsigned chip_bits = log2_exact(g.chips);
  const unsigned row_in_chunk_bits = chunk_bits - slice_bits - bank_bits;
  const unsigned group_split = log2_exact(g.banks_per_group);

  dramcontend::DramAddress a;
  const std::uint64_t byte = field(offset, 0, slice_bits);
  a.column = static_cast<std::uint32_t>(byte * 8 / g.column_width_bits);
  a.flat_bank = static_cast<std::uint32_t>(field(offset, slice_bits, bank_bits));
  a.bank_group = a.flat_bank >> group_split;
  a.bank = a.flat_bank & (g.banks_per_group - 1);
  const std::uint64_t row_lo = field(offset, slice_bits + bank_bits, row_in_chunk_bits);
  a.chip = static_cast<std::uint32_t>(field(offset, chunk_bits, chip_bits));
  const std::uint64_t epoch = offset >> (chunk_bits + chip_bits);
  a.row = static_cast<std::uint32_t>((epoch << row_in_chunk_bits) | row_lo);
  return a;
}

std::vector<ReplayResult> naive_replay(const dramcontend::GeometryParams& g, const dramcontend::TimingParams& t,
                                       const std::vector<ScriptStep>& script) {
  struct Bank {
    bool open = false;
    std::uint32_t row = 0;
    std::uint64_t free_at = 0;
    std::uint64_t refreshed_through = 0;  // last refresh boundary already applied
  };
  std::map<std::pair<std::uint32_t, std::uint32_t>, Bank> banks;

  const std::uint64_t hit = t.cas_cycles + t.bus_transfer_cycles;
  const std::uint64_t open = t.rcd_cycles + hit;
  const std::uint64_t conflict = t.rp_cycles + open;

  std::vector<ReplayResult> out;
  std::uint64_t clock = 0;
  for (const auto& step : script) {
    const std::uint64_t issue = clock + step.gap;
    std::uint64_t cursor = issue;
    ReplayResult r{dramcontend::AccessKind::RowHit, issue, 0};
    for (std::uint64_t s = 0; s < step.size_bytes / g.row_slice_bytes; ++s) {
      const auto a = bit_decompose(g, step.offset + s * g.row_slice_bytes);
      Bank& b = banks[{a.chip, a.flat_bank}];
      std::uint64_t start = cursor > b.free_at ? cursor : b.free_at;
      if (t.refresh_interval_cycles > 0) {
        for (std::uint64_t due = b.refreshed_through + t.refresh_interval_cycles; due <= start;
             due += t.refresh_interval_cycles) {
          b.open = false;
          if (due + t.refresh_duration_cycles > b.free_at) b.free_at = due + t.refresh_duration_cycles;
          b.refreshed_through = due;
          if (b.free_at > start) start = b.free_at;
        }
      }
      dramcontend::AccessKind kind;
      std::uint64_t cost;
      if (!b.open) {
        kind = dramcontend::AccessKind::RowOpenFromIdle;
        cost = open;
      } else if (b.row == a.row) {
        kind = dramcontend::AccessKind::RowHit;
        cost = hit;
      } else {
        kind = dramcontend::AccessKind::RowConflict;
        cost = conflict;
      }
      if (s == 0) r.kind = kind;
      b.open = true;
      b.row = a.row;
      b.free_at = start + cost;
      cursor = b.free_at;
    }
    r.completion = cursor;
    clock = cursor;
    out.push_back(r);
  }
  return out;
}

}  // namespace oracle
