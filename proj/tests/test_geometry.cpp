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

#include <doctest.h>

#include <cstdint>
#include <random>

#include "dramcontend/errors.hpp"
#include "dramcontend/geometry.hpp"

using namespace dramcontend;

TEST_SUITE("geometry") {
  TEST_CASE("default module capacities") {
    const DramGeometry g;
    CHECK(bank_capacity_bits(g) == 536'870'912ULL);
    CHECK(chip_capacity_bits(g) == 8'589'934'592ULL);
    CHECK(module_capacity_bits(g) == 68'719'476'736ULL);
    CHECK(g.module_bytes() == 8ULL * 1024 * 1024 * 1024);
    CHECK(g.banks_per_chip() == 16);
    CHECK(g.total_banks() == 128);
    CHECK(g.rows_per_chunk() == 8);
    CHECK(g.bank_stride_bytes() == 16 * 1024);
  }

  TEST_CASE("single-bit bank") {
    GeometryParams p;
    p.rows_per_bank = 1;
    p.columns_per_row = 1;
    p.column_width_bits = 1;
    CHECK(bank_capacity_bits(p) == 1);
    CHECK_THROWS_AS(DramGeometry{p}, ConfigError);
  }

  TEST_CASE("small bank") {
    GeometryParams p;
    p.rows_per_bank = 1 << 10;
    CHECK(bank_capacity_bits(DramGeometry{p}) == 8'388'608ULL);
    CHECK(bank_capacity_bits(p) == 1024ULL * 1024 * 8);
  }

  TEST_CASE("chip with one bank equals the bank") {
    GeometryParams p;
    p.bank_groups = 1;
    p.banks_per_group = 1;
    const DramGeometry g(p);
    CHECK(chip_capacity_bits(g) == bank_capacity_bits(g));
  }

  TEST_CASE("chip with 2x2 banks") {
    GeometryParams p;
    p.bank_groups = 2;
    p.banks_per_group = 2;
    CHECK(chip_capacity_bits(DramGeometry{p}) == 536'870'912ULL * 4);
    CHECK(chip_capacity_bits(DramGeometry{p}) == 2'147'483'648ULL);
  }

  TEST_CASE("module chip counts") {
    GeometryParams p;
    p.chips = 1;
    CHECK(module_capacity_bits(DramGeometry{p}) == chip_capacity_bits(DramGeometry{p}));
    p.chips = 4;
    CHECK(module_capacity_bits(DramGeometry{p}) == 34'359'738'368ULL);
  }

  TEST_CASE("capacity chain holds for random valid geometries") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
      GeometryParams p;
      p.chips = 1u << (rng() % 4);
      p.bank_groups = 1u << (rng() % 3);
      p.banks_per_group = 1u << (rng() % 3);
      p.columns_per_row = 1u << (3 + rng() % 8);
      p.column_width_bits = 1u << (rng() % 5);
      p.row_slice_bytes = std::uint64_t{p.columns_per_row} * p.column_width_bits / 8;
      p.chip_chunk_bytes = p.row_slice_bytes * p.bank_groups * p.banks_per_group * (1u << (rng() % 4));
      p.rows_per_bank = 1u << (4 + rng() % 12);
      const DramGeometry g(p);
      const std::uint64_t per_chip = std::uint64_t{p.bank_groups} * p.banks_per_group;
      CHECK(module_capacity_bits(g) == bank_capacity_bits(g) * per_chip * p.chips);
      CHECK(module_capacity_bits(g) == module_capacity_bits(p));
    }
  }

  TEST_CASE("validation names the field") {
    GeometryParams p;
    p.chips = 0;
    CHECK_THROWS_WITH_AS(DramGeometry{p}, doctest::Contains("chips"), ConfigError);

    p = {};
    p.row_slice_bytes = 2048;
    CHECK_THROWS_WITH_AS(DramGeometry{p}, doctest::Contains("row_slice_bytes"), ConfigError);

    p = {};
    p.chip_chunk_bytes = 24 * 1024;
    CHECK_THROWS_WITH_AS(DramGeometry{p}, doctest::Contains("chip_chunk_bytes"), ConfigError);

    p = {};
    p.rows_per_bank = 12;
    CHECK_THROWS_WITH_AS(DramGeometry{p}, doctest::Contains("rows_per_bank"), ConfigError);
    p.interleave_mode = InterleaveMode::LowOrder;
    CHECK_NOTHROW(DramGeometry{p});
  }

  TEST_CASE("overflowing geometry is rejected") {
    GeometryParams p;
    p.rows_per_bank = 1u << 31;
    p.columns_per_row = 1u << 20;
    p.row_slice_bytes = std::uint64_t{1} << 20;
    p.chip_chunk_bytes = std::uint64_t{1} << 24;
    p.column_width_bits = 8;
    p.chips = 1u << 20;
    CHECK_THROWS_WITH_AS(DramGeometry{p}, doctest::Contains("overflow"), ConfigError);
    CHECK_THROWS_AS(module_capacity_bits(p), ConfigError);
  }

  TEST_CASE("interleave mode names") {
    CHECK(parse_interleave_mode("HighOrder") == InterleaveMode::HighOrder);
    CHECK(parse_interleave_mode("LowOrder") == InterleaveMode::LowOrder);
    CHECK(to_string(InterleaveMode::LowOrder) == "LowOrder");
    CHECK_THROWS_AS(parse_interleave_mode("xor"), ConfigError);
  }
}
