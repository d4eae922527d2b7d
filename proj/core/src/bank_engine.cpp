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

#include "dramcontend/bank_engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

#include "dramcontend/errors.hpp"

namespace dramcontend {

std::string_view to_string(AccessKind kind) {
  switch (kind) {
    case AccessKind::RowHit: return "RowHit";
    case AccessKind::RowOpenFromIdle: return "RowOpenFromIdle";
    case AccessKind::RowConflict: return "RowConflict";
  }
  return "?";
}

std::string_view to_string(MemoryOp op) { return op == MemoryOp::Read ? "read" : "write"; }

std::string_view to_string(ArbitrationPolicy policy) {
  return policy == ArbitrationPolicy::Fcfs ? "fcfs" : "frfcfs";
}

AccessKind parse_access_kind(std::string_view text) {
  if (text == "RowHit") return AccessKind::RowHit;
  if (text == "RowOpenFromIdle") return AccessKind::RowOpenFromIdle;
  if (text == "RowConflict") return AccessKind::RowConflict;
  throw ConfigError("unknown access kind '" + std::string(text) + "'");
}

MemoryOp parse_memory_op(std::string_view text) {
  if (text == "read" || text == "Read") return MemoryOp::Read;
  if (text == "write" || text == "Write") return MemoryOp::Write;
  throw ConfigError("op: expected read or write, got '" + std::string(text) + "'");
}

ArbitrationPolicy parse_policy(std::string_view text) {
  if (text == "fcfs" || text == "FCFS") return ArbitrationPolicy::Fcfs;
  if (text == "frfcfs" || text == "FR-FCFS" || text == "fr-fcfs") return ArbitrationPolicy::FrFcfs;
  throw ConfigError("policy: expected fcfs or frfcfs, got '" + std::string(text) + "'");
}

void TimingParams::validate() const {
  if (cas_cycles < 1) throw ConfigError("timing: cas_cycles must be >= 1");
  if (rcd_cycles < 1) throw ConfigError("timing: rcd_cycles must be >= 1");
  if (rp_cycles < 1) throw ConfigError("timing: rp_cycles must be >= 1");
  if (refresh_enabled() && refresh_duration_cycles >= refresh_interval_cycles) {
    throw ConfigError("timing: refresh_duration_cycles must be shorter than refresh_interval_cycles");
  }
}

SliceStep access_slice(const BankState& bank, std::uint32_t row, Cycle now, const TimingParams& params,
                       const DramGeometry& geometry) {
  if (row >= geometry.rows_per_bank()) {
    throw ModelError("access_slice: row " + std::to_string(row) + " outside bank of " +
                     std::to_string(geometry.rows_per_bank()) + " rows");
  }
  AccessKind kind = AccessKind::RowOpenFromIdle;
  if (bank.open_row) kind = *bank.open_row == row ? AccessKind::RowHit : AccessKind::RowConflict;

  SliceStep step{kind, std::max(now, bank.busy_until), 0, bank};
  step.completion = step.start + params.latency(kind);
  step.next.open_row = row;
  step.next.busy_until = step.completion;
  return step;
}

Cycle apply_due_refresh(BankState& bank, Cycle start, const TimingParams& params) {
  if (!params.refresh_enabled()) return start;
  start = std::max(start, bank.busy_until);
  for (;;) {
    const Cycle due = start / params.refresh_interval_cycles * params.refresh_interval_cycles;
    if (due == 0 || due <= bank.last_refresh) return start;
    bank.open_row.reset();
    bank.busy_until = std::max(bank.busy_until, due + params.refresh_duration_cycles);
    bank.last_refresh = due;
    start = std::max(start, bank.busy_until);
  }
}

void refresh_tick(std::span<BankState> banks, Cycle now, const TimingParams& params) {
  if (!params.refresh_enabled()) return;
  for (auto& bank : banks) {
    bank.open_row.reset();
    bank.busy_until = std::max(bank.busy_until, now + params.refresh_duration_cycles);
    bank.last_refresh = std::max(bank.last_refresh, now);
  }
}

AccessOutcome service_request(const MemoryRequest& request, const DramGeometry& geometry,
                              const TimingParams& params, std::span<BankState> banks, Cycle now) {
  const Bytes slice = geometry.row_slice_bytes();
  if (request.size_bytes == 0 || request.size_bytes % slice != 0) {
    throw ConfigError("request: size_bytes " + std::to_string(request.size_bytes) +
                      " is not a positive multiple of row_slice_bytes");
  }
  // Reject the whole span before touching any bank.
  if (request.offset > geometry.module_bytes() || request.size_bytes > geometry.module_bytes() - request.offset) {
    throw std::out_of_range("request: [" + std::to_string(request.offset) + ", +" +
                            std::to_string(request.size_bytes) + ") outside module capacity of " +
                            std::to_string(geometry.module_bytes()) + " bytes");
  }

  AccessOutcome out;
  out.slices = static_cast<std::uint32_t>(request.size_bytes / slice);
  Cycle cursor = now;
  for (std::uint32_t i = 0; i < out.slices; ++i) {
    const DramAddress addr = decompose(geometry, request.offset + i * slice);
    BankState& bank = banks[global_bank(geometry, addr)];
    const Cycle start = apply_due_refresh(bank, cursor, params);
    const SliceStep step = access_slice(bank, addr.row, start, params, geometry);
    bank = step.next;
    if (i == 0) {
      out.kind = step.kind;
      out.start_cycle = step.start;
    }
    cursor = step.completion;
  }
  out.completion_cycle = cursor;
  out.latency_cycles = out.completion_cycle - out.start_cycle;
  return out;
}

std::size_t arbitrate(std::span<const MemoryRequest> pending, Cycle now, ArbitrationPolicy policy,
                      const RowHitProbe& is_row_hit, std::span<const std::uint32_t> tie_ranks) {
  if (pending.empty()) throw ModelError("arbitrate: no pending requests");

  auto rank = [&](ActorId id) -> std::uint64_t { return id < tie_ranks.size() ? tie_ranks[id] : id; };
  auto older = [&](const MemoryRequest& a, const MemoryRequest& b) {
    return std::tuple(a.issue_cycle, rank(a.actor_id)) < std::tuple(b.issue_cycle, rank(b.actor_id));
  };

  std::size_t best = 0;
  for (std::size_t i = 1; i < pending.size(); ++i) {
    if (older(pending[i], pending[best])) best = i;
  }
  if (policy == ArbitrationPolicy::Fcfs || !is_row_hit) return best;

  std::optional<std::size_t> best_hit;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    if (pending[i].issue_cycle > now || !is_row_hit(pending[i])) continue;
    if (!best_hit || older(pending[i], pending[*best_hit])) best_hit = i;
  }
  return best_hit.value_or(best);
}

MemoryController::MemoryController(DramGeometry geometry, TimingParams params, ArbitrationPolicy policy)
    : geometry_(std::move(geometry)), params_(params), policy_(policy), banks_(geometry_.total_banks()) {
  params_.validate();
}

void MemoryController::submit(const MemoryRequest& request) {
  if (request.size_bytes == 0 || request.size_bytes % geometry_.row_slice_bytes() != 0) {
    throw ConfigError("request: size_bytes " + std::to_string(request.size_bytes) +
                      " is not a positive multiple of row_slice_bytes");
  }
  pending_.push_back(request);
}

Cycle MemoryController::first_slice_ready(const MemoryRequest& request) const {
  BankState bank = banks_[global_bank(geometry_, decompose(geometry_, request.offset))];
  return apply_due_refresh(bank, std::max(request.issue_cycle, bank.busy_until), params_);
}

bool MemoryController::starts_with_hit(const MemoryRequest& request) const {
  const DramAddress addr = decompose(geometry_, request.offset);
  BankState bank = banks_[global_bank(geometry_, addr)];
  apply_due_refresh(bank, std::max(request.issue_cycle, bank.busy_until), params_);
  return bank.open_row == addr.row;
}

MemoryController::Completion MemoryController::dispatch_next() {
  if (pending_.empty()) throw ModelError("dispatch_next: controller is idle");

  std::size_t chosen = arbitrate(pending_, 0, ArbitrationPolicy::Fcfs, {}, tie_ranks_);
  if (policy_ == ArbitrationPolicy::FrFcfs) {
    // Decision point: when the oldest request could actually start.
    const Cycle now = first_slice_ready(pending_[chosen]);
    chosen = arbitrate(pending_, now, policy_, [this](const MemoryRequest& r) { return starts_with_hit(r); },
                       tie_ranks_);
  }

  Completion done{pending_[chosen], {}};
  pending_.erase(pending_.begin() + static_cast<std::ptrdiff_t>(chosen));
  done.outcome = service_request(done.request, geometry_, params_, banks_, done.request.issue_cycle);

  if (trace_hook_) {
    const DramAddress addr = decompose(geometry_, done.request.offset);
    trace_hook_(AccessTrace{done.outcome.start_cycle, done.request.actor_id, done.request.offset, addr.chip,
                            addr.flat_bank, addr.row, done.outcome.kind, done.outcome.latency_cycles});
  }
  return done;
}

}  // namespace dramcontend
