// Copyright 2026 The qcforensics Authors
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

#include <algorithm>
#include <array>
#include <stdexcept>

#include "qcf/passes.hpp"

namespace qcf {

namespace {

constexpr std::array<std::string_view, kNumPasses> kPassNames = {
    "opt1q",       "inverse",  "commutative", "remove-id",
    "consolidate", "template", "split2q",     "cliffords"};

}  // namespace

std::string_view pass_name(PassId id) {
  return kPassNames[static_cast<int>(id)];
}

std::optional<PassId> pass_from_name(std::string_view name) {
  for (int i = 0; i < kNumPasses; ++i) {
    if (kPassNames[i] == name) return static_cast<PassId>(i);
  }
  return std::nullopt;
}

void PassSelection::validate() const {
  if (baseline.empty()) {
    throw std::invalid_argument("pass selection: baseline subset must be non-empty");
  }
  for (PassId id : baseline) {
    if (!is_baseline(id)) {
      throw std::invalid_argument("pass selection: misc pass listed as baseline");
    }
  }
  for (PassId id : misc) {
    if (is_baseline(id)) {
      throw std::invalid_argument("pass selection: baseline pass listed as misc");
    }
  }
}

Circuit apply_pass(const Circuit& c, PassId id) {
  switch (id) {
    case PassId::Optimize1qGates:
      return optimize_1q_gates(c);
    case PassId::InverseCancellation:
      return inverse_cancellation(c);
    case PassId::CommutativeCancellation:
      return commutative_cancellation(c);
    case PassId::RemoveIdentityEquivalent:
      return remove_identity_equivalent(c);
    case PassId::ConsolidateBlocks:
      return consolidate_blocks(c);
    case PassId::TemplateOptimization:
      return template_optimization(c);
    case PassId::Split2QUnitaries:
      return split_2q_unitaries(c);
    case PassId::OptimizeCliffords:
      return optimize_cliffords(c);
  }
  throw std::invalid_argument("apply_pass: unknown pass id");
}

Circuit apply_passes(const Circuit& c, const PassSelection& sel) {
  sel.validate();
  std::array<bool, kNumPasses> selected{};
  for (PassId id : sel.baseline) selected[static_cast<int>(id)] = true;
  for (PassId id : sel.misc) selected[static_cast<int>(id)] = true;

  // Canonical order = enumeration order: baseline passes first, misc last.
  Circuit cur = c;
  for (int i = 0; i < kNumPasses; ++i) {
    if (selected[i]) cur = apply_pass(cur, static_cast<PassId>(i));
  }
  return cur;
}

}  // namespace qcf
