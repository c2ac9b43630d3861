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

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qcf/circuit.hpp"

namespace qcf {

/// The eight transformations. The first six form the baseline set, the last
/// two the miscellaneous set; enumeration order is the canonical order the
/// pass manager applies them in.
enum class PassId : std::uint8_t {
  Optimize1qGates,
  InverseCancellation,
  CommutativeCancellation,
  RemoveIdentityEquivalent,
  ConsolidateBlocks,
  TemplateOptimization,
  Split2QUnitaries,
  OptimizeCliffords,
};

inline constexpr int kNumPasses = 8;
inline constexpr int kNumBaselinePasses = 6;

/// Stable CLI string for a pass ("opt1q", "inverse", ...).
std::string_view pass_name(PassId id);
std::optional<PassId> pass_from_name(std::string_view name);

constexpr bool is_baseline(PassId id) {
  return static_cast<int>(id) < kNumBaselinePasses;
}

/// A pass subset: a non-empty baseline selection plus an optional
/// miscellaneous selection.
struct PassSelection {
  std::vector<PassId> baseline;  // non-empty, baseline ids only
  std::vector<PassId> misc;      // possibly empty, misc ids only

  /// Throws std::invalid_argument if the invariants above are violated.
  void validate() const;
};

/// Applies each selected pass exactly once, in canonical enumeration order.
/// Output is unitary-equivalent to the input up to global phase.
Circuit apply_passes(const Circuit& c, const PassSelection& sel);

/// Applies a single pass.
Circuit apply_pass(const Circuit& c, PassId id);

// The individual transformations. All are total and pure.
Circuit optimize_1q_gates(const Circuit& c);
Circuit inverse_cancellation(const Circuit& c);
Circuit commutative_cancellation(const Circuit& c);
Circuit remove_identity_equivalent(const Circuit& c);
Circuit consolidate_blocks(const Circuit& c);
Circuit template_optimization(const Circuit& c);
Circuit split_2q_unitaries(const Circuit& c);
Circuit optimize_cliffords(const Circuit& c);

}  // namespace qcf
