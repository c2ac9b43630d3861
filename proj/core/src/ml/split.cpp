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

#include <numeric>
#include <stdexcept>

#include "qcf/ml.hpp"
#include "qcf/rng.hpp"

namespace qcf::ml {

std::pair<Dataset, Dataset> split_dataset(const Dataset& ds, double ratio,
                                          std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw std::invalid_argument("split_dataset: ratio must be in (0, 1)");
  }
  const std::size_t n = ds.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  RngStream rng(seed);
  rng.shuffle(order);

  const std::size_t n_train = static_cast<std::size_t>(ratio * static_cast<double>(n));
  if (n_train == 0 || n_train == n) {
    throw std::invalid_argument("split_dataset: a split side would be empty");
  }

  Dataset train, test;
  for (std::size_t i = 0; i < n; ++i) {
    Dataset& side = i < n_train ? train : test;
    const std::size_t idx = order[i];
    side.X.push_back(ds.X[idx]);
    side.Y.push_back(ds.Y[idx]);
    side.meta.push_back(ds.meta[idx]);
  }
  return {std::move(train), std::move(test)};
}

}  // namespace qcf::ml
