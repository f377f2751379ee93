// Copyright 2026 The graphres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHRES_RESOURCE_COST_HPP_
#define GRAPHRES_RESOURCE_COST_HPP_

#include <bit>
#include <cstdint>

namespace graphres {

struct ResourceCost {
  std::uint64_t instruction_bits = 0;
  std::uint64_t memory_bits = 0;
  std::uint64_t random_bits = 0;

  friend bool operator==(const ResourceCost&, const ResourceCost&) = default;
};

// b(k) = floor(log2 k) + 1, the length of the binary expansion of k >= 1.
// bit_length(0) is 1: zero still takes one digit.
constexpr std::uint64_t bit_length(std::uint64_t k) noexcept {
  return k == 0 ? 1 : static_cast<std::uint64_t>(std::bit_width(k));
}

}  // namespace graphres

#endif  // GRAPHRES_RESOURCE_COST_HPP_
