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

#ifndef GRAPHRES_INSTRUCTION_HPP_
#define GRAPHRES_INSTRUCTION_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace graphres {

// One instruction bit per vertex; bit t is also the label ℓ(t) a memory model
// stores for vertex t.
class InstructionString {
 public:
  InstructionString() = default;
  // Throws Error unless every entry is 0 or 1.
  explicit InstructionString(std::vector<std::uint8_t> bits);

  // Accepts only '0' and '1'; throws ParseError otherwise.
  static InstructionString parse(std::string_view text);
  // The `length`-bit big-endian expansion of value: x_1 is the top bit.
  static InstructionString from_index(std::uint64_t value, int length);

  int size() const noexcept { return static_cast<int>(bits_.size()); }
  bool empty() const noexcept { return bits_.empty(); }
  // 1-based.
  int bit(int t) const;
  int zeros() const noexcept;
  int ones() const noexcept { return size() - zeros(); }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  InstructionString prefix(int k) const;
  std::string str() const;

  friend bool operator==(const InstructionString&,
                         const InstructionString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace graphres

#endif  // GRAPHRES_INSTRUCTION_HPP_
