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

#include "graphres/instruction.hpp"

#include <algorithm>

#include "graphres/errors.hpp"

namespace graphres {

InstructionString::InstructionString(std::vector<std::uint8_t> bits)
    : bits_(std::move(bits)) {
  for (std::uint8_t b : bits_) {
    if (b > 1) throw Error("instruction bits must be 0 or 1");
  }
}

InstructionString InstructionString::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ParseError("instruction string may only contain '0' and '1': '" +
                       std::string(text) + "'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return InstructionString(std::move(bits));
}

InstructionString InstructionString::from_index(std::uint64_t value, int length) {
  if (length < 0 || length > 63) throw Error("instruction length out of range");
  std::vector<std::uint8_t> bits(length);
  for (int i = 0; i < length; ++i) {
    bits[i] = static_cast<std::uint8_t>((value >> (length - 1 - i)) & 1U);
  }
  return InstructionString(std::move(bits));
}

int InstructionString::bit(int t) const {
  if (t < 1 || t > size()) throw VertexOutOfRange("instruction index out of range");
  return bits_[t - 1];
}

int InstructionString::zeros() const noexcept {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), 0));
}

InstructionString InstructionString::prefix(int k) const {
  if (k < 0 || k > size()) throw VertexOutOfRange("prefix length out of range");
  return InstructionString(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + k));
}

std::string InstructionString::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (std::uint8_t b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

}  // namespace graphres
