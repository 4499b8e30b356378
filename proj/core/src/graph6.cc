// Copyright 2026 The graphsens Authors
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

#include "graphsens/graph6.h"

#include <string>

namespace graphsens {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

class BitReader {
 public:
  BitReader(std::string_view data, std::size_t base)
      : data_(data), base_(base) {}

  bool Next() {
    const std::size_t byte = bit_ / 6;
    if (byte >= data_.size()) {
      throw Graph6Error(base_ + byte, "adjacency data is truncated");
    }
    const int value = data_[byte] - 63;
    const bool bit = (value >> (5 - bit_ % 6)) & 1;
    ++bit_;
    return bit;
  }

  // Checks the zero padding of the last byte and that nothing follows it.
  void Finish() {
    while (bit_ % 6 != 0) {
      if (Next()) throw Graph6Error(base_ + bit_ / 6, "nonzero padding bits");
    }
    if (bit_ / 6 != data_.size()) {
      throw Graph6Error(base_ + bit_ / 6, "unexpected trailing bytes");
    }
  }

 private:
  std::string_view data_;
  std::size_t base_;
  std::size_t bit_ = 0;
};

}  // namespace

Graph6Error::Graph6Error(std::size_t position, const std::string& message)
    : std::invalid_argument("graph6 byte " + std::to_string(position) + ": " +
                            message),
      position_(position) {}

std::string WriteGraph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= kGraph6ShortMax) {
    out += static_cast<char>(n + 63);
  } else if (n <= kGraph6LongMax) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out += static_cast<char>(((n >> shift) & 63) + 63);
    }
  } else {
    throw std::invalid_argument("graph6 writer supports at most " +
                                std::to_string(kGraph6LongMax) + " vertices");
  }
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.HasEdge(i, j) ? 1 : 0);
      if (++used == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out += static_cast<char>((acc << (6 - used)) + 63);
  return out;
}

Graph ReadGraph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = text[i];
    if (c < 63 || c > 126) {
      throw Graph6Error(base + i, "byte value " + std::to_string(c) +
                                      " outside [63, 126]");
    }
  }
  if (text.empty()) throw Graph6Error(base, "missing size header");

  int n = 0;
  std::size_t header = 1;
  if (text[0] != 126) {
    n = text[0] - 63;
  } else {
    if (text.size() >= 2 && text[1] == 126) {
      throw Graph6Error(base + 1, "orders above 258047 are not supported");
    }
    if (text.size() < 4) throw Graph6Error(base + text.size(), "truncated size");
    for (int k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - 63);
    header = 4;
  }

  GraphBuilder builder(n);
  BitReader bits(text.substr(header), base + header);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits.Next()) builder.AddEdge(i, j);
    }
  }
  bits.Finish();
  return std::move(builder).Build();
}

}  // namespace graphsens
