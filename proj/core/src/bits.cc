// Copyright 2026 The Degenlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "degenlab/bits.h"

#include <bit>
#include <stdexcept>
#include <string>

namespace degenlab {

int ceil_log2(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("ceil_log2: argument must be >= 1");
  if (x == 1) return 0;
  return 64 - std::countl_zero(x - 1);
}

int width_for(std::uint64_t bound) {
  if (bound <= 2) return 1;
  return ceil_log2(bound);
}

bool BitString::operator[](std::size_t i) const {
  if (i >= size_) throw std::out_of_range("BitString index out of range");
  return (words_[i / 64] >> (i % 64)) & 1u;
}

void BitString::push_back(bool bit) {
  if (size_ % 64 == 0) words_.push_back(0);
  if (bit) words_[size_ / 64] |= std::uint64_t{1} << (size_ % 64);
  ++size_;
}

void BitString::append(const BitString& other) {
  for (std::size_t i = 0; i < other.size_; ++i) push_back(other[i]);
}

std::uint64_t BitString::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t byte) {
    h ^= byte;
    h *= 0x100000001b3ull;
  };
  for (std::uint64_t w : words_) {
    for (int b = 0; b < 8; ++b) mix((w >> (8 * b)) & 0xff);
  }
  for (int b = 0; b < 8; ++b) mix((size_ >> (8 * b)) & 0xff);
  return h;
}

std::string BitString::to_string() const {
  std::string out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back((*this)[i] ? '1' : '0');
  return out;
}

void BitWriter::write_uint(std::uint64_t value, int width) {
  if (width < 0 || width > 64) throw std::invalid_argument("bad bit width");
  if (width < 64 && (value >> width) != 0) {
    throw std::invalid_argument("value " + std::to_string(value) +
                                " does not fit in " + std::to_string(width) +
                                " bits");
  }
  for (int b = width - 1; b >= 0; --b) bits_.push_back((value >> b) & 1u);
}

void BitWriter::write_bounded(std::uint64_t value, std::uint64_t bound) {
  if (value >= bound) {
    throw std::invalid_argument("value " + std::to_string(value) +
                                " out of range [0, " + std::to_string(bound) +
                                ")");
  }
  write_uint(value, width_for(bound));
}

void BitWriter::write_list(std::span<const int> values,
                           std::uint64_t max_length, std::uint64_t bound) {
  write_bounded(values.size(), max_length + 1);
  for (int v : values) write_bounded(static_cast<std::uint64_t>(v), bound);
}

bool BitReader::read_bit() {
  if (pos_ >= bits_->size()) throw std::out_of_range("read past end of bits");
  return (*bits_)[pos_++];
}

std::uint64_t BitReader::read_uint(int width) {
  std::uint64_t v = 0;
  for (int b = 0; b < width; ++b) v = (v << 1) | (read_bit() ? 1u : 0u);
  return v;
}

std::uint64_t BitReader::read_bounded(std::uint64_t bound) {
  std::uint64_t v = read_uint(width_for(bound));
  if (v >= bound) throw std::runtime_error("decoded value out of range");
  return v;
}

std::vector<int> BitReader::read_list(std::uint64_t max_length,
                                      std::uint64_t bound) {
  std::uint64_t len = read_bounded(max_length + 1);
  std::vector<int> out;
  out.reserve(len);
  for (std::uint64_t i = 0; i < len; ++i) {
    out.push_back(static_cast<int>(read_bounded(bound)));
  }
  return out;
}

}  // namespace degenlab
