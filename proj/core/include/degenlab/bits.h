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

// Bit strings and fixed-width integer coding. Every message and every
// streaming snapshot in the library is a BitString, so its size() is the
// exact cost that gets charged to a ledger.

#ifndef DEGENLAB_BITS_H_
#define DEGENLAB_BITS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace degenlab {

// ceil(log2(x)) for x >= 1.
int ceil_log2(std::uint64_t x);

// Width used for an integer in [0, bound): ceil(log2(bound)), but never
// less than one bit.
int width_for(std::uint64_t bound);

class BitString {
 public:
  BitString() = default;

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool operator[](std::size_t i) const;

  void push_back(bool bit);
  void append(const BitString& other);

  // FNV-1a over the bits, used for cheap equality checks in logs.
  std::uint64_t digest() const;

  std::string to_string() const;

  bool operator==(const BitString& other) const = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

class BitWriter {
 public:
  void write_bit(bool bit) { bits_.push_back(bit); }

  // Writes the low `width` bits of value, most significant first. Throws if
  // value does not fit.
  void write_uint(std::uint64_t value, int width);

  // value in [0, bound) with width_for(bound) bits.
  void write_bounded(std::uint64_t value, std::uint64_t bound);

  // Length-prefixed list: the length is in [0, max_length], elements are in
  // [0, bound).
  void write_list(std::span<const int> values, std::uint64_t max_length,
                  std::uint64_t bound);

  void write_bits(const BitString& bits) { bits_.append(bits); }

  const BitString& bits() const { return bits_; }
  BitString take() { return std::move(bits_); }

 private:
  BitString bits_;
};

class BitReader {
 public:
  explicit BitReader(const BitString& bits) : bits_(&bits) {}

  bool read_bit();
  std::uint64_t read_uint(int width);
  std::uint64_t read_bounded(std::uint64_t bound);
  std::vector<int> read_list(std::uint64_t max_length, std::uint64_t bound);

  std::size_t remaining() const { return bits_->size() - pos_; }
  bool at_end() const { return pos_ == bits_->size(); }

 private:
  const BitString* bits_;
  std::size_t pos_ = 0;
};

}  // namespace degenlab

#endif  // DEGENLAB_BITS_H_
