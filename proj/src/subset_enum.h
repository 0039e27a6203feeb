// Copyright 2026 The eeaowf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

namespace eeaowf::internal {

// Lexicographic enumeration of the k-subsets of {1, ..., n}.
class CombinationEnumerator {
 public:
  CombinationEnumerator(std::size_t n, std::size_t k);

  std::uint64_t total() const noexcept { return total_; }
  // The subset at position `rank` (0-based).
  std::vector<std::uint64_t> Unrank(std::uint64_t rank) const;
  // Advances in place; false past the last subset.
  bool Next(std::vector<std::uint64_t>& s) const;

 private:
  std::uint64_t Binom(std::size_t a, std::size_t b) const;

  std::size_t n_;
  std::size_t k_;
  std::vector<std::vector<std::uint64_t>> pascal_;
  std::uint64_t total_;
};

// Lexicographic enumeration of the nonempty proper subsets of {1, ..., n},
// ordered as sorted sequences: {1}, {1,2}, ..., {1,3}, ..., {n}.
class SubsetEnumerator {
 public:
  explicit SubsetEnumerator(std::size_t n);

  std::uint64_t total() const noexcept { return total_; }
  std::vector<std::uint64_t> Unrank(std::uint64_t rank) const;
  bool Next(std::vector<std::uint64_t>& s) const;

 private:
  bool Step(std::vector<std::uint64_t>& s) const;
  bool IsFull(const std::vector<std::uint64_t>& s) const;

  std::size_t n_;
  std::uint64_t total_;
};

}  // namespace eeaowf::internal
