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

#include "subset_enum.h"

#include <stdexcept>

namespace eeaowf::internal {

namespace {

constexpr std::uint64_t kSaturated = ~std::uint64_t{0};

}  // namespace

CombinationEnumerator::CombinationEnumerator(std::size_t n, std::size_t k)
    : n_(n), k_(k), pascal_(n + 1) {
  for (std::size_t a = 0; a <= n; ++a) {
    pascal_[a].assign(a + 1, 1);
    for (std::size_t b = 1; b < a; ++b) {
      const std::uint64_t x = pascal_[a - 1][b - 1];
      const std::uint64_t y = pascal_[a - 1][b];
      pascal_[a][b] = (x > kSaturated - y) ? kSaturated : x + y;
    }
  }
  total_ = Binom(n, k);
}

std::uint64_t CombinationEnumerator::Binom(std::size_t a, std::size_t b) const {
  return b > a ? 0 : pascal_[a][b];
}

std::vector<std::uint64_t> CombinationEnumerator::Unrank(
    std::uint64_t rank) const {
  if (rank >= total_) {
    throw std::out_of_range("combination rank out of range");
  }
  std::vector<std::uint64_t> s;
  s.reserve(k_);
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < k_; ++i, ++c) {
    // Subsets continuing with c choose the rest from {c+1, ..., n}.
    for (;; ++c) {
      const std::uint64_t block = Binom(n_ - c, k_ - i - 1);
      if (rank < block) {
        break;
      }
      rank -= block;
    }
    s.push_back(c);
  }
  return s;
}

bool CombinationEnumerator::Next(std::vector<std::uint64_t>& s) const {
  std::size_t i = k_;
  while (i > 0 && s[i - 1] == n_ - k_ + i) {
    --i;
  }
  if (i == 0) {
    return false;
  }
  ++s[i - 1];
  for (std::size_t j = i; j < k_; ++j) {
    s[j] = s[j - 1] + 1;
  }
  return true;
}

SubsetEnumerator::SubsetEnumerator(std::size_t n) : n_(n) {
  if (n < 2 || n > 63) {
    throw std::out_of_range("subset enumeration needs 2 <= n <= 63");
  }
  total_ = (std::uint64_t{1} << n) - 2;
}

bool SubsetEnumerator::IsFull(const std::vector<std::uint64_t>& s) const {
  return s.size() == n_;
}

std::vector<std::uint64_t> SubsetEnumerator::Unrank(std::uint64_t rank) const {
  if (rank >= total_) {
    throw std::out_of_range("subset rank out of range");
  }
  // Position among all nonempty subsets; the full set sits at n - 1.
  std::uint64_t r = rank < n_ - 1 ? rank : rank + 1;
  std::vector<std::uint64_t> s;
  std::uint64_t c = 1;
  for (;;) {
    // Subsets starting with prefix + [c]: 2^(n - c) of them, the first being
    // prefix + [c] itself.
    const std::uint64_t block = std::uint64_t{1} << (n_ - c);
    if (r < block) {
      s.push_back(c);
      if (r == 0) {
        return s;
      }
      r -= 1;
    } else {
      r -= block;
    }
    ++c;
  }
}

bool SubsetEnumerator::Step(std::vector<std::uint64_t>& s) const {
  if (s.back() < n_) {
    s.push_back(s.back() + 1);
    return true;
  }
  s.pop_back();
  if (s.empty()) {
    return false;
  }
  ++s.back();
  return true;
}

bool SubsetEnumerator::Next(std::vector<std::uint64_t>& s) const {
  if (!Step(s)) {
    return false;
  }
  return IsFull(s) ? Step(s) : true;
}

}  // namespace eeaowf::internal
