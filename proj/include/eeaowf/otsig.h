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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eeaowf/owf_core.h"

namespace eeaowf {

// Message bits, element i being character i of the written string.
using BitString = std::vector<std::uint8_t>;

// Accepts only '0' and '1'; nullopt otherwise (including the empty string).
std::optional<BitString> ParseBitString(std::string_view s);
std::string FormatBitString(const BitString& bits);

// The index-th output (0-based) of SplitMix64 started from the master seed.
// Sub-keys take these seeds in order, [0][0], [0][1], [1][0], ...; a draw for
// [i][1] whose factorization repeats [i][0] is skipped.
std::uint64_t DeriveSubkeySeed(std::uint64_t master_seed, std::size_t index);

struct LamportPublicKey {
  PrimeModulus p;
  // keys[i][b] commits to bit value b at position i.
  std::vector<std::array<PublicKey, 2>> keys;

  std::size_t bits() const noexcept { return keys.size(); }
  bool operator==(const LamportPublicKey&) const = default;
};

struct Signature;

// Private half of a Lamport key. Signs at most once.
class LamportKeySet {
 public:
  LamportKeySet(PrimeModulus p, std::uint64_t seed,
                std::vector<std::array<KeyPair, 2>> pairs, bool used);

  const PrimeModulus& modulus() const noexcept { return p_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t bits() const noexcept { return pairs_.size(); }
  const std::vector<std::array<KeyPair, 2>>& pairs() const noexcept {
    return pairs_;
  }
  bool used() const noexcept { return used_; }

  LamportPublicKey PublicKey() const;

  bool operator==(const LamportKeySet&) const = default;

 private:
  friend Signature Sign(LamportKeySet& keys, const BitString& message);

  PrimeModulus p_;
  std::uint64_t seed_;
  std::vector<std::array<KeyPair, 2>> pairs_;
  bool used_;
};

struct Signature {
  BitString message;
  std::vector<Polynomial> revealed;

  bool operator==(const Signature&) const = default;
};

struct LamportKeys {
  LamportPublicKey public_key;
  LamportKeySet private_key;
};

// Throws InvalidBitLength for bits == 0.
LamportKeys LamportKeyGen(PrimeModulus p, std::size_t bits, std::uint64_t seed);

// Reveals pairs[i][message[i]].P for every i and marks the key set used.
// Throws KeyAlreadyUsed on a second call and LengthMismatch if the message
// length differs from the key's bit count.
Signature Sign(LamportKeySet& keys, const BitString& message);

// Throws LengthMismatch when the message or signature does not fit the key.
VerifyOutcome VerifySignature(const LamportPublicKey& key,
                              const BitString& message, const Signature& sig);

}  // namespace eeaowf
