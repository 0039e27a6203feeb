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

#include "eeaowf/otsig.h"

#include <string>
#include <utility>

namespace eeaowf {

std::optional<BitString> ParseBitString(std::string_view s) {
  if (s.empty()) {
    return std::nullopt;
  }
  BitString bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') {
      return std::nullopt;
    }
    bits.push_back(c == '1' ? 1 : 0);
  }
  return bits;
}

std::string FormatBitString(const BitString& bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) {
    s.push_back(b ? '1' : '0');
  }
  return s;
}

std::uint64_t DeriveSubkeySeed(std::uint64_t master_seed, std::size_t index) {
  SplitMix64 rng(master_seed);
  std::uint64_t out = rng.Next();
  for (std::size_t i = 0; i < index; ++i) {
    out = rng.Next();
  }
  return out;
}

LamportKeySet::LamportKeySet(PrimeModulus p, std::uint64_t seed,
                             std::vector<std::array<KeyPair, 2>> pairs,
                             bool used)
    : p_(p), seed_(seed), pairs_(std::move(pairs)), used_(used) {
  EEAOWF_ENFORCE(!pairs_.empty(), ErrorCode::kInvalidBitLength,
                 "a Lamport key needs at least one bit");
  for (const auto& pair : pairs_) {
    for (const auto& kp : pair) {
      EEAOWF_ENFORCE(kp.modulus() == p_, ErrorCode::kModulusMismatch,
                     "sub-key modulus differs from the key set");
    }
  }
}

LamportPublicKey LamportKeySet::PublicKey() const {
  LamportPublicKey pub{p_, {}};
  pub.keys.reserve(pairs_.size());
  for (const auto& pair : pairs_) {
    pub.keys.push_back({pair[0].public_key, pair[1].public_key});
  }
  return pub;
}

LamportKeys LamportKeyGen(PrimeModulus p, std::size_t bits,
                          std::uint64_t seed) {
  EEAOWF_ENFORCE(bits >= 1, ErrorCode::kInvalidBitLength,
                 "bit length must be at least 1");
  std::vector<std::array<KeyPair, 2>> pairs;
  pairs.reserve(bits);
  SplitMix64 schedule(seed);
  for (std::size_t i = 0; i < bits; ++i) {
    KeyPair zero = KeyGen(p, schedule.Next());
    KeyPair one = KeyGen(p, schedule.Next());
    // Identical siblings would let either bit value verify.
    while (one.roots_p == zero.roots_p) one = KeyGen(p, schedule.Next());
    pairs.push_back({std::move(zero), std::move(one)});
  }
  LamportKeySet priv(p, seed, std::move(pairs), false);
  LamportPublicKey pub = priv.PublicKey();
  return LamportKeys{std::move(pub), std::move(priv)};
}

Signature Sign(LamportKeySet& keys, const BitString& message) {
  EEAOWF_ENFORCE(!keys.used_, ErrorCode::kKeyAlreadyUsed,
                 "this one-time key has already signed a message");
  EEAOWF_ENFORCE(message.size() == keys.bits(), ErrorCode::kLengthMismatch,
                 "message has " + std::to_string(message.size()) +
                     " bits, key expects " + std::to_string(keys.bits()));
  Signature sig{message, {}};
  sig.revealed.reserve(message.size());
  for (std::size_t i = 0; i < message.size(); ++i) {
    sig.revealed.push_back(keys.pairs_[i][message[i] ? 1 : 0].private_factor);
  }
  keys.used_ = true;
  return sig;
}

VerifyOutcome VerifySignature(const LamportPublicKey& key,
                              const BitString& message, const Signature& sig) {
  EEAOWF_ENFORCE(message.size() == key.bits() &&
                     sig.revealed.size() == key.bits(),
                 ErrorCode::kLengthMismatch,
                 "message, signature and key lengths differ");
  for (std::size_t i = 0; i < message.size(); ++i) {
    VerifyOutcome one =
        VerifyProof(key.keys[i][message[i] ? 1 : 0], sig.revealed[i]);
    if (!one) {
      one.reason = "bit " + std::to_string(i) + ": " + one.reason;
      return one;
    }
  }
  return VerifyOutcome{};
}

}  // namespace eeaowf
