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
#include <string>

#include "eeaowf/gf_poly.h"

namespace eeaowf {

// SplitMix64. Fixed so that a seed reproduces the same key in any language.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t Next() noexcept {
    state_ += kGamma;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection; bound must be nonzero.
  std::uint64_t UniformBelow(std::uint64_t bound) noexcept {
    // 2^64 mod bound; draws below it would bias the low residues.
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t x;
    do {
      x = Next();
    } while (x < threshold);
    return x % bound;
  }

  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

// x^(p-1) - 1 = private_factor * cofactor, split along a partition of the
// roots {1, ..., p-1}.
struct FactorPair {
  RootSet roots_p;
  RootSet roots_q;
  Polynomial private_factor;  // P
  Polynomial cofactor;        // Q

  // Builds the pair from P's roots; Q takes the complement. Throws
  // InvalidRootSet if roots_p is empty or the full set.
  static FactorPair FromRoots(const RootSet& roots_p);

  const PrimeModulus& modulus() const noexcept { return roots_p.modulus(); }
  bool IsBalanced() const noexcept;
};

// Random balanced split: roots_p is a uniform (p-1)/2-subset of {1..p-1}
// drawn by a partial Fisher-Yates shuffle.
FactorPair SampleBalancedFactorization(PrimeModulus p, SplitMix64& rng);

// Public polynomial A with A*P = 1 (mod Q) and deg A < (p-1)/2.
class PublicKey {
 public:
  // Throws MalformedKey unless a is nonzero with deg a < (p-1)/2.
  explicit PublicKey(Polynomial a);

  const Polynomial& a() const noexcept { return a_; }
  const PrimeModulus& modulus() const noexcept { return a_.modulus(); }

  bool operator==(const PublicKey&) const = default;

 private:
  Polynomial a_;
};

// Canonical Bezout coefficients for any FactorPair: a*P + b*Q = 1 with
// deg a < deg Q and deg b < deg P.
struct BezoutPair {
  Polynomial a;
  Polynomial b;
};
BezoutPair DeriveBezoutPair(const FactorPair& pair);

struct DerivedKey {
  PublicKey public_key;
  Polynomial b;
};
// Balanced pairs only; otherwise deg A may reach the public-key bound.
DerivedKey DerivePublicKey(const FactorPair& pair);

struct KeyPair {
  PublicKey public_key;
  RootSet roots_p;
  Polynomial private_factor;
  Polynomial bezout_b;
  std::uint64_t seed;

  const PrimeModulus& modulus() const noexcept { return roots_p.modulus(); }
  // (x^(p-1) - 1) / P.
  Polynomial Cofactor() const;

  bool operator==(const KeyPair&) const = default;
};

KeyPair KeyGen(PrimeModulus p, std::uint64_t seed);

// Below this modulus KeyGen output is only suitable for experiments.
inline constexpr std::uint64_t kExperimentalModulusBound = 64;
bool IsExperimentalModulus(const PrimeModulus& p) noexcept;

// The revealed private factor.
struct Proof {
  Polynomial revealed;

  bool operator==(const Proof&) const = default;
};

enum class VerifyCheck {
  kNone,
  kModulus,    // proof and key disagree on p
  kShape,      // (a) monic of degree (p-1)/2
  kDivides,    // (b) P | x^(p-1) - 1
  kCongruence, // (c) A*P mod Q == 1
  kCanonical,  // (d) deg A < deg Q
};

std::string_view VerifyCheckLabel(VerifyCheck check);

struct VerifyOutcome {
  VerifyCheck failed = VerifyCheck::kNone;
  std::string reason;

  bool accepted() const noexcept { return failed == VerifyCheck::kNone; }
  explicit operator bool() const noexcept { return accepted(); }
};

// Q is always recomputed from P; nothing else is trusted.
VerifyOutcome VerifyProof(const PublicKey& key, const Polynomial& candidate);

}  // namespace eeaowf
