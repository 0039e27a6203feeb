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

#include "eeaowf/owf_core.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace eeaowf {

FactorPair FactorPair::FromRoots(const RootSet& roots_p) {
  const PrimeModulus m = roots_p.modulus();
  EEAOWF_ENFORCE(!roots_p.empty() && roots_p.size() < m.value() - 1,
                 ErrorCode::kInvalidRootSet,
                 "a factor must own at least one root and leave one over");
  RootSet roots_q = roots_p.Complement();
  Polynomial p_poly = eeaowf::FromRoots(roots_p);
  Polynomial q_poly = eeaowf::FromRoots(roots_q);
  EEAOWF_ENFORCE(p_poly * q_poly == Polynomial::XPowMinusOne(m, m.value() - 1),
                 ErrorCode::kInvariantViolation,
                 "P*Q differs from x^(p-1) - 1");
  return FactorPair{roots_p, std::move(roots_q), std::move(p_poly),
                    std::move(q_poly)};
}

bool FactorPair::IsBalanced() const noexcept {
  const std::size_t half = modulus().half();
  return roots_p.size() == half && roots_q.size() == half;
}

FactorPair SampleBalancedFactorization(PrimeModulus p, SplitMix64& rng) {
  std::vector<std::uint64_t> pool(p.value() - 1);
  std::iota(pool.begin(), pool.end(), std::uint64_t{1});
  const std::size_t take = p.half();
  for (std::size_t i = 0; i < take; ++i) {
    const std::size_t j = i + rng.UniformBelow(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(take);
  std::sort(pool.begin(), pool.end());
  return FactorPair::FromRoots(RootSet(p, std::move(pool)));
}

PublicKey::PublicKey(Polynomial a) : a_(std::move(a)) {
  EEAOWF_ENFORCE(!a_.IsZero(), ErrorCode::kMalformedKey,
                 "public polynomial is zero");
  EEAOWF_ENFORCE(*a_.degree() < a_.modulus().half(), ErrorCode::kMalformedKey,
                 "public polynomial degree " + std::to_string(*a_.degree()) +
                     " is not below (p-1)/2 = " +
                     std::to_string(a_.modulus().half()));
}

BezoutPair DeriveBezoutPair(const FactorPair& pair) {
  ExtGcdResult eg = ExtGcd(pair.private_factor, pair.cofactor);
  EEAOWF_ENFORCE(eg.gcd.IsOne(), ErrorCode::kNotCoprime,
                 "P and Q share a factor");
  return BezoutPair{std::move(eg.u), std::move(eg.v)};
}

DerivedKey DerivePublicKey(const FactorPair& pair) {
  EEAOWF_ENFORCE(pair.IsBalanced(), ErrorCode::kInvariantViolation,
                 "public keys are defined for balanced factorizations");
  BezoutPair bz = DeriveBezoutPair(pair);
  return DerivedKey{PublicKey(std::move(bz.a)), std::move(bz.b)};
}

Polynomial KeyPair::Cofactor() const {
  const PrimeModulus m = modulus();
  return DivMod(Polynomial::XPowMinusOne(m, m.value() - 1), private_factor)
      .quotient;
}

KeyPair KeyGen(PrimeModulus p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  FactorPair pair = SampleBalancedFactorization(p, rng);
  DerivedKey dk = DerivePublicKey(pair);
  return KeyPair{std::move(dk.public_key), std::move(pair.roots_p),
                 std::move(pair.private_factor), std::move(dk.b), seed};
}

bool IsExperimentalModulus(const PrimeModulus& p) noexcept {
  return p.value() < kExperimentalModulusBound;
}

std::string_view VerifyCheckLabel(VerifyCheck check) {
  switch (check) {
    case VerifyCheck::kNone:
      return "accepted";
    case VerifyCheck::kModulus:
      return "modulus";
    case VerifyCheck::kShape:
      return "check (a)";
    case VerifyCheck::kDivides:
      return "check (b)";
    case VerifyCheck::kCongruence:
      return "check (c)";
    case VerifyCheck::kCanonical:
      return "check (d)";
  }
  return "unknown";
}

namespace {

VerifyOutcome Reject(VerifyCheck check, const std::string& why) {
  return VerifyOutcome{check, std::string(VerifyCheckLabel(check)) + ": " + why};
}

}  // namespace

VerifyOutcome VerifyProof(const PublicKey& key, const Polynomial& candidate) {
  const PrimeModulus m = key.modulus();
  if (candidate.modulus() != m) {
    return Reject(VerifyCheck::kModulus,
                  "proof is over p=" +
                      std::to_string(candidate.modulus().value()) +
                      ", key over p=" + std::to_string(m.value()));
  }
  const std::size_t half = m.half();
  if (!candidate.IsMonic() || *candidate.degree() != half) {
    return Reject(VerifyCheck::kShape,
                  candidate.IsZero()
                      ? std::string("P is zero")
                      : "P must be monic of degree " + std::to_string(half) +
                            ", got degree " +
                            std::to_string(*candidate.degree()) +
                            (candidate.IsMonic() ? "" : " (not monic)"));
  }
  auto [q, r] = DivMod(Polynomial::XPowMinusOne(m, m.value() - 1), candidate);
  if (!r.IsZero()) {
    return Reject(VerifyCheck::kDivides, "P does not divide x^(p-1) - 1");
  }
  if (!DivMod(key.a() * candidate, q).remainder.IsOne()) {
    return Reject(VerifyCheck::kCongruence, "A*P mod Q is not 1");
  }
  if (*key.a().degree() >= *q.degree()) {
    return Reject(VerifyCheck::kCanonical, "deg A is not below deg Q");
  }
  return VerifyOutcome{};
}

}  // namespace eeaowf
