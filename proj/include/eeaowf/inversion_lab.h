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

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eeaowf/gf_poly.h"
#include "eeaowf/owf_core.h"

namespace eeaowf {

using BigCount = boost::multiprecision::cpp_int;

enum class SurveyMode { kBalanced, kAll };
enum class Pairing { kOrdered, kUnordered };

std::string_view SurveyModeName(SurveyMode mode);
std::string_view PairingName(Pairing pairing);
std::optional<SurveyMode> ParseSurveyMode(std::string_view s);
std::optional<Pairing> ParsePairing(std::string_view s);

inline constexpr std::uint64_t kDefaultSearchLimit = 10'000'000;

// balanced: C(p-1, (p-1)/2). all: 2^(p-1) - 2 ordered nontrivial splits.
BigCount CountSearchSpace(const PrimeModulus& p, SurveyMode mode);

struct Preimage {
  RootSet roots_p;
  Polynomial private_factor;

  bool operator==(const Preimage&) const = default;
};

struct AttackOptions {
  std::uint64_t limit = kDefaultSearchLimit;
  unsigned workers = 1;
  bool prune = true;
};

struct AttackResult {
  PublicKey target;
  std::vector<Preimage> preimages;  // lexicographic in roots_p
  std::uint64_t candidates_tested = 0;
  std::uint64_t pruned = 0;
  std::chrono::milliseconds wall_time{0};

  bool operator==(const AttackResult&) const = default;
};

// Exhaustive inversion over every balanced root subset, in lexicographic
// order. With pruning on, a candidate is discarded without the full
// congruence check when
//   1. some root j of A (1 <= j < p) is missing from it. A(j) = 0 rules out
//      j being a root of Q, since A(j) P(j) = 1 holds at every root of Q.
//   2. P(j) A(j) != 1 at one of the first three j outside the candidate,
//      which would be roots of Q for a true preimage.
// Both rules only discard non-preimages, so pruning never changes the
// result. candidates_tested + pruned always equals C(p-1, (p-1)/2).
// Throws SearchSpaceTooLarge when that count exceeds options.limit.
AttackResult BruteForceInvert(const PublicKey& target,
                              const AttackOptions& options = {});

struct SurveyRow {
  RootSet roots_p;
  std::size_t deg_p = 0;
  Polynomial a;
  std::size_t group_id = 0;  // 1-based id of the class of rows sharing a

  bool operator==(const SurveyRow&) const = default;
};

// A census of every factorization in `mode` with its canonical A.
//
// Ordered pairing lists one row per root subset S in lexicographic order.
// Unordered pairing lists each pair {S, complement S} once, keyed by the
// lexicographically smaller subset, as two adjacent rows: first with P = S,
// then with P = complement S. Both role assignments therefore take part in
// collision grouping.
//
// collision_groups holds row indices of A-classes that are genuine
// collisions: size >= 2 for ordered pairing, spanning >= 2 distinct pairs
// for unordered pairing.
struct SurveyReport {
  PrimeModulus p;
  SurveyMode mode = SurveyMode::kBalanced;
  Pairing pairing = Pairing::kOrdered;
  std::vector<SurveyRow> rows;
  std::vector<std::vector<std::size_t>> collision_groups;

  // Rows carrying each group id, indexed by id - 1.
  std::vector<std::size_t> GroupSizes() const;

  bool operator==(const SurveyReport&) const = default;
};

struct SurveyOptions {
  SurveyMode mode = SurveyMode::kBalanced;
  Pairing pairing = Pairing::kOrdered;
  unsigned workers = 1;
  std::uint64_t limit = kDefaultSearchLimit;
};

SurveyReport UniquenessSurvey(const PrimeModulus& p,
                              const SurveyOptions& options = {});

// Recomputes group ids from the A values, then the collision groups.
void AssignGroups(SurveyReport& report);

// Collision groups implied by the rows' group ids alone.
std::vector<std::vector<std::size_t>> CollisionGroupsFromIds(
    const SurveyReport& report);

struct ReportCheck {
  bool accepted = true;
  std::optional<std::size_t> row;  // first offending row, 0-based
  std::string reason;

  explicit operator bool() const noexcept { return accepted; }
};

// Self-audit: row count and order, every A re-derived from its roots, and
// grouping consistent with the A values.
ReportCheck VerifyReport(const SurveyReport& report);

}  // namespace eeaowf
