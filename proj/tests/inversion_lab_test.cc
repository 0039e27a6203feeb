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

#include "eeaowf/inversion_lab.h"

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracle.h"
#include "test_util.h"

namespace eeaowf {
namespace {

using testing::ToCoeffs;

std::vector<std::uint64_t> Roots(const RootSet& s) {
  return {s.roots().begin(), s.roots().end()};
}

TEST(CountSearchSpaceTest, Examples) {
  EXPECT_EQ(CountSearchSpace(PrimeModulus(5), SurveyMode::kBalanced), 6);
  EXPECT_EQ(CountSearchSpace(PrimeModulus(13), SurveyMode::kBalanced), 924);
  EXPECT_EQ(CountSearchSpace(PrimeModulus(5), SurveyMode::kAll), 14);
  EXPECT_EQ(CountSearchSpace(PrimeModulus(101), SurveyMode::kAll).str(),
            "1267650600228229401496703205374");
  for (std::uint64_t pv : {3, 7, 11, 17, 23}) {
    EXPECT_EQ(CountSearchSpace(PrimeModulus(pv), SurveyMode::kBalanced),
              oracle::Binomial(pv - 1, (pv - 1) / 2));
  }
}

TEST(BruteForceTest, WorkedKey) {
  const PrimeModulus p(5);
  AttackResult r = BruteForceInvert(PublicKey(Polynomial(p, {4, 3})));
  ASSERT_EQ(r.preimages.size(), 1u);
  EXPECT_EQ(Roots(r.preimages[0].roots_p), (std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(r.candidates_tested + r.pruned, 6u);
}

TEST(BruteForceTest, MatchesExhaustiveOracle) {
  // Every balanced subset checked with the independent congruence oracle.
  for (std::uint64_t pv : {5, 7}) {
    const PrimeModulus p(pv);
    const std::size_t n = pv - 1;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      KeyPair key = KeyGen(p, seed);
      auto a = ToCoeffs(key.public_key.a());
      std::vector<std::vector<std::uint64_t>> expected;
      for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        auto s = oracle::FromMask(mask, n);
        if (s.size() != n / 2) continue;
        std::vector<std::int64_t> comp;
        for (std::int64_t j = 1; j <= static_cast<std::int64_t>(n); ++j)
          if (std::find(s.begin(), s.end(), j) == s.end()) comp.push_back(j);
        auto pf = oracle::FromRoots(s, pv);
        auto q = oracle::FromRoots(comp, pv);
        if (oracle::DivMod(oracle::Mul(a, pf, pv), q, pv).second ==
            oracle::Coeffs{1})
          expected.emplace_back(s.begin(), s.end());
      }
      std::sort(expected.begin(), expected.end());
      AttackResult r = BruteForceInvert(key.public_key);
      std::vector<std::vector<std::uint64_t>> got;
      for (const auto& pre : r.preimages) got.push_back(Roots(pre.roots_p));
      EXPECT_EQ(got, expected);
    }
  }
}

TEST(BruteForceTest, PlantedKeyRecoveredAndAccounted) {
  for (std::uint64_t pv : {5, 7, 11, 13}) {
    const PrimeModulus p(pv);
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
      KeyPair key = KeyGen(p, seed);
      AttackResult r = BruteForceInvert(key.public_key);
      EXPECT_EQ(r.candidates_tested + r.pruned,
                oracle::Binomial(pv - 1, (pv - 1) / 2));
      bool found = false;
      for (const auto& pre : r.preimages) {
        found |= pre.roots_p == key.roots_p;
        EXPECT_TRUE(VerifyProof(key.public_key, pre.private_factor));
      }
      EXPECT_TRUE(found) << pv << " " << seed;
      for (std::size_t i = 1; i < r.preimages.size(); ++i)
        EXPECT_LT(r.preimages[i - 1].roots_p, r.preimages[i].roots_p);
    }
  }
}

TEST(BruteForceTest, PruningIsSound) {
  for (std::uint64_t pv : {3, 5, 7, 11, 13}) {
    const PrimeModulus p(pv);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      KeyPair key = KeyGen(p, seed);
      AttackResult pruned = BruteForceInvert(key.public_key, {.prune = true});
      AttackResult full = BruteForceInvert(key.public_key, {.prune = false});
      EXPECT_EQ(pruned.preimages, full.preimages);
      EXPECT_EQ(full.pruned, 0u);
      EXPECT_EQ(full.candidates_tested,
                pruned.candidates_tested + pruned.pruned);
    }
  }
}

TEST(BruteForceTest, PruningLemmas) {
  // Roots of A lie in every preimage; outside it P(j) A(j) = 1.
  for (std::uint64_t pv : {7, 11, 13}) {
    const PrimeModulus p(pv);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      KeyPair key = KeyGen(p, seed);
      AttackResult r = BruteForceInvert(key.public_key, {.prune = false});
      for (const auto& pre : r.preimages) {
        for (std::uint64_t j = 1; j < pv; ++j) {
          const FieldElement x(p, j);
          const FieldElement aj = Eval(key.public_key.a(), x);
          if (aj.IsZero()) {
            EXPECT_TRUE(pre.roots_p.Contains(j));
          }
          if (!pre.roots_p.Contains(j)) {
            EXPECT_EQ((Eval(pre.private_factor, x) * aj).value(), 1u);
          }
        }
      }
    }
  }
}

TEST(BruteForceTest, WorkerCountDoesNotChangeResult) {
  const PrimeModulus p(13);
  KeyPair key = KeyGen(p, 5);
  AttackResult one = BruteForceInvert(key.public_key, {.workers = 1});
  for (unsigned w : {2u, 3u, 8u}) {
    AttackResult many = BruteForceInvert(key.public_key, {.workers = w});
    EXPECT_EQ(many.preimages, one.preimages);
    EXPECT_EQ(many.candidates_tested, one.candidates_tested);
    EXPECT_EQ(many.pruned, one.pruned);
  }
}

TEST(BruteForceTest, SearchSpaceTooLarge) {
  KeyPair key = KeyGen(PrimeModulus(13), 1);
  try {
    BruteForceInvert(key.public_key, {.limit = 923});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSearchSpaceTooLarge);
  }
  KeyPair big = KeyGen(PrimeModulus(101), 1);
  EXPECT_THROW(BruteForceInvert(big.public_key), Error);
}

TEST(SurveyTest, P3Ordered) {
  SurveyReport r = UniquenessSurvey(PrimeModulus(3));
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0].a, Polynomial(PrimeModulus(3), {1}));
  EXPECT_EQ(r.rows[1].a, Polynomial(PrimeModulus(3), {2}));
  EXPECT_TRUE(r.collision_groups.empty());
  EXPECT_TRUE(VerifyReport(r));
}

TEST(SurveyTest, P5Fixtures) {
  const PrimeModulus p(5);
  SurveyReport bal = UniquenessSurvey(p);
  EXPECT_EQ(bal.rows.size(), 6u);
  EXPECT_TRUE(bal.collision_groups.empty());

  SurveyReport all = UniquenessSurvey(p, {.mode = SurveyMode::kAll});
  EXPECT_EQ(all.rows.size(), 14u);
  ASSERT_EQ(all.collision_groups.size(), 2u);
  std::set<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>>
      got;
  for (const auto& g : all.collision_groups) {
    ASSERT_EQ(g.size(), 2u);
    got.emplace(Roots(all.rows[g[0]].roots_p), Roots(all.rows[g[1]].roots_p));
  }
  // A = 2 and A = 3 respectively.
  EXPECT_EQ(got, (std::set<std::pair<std::vector<std::uint64_t>,
                                     std::vector<std::uint64_t>>>{
                     {{1, 2, 4}, {1, 4}}, {{1, 3, 4}, {2, 3}}}));
  EXPECT_TRUE(VerifyReport(all));
}

TEST(SurveyTest, CollisionCountsFrozen) {
  struct Case {
    std::uint64_t p;
    SurveyMode mode;
    Pairing pairing;
    std::size_t groups;
  };
  const Case cases[] = {
      {5, SurveyMode::kBalanced, Pairing::kUnordered, 0},
      {7, SurveyMode::kBalanced, Pairing::kUnordered, 0},
      {11, SurveyMode::kBalanced, Pairing::kUnordered, 0},
      {13, SurveyMode::kBalanced, Pairing::kUnordered, 0},
      {7, SurveyMode::kAll, Pairing::kOrdered, 4},
      {7, SurveyMode::kAll, Pairing::kUnordered, 4},
      {11, SurveyMode::kAll, Pairing::kOrdered, 12},
  };
  for (const auto& c : cases) {
    SurveyReport r = UniquenessSurvey(PrimeModulus(c.p),
                                      {.mode = c.mode, .pairing = c.pairing});
    EXPECT_EQ(r.collision_groups.size(), c.groups) << c.p;
    EXPECT_EQ(BigCount(r.rows.size()),
              CountSearchSpace(PrimeModulus(c.p), c.mode));
    EXPECT_TRUE(VerifyReport(r)) << VerifyReport(r).reason;
  }
}

TEST(SurveyTest, UnorderedLayout) {
  SurveyReport r = UniquenessSurvey(
      PrimeModulus(7), {.mode = SurveyMode::kAll, .pairing = Pairing::kUnordered});
  for (std::size_t i = 0; i < r.rows.size(); i += 2) {
    EXPECT_EQ(r.rows[i + 1].roots_p, r.rows[i].roots_p.Complement());
    EXPECT_LT(r.rows[i].roots_p, r.rows[i + 1].roots_p);
  }
  // p=3 unordered: the single pair never collides with itself.
  SurveyReport p3 = UniquenessSurvey(PrimeModulus(3),
                                     {.pairing = Pairing::kUnordered});
  EXPECT_EQ(p3.rows.size(), 2u);
  EXPECT_TRUE(p3.collision_groups.empty());
}

TEST(SurveyTest, RowCountsMatchSearchSpace) {
  for (std::uint64_t pv : {3, 5, 7, 11, 13}) {
    const PrimeModulus p(pv);
    for (auto mode : {SurveyMode::kBalanced, SurveyMode::kAll}) {
      SurveyReport r = UniquenessSurvey(p, {.mode = mode});
      EXPECT_EQ(BigCount(r.rows.size()), CountSearchSpace(p, mode));
      for (std::size_t i = 1; i < r.rows.size(); ++i)
        EXPECT_LT(r.rows[i - 1].roots_p, r.rows[i].roots_p);
    }
  }
}

TEST(SurveyTest, AgreesWithAttack) {
  for (std::uint64_t pv : {3, 5, 7, 11, 13}) {
    const PrimeModulus p(pv);
    SurveyReport r = UniquenessSurvey(p);
    std::map<oracle::Coeffs, std::vector<RootSet>> by_a;
    for (const auto& row : r.rows) by_a[ToCoeffs(row.a)].push_back(row.roots_p);
    for (const auto& [a, roots] : by_a) {
      AttackResult attack = BruteForceInvert(PublicKey(testing::ToPoly(p, a)));
      std::vector<RootSet> found;
      for (const auto& pre : attack.preimages) found.push_back(pre.roots_p);
      EXPECT_EQ(found, roots) << pv;
    }
  }
}

TEST(SurveyTest, WorkerCountDoesNotChangeReport) {
  const PrimeModulus p(11);
  for (auto pairing : {Pairing::kOrdered, Pairing::kUnordered}) {
    SurveyOptions base{.mode = SurveyMode::kAll, .pairing = pairing};
    SurveyReport one = UniquenessSurvey(p, base);
    for (unsigned w : {2u, 8u}) {
      SurveyOptions o = base;
      o.workers = w;
      EXPECT_EQ(UniquenessSurvey(p, o), one);
    }
  }
}

TEST(VerifyReportTest, DetectsFaults) {
  const PrimeModulus p(7);
  SurveyReport r = UniquenessSurvey(p);
  ASSERT_TRUE(VerifyReport(r));

  SurveyReport bad = r;
  std::vector<std::uint64_t> c(bad.rows[4].a.coeffs().begin(),
                               bad.rows[4].a.coeffs().end());
  c[0] += 1;
  bad.rows[4].a = Polynomial(p, std::move(c));
  ReportCheck check = VerifyReport(bad);
  EXPECT_FALSE(check);
  EXPECT_EQ(check.row, std::optional<std::size_t>(4));

  SurveyReport empty{PrimeModulus(3), SurveyMode::kBalanced, Pairing::kOrdered,
                     {}, {}};
  EXPECT_FALSE(VerifyReport(empty));

  SurveyReport regrouped = r;
  regrouped.rows[2].group_id = regrouped.rows[3].group_id;
  EXPECT_FALSE(VerifyReport(regrouped));

  SurveyReport swapped = r;
  std::swap(swapped.rows[0], swapped.rows[1]);
  EXPECT_FALSE(VerifyReport(swapped));
}

}  // namespace
}  // namespace eeaowf
