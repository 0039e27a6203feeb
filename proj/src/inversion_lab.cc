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

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "parallel.h"
#include "subset_enum.h"

namespace eeaowf {

std::string_view SurveyModeName(SurveyMode mode) {
  return mode == SurveyMode::kBalanced ? "balanced" : "all";
}

std::string_view PairingName(Pairing pairing) {
  return pairing == Pairing::kOrdered ? "ordered" : "unordered";
}

std::optional<SurveyMode> ParseSurveyMode(std::string_view s) {
  if (s == "balanced") return SurveyMode::kBalanced;
  if (s == "all") return SurveyMode::kAll;
  return std::nullopt;
}

std::optional<Pairing> ParsePairing(std::string_view s) {
  if (s == "ordered") return Pairing::kOrdered;
  if (s == "unordered") return Pairing::kUnordered;
  return std::nullopt;
}

BigCount CountSearchSpace(const PrimeModulus& p, SurveyMode mode) {
  const std::uint64_t n = p.value() - 1;
  if (mode == SurveyMode::kAll) {
    BigCount two_n = 1;
    two_n <<= static_cast<unsigned>(n);
    return two_n - 2;
  }
  const std::uint64_t k = p.half();
  BigCount c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
  }
  return c;
}

namespace {

std::uint64_t CheckedTotal(const PrimeModulus& p, SurveyMode mode,
                           std::uint64_t limit) {
  const BigCount total = CountSearchSpace(p, mode);
  if (total > limit) {
    throw Error(ErrorCode::kSearchSpaceTooLarge,
                "p=" + std::to_string(p.value()) + " has " + total.str() +
                    " candidate factorizations, above the limit of " +
                    std::to_string(limit) +
                    "; the count grows exponentially in p");
  }
  return total.convert_to<std::uint64_t>();
}

// Visits the subsets with ranks [begin, end) of the chosen enumeration.
template <class Visit>
void ForEachSubset(const PrimeModulus& p, SurveyMode mode, std::uint64_t begin,
                   std::uint64_t end, Visit&& visit) {
  if (begin >= end) {
    return;
  }
  const std::size_t n = p.value() - 1;
  auto walk = [&](const auto& en) {
    std::vector<std::uint64_t> s = en.Unrank(begin);
    for (std::uint64_t r = begin; r < end; ++r) {
      visit(s);
      if (r + 1 < end) {
        en.Next(s);
      }
    }
  };
  if (mode == SurveyMode::kBalanced) {
    walk(internal::CombinationEnumerator(n, p.half()));
  } else {
    walk(internal::SubsetEnumerator(n));
  }
}

struct AttackChunk {
  std::vector<Preimage> preimages;
  std::uint64_t tested = 0;
  std::uint64_t pruned = 0;
};

}  // namespace

AttackResult BruteForceInvert(const PublicKey& target,
                              const AttackOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const PrimeModulus m = target.modulus();
  const std::uint64_t p = m.value();
  const std::uint64_t total = CheckedTotal(m, SurveyMode::kBalanced,
                                           options.limit);

  std::vector<std::uint64_t> a_at(p, 0);
  std::vector<std::uint64_t> forced;
  for (std::uint64_t j = 1; j < p; ++j) {
    a_at[j] = Eval(target.a(), FieldElement(m, j)).value();
    if (a_at[j] == 0) {
      forced.push_back(j);
    }
  }

  auto survives_filters = [&](const std::vector<std::uint64_t>& s) {
    if (!std::includes(s.begin(), s.end(), forced.begin(), forced.end())) {
      return false;
    }
    std::size_t probes = 0;
    std::size_t k = 0;
    for (std::uint64_t j = 1; j < p && probes < 3; ++j) {
      if (k < s.size() && s[k] == j) {
        ++k;
        continue;
      }
      ++probes;
      std::uint64_t pj = 1;
      for (std::uint64_t r : s) {
        pj = pj * ((j + p - r) % p) % p;
      }
      if (pj * a_at[j] % p != 1) {
        return false;
      }
    }
    return true;
  };

  const std::size_t chunks = internal::ChunkCount(total, options.workers);
  std::vector<AttackChunk> out(chunks);
  internal::RunChunked(
      total, chunks, options.workers,
      [&](std::size_t c, std::uint64_t begin, std::uint64_t end) {
        AttackChunk& acc = out[c];
        ForEachSubset(m, SurveyMode::kBalanced, begin, end,
                      [&](const std::vector<std::uint64_t>& s) {
                        if (options.prune && !survives_filters(s)) {
                          ++acc.pruned;
                          return;
                        }
                        ++acc.tested;
                        RootSet roots(m, s);
                        Polynomial cand = FromRoots(roots);
                        if (VerifyProof(target, cand)) {
                          acc.preimages.push_back(
                              Preimage{std::move(roots), std::move(cand)});
                        }
                      });
      });

  AttackResult result{target, {}, 0, 0, std::chrono::milliseconds{0}};
  for (auto& c : out) {
    result.candidates_tested += c.tested;
    result.pruned += c.pruned;
    for (auto& pre : c.preimages) {
      result.preimages.push_back(std::move(pre));
    }
  }
  result.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return result;
}

std::vector<std::size_t> SurveyReport::GroupSizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& row : rows) {
    if (row.group_id == 0) {
      continue;
    }
    if (sizes.size() < row.group_id) {
      sizes.resize(row.group_id, 0);
    }
    ++sizes[row.group_id - 1];
  }
  return sizes;
}

std::vector<std::vector<std::size_t>> CollisionGroupsFromIds(
    const SurveyReport& report) {
  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    members[report.rows[i].group_id].push_back(i);
  }
  std::vector<std::vector<std::size_t>> groups;
  for (auto& [id, group] : members) {
    bool collision = group.size() >= 2;
    if (collision && report.pairing == Pairing::kUnordered) {
      // Rows 2i and 2i+1 are the two roles of one pair.
      collision = group.front() / 2 != group.back() / 2;
    }
    if (collision) {
      groups.push_back(std::move(group));
    }
  }
  return groups;
}

void AssignGroups(SurveyReport& report) {
  std::map<std::vector<std::uint64_t>, std::size_t> ids;
  for (auto& row : report.rows) {
    std::vector<std::uint64_t> key(row.a.coeffs().begin(),
                                   row.a.coeffs().end());
    auto it = ids.emplace(std::move(key), ids.size() + 1).first;
    row.group_id = it->second;
  }
  report.collision_groups = CollisionGroupsFromIds(report);
}

SurveyReport UniquenessSurvey(const PrimeModulus& p,
                              const SurveyOptions& options) {
  const std::uint64_t total = CheckedTotal(p, options.mode, options.limit);
  const bool unordered = options.pairing == Pairing::kUnordered;

  const std::size_t chunks = internal::ChunkCount(total, options.workers);
  std::vector<std::vector<SurveyRow>> out(chunks);
  auto make_row = [&](RootSet roots) {
    const std::size_t deg = roots.size();
    Polynomial a = DeriveBezoutPair(FactorPair::FromRoots(roots)).a;
    return SurveyRow{std::move(roots), deg, std::move(a), 0};
  };

  internal::RunChunked(
      total, chunks, options.workers,
      [&](std::size_t c, std::uint64_t begin, std::uint64_t end) {
        auto& rows = out[c];
        ForEachSubset(p, options.mode, begin, end,
                      [&](const std::vector<std::uint64_t>& s) {
                        RootSet roots(p, s);
                        if (!unordered) {
                          rows.push_back(make_row(std::move(roots)));
                          return;
                        }
                        RootSet other = roots.Complement();
                        if (other < roots) {
                          return;
                        }
                        rows.push_back(make_row(std::move(roots)));
                        rows.push_back(make_row(std::move(other)));
                      });
      });

  SurveyReport report{p, options.mode, options.pairing, {}, {}};
  report.rows.reserve(total);
  for (auto& chunk : out) {
    for (auto& row : chunk) {
      report.rows.push_back(std::move(row));
    }
  }
  AssignGroups(report);
  return report;
}

namespace {

ReportCheck RejectRow(std::size_t row, std::string reason) {
  return ReportCheck{false, row, "row " + std::to_string(row) + ": " +
                                     std::move(reason)};
}

}  // namespace

ReportCheck VerifyReport(const SurveyReport& report) {
  const PrimeModulus& p = report.p;
  const BigCount expected = CountSearchSpace(p, report.mode);
  if (BigCount(report.rows.size()) != expected) {
    return ReportCheck{false, std::nullopt,
                       "row count " + std::to_string(report.rows.size()) +
                           " differs from the search space " + expected.str()};
  }

  const bool unordered = report.pairing == Pairing::kUnordered;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const SurveyRow& row = report.rows[i];
    if (row.roots_p.modulus() != p || row.a.modulus() != p) {
      return RejectRow(i, "modulus differs from the report's p");
    }
    const std::size_t k = row.roots_p.size();
    if (row.deg_p != k) {
      return RejectRow(i, "degP does not match the root count");
    }
    const bool size_ok = report.mode == SurveyMode::kBalanced
                             ? k == p.half()
                             : (k >= 1 && k < p.value() - 1);
    if (!size_ok) {
      return RejectRow(i, "root set size not allowed in this mode");
    }
    if (unordered) {
      if (i % 2 == 1) {
        if (row.roots_p != report.rows[i - 1].roots_p.Complement()) {
          return RejectRow(i, "second role is not the complement of the first");
        }
      } else {
        if (!(row.roots_p < row.roots_p.Complement())) {
          return RejectRow(i, "pair is not keyed by its smaller root set");
        }
        if (i >= 2 && !(report.rows[i - 2].roots_p < row.roots_p)) {
          return RejectRow(i, "pairs out of lexicographic order");
        }
      }
    } else if (i >= 1 && !(report.rows[i - 1].roots_p < row.roots_p)) {
      return RejectRow(i, "rows out of lexicographic order");
    }
    const Polynomial a =
        DeriveBezoutPair(FactorPair::FromRoots(row.roots_p)).a;
    if (a != row.a) {
      return RejectRow(i, "A does not re-derive from rootsP");
    }
  }

  SurveyReport regrouped = report;
  AssignGroups(regrouped);
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    if (regrouped.rows[i].group_id != report.rows[i].group_id) {
      return RejectRow(i, "groupId inconsistent with A");
    }
  }
  for (const auto& group : report.collision_groups) {
    for (std::size_t idx : group) {
      if (idx >= report.rows.size() ||
          report.rows[idx].a != report.rows[group.front()].a) {
        return ReportCheck{false, std::nullopt,
                           "collision group members disagree on A"};
      }
    }
  }
  if (regrouped.collision_groups != report.collision_groups) {
    return ReportCheck{false, std::nullopt,
                       "collision groups inconsistent with A"};
  }
  return ReportCheck{};
}

}  // namespace eeaowf
