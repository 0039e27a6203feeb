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

#include "eeaowf/gf_poly.h"

#include <gtest/gtest.h>

#include "eeaowf/owf_core.h"
#include "oracle.h"
#include "test_util.h"

namespace eeaowf {
namespace {

using testing::RandomPoly;
using testing::ToCoeffs;

const PrimeModulus kP3(3);
const PrimeModulus kP5(5);
const PrimeModulus kP7(7);

TEST(PrimeModulusTest, RejectsNonPrimes) {
  for (std::uint64_t bad : {0, 1, 2, 4, 9, 15, 91}) {
    try {
      PrimeModulus p(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidPrime);
    }
  }
  EXPECT_EQ(PrimeModulus(97).half(), 48u);
}

TEST(ModInverseTest, Examples) {
  EXPECT_EQ(ModInverse(FieldElement(kP7, 1)).value(), 1u);
  EXPECT_EQ(ModInverse(FieldElement(kP5, 2)).value(), 3u);
  EXPECT_EQ(ModInverse(FieldElement(kP7, 4)).value(), 2u);
}

TEST(ModInverseTest, ZeroHasNoInverse) {
  try {
    ModInverse(FieldElement(kP7, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroInverse);
  }
}

TEST(ModInverseTest, AgreesWithExhaustiveSearch) {
  for (std::uint64_t pv = 3; pv <= 31; ++pv) {
    if (!PrimeModulus::IsOddPrime(pv)) continue;
    const PrimeModulus p(pv);
    for (std::uint64_t a = 1; a < pv; ++a) {
      EXPECT_EQ(ModInverse(FieldElement(p, a)).value(),
                static_cast<std::uint64_t>(oracle::BruteInverse(a, pv)))
          << a << " mod " << pv;
    }
  }
}

TEST(PolynomialTest, CanonicalTrim) {
  Polynomial f(kP5, {1, 2, 0, 5, 10});
  EXPECT_EQ(f.coeffs().size(), 2u);
  EXPECT_EQ(*f.degree(), 1u);
  EXPECT_TRUE(Polynomial(kP5, {0, 0}).IsZero());
  EXPECT_FALSE(Polynomial(kP5).degree().has_value());
  EXPECT_EQ(Polynomial(kP5).LeadingCoeff(), 0u);
}

TEST(PolynomialTest, ArithmeticExamples) {
  const Polynomial f(kP5, {3, 1, 4});
  EXPECT_EQ(f * Polynomial::Constant(kP5, 1), f);
  // (x+2)(x+1)
  const Polynomial prod = Polynomial(kP5, {2, 1}) * Polynomial(kP5, {1, 1});
  EXPECT_EQ(ToCoeffs(prod), oracle::Mul({2, 1}, {1, 1}, 5));
  EXPECT_EQ(prod, Polynomial(kP5, {2, 3, 1}));
  EXPECT_TRUE((f + (-f)).IsZero());
  EXPECT_TRUE((f - f).IsZero());
}

TEST(PolynomialTest, ModulusMismatch) {
  try {
    Polynomial(kP5, {1}) + Polynomial(kP7, {1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kModulusMismatch);
  }
  EXPECT_THROW(Eval(Polynomial(kP5, {1}), FieldElement(kP7, 1)), Error);
}

TEST(DivModTest, Examples) {
  // (x^4 + 4) / (x^2 + 2x + 2) mod 5
  const Polynomial num(kP5, {4, 0, 0, 0, 1});
  const Polynomial den(kP5, {2, 2, 1});
  auto [q, r] = DivMod(num, den);
  auto [oq, orr] = oracle::DivMod({4, 0, 0, 0, 1}, {2, 2, 1}, 5);
  EXPECT_EQ(ToCoeffs(q), oq);
  EXPECT_EQ(ToCoeffs(r), orr);
  EXPECT_EQ(q, Polynomial(kP5, {2, 3, 1}));
  EXPECT_TRUE(r.IsZero());

  auto [q1, r1] = DivMod(den, den);
  EXPECT_TRUE(q1.IsOne());
  EXPECT_TRUE(r1.IsZero());

  auto [q2, r2] = DivMod(Polynomial(kP5, {1, 1}), Polynomial(kP5, {1, 0, 1}));
  EXPECT_TRUE(q2.IsZero());
  EXPECT_EQ(r2, Polynomial(kP5, {1, 1}));
}

TEST(DivModTest, DivisionByZero) {
  try {
    DivMod(Polynomial(kP5, {1}), Polynomial(kP5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZeroPolynomial);
  }
}

TEST(DivModTest, PropertyReconstructsDividend) {
  SplitMix64 rng(7);
  for (std::uint64_t pv : {3, 5, 7, 13, 97}) {
    const PrimeModulus p(pv);
    for (int trial = 0; trial < 200; ++trial) {
      Polynomial f = RandomPoly(p, rng, 12);
      Polynomial g = RandomPoly(p, rng, 8);
      if (g.IsZero()) continue;
      auto [q, r] = DivMod(f, g);
      EXPECT_EQ(q * g + r, f);
      EXPECT_TRUE(r.IsZero() || *r.degree() < *g.degree());
      auto [oq, orr] = oracle::DivMod(ToCoeffs(f), ToCoeffs(g), pv);
      EXPECT_EQ(ToCoeffs(q), oq);
      EXPECT_EQ(ToCoeffs(r), orr);
    }
  }
}

TEST(ExtGcdTest, Examples) {
  // x^2+2x+2, x^2+3x+2 mod 5
  {
    const Polynomial f(kP5, {2, 2, 1}), g(kP5, {2, 3, 1});
    auto [d, u, v] = ExtGcd(f, g);
    EXPECT_TRUE(d.IsOne());
    EXPECT_EQ(u, Polynomial(kP5, {4, 3}));
    EXPECT_EQ(v, Polynomial(kP5, {4, 2}));
    // Substitution oracle.
    EXPECT_EQ(oracle::Add(oracle::Mul({4, 3}, {2, 2, 1}, 5),
                          oracle::Mul({4, 2}, {2, 3, 1}, 5), 5),
              oracle::Coeffs{1});
  }
  {
    const Polynomial f(kP3, {2, 1}), g(kP3, {1, 1});
    auto [d, u, v] = ExtGcd(f, g);
    EXPECT_TRUE(d.IsOne());
    EXPECT_EQ(u, Polynomial(kP3, {1}));
    EXPECT_EQ(v, Polynomial(kP3, {2}));
    EXPECT_EQ(oracle::Add(oracle::Mul({1}, {2, 1}, 3),
                          oracle::Mul({2}, {1, 1}, 3), 3),
              oracle::Coeffs{1});
  }
  {
    const Polynomial f(kP5, {1, 1});
    auto [d, u, v] = ExtGcd(f, f);
    EXPECT_EQ(d, f);
    EXPECT_TRUE(u.IsZero());
    EXPECT_TRUE(v.IsOne());
  }
}

TEST(ExtGcdTest, MonicNormalizationAndZeroOperand) {
  const Polynomial g(kP7, {3, 0, 2});  // 2x^2 + 3
  auto [d, u, v] = ExtGcd(Polynomial(kP7), g);
  EXPECT_TRUE(d.IsMonic());
  EXPECT_EQ(d, g.Monic());
  EXPECT_EQ(v * g, d);
  EXPECT_TRUE(u.IsZero());

  try {
    ExtGcd(Polynomial(kP7), Polynomial(kP7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBothZero);
  }
}

TEST(ExtGcdTest, PropertyBezoutAndDivisibility) {
  SplitMix64 rng(11);
  for (std::uint64_t pv : {3, 5, 7, 11, 31}) {
    const PrimeModulus p(pv);
    for (int trial = 0; trial < 200; ++trial) {
      Polynomial f = RandomPoly(p, rng, 9);
      Polynomial g = RandomPoly(p, rng, 9);
      if (f.IsZero() && g.IsZero()) continue;
      auto [d, u, v] = ExtGcd(f, g);
      EXPECT_EQ(u * f + v * g, d);
      EXPECT_TRUE(d.IsMonic());
      EXPECT_TRUE(DivMod(f, d).remainder.IsZero());
      EXPECT_TRUE(DivMod(g, d).remainder.IsZero());
      if (d.IsOne() && !f.IsZero() && !g.IsZero() && *f.degree() >= 1 &&
          *g.degree() >= 1) {
        EXPECT_TRUE(u.IsZero() || *u.degree() < *g.degree());
        EXPECT_TRUE(v.IsZero() || *v.degree() < *f.degree());
      }
    }
  }
}

TEST(FromRootsTest, Examples) {
  EXPECT_TRUE(FromRoots(RootSet(kP5)).IsOne());
  const Polynomial f = FromRoots(RootSet(kP5, {1, 2}));
  EXPECT_EQ(ToCoeffs(f), oracle::FromRoots({1, 2}, 5));
  EXPECT_EQ(f, Polynomial(kP5, {2, 2, 1}));
  EXPECT_EQ(FromRoots(RootSet::Full(kP5)), Polynomial(kP5, {4, 0, 0, 0, 1}));
}

TEST(FromRootsTest, FullSetGivesXPowMinusOne) {
  for (std::uint64_t pv = 3; pv <= 97; ++pv) {
    if (!PrimeModulus::IsOddPrime(pv)) continue;
    const PrimeModulus p(pv);
    EXPECT_EQ(FromRoots(RootSet::Full(p)), Polynomial::XPowMinusOne(p, pv - 1))
        << pv;
  }
}

TEST(FromRootsTest, DisjointUnionMultiplies) {
  SplitMix64 rng(3);
  const PrimeModulus p(23);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::uint64_t> a, b, all;
    for (std::uint64_t j = 1; j < 23; ++j) {
      switch (rng.UniformBelow(3)) {
        case 0: a.push_back(j); all.push_back(j); break;
        case 1: b.push_back(j); all.push_back(j); break;
        default: break;
      }
    }
    EXPECT_EQ(FromRoots(RootSet(p, all)),
              FromRoots(RootSet(p, a)) * FromRoots(RootSet(p, b)));
  }
}

TEST(RootSetTest, Invariants) {
  EXPECT_THROW(RootSet(kP5, {0}), Error);
  EXPECT_THROW(RootSet(kP5, {5}), Error);
  EXPECT_THROW(RootSet(kP5, {2, 1}), Error);
  EXPECT_THROW(RootSet(kP5, {2, 2}), Error);
  EXPECT_EQ(RootSet(kP5, {1, 3}).Complement(), RootSet(kP5, {2, 4}));
}

TEST(EvalTest, Examples) {
  EXPECT_EQ(Eval(Polynomial(kP5, {2, 2, 1}), FieldElement(kP5, 1)).value(), 0u);
  EXPECT_EQ(Eval(Polynomial(kP5), FieldElement(kP5, 3)).value(), 0u);
  EXPECT_EQ(Eval(Polynomial(kP5, {4, 0, 0, 0, 1}), FieldElement(kP5, 3)).value(),
            0u);
}

TEST(RingAxiomsTest, CommutativeAssociativeDistributive) {
  SplitMix64 rng(5);
  const PrimeModulus p(13);
  for (int trial = 0; trial < 300; ++trial) {
    Polynomial a = RandomPoly(p, rng, 6);
    Polynomial b = RandomPoly(p, rng, 6);
    Polynomial c = RandomPoly(p, rng, 6);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(testing::ToCoeffs(a * b),
              oracle::Mul(ToCoeffs(a), ToCoeffs(b), 13));
    const FieldElement x(p, rng.UniformBelow(13));
    EXPECT_EQ(Eval(a * b, x), Eval(a, x) * Eval(b, x));
    EXPECT_EQ(Eval(a, x).value(),
              static_cast<std::uint64_t>(oracle::Eval(ToCoeffs(a), x.value(), 13)));
  }
}

}  // namespace
}  // namespace eeaowf
