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
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "eeaowf/error.h"

namespace eeaowf {

// An odd prime p >= 3, checked by trial division. Values are capped at 2^32
// so that a product of two residues fits in 64 bits.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }
  // (p - 1) / 2, the degree of each factor in a balanced split.
  std::size_t half() const noexcept { return static_cast<std::size_t>((p_ - 1) / 2); }

  bool operator==(const PrimeModulus&) const = default;

  static bool IsOddPrime(std::uint64_t p);
  static constexpr std::uint64_t kMaxValue = 0xFFFFFFFBULL;

 private:
  std::uint64_t p_;
};

class FieldElement {
 public:
  // Reduces `value` into [0, p).
  FieldElement(PrimeModulus modulus, std::uint64_t value);
  static FieldElement FromSigned(PrimeModulus modulus, std::int64_t value);

  std::uint64_t value() const noexcept { return value_; }
  const PrimeModulus& modulus() const noexcept { return modulus_; }
  bool IsZero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;

  bool operator==(const FieldElement&) const = default;

 private:
  PrimeModulus modulus_;
  std::uint64_t value_;
};

// Multiplicative inverse via the integer extended Euclidean algorithm.
// Throws ZeroInverse for a == 0.
FieldElement ModInverse(const FieldElement& a);

// Dense polynomial over GF(p), coefficients low-to-high. The zero polynomial
// is the empty coefficient vector; otherwise the top coefficient is nonzero.
class Polynomial {
 public:
  explicit Polynomial(PrimeModulus modulus);
  Polynomial(PrimeModulus modulus, std::vector<std::uint64_t> coeffs);
  Polynomial(PrimeModulus modulus, std::initializer_list<std::int64_t> coeffs);

  static Polynomial Constant(PrimeModulus modulus, std::uint64_t c);
  static Polynomial Monomial(PrimeModulus modulus, std::size_t degree,
                             std::uint64_t c = 1);
  // x^n - 1.
  static Polynomial XPowMinusOne(PrimeModulus modulus, std::size_t n);

  const PrimeModulus& modulus() const noexcept { return modulus_; }
  std::span<const std::uint64_t> coeffs() const noexcept { return coeffs_; }

  bool IsZero() const noexcept { return coeffs_.empty(); }
  // nullopt stands for deg(0) = -infinity.
  std::optional<std::size_t> degree() const noexcept;
  // 0 for the zero polynomial.
  std::uint64_t LeadingCoeff() const noexcept;
  bool IsMonic() const noexcept;
  bool IsOne() const noexcept;
  // Coefficient of x^i, zero past the degree.
  FieldElement coeff(std::size_t i) const;

  Polynomial Monic() const;

  bool operator==(const Polynomial&) const = default;

 private:
  void Trim();

  PrimeModulus modulus_;
  std::vector<std::uint64_t> coeffs_;
};

Polynomial operator+(const Polynomial& f, const Polynomial& g);
Polynomial operator-(const Polynomial& f, const Polynomial& g);
Polynomial operator-(const Polynomial& f);
Polynomial operator*(const Polynomial& f, const Polynomial& g);
Polynomial operator*(const Polynomial& f, const FieldElement& c);

struct DivModResult {
  Polynomial quotient;
  Polynomial remainder;
};

// num = quotient * den + remainder with deg remainder < deg den.
DivModResult DivMod(const Polynomial& num, const Polynomial& den);

struct ExtGcdResult {
  Polynomial gcd;  // monic
  Polynomial u;    // coefficient of f
  Polynomial v;    // coefficient of g
};

// u*f + v*g = gcd(f, g) with a monic gcd. When the inputs are coprime and
// both have degree >= 1 the pair is the minimal one: deg u < deg g and
// deg v < deg f.
ExtGcdResult ExtGcd(const Polynomial& f, const Polynomial& g);

// Horner evaluation.
FieldElement Eval(const Polynomial& f, const FieldElement& x);

// Strictly increasing subset of {1, ..., p-1}.
class RootSet {
 public:
  explicit RootSet(PrimeModulus modulus);
  RootSet(PrimeModulus modulus, std::vector<std::uint64_t> roots);

  // {1, ..., p-1}.
  static RootSet Full(PrimeModulus modulus);

  const PrimeModulus& modulus() const noexcept { return modulus_; }
  std::span<const std::uint64_t> roots() const noexcept { return roots_; }
  std::size_t size() const noexcept { return roots_.size(); }
  bool empty() const noexcept { return roots_.empty(); }
  bool Contains(std::uint64_t j) const;

  RootSet Complement() const;

  bool operator==(const RootSet&) const = default;
  // Lexicographic on the sorted sequences.
  bool operator<(const RootSet& o) const { return roots_ < o.roots_; }

 private:
  PrimeModulus modulus_;
  std::vector<std::uint64_t> roots_;
};

// Monic prod_{j in s} (x - j); the empty set gives 1.
Polynomial FromRoots(const RootSet& s);

}  // namespace eeaowf
