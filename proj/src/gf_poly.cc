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

#include <algorithm>
#include <string>
#include <utility>

namespace eeaowf {

namespace {

void CheckSameModulus(const PrimeModulus& a, const PrimeModulus& b) {
  EEAOWF_ENFORCE(a == b, ErrorCode::kModulusMismatch,
                 "moduli " + std::to_string(a.value()) + " and " +
                     std::to_string(b.value()) + " differ");
}

std::uint64_t AddMod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t SubMod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;
}

}  // namespace

// ---------------------------------------------------------------------------
// PrimeModulus / FieldElement

bool PrimeModulus::IsOddPrime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) {
    return false;
  }
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  EEAOWF_ENFORCE(p <= kMaxValue, ErrorCode::kInvalidPrime,
                 std::to_string(p) + " exceeds the supported modulus range");
  EEAOWF_ENFORCE(IsOddPrime(p), ErrorCode::kInvalidPrime,
                 std::to_string(p) + " is not an odd prime");
}

FieldElement::FieldElement(PrimeModulus modulus, std::uint64_t value)
    : modulus_(modulus), value_(value % modulus.value()) {}

FieldElement FieldElement::FromSigned(PrimeModulus modulus,
                                      std::int64_t value) {
  auto p = static_cast<std::int64_t>(modulus.value());
  std::int64_t r = value % p;
  if (r < 0) {
    r += p;
  }
  return FieldElement(modulus, static_cast<std::uint64_t>(r));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  CheckSameModulus(modulus_, o.modulus_);
  return FieldElement(modulus_, AddMod(value_, o.value_, modulus_.value()));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  CheckSameModulus(modulus_, o.modulus_);
  return FieldElement(modulus_, SubMod(value_, o.value_, modulus_.value()));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  CheckSameModulus(modulus_, o.modulus_);
  return FieldElement(modulus_, MulMod(value_, o.value_, modulus_.value()));
}

FieldElement FieldElement::operator-() const {
  return FieldElement(modulus_, SubMod(0, value_, modulus_.value()));
}

FieldElement ModInverse(const FieldElement& a) {
  EEAOWF_ENFORCE(!a.IsZero(), ErrorCode::kZeroInverse,
                 "zero has no inverse");
  // Track only the coefficient of a in r = s*a (mod p).
  std::int64_t r0 = static_cast<std::int64_t>(a.modulus().value());
  std::int64_t r1 = static_cast<std::int64_t>(a.value());
  std::int64_t s0 = 0;
  std::int64_t s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return FieldElement::FromSigned(a.modulus(), s0);
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(PrimeModulus modulus) : modulus_(modulus) {}

Polynomial::Polynomial(PrimeModulus modulus, std::vector<std::uint64_t> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) {
    c %= modulus_.value();
  }
  Trim();
}

Polynomial::Polynomial(PrimeModulus modulus,
                       std::initializer_list<std::int64_t> coeffs)
    : modulus_(modulus) {
  coeffs_.reserve(coeffs.size());
  for (std::int64_t c : coeffs) {
    coeffs_.push_back(FieldElement::FromSigned(modulus, c).value());
  }
  Trim();
}

Polynomial Polynomial::Constant(PrimeModulus modulus, std::uint64_t c) {
  return Polynomial(modulus, std::vector<std::uint64_t>{c});
}

Polynomial Polynomial::Monomial(PrimeModulus modulus, std::size_t degree,
                                std::uint64_t c) {
  std::vector<std::uint64_t> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return Polynomial(modulus, std::move(coeffs));
}

Polynomial Polynomial::XPowMinusOne(PrimeModulus modulus, std::size_t n) {
  std::vector<std::uint64_t> coeffs(n + 1, 0);
  coeffs[n] = AddMod(coeffs[n], 1, modulus.value());
  coeffs[0] = SubMod(coeffs[0], 1, modulus.value());
  return Polynomial(modulus, std::move(coeffs));
}

void Polynomial::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
  if (coeffs_.empty()) {
    return std::nullopt;
  }
  return coeffs_.size() - 1;
}

std::uint64_t Polynomial::LeadingCoeff() const noexcept {
  return coeffs_.empty() ? 0 : coeffs_.back();
}

bool Polynomial::IsMonic() const noexcept { return LeadingCoeff() == 1; }

bool Polynomial::IsOne() const noexcept {
  return coeffs_.size() == 1 && coeffs_[0] == 1;
}

FieldElement Polynomial::coeff(std::size_t i) const {
  return FieldElement(modulus_, i < coeffs_.size() ? coeffs_[i] : 0);
}

Polynomial Polynomial::Monic() const {
  if (IsZero() || IsMonic()) {
    return *this;
  }
  return *this * ModInverse(FieldElement(modulus_, LeadingCoeff()));
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  CheckSameModulus(f.modulus(), g.modulus());
  const std::uint64_t p = f.modulus().value();
  auto a = f.coeffs();
  auto b = g.coeffs();
  std::vector<std::uint64_t> out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = AddMod(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  }
  return Polynomial(f.modulus(), std::move(out));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  CheckSameModulus(f.modulus(), g.modulus());
  const std::uint64_t p = f.modulus().value();
  auto a = f.coeffs();
  auto b = g.coeffs();
  std::vector<std::uint64_t> out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = SubMod(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  }
  return Polynomial(f.modulus(), std::move(out));
}

Polynomial operator-(const Polynomial& f) {
  return Polynomial(f.modulus()) - f;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  CheckSameModulus(f.modulus(), g.modulus());
  if (f.IsZero() || g.IsZero()) {
    return Polynomial(f.modulus());
  }
  const std::uint64_t p = f.modulus().value();
  auto a = f.coeffs();
  auto b = g.coeffs();
  std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = AddMod(out[i + j], MulMod(a[i], b[j], p), p);
    }
  }
  return Polynomial(f.modulus(), std::move(out));
}

Polynomial operator*(const Polynomial& f, const FieldElement& c) {
  CheckSameModulus(f.modulus(), c.modulus());
  const std::uint64_t p = f.modulus().value();
  std::vector<std::uint64_t> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : out) {
    x = MulMod(x, c.value(), p);
  }
  return Polynomial(f.modulus(), std::move(out));
}

DivModResult DivMod(const Polynomial& num, const Polynomial& den) {
  CheckSameModulus(num.modulus(), den.modulus());
  EEAOWF_ENFORCE(!den.IsZero(), ErrorCode::kDivisionByZeroPolynomial,
                 "division by the zero polynomial");
  const PrimeModulus m = num.modulus();
  const std::uint64_t p = m.value();
  const std::size_t dd = *den.degree();
  if (num.IsZero() || *num.degree() < dd) {
    return {Polynomial(m), num};
  }
  const std::uint64_t lead_inv =
      ModInverse(FieldElement(m, den.LeadingCoeff())).value();
  auto d = den.coeffs();
  std::vector<std::uint64_t> rem(num.coeffs().begin(), num.coeffs().end());
  std::vector<std::uint64_t> quot(rem.size() - dd, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const std::uint64_t c = MulMod(rem[k + dd], lead_inv, p);
    quot[k] = c;
    if (c == 0) {
      continue;
    }
    for (std::size_t j = 0; j <= dd; ++j) {
      rem[k + j] = SubMod(rem[k + j], MulMod(c, d[j], p), p);
    }
  }
  rem.resize(dd);
  return {Polynomial(m, std::move(quot)), Polynomial(m, std::move(rem))};
}

ExtGcdResult ExtGcd(const Polynomial& f, const Polynomial& g) {
  CheckSameModulus(f.modulus(), g.modulus());
  EEAOWF_ENFORCE(!(f.IsZero() && g.IsZero()), ErrorCode::kBothZero,
                 "gcd(0, 0) is undefined");
  const PrimeModulus m = f.modulus();

  // Invariant: r_i = s_i * f + t_i * g.
  Polynomial r0 = f, r1 = g;
  Polynomial s0 = Polynomial::Constant(m, 1), s1(m);
  Polynomial t0(m), t1 = Polynomial::Constant(m, 1);
  while (!r1.IsZero()) {
    auto [q, r] = DivMod(r0, r1);
    Polynomial s2 = s0 - q * s1;
    Polynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }

  const FieldElement scale = ModInverse(FieldElement(m, r0.LeadingCoeff()));
  ExtGcdResult out{r0 * scale, s0 * scale, t0 * scale};

  const bool reducible = !f.IsZero() && !g.IsZero() && *f.degree() >= 1 &&
                         *g.degree() >= 1;
  if (out.gcd.IsOne() && reducible) {
    // (u - q g) f + (v + q f) g is the same combination with deg u < deg g.
    auto [q, u] = DivMod(out.u, g);
    out.v = out.v + q * f;
    out.u = std::move(u);
  }
  return out;
}

FieldElement Eval(const Polynomial& f, const FieldElement& x) {
  CheckSameModulus(f.modulus(), x.modulus());
  const std::uint64_t p = f.modulus().value();
  std::uint64_t acc = 0;
  auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = AddMod(MulMod(acc, x.value(), p), c[i], p);
  }
  return FieldElement(f.modulus(), acc);
}

// ---------------------------------------------------------------------------
// RootSet

RootSet::RootSet(PrimeModulus modulus) : modulus_(modulus) {}

RootSet::RootSet(PrimeModulus modulus, std::vector<std::uint64_t> roots)
    : modulus_(modulus), roots_(std::move(roots)) {
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    EEAOWF_ENFORCE(roots_[i] >= 1 && roots_[i] < modulus_.value(),
                   ErrorCode::kInvalidRootSet,
                   "root " + std::to_string(roots_[i]) + " outside [1, " +
                       std::to_string(modulus_.value() - 1) + "]");
    EEAOWF_ENFORCE(i == 0 || roots_[i - 1] < roots_[i],
                   ErrorCode::kInvalidRootSet,
                   "roots must be strictly increasing");
  }
}

RootSet RootSet::Full(PrimeModulus modulus) {
  std::vector<std::uint64_t> all(modulus.value() - 1);
  for (std::size_t i = 0; i < all.size(); ++i) {
    all[i] = i + 1;
  }
  return RootSet(modulus, std::move(all));
}

bool RootSet::Contains(std::uint64_t j) const {
  return std::binary_search(roots_.begin(), roots_.end(), j);
}

RootSet RootSet::Complement() const {
  std::vector<std::uint64_t> out;
  out.reserve(modulus_.value() - 1 - roots_.size());
  std::size_t k = 0;
  for (std::uint64_t j = 1; j < modulus_.value(); ++j) {
    if (k < roots_.size() && roots_[k] == j) {
      ++k;
    } else {
      out.push_back(j);
    }
  }
  return RootSet(modulus_, std::move(out));
}

Polynomial FromRoots(const RootSet& s) {
  const PrimeModulus m = s.modulus();
  const std::uint64_t p = m.value();
  // Multiply in place by (x - j), growing one degree per root.
  std::vector<std::uint64_t> c{1};
  c.reserve(s.size() + 1);
  for (std::uint64_t j : s.roots()) {
    const std::uint64_t neg_j = p - j;
    c.push_back(0);
    for (std::size_t i = c.size() - 1; i > 0; --i) {
      c[i] = AddMod(c[i - 1], MulMod(c[i], neg_j, p), p);
    }
    c[0] = MulMod(c[0], neg_j, p);
  }
  return Polynomial(m, std::move(c));
}

}  // namespace eeaowf
