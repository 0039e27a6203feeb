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

#include "eeaowf/cli_io.h"

#include <unistd.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>
#include <utility>
#include <vector>

namespace eeaowf {

namespace {

[[noreturn]] void Malformed(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::kMalformedFile, why, line);
}

[[noreturn]] void Violation(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::kInvariantViolation, why, line);
}

// Canonical unsigned decimal: digits only, no sign, no leading zeros.
std::uint64_t ParseUint(std::string_view s, std::size_t line,
                        std::string_view what) {
  const bool canonical = !s.empty() && (s.size() == 1 || s[0] != '0');
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (!canonical || ec != std::errc() || ptr != s.data() + s.size()) {
    Malformed(line, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Splits text into LF-terminated lines, rejecting anything that would not
// round-trip: CR, a missing final newline, trailing whitespace.
std::vector<std::string_view> SplitLines(std::string_view text) {
  if (text.empty()) {
    Malformed(1, "empty file");
  }
  if (text.back() != '\n') {
    const auto last = static_cast<std::size_t>(
        std::count(text.begin(), text.end(), '\n') + 1);
    Malformed(last, "file does not end with a newline");
  }
  std::vector<std::string_view> lines = Split(text.substr(0, text.size() - 1),
                                              '\n');
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view l = lines[i];
    for (char c : l) {
      if (static_cast<unsigned char>(c) < 0x20 ||
          static_cast<unsigned char>(c) > 0x7e) {
        Malformed(i + 1, "non-printable or non-ASCII character");
      }
    }
    if (!l.empty() && l.back() == ' ') {
      Malformed(i + 1, "trailing whitespace");
    }
  }
  return lines;
}

template <class Fn>
auto AtLine(std::size_t line, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.line() != 0) {
      throw;
    }
    Violation(line, e.what());
  }
}

// Reads a key file line by line, demanding each key in turn.
class KeyValueReader {
 public:
  explicit KeyValueReader(std::string_view text) : lines_(SplitLines(text)) {
    if (lines_[0] != kFileMagic) {
      Malformed(1, "missing '" + std::string(kFileMagic) + "' header");
    }
    next_ = 1;
    std::string_view version = Expect("version");
    if (ParseUint(version, line(), "version") !=
        static_cast<std::uint64_t>(kFormatVersion)) {
      throw Error(ErrorCode::kUnsupportedVersion,
                  "version " + std::string(version) + " is not supported",
                  line());
    }
  }

  std::string_view Expect(std::string_view key) {
    if (next_ >= lines_.size()) {
      Malformed(next_ + 1, "missing '" + std::string(key) + "'");
    }
    std::string_view l = lines_[next_++];
    const std::size_t eq = l.find('=');
    if (eq == std::string_view::npos || l.substr(0, eq) != key) {
      Malformed(line(), "expected '" + std::string(key) + "='");
    }
    return l.substr(eq + 1);
  }

  void ExpectRole(std::string_view role) {
    std::string_view got = Expect("role");
    if (got != role) {
      Malformed(line(), "role is '" + std::string(got) + "', expected '" +
                            std::string(role) + "'");
    }
  }

  PrimeModulus Modulus() {
    const std::uint64_t p = ParseUint(Expect("p"), line(), "p");
    return AtLine(line(), [&] { return PrimeModulus(p); });
  }

  std::uint64_t Uint(std::string_view key) {
    return ParseUint(Expect(key), line(), key);
  }

  Polynomial Poly(std::string_view key, const PrimeModulus& p) {
    std::string_view v = Expect(key);
    return ParsePolynomial(p, v, ',', line());
  }

  RootSet Roots(std::string_view key, const PrimeModulus& p) {
    std::string_view v = Expect(key);
    return ParseRootSet(p, v, ',', line());
  }

  void Finish() {
    if (next_ != lines_.size()) {
      Malformed(next_ + 1, "unexpected trailing content");
    }
  }

  // 1-based number of the line most recently consumed.
  std::size_t line() const noexcept { return next_; }

 private:
  std::vector<std::string_view> lines_;
  std::size_t next_ = 0;
};

class KeyValueWriter {
 public:
  explicit KeyValueWriter(std::string_view role) {
    out_ << kFileMagic << '\n';
    Put("version", std::to_string(kFormatVersion));
    Put("role", role);
  }

  void Put(std::string_view key, std::string_view value) {
    out_ << key << '=' << value << '\n';
  }
  void Put(std::string_view key, std::uint64_t value) {
    Put(key, std::to_string(value));
  }
  void Put(std::string_view key, const Polynomial& f) {
    Put(key, FormatPolynomial(f));
  }
  void Put(std::string_view key, const RootSet& s) {
    Put(key, FormatRootSet(s));
  }

  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

std::string SubkeyName(std::size_t i, std::size_t b, std::string_view field) {
  return "key." + std::to_string(i) + "." + std::to_string(b) + "." +
         std::string(field);
}

void PutKeyPairBody(KeyValueWriter& w, const KeyPair& key,
                    const std::string& prefix) {
  w.Put(prefix + "seed", key.seed);
  w.Put(prefix + "rootsP", key.roots_p);
  w.Put(prefix + "P", key.private_factor);
  w.Put(prefix + "B", key.bezout_b);
  w.Put(prefix + "A", key.public_key.a());
}

KeyPair ReadKeyPairBody(KeyValueReader& r, const PrimeModulus& p,
                        const std::string& prefix) {
  const std::uint64_t seed = r.Uint(prefix + "seed");
  RootSet roots = r.Roots(prefix + "rootsP", p);
  const std::size_t roots_line = r.line();
  Polynomial pf = r.Poly(prefix + "P", p);
  const std::size_t p_line = r.line();
  Polynomial b = r.Poly(prefix + "B", p);
  const std::size_t b_line = r.line();
  Polynomial a = r.Poly(prefix + "A", p);
  const std::size_t a_line = r.line();

  if (roots.size() != p.half()) {
    Violation(roots_line, "rootsP must hold (p-1)/2 roots");
  }
  if (pf != FromRoots(roots)) {
    Violation(p_line, "P is not the product of (x - j) over rootsP");
  }
  PublicKey pub = AtLine(a_line, [&] { return PublicKey(a); });
  KeyPair key{std::move(pub), std::move(roots), std::move(pf), std::move(b),
              seed};
  if (key.bezout_b.IsZero() ||
      *key.bezout_b.degree() >= *key.private_factor.degree()) {
    Violation(b_line, "deg B must be below deg P");
  }
  if (!(key.public_key.a() * key.private_factor + key.bezout_b * key.Cofactor())
           .IsOne()) {
    Violation(a_line, "A*P + B*Q is not 1");
  }
  return key;
}

// CSV rows: fixed column count, no quoting needed since cells never hold
// commas.
std::vector<std::string_view> CsvCells(std::string_view line, std::size_t n,
                                       std::size_t line_no) {
  auto cells = Split(line, ',');
  if (cells.size() != n) {
    Malformed(line_no, "expected " + std::to_string(n) + " columns, got " +
                           std::to_string(cells.size()));
  }
  return cells;
}

}  // namespace

std::string FormatPolynomial(const Polynomial& f, char sep) {
  if (f.IsZero()) {
    return "0";
  }
  std::string s;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) {
      s.push_back(sep);
    }
    s += std::to_string(f.coeffs()[i]);
  }
  return s;
}

Polynomial ParsePolynomial(const PrimeModulus& p, std::string_view text,
                           char sep, std::size_t line) {
  if (text == "0") {
    return Polynomial(p);
  }
  std::vector<std::uint64_t> coeffs;
  for (std::string_view part : Split(text, sep)) {
    const std::uint64_t c = ParseUint(part, line, "coefficient");
    if (c >= p.value()) {
      Malformed(line, "coefficient " + std::to_string(c) + " is not below p");
    }
    coeffs.push_back(c);
  }
  if (coeffs.back() == 0) {
    Malformed(line, "trailing zero coefficient");
  }
  return Polynomial(p, std::move(coeffs));
}

std::string FormatRootSet(const RootSet& s, char sep) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) {
      out.push_back(sep);
    }
    out += std::to_string(s.roots()[i]);
  }
  return out;
}

RootSet ParseRootSet(const PrimeModulus& p, std::string_view text, char sep,
                     std::size_t line) {
  if (text.empty()) {
    return RootSet(p);
  }
  std::vector<std::uint64_t> roots;
  for (std::string_view part : Split(text, sep)) {
    roots.push_back(ParseUint(part, line, "root"));
  }
  return AtLine(line, [&] { return RootSet(p, std::move(roots)); });
}

// ---------------------------------------------------------------------------
// Single keys and proofs

std::string SerializePublicKey(const PublicKey& key) {
  KeyValueWriter w("public");
  w.Put("p", key.modulus().value());
  w.Put("A", key.a());
  return w.str();
}

PublicKey ParsePublicKey(std::string_view text) {
  KeyValueReader r(text);
  r.ExpectRole("public");
  const PrimeModulus p = r.Modulus();
  Polynomial a = r.Poly("A", p);
  const std::size_t a_line = r.line();
  r.Finish();
  return AtLine(a_line, [&] { return PublicKey(std::move(a)); });
}

std::string SerializeKeyPair(const KeyPair& key) {
  KeyValueWriter w("private");
  w.Put("p", key.modulus().value());
  PutKeyPairBody(w, key, "");
  return w.str();
}

KeyPair ParseKeyPair(std::string_view text) {
  KeyValueReader r(text);
  r.ExpectRole("private");
  const PrimeModulus p = r.Modulus();
  KeyPair key = ReadKeyPairBody(r, p, "");
  r.Finish();
  return key;
}

std::string SerializeProof(const Proof& proof) {
  KeyValueWriter w("proof");
  w.Put("p", proof.revealed.modulus().value());
  w.Put("P", proof.revealed);
  return w.str();
}

Proof ParseProof(std::string_view text) {
  KeyValueReader r(text);
  r.ExpectRole("proof");
  const PrimeModulus p = r.Modulus();
  Polynomial revealed = r.Poly("P", p);
  r.Finish();
  return Proof{std::move(revealed)};
}

// ---------------------------------------------------------------------------
// Lamport keys and signatures

std::string SerializeLamportPublicKey(const LamportPublicKey& key) {
  KeyValueWriter w("lamport-public");
  w.Put("p", key.p.value());
  w.Put("bits", key.bits());
  for (std::size_t i = 0; i < key.bits(); ++i) {
    for (std::size_t b = 0; b < 2; ++b) {
      w.Put("A." + std::to_string(i) + "." + std::to_string(b),
            key.keys[i][b].a());
    }
  }
  return w.str();
}

LamportPublicKey ParseLamportPublicKey(std::string_view text) {
  KeyValueReader r(text);
  r.ExpectRole("lamport-public");
  const PrimeModulus p = r.Modulus();
  const std::uint64_t bits = r.Uint("bits");
  if (bits == 0) {
    Violation(r.line(), "bits must be at least 1");
  }
  LamportPublicKey key{p, {}};
  for (std::uint64_t i = 0; i < bits; ++i) {
    auto read = [&](std::size_t b) {
      Polynomial a =
          r.Poly("A." + std::to_string(i) + "." + std::to_string(b), p);
      return AtLine(r.line(), [&] { return PublicKey(std::move(a)); });
    };
    PublicKey zero = read(0);
    PublicKey one = read(1);
    key.keys.push_back({std::move(zero), std::move(one)});
  }
  r.Finish();
  return key;
}

std::string SerializeLamportKeySet(const LamportKeySet& keys) {
  KeyValueWriter w("lamport-private");
  w.Put("p", keys.modulus().value());
  w.Put("bits", keys.bits());
  w.Put("seed", keys.seed());
  w.Put("used", keys.used() ? "1" : "0");
  for (std::size_t i = 0; i < keys.bits(); ++i) {
    for (std::size_t b = 0; b < 2; ++b) {
      PutKeyPairBody(w, keys.pairs()[i][b], SubkeyName(i, b, ""));
    }
  }
  return w.str();
}

LamportKeySet ParseLamportKeySet(std::string_view text) {
  KeyValueReader r(text);
  r.ExpectRole("lamport-private");
  const PrimeModulus p = r.Modulus();
  const std::uint64_t bits = r.Uint("bits");
  if (bits == 0) {
    Violation(r.line(), "bits must be at least 1");
  }
  const std::uint64_t seed = r.Uint("seed");
  std::string_view used = r.Expect("used");
  if (used != "0" && used != "1") {
    Malformed(r.line(), "used must be 0 or 1");
  }
  std::vector<std::array<KeyPair, 2>> pairs;
  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < bits; ++i) {
    KeyPair zero = ReadKeyPairBody(r, p, SubkeyName(i, 0, ""));
    KeyPair one = ReadKeyPairBody(r, p, SubkeyName(i, 1, ""));
    if (!seeds.insert(zero.seed).second || !seeds.insert(one.seed).second) {
      Violation(r.line(), "sub-key seeds must be distinct");
    }
    if (zero.roots_p == one.roots_p) {
      Violation(r.line(), "sibling sub-keys must differ");
    }
    pairs.push_back({std::move(zero), std::move(one)});
  }
  r.Finish();
  return LamportKeySet(p, seed, std::move(pairs), used == "1");
}

std::string SerializeSignature(const Signature& sig) {
  EEAOWF_ENFORCE(!sig.revealed.empty(), ErrorCode::kLengthMismatch,
                 "empty signature");
  KeyValueWriter w("signature");
  w.Put("p", sig.revealed.front().modulus().value());
  w.Put("bits", sig.revealed.size());
  w.Put("msg", FormatBitString(sig.message));
  for (std::size_t i = 0; i < sig.revealed.size(); ++i) {
    w.Put("P." + std::to_string(i), sig.revealed[i]);
  }
  return w.str();
}

Signature ParseSignature(std::string_view text) {
  KeyValueReader r(text);
  r.ExpectRole("signature");
  const PrimeModulus p = r.Modulus();
  const std::uint64_t bits = r.Uint("bits");
  if (bits == 0) {
    Violation(r.line(), "bits must be at least 1");
  }
  auto msg = ParseBitString(r.Expect("msg"));
  if (!msg || msg->size() != bits) {
    Malformed(r.line(), "msg must be a bitstring of length bits");
  }
  Signature sig{std::move(*msg), {}};
  for (std::uint64_t i = 0; i < bits; ++i) {
    Polynomial f = r.Poly("P." + std::to_string(i), p);
    if (!f.IsMonic() || *f.degree() != p.half()) {
      Violation(r.line(), "revealed polynomial must be monic of degree (p-1)/2");
    }
    sig.revealed.push_back(std::move(f));
  }
  r.Finish();
  return sig;
}

// ---------------------------------------------------------------------------
// Reports

std::string SerializeSurveyReport(const SurveyReport& report) {
  const std::vector<std::size_t> sizes = report.GroupSizes();
  std::ostringstream out;
  out << kSurveyCsvHeader << '\n';
  for (const auto& row : report.rows) {
    out << report.p.value() << ',' << SurveyModeName(report.mode) << ','
        << PairingName(report.pairing) << ',' << row.deg_p << ','
        << FormatRootSet(row.roots_p, ';') << ','
        << FormatPolynomial(row.a, ';') << ',' << row.group_id << ','
        << (row.group_id == 0 ? 0 : sizes[row.group_id - 1]) << '\n';
  }
  return out.str();
}

SurveyReport ParseSurveyReport(std::string_view text) {
  auto lines = SplitLines(text);
  if (lines[0] != kSurveyCsvHeader) {
    Malformed(1, "unexpected survey header");
  }
  if (lines.size() < 2) {
    Malformed(2, "survey has no rows");
  }
  std::optional<SurveyReport> report;
  std::vector<std::size_t> declared_sizes;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t ln = i + 1;
    auto cells = CsvCells(lines[i], 8, ln);
    const std::uint64_t pv = ParseUint(cells[0], ln, "p");
    auto mode = ParseSurveyMode(cells[1]);
    auto pairing = ParsePairing(cells[2]);
    if (!mode || !pairing) {
      Malformed(ln, "unknown mode or pairing");
    }
    if (!report) {
      const PrimeModulus p = AtLine(ln, [&] { return PrimeModulus(pv); });
      report.emplace(SurveyReport{p, *mode, *pairing, {}, {}});
    } else if (pv != report->p.value() || *mode != report->mode ||
               *pairing != report->pairing) {
      Malformed(ln, "p, mode and pairing must agree across rows");
    }
    const PrimeModulus& p = report->p;
    SurveyRow row{ParseRootSet(p, cells[4], ';', ln),
                  ParseUint(cells[3], ln, "degP"),
                  ParsePolynomial(p, cells[5], ';', ln),
                  ParseUint(cells[6], ln, "groupId")};
    declared_sizes.push_back(ParseUint(cells[7], ln, "groupSize"));
    report->rows.push_back(std::move(row));
  }
  const std::vector<std::size_t> sizes = report->GroupSizes();
  for (std::size_t i = 0; i < report->rows.size(); ++i) {
    const std::size_t id = report->rows[i].group_id;
    if (id == 0 || declared_sizes[i] != sizes[id - 1]) {
      Violation(i + 2, "groupSize does not match the rows sharing groupId");
    }
  }
  report->collision_groups = CollisionGroupsFromIds(*report);
  return std::move(*report);
}

std::string SerializeAttackResult(const AttackResult& result) {
  std::ostringstream out;
  out << kAttackCsvHeader << '\n';
  auto emit = [&](const std::string& roots) {
    out << result.target.modulus().value() << ','
        << FormatPolynomial(result.target.a(), ';') << ',' << roots << ','
        << result.candidates_tested << ',' << result.pruned << ','
        << result.wall_time.count() << '\n';
  };
  if (result.preimages.empty()) {
    emit("");
  }
  for (const auto& pre : result.preimages) {
    emit(FormatRootSet(pre.roots_p, ';'));
  }
  return out.str();
}

AttackResult ParseAttackResult(std::string_view text) {
  auto lines = SplitLines(text);
  if (lines[0] != kAttackCsvHeader) {
    Malformed(1, "unexpected attack header");
  }
  if (lines.size() < 2) {
    Malformed(2, "attack report has no rows");
  }
  std::optional<AttackResult> result;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t ln = i + 1;
    auto cells = CsvCells(lines[i], 6, ln);
    const std::uint64_t pv = ParseUint(cells[0], ln, "p");
    const std::uint64_t tested = ParseUint(cells[3], ln, "candidates_tested");
    const std::uint64_t pruned = ParseUint(cells[4], ln, "pruned");
    const std::uint64_t wall = ParseUint(cells[5], ln, "wall_ms");
    if (!result) {
      const PrimeModulus p = AtLine(ln, [&] { return PrimeModulus(pv); });
      Polynomial a = ParsePolynomial(p, cells[1], ';', ln);
      PublicKey target = AtLine(ln, [&] { return PublicKey(std::move(a)); });
      result.emplace(AttackResult{
          std::move(target), {}, tested, pruned,
          std::chrono::milliseconds(static_cast<std::int64_t>(wall))});
    } else if (pv != result->target.modulus().value() ||
               cells[1] != FormatPolynomial(result->target.a(), ';') ||
               tested != result->candidates_tested ||
               pruned != result->pruned ||
               static_cast<std::int64_t>(wall) != result->wall_time.count()) {
      Malformed(ln, "summary columns must agree across rows");
    }
    const PrimeModulus& p = result->target.modulus();
    if (cells[2].empty()) {
      if (lines.size() != 2) {
        Malformed(ln, "an empty rootsP row must be the only row");
      }
      continue;
    }
    RootSet roots = ParseRootSet(p, cells[2], ';', ln);
    if (!result->preimages.empty() &&
        !(result->preimages.back().roots_p < roots)) {
      Malformed(ln, "preimages out of lexicographic order");
    }
    Polynomial pf = FromRoots(roots);
    if (!VerifyProof(result->target, pf)) {
      Violation(ln, "listed preimage does not verify against A");
    }
    result->preimages.push_back(Preimage{std::move(roots), std::move(pf)});
  }
  return std::move(*result);
}

// ---------------------------------------------------------------------------
// Files

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kMalformedFile,
                "cannot open '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw std::runtime_error("cannot write '" + path.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw std::runtime_error("cannot replace '" + path.string() +
                             "': " + ec.message());
  }
}

}  // namespace eeaowf
