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

#include <filesystem>
#include <string>
#include <string_view>

#include "eeaowf/gf_poly.h"
#include "eeaowf/inversion_lab.h"
#include "eeaowf/otsig.h"
#include "eeaowf/owf_core.h"

// Text formats, version 1.
//
// Key, proof and signature files are ASCII with LF line endings. The first
// line is the literal "eeaowf"; each following line is key=value, in a fixed
// order per role:
//
//   version=1
//   role=public|private|proof|lamport-public|lamport-private|signature
//   p=<prime>
//   ...role payload...
//
// Polynomials are comma-separated decimal coefficients, low-to-high, with the
// zero polynomial written as 0. Root sets are comma-separated increasing
// integers. Parsing is strict: any file that would not re-serialize to the
// same bytes is rejected.
//
// Reports are CSV with `;` inside the rootsP and A cells.

namespace eeaowf {

inline constexpr std::string_view kFileMagic = "eeaowf";
inline constexpr int kFormatVersion = 1;

inline constexpr std::string_view kSurveyCsvHeader =
    "p,mode,pairing,degP,rootsP,A,groupId,groupSize";
inline constexpr std::string_view kAttackCsvHeader =
    "p,A,rootsP,candidates_tested,pruned,wall_ms";

std::string FormatPolynomial(const Polynomial& f, char sep = ',');
Polynomial ParsePolynomial(const PrimeModulus& p, std::string_view text,
                           char sep = ',', std::size_t line = 0);
std::string FormatRootSet(const RootSet& s, char sep = ',');
RootSet ParseRootSet(const PrimeModulus& p, std::string_view text,
                     char sep = ',', std::size_t line = 0);

std::string SerializePublicKey(const PublicKey& key);
PublicKey ParsePublicKey(std::string_view text);

std::string SerializeKeyPair(const KeyPair& key);
KeyPair ParseKeyPair(std::string_view text);

std::string SerializeProof(const Proof& proof);
Proof ParseProof(std::string_view text);

std::string SerializeLamportPublicKey(const LamportPublicKey& key);
LamportPublicKey ParseLamportPublicKey(std::string_view text);

std::string SerializeLamportKeySet(const LamportKeySet& keys);
LamportKeySet ParseLamportKeySet(std::string_view text);

std::string SerializeSignature(const Signature& sig);
Signature ParseSignature(std::string_view text);

std::string SerializeSurveyReport(const SurveyReport& report);
SurveyReport ParseSurveyReport(std::string_view text);

std::string SerializeAttackResult(const AttackResult& result);
AttackResult ParseAttackResult(std::string_view text);

// Throws MalformedFile if the file cannot be read.
std::string ReadTextFile(const std::filesystem::path& path);
// Writes to a sibling temporary and renames it over `path`, so readers see
// either the old or the new contents.
void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view contents);

}  // namespace eeaowf
