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

#include "eeaowf/cli.h"

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <functional>
#include <string>

#include "eeaowf/cli_io.h"
#include "eeaowf/inversion_lab.h"
#include "eeaowf/otsig.h"
#include "eeaowf/owf_core.h"

namespace eeaowf {

namespace {

int ExitFor(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kSearchSpaceTooLarge:
      return kExitTooLarge;
    case ErrorCode::kKeyAlreadyUsed:
      return kExitRejected;
    default:
      return kExitMalformed;
  }
}

void WarnExperimental(const PrimeModulus& p, std::ostream& err) {
  if (IsExperimentalModulus(p)) {
    err << "warning: p=" << p.value() << " is below "
        << kExperimentalModulusBound
        << "; these parameters are for experiments only\n";
  }
}

BitString RequireBits(const std::string& text) {
  auto bits = ParseBitString(text);
  if (!bits) {
    throw Error(ErrorCode::kLengthMismatch,
                "message must be a nonempty string of 0 and 1");
  }
  return *bits;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"One-way function from the extended Euclidean algorithm over "
               "GF(p)[x]",
               "eeaowf"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  std::function<int()> action;
  const auto mode_names = CLI::IsMember({"balanced", "all"});

  // keygen
  std::uint64_t p_value = 0;
  std::uint64_t seed = 0;
  std::string pub_path, priv_path, out_path, proof_path, sig_path, msg;
  std::uint64_t limit = kDefaultSearchLimit;
  unsigned workers = 1;
  std::size_t bits = 0;
  std::string mode_name = "balanced";
  std::string pairing_name = "ordered";

  auto* keygen = app.add_subcommand("keygen", "Generate a key pair");
  keygen->add_option("--p", p_value, "Odd prime modulus")->required();
  keygen->add_option("--seed", seed, "64-bit seed")->required();
  keygen->add_option("--pub", pub_path, "Public key output")->required();
  keygen->add_option("--priv", priv_path, "Private key output")->required();
  keygen->callback([&] {
    action = [&] {
      const PrimeModulus p(p_value);
      WarnExperimental(p, err);
      KeyPair key = KeyGen(p, seed);
      WriteFileAtomic(priv_path, SerializeKeyPair(key));
      WriteFileAtomic(pub_path, SerializePublicKey(key.public_key));
      return int{kExitOk};
    };
  });

  auto* prove = app.add_subcommand("prove", "Reveal the private factor");
  prove->add_option("--priv", priv_path, "Private key")->required();
  prove->add_option("--out", out_path, "Proof output")->required();
  prove->callback([&] {
    action = [&] {
      KeyPair key = ParseKeyPair(ReadTextFile(priv_path));
      WriteFileAtomic(out_path, SerializeProof(Proof{key.private_factor}));
      err << "warning: the proof reveals P; anyone holding it can now prove "
             "ownership of this key\n";
      return int{kExitOk};
    };
  });

  auto* verify = app.add_subcommand("verify", "Check a proof against a key");
  verify->add_option("--pub", pub_path, "Public key")->required();
  verify->add_option("--proof", proof_path, "Proof")->required();
  verify->callback([&] {
    action = [&] {
      PublicKey key = ParsePublicKey(ReadTextFile(pub_path));
      Proof proof = ParseProof(ReadTextFile(proof_path));
      VerifyOutcome outcome = VerifyProof(key, proof.revealed);
      if (!outcome) {
        err << "rejected: " << outcome.reason << '\n';
        return int{kExitRejected};
      }
      out << "accepted\n";
      return int{kExitOk};
    };
  });

  auto* attack = app.add_subcommand("attack", "Brute-force inversion of A");
  attack->add_option("--pub", pub_path, "Public key")->required();
  attack->add_option("--limit", limit, "Search-space ceiling");
  attack->add_option("--workers", workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  attack->add_option("--out", out_path, "CSV output")->required();
  attack->callback([&] {
    action = [&] {
      PublicKey key = ParsePublicKey(ReadTextFile(pub_path));
      AttackResult result = BruteForceInvert(key, {limit, workers, true});
      WriteFileAtomic(out_path, SerializeAttackResult(result));
      out << "preimages " << result.preimages.size() << "\ntested "
          << result.candidates_tested << "\npruned " << result.pruned
          << "\nwall_ms " << result.wall_time.count() << '\n';
      return int{result.preimages.empty() ? kExitNoPreimage : kExitOk};
    };
  });

  auto* survey = app.add_subcommand("survey", "Census of public keys");
  survey->add_option("--p", p_value, "Odd prime modulus")->required();
  survey->add_option("--mode", mode_name, "balanced or all")
      ->required()
      ->check(mode_names);
  survey->add_option("--pairing", pairing_name, "ordered or unordered")
      ->required()
      ->check(CLI::IsMember({"ordered", "unordered"}));
  survey->add_option("--workers", workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  survey->add_option("--limit", limit, "Search-space ceiling");
  survey->add_option("--out", out_path, "CSV output")->required();
  survey->callback([&] {
    action = [&] {
      const PrimeModulus p(p_value);
      SurveyOptions opts{*ParseSurveyMode(mode_name),
                         *ParsePairing(pairing_name), workers, limit};
      SurveyReport report = UniquenessSurvey(p, opts);
      WriteFileAtomic(out_path, SerializeSurveyReport(report));
      out << "rows " << report.rows.size() << "\ncollision_groups "
          << report.collision_groups.size() << '\n';
      return int{kExitOk};
    };
  });

  auto* lkeygen =
      app.add_subcommand("lamport-keygen", "Generate a one-time signing key");
  lkeygen->add_option("--p", p_value, "Odd prime modulus")->required();
  lkeygen->add_option("--bits", bits, "Message length in bits")->required();
  lkeygen->add_option("--seed", seed, "64-bit seed")->required();
  lkeygen->add_option("--pub", pub_path, "Public key output")->required();
  lkeygen->add_option("--priv", priv_path, "Private key output")->required();
  lkeygen->callback([&] {
    action = [&] {
      const PrimeModulus p(p_value);
      WarnExperimental(p, err);
      LamportKeys keys = LamportKeyGen(p, bits, seed);
      WriteFileAtomic(priv_path, SerializeLamportKeySet(keys.private_key));
      WriteFileAtomic(pub_path, SerializeLamportPublicKey(keys.public_key));
      return int{kExitOk};
    };
  });

  auto* lsign = app.add_subcommand("lamport-sign", "Sign a bitstring once");
  lsign->add_option("--priv", priv_path, "Private key (rewritten)")
      ->required();
  lsign->add_option("--msg", msg, "Message bits, e.g. 1011")->required();
  lsign->add_option("--out", out_path, "Signature output")->required();
  lsign->callback([&] {
    action = [&] {
      LamportKeySet keys = ParseLamportKeySet(ReadTextFile(priv_path));
      Signature sig = Sign(keys, RequireBits(msg));
      // Burn the key before the signature exists anywhere.
      WriteFileAtomic(priv_path, SerializeLamportKeySet(keys));
      WriteFileAtomic(out_path, SerializeSignature(sig));
      return int{kExitOk};
    };
  });

  auto* lverify =
      app.add_subcommand("lamport-verify", "Check a one-time signature");
  lverify->add_option("--pub", pub_path, "Public key")->required();
  lverify->add_option("--msg", msg, "Message bits")->required();
  lverify->add_option("--sig", sig_path, "Signature")->required();
  lverify->callback([&] {
    action = [&] {
      LamportPublicKey key = ParseLamportPublicKey(ReadTextFile(pub_path));
      Signature sig = ParseSignature(ReadTextFile(sig_path));
      if (sig.revealed.front().modulus() != key.p) {
        err << "rejected: signature and key use different p\n";
        return int{kExitRejected};
      }
      VerifyOutcome outcome = VerifySignature(key, RequireBits(msg), sig);
      if (!outcome) {
        err << "rejected: " << outcome.reason << '\n';
        return int{kExitRejected};
      }
      out << "accepted\n";
      return int{kExitOk};
    };
  });

  auto* count = app.add_subcommand("count", "Size of the search space");
  count->add_option("--p", p_value, "Odd prime modulus")->required();
  count->add_option("--mode", mode_name, "balanced or all")
      ->required()
      ->check(mode_names);
  count->callback([&] {
    action = [&] {
      const PrimeModulus p(p_value);
      out << CountSearchSpace(p, *ParseSurveyMode(mode_name)).str() << '\n';
      return int{kExitOk};
    };
  });

  std::vector<const char*> argv{"eeaowf"};
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitFor(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMalformed;
  }
}

}  // namespace eeaowf
