// Copyright 2026 The Islands Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Behavioral types of islanders.
//
// Every person has a sanity class (sane, delusional, partial) and a truth
// class (truth-teller, liar, alternator). Partials and alternators flip a
// phase after each of their own utterances, so a full type also records the
// phases at the epoch: the instant before the person's first utterance.
// That gives 16 extended types, labelled
//
//   ST SL SAt SAl  DT DL DAt DAl  PiT PiL PiAt PiAl  PsT PsL PsAt PsAl
//
// where Pi/Ps are partials in the insane/sane phase and At/Al are
// alternators in the truthful/lying phase. The label order above is the
// canonical order used everywhere (sorting, tables, world enumeration).
#ifndef ISLANDS_AGENT_H_
#define ISLANDS_AGENT_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace islands {

enum class SanityClass : uint8_t { kSane, kDelusional, kPartial };
enum class TruthClass : uint8_t { kTruthteller, kLiar, kAlternator };

// Report names: "sane", "delusional", "partial" and "truthteller", "liar",
// "alternator".
std::string_view SanityClassName(SanityClass c);
std::string_view TruthClassName(TruthClass c);
std::optional<SanityClass> SanityClassFromName(std::string_view name);
std::optional<TruthClass> TruthClassFromName(std::string_view name);

class ExtendedType {
 public:
  static constexpr int kCount = 16;

  // Index in canonical label order, 0 (ST) .. 15 (PsAl).
  static ExtendedType FromIndex(int index);
  static std::optional<ExtendedType> FromLabel(std::string_view label);
  static ExtendedType Make(SanityClass sanity, TruthClass truth,
                           bool truthful_at_epoch, bool sane_at_epoch);
  static const std::array<ExtendedType, kCount>& All();

  int index() const { return index_; }
  SanityClass sanity_class() const;
  TruthClass truth_class() const;
  bool truthful_at_epoch() const;
  bool sane_at_epoch() const;
  std::string_view label() const;

  // The type whose epoch phases equal this type's phases after `utterances`
  // utterances. Relabels a state observed later in a transcript.
  ExtendedType Shifted(uint64_t utterances) const;

  friend bool operator==(ExtendedType a, ExtendedType b) = default;
  friend auto operator<=>(ExtendedType a, ExtendedType b) = default;

 private:
  explicit constexpr ExtendedType(uint8_t index) : index_(index) {}

  uint8_t index_;
};

struct Phases {
  bool truthful;
  bool sane;

  friend bool operator==(const Phases&, const Phases&) = default;
};

// A person's type plus how many utterances they have made since the epoch.
struct AgentState {
  ExtendedType type;
  uint64_t utterances_made = 0;

  friend bool operator==(const AgentState&, const AgentState&) = default;
};

Phases CurrentPhases(const AgentState& state);

// Same type, one more utterance.
AgentState Advance(const AgentState& state);

enum class Answer : uint8_t { kNo, kYes };

inline char AnswerChar(Answer a) { return a == Answer::kYes ? 'Y' : 'N'; }

}  // namespace islands

#endif  // ISLANDS_AGENT_H_
