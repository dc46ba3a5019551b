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

#include "islands/agent.h"

#include <stdexcept>
#include <utility>

namespace islands {
namespace {

// index = 4 * group + phase, where group is S, D, Pi, Ps and phase is
// T, L, At, Al.
constexpr std::array<std::string_view, ExtendedType::kCount> kLabels = {
    "ST",  "SL",  "SAt",  "SAl",  "DT",  "DL",  "DAt",  "DAl",
    "PiT", "PiL", "PiAt", "PiAl", "PsT", "PsL", "PsAt", "PsAl"};

constexpr int kGroupSane = 0;
constexpr int kGroupDelusional = 1;
constexpr int kGroupPartialInsane = 2;
constexpr int kGroupPartialSane = 3;

constexpr int kPhaseTruthteller = 0;
constexpr int kPhaseLiar = 1;
constexpr int kPhaseAltTruthful = 2;
constexpr int kPhaseAltLying = 3;

}  // namespace

std::string_view SanityClassName(SanityClass c) {
  switch (c) {
    case SanityClass::kSane:
      return "sane";
    case SanityClass::kDelusional:
      return "delusional";
    case SanityClass::kPartial:
      return "partial";
  }
  return "?";
}

std::string_view TruthClassName(TruthClass c) {
  switch (c) {
    case TruthClass::kTruthteller:
      return "truthteller";
    case TruthClass::kLiar:
      return "liar";
    case TruthClass::kAlternator:
      return "alternator";
  }
  return "?";
}

std::optional<SanityClass> SanityClassFromName(std::string_view name) {
  for (auto c : {SanityClass::kSane, SanityClass::kDelusional,
                 SanityClass::kPartial}) {
    if (SanityClassName(c) == name) return c;
  }
  return std::nullopt;
}

std::optional<TruthClass> TruthClassFromName(std::string_view name) {
  for (auto c : {TruthClass::kTruthteller, TruthClass::kLiar,
                 TruthClass::kAlternator}) {
    if (TruthClassName(c) == name) return c;
  }
  if (name == "truth-teller") return TruthClass::kTruthteller;
  return std::nullopt;
}

ExtendedType ExtendedType::FromIndex(int index) {
  if (index < 0 || index >= kCount) {
    throw std::out_of_range("extended type index " + std::to_string(index));
  }
  return ExtendedType(static_cast<uint8_t>(index));
}

std::optional<ExtendedType> ExtendedType::FromLabel(std::string_view label) {
  for (int i = 0; i < kCount; ++i) {
    if (kLabels[i] == label) return ExtendedType(static_cast<uint8_t>(i));
  }
  return std::nullopt;
}

ExtendedType ExtendedType::Make(SanityClass sanity, TruthClass truth,
                                bool truthful_at_epoch, bool sane_at_epoch) {
  int group = 0;
  switch (sanity) {
    case SanityClass::kSane:
      group = kGroupSane;
      break;
    case SanityClass::kDelusional:
      group = kGroupDelusional;
      break;
    case SanityClass::kPartial:
      group = sane_at_epoch ? kGroupPartialSane : kGroupPartialInsane;
      break;
  }
  int phase = 0;
  switch (truth) {
    case TruthClass::kTruthteller:
      phase = kPhaseTruthteller;
      break;
    case TruthClass::kLiar:
      phase = kPhaseLiar;
      break;
    case TruthClass::kAlternator:
      phase = truthful_at_epoch ? kPhaseAltTruthful : kPhaseAltLying;
      break;
  }
  return ExtendedType(static_cast<uint8_t>(4 * group + phase));
}

const std::array<ExtendedType, ExtendedType::kCount>& ExtendedType::All() {
  static const auto all = []<std::size_t... I>(std::index_sequence<I...>) {
    return std::array<ExtendedType, kCount>{
        ExtendedType(static_cast<uint8_t>(I))...};
  }(std::make_index_sequence<kCount>());
  return all;
}

SanityClass ExtendedType::sanity_class() const {
  switch (index_ / 4) {
    case kGroupSane:
      return SanityClass::kSane;
    case kGroupDelusional:
      return SanityClass::kDelusional;
    default:
      return SanityClass::kPartial;
  }
}

TruthClass ExtendedType::truth_class() const {
  switch (index_ % 4) {
    case kPhaseTruthteller:
      return TruthClass::kTruthteller;
    case kPhaseLiar:
      return TruthClass::kLiar;
    default:
      return TruthClass::kAlternator;
  }
}

bool ExtendedType::truthful_at_epoch() const {
  int phase = index_ % 4;
  return phase == kPhaseTruthteller || phase == kPhaseAltTruthful;
}

bool ExtendedType::sane_at_epoch() const {
  int group = index_ / 4;
  return group == kGroupSane || group == kGroupPartialSane;
}

std::string_view ExtendedType::label() const { return kLabels[index_]; }

ExtendedType ExtendedType::Shifted(uint64_t utterances) const {
  if (utterances % 2 == 0) return *this;
  int group = index_ / 4;
  int phase = index_ % 4;
  if (group == kGroupPartialInsane) {
    group = kGroupPartialSane;
  } else if (group == kGroupPartialSane) {
    group = kGroupPartialInsane;
  }
  if (phase == kPhaseAltTruthful) {
    phase = kPhaseAltLying;
  } else if (phase == kPhaseAltLying) {
    phase = kPhaseAltTruthful;
  }
  return ExtendedType(static_cast<uint8_t>(4 * group + phase));
}

Phases CurrentPhases(const AgentState& state) {
  const bool odd = state.utterances_made % 2 == 1;
  const ExtendedType t = state.type;
  return Phases{
      .truthful = t.truthful_at_epoch() !=
                  (t.truth_class() == TruthClass::kAlternator && odd),
      .sane = t.sane_at_epoch() !=
              (t.sanity_class() == SanityClass::kPartial && odd),
  };
}

AgentState Advance(const AgentState& state) {
  return AgentState{state.type, state.utterances_made + 1};
}

}  // namespace islands
