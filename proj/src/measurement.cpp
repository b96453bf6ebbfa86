// Copyright 2026 The Trine Discrimination Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trine/measurement.hpp"

#include "trine/errors.hpp"

namespace trine {

std::string Label::to_string() const {
  switch (kind) {
    case OutcomeKind::Identify:
      return "identify_" + std::to_string(state);
    case OutcomeKind::Eliminate:
      return "eliminate_" + std::to_string(state);
    case OutcomeKind::Inconclusive:
      break;
  }
  return "inconclusive";
}

Label Label::parse(const std::string& text) {
  if (text == "inconclusive" || text == "?") return inconclusive();
  auto indexed = [&](const std::string& prefix) -> std::optional<int> {
    if (text.size() != prefix.size() + 1 || text.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    const char c = text.back();
    if (c < '0' || c > '2') return std::nullopt;
    return c - '0';
  };
  if (auto i = indexed("identify_")) return identify(*i);
  if (auto i = indexed("eliminate_")) return eliminate(*i);
  if (text.size() == 1 && text[0] >= '0' && text[0] <= '2') return identify(text[0] - '0');
  throw InvalidInputError("unrecognized outcome label '" + text + "'");
}

Measurement::Measurement(std::vector<LabeledElement> elements) {
  for (auto& e : elements) add(e.label, e.element);
}

void Measurement::add(Label label, const HermitianMatrix2& element) {
  if (find(label) != nullptr) throw InvalidInputError("duplicate outcome label " + label.to_string());
  elements_.push_back({label, element});
}

const HermitianMatrix2* Measurement::find(const Label& label) const {
  for (const auto& e : elements_) {
    if (e.label == label) return &e.element;
  }
  return nullptr;
}

std::vector<HermitianMatrix2> Measurement::operators() const {
  std::vector<HermitianMatrix2> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.element);
  return out;
}

PovmValidity Measurement::validity(double tol) const {
  const auto ops = operators();
  return validate_povm(ops, tol);
}

Measurement Measurement::with_identification_labels() const {
  Measurement out;
  for (const auto& e : elements_) {
    Label l = e.label;
    if (l.kind == OutcomeKind::Eliminate) l.kind = OutcomeKind::Identify;
    out.add(l, e.element);
  }
  return out;
}

HermitianMatrix2 Measurement::identifying(int i) const {
  const auto* e = find(Label::identify(i));
  return e != nullptr ? *e : HermitianMatrix2::zero();
}

}  // namespace trine
