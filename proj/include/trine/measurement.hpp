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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trine/qubit.hpp"

namespace trine {

enum class OutcomeKind { Identify, Eliminate, Inconclusive };

/// What a measurement outcome announces: "state i was sent", "state i was
/// not sent", or nothing.
struct Label {
  OutcomeKind kind = OutcomeKind::Inconclusive;
  int state = -1;

  static Label identify(int i) { return {OutcomeKind::Identify, i}; }
  static Label eliminate(int i) { return {OutcomeKind::Eliminate, i}; }
  static Label inconclusive() { return {OutcomeKind::Inconclusive, -1}; }

  /// "identify_0", "eliminate_2", "inconclusive".
  [[nodiscard]] std::string to_string() const;
  static Label parse(const std::string& text);

  friend bool operator==(const Label&, const Label&) = default;
};

struct LabeledElement {
  Label label;
  HermitianMatrix2 element;
};

/// Labeled POVM. Labels are unique; validity as a POVM is checked by the
/// operations that need it, not on construction.
class Measurement {
 public:
  Measurement() = default;
  explicit Measurement(std::vector<LabeledElement> elements);

  void add(Label label, const HermitianMatrix2& element);

  [[nodiscard]] const std::vector<LabeledElement>& elements() const { return elements_; }
  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] bool empty() const { return elements_.empty(); }
  [[nodiscard]] const HermitianMatrix2* find(const Label& label) const;
  [[nodiscard]] std::vector<HermitianMatrix2> operators() const;
  [[nodiscard]] PovmValidity validity(double tol = kPsdTolerance) const;
  /// Eliminate(j) relabeled as Identify(j); other labels unchanged.
  [[nodiscard]] Measurement with_identification_labels() const;
  /// Element for Identify(i), or zero when the measurement never names i.
  [[nodiscard]] HermitianMatrix2 identifying(int i) const;

 private:
  std::vector<LabeledElement> elements_;
};

}  // namespace trine
