// Copyright 2026 The troeq authors
//
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

#pragma once

#include <string>
#include <vector>

namespace troeq {

/// One named axiom check: pass flag, worst residual, witness text on failure.
struct AxiomEntry {
  std::string axiom;
  bool pass = false;
  double residual = 0.0;
  std::string witness;
};

/// Per-axiom verification log; overall pass iff every entry passes.
struct VerificationReport {
  std::vector<AxiomEntry> entries;

  bool pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }

  double worst_residual() const {
    double w = 0.0;
    for (const auto& e : entries) w = std::max(w, e.residual);
    return w;
  }

  const AxiomEntry* find(const std::string& axiom) const {
    for (const auto& e : entries)
      if (e.axiom == axiom) return &e;
    return nullptr;
  }

  void add(std::string axiom, bool pass, double residual,
           std::string witness = {}) {
    entries.push_back({std::move(axiom), pass, residual, std::move(witness)});
  }

  /// Records a check that passes when the residual clears the gate.
  void add_residual(std::string axiom, double residual, double gate,
                    std::string witness_on_failure = {}) {
    const bool ok = residual <= gate;
    entries.push_back({std::move(axiom), ok, residual,
                       ok ? std::string{} : std::move(witness_on_failure)});
  }
};

}  // namespace troeq
