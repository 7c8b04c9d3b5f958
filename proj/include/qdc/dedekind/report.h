// Copyright 2026 The qdc Authors.
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

#ifndef QDC_DEDEKIND_REPORT_H_
#define QDC_DEDEKIND_REPORT_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace qdc {

struct ReportStatus {
  enum class Kind { kExact, kPadicAgreement, kFail };

  Kind kind = Kind::kFail;
  long valuation = 0;  // agreement valuation (kPadicAgreement, optional kFail)
  long precision = 0;  // working precision K
  bool has_valuation = false;
  std::string witness;  // kFail only

  static ReportStatus Exact() { return {Kind::kExact, 0, 0, false, {}}; }
  static ReportStatus Agreement(long v, long k) {
    return {Kind::kPadicAgreement, v, k, true, {}};
  }
  static ReportStatus Fail(std::string witness) {
    return {Kind::kFail, 0, 0, false, std::move(witness)};
  }
  static ReportStatus FailWithValuation(std::string witness, long v, long k) {
    return {Kind::kFail, v, k, true, std::move(witness)};
  }
};

// Outcome of checking one identity at one parameter point.
struct IdentityReport {
  std::string identity;
  std::string variant;
  // Ordered name/value pairs; values are JSON scalars.
  std::vector<std::pair<std::string, nlohmann::ordered_json>> params;
  ReportStatus status;
  double elapsed_ms = 0;

  bool passed() const { return status.kind != ReportStatus::Kind::kFail; }
  bool exact() const { return status.kind == ReportStatus::Kind::kExact; }

  // {"identity", "variant", "params", "status", "elapsed_ms"}. With
  // include_timing = false the elapsed_ms member is left out, which makes
  // the document reproducible byte for byte.
  nlohmann::ordered_json ToJson(bool include_timing = true) const;
};

}  // namespace qdc

#endif  // QDC_DEDEKIND_REPORT_H_
