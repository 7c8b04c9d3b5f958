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

#include "qdc/dedekind/report.h"

#include <cmath>

namespace qdc {

nlohmann::ordered_json IdentityReport::ToJson(bool include_timing) const {
  nlohmann::ordered_json j;
  j["identity"] = identity;
  j["variant"] = variant;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [name, value] : params) p[name] = value;
  j["params"] = p;
  switch (status.kind) {
    case ReportStatus::Kind::kExact:
      j["status"] = "exact";
      break;
    case ReportStatus::Kind::kPadicAgreement:
      j["status"] = {{"padic_agreement", status.valuation},
                     {"precision", status.precision}};
      break;
    case ReportStatus::Kind::kFail:
      j["status"] = {{"fail", status.witness}};
      break;
  }
  if (include_timing) j["elapsed_ms"] = std::llround(elapsed_ms);
  return j;
}

}  // namespace qdc
