// Copyright 2026 The rtof Authors
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

#include <json.hpp>

#include "rtof/verify.hpp"

namespace rtof {

using nlohmann::json;

std::string to_json(const VerificationReport& r) {
  json j;
  j["schema"] = 1;
  j["name"] = r.name;
  j["variant"] = r.variant;
  j["k"] = r.k;
  j["m"] = r.m;
  j["kind"] = target_kind_name(r.kind);
  j["semantics_ok"] = r.semantics_ok;
  j["detail"] = r.detail;
  j["support_found"] = r.support_found;
  j["support_declared"] = r.support_declared;
  j["tcount"] = {{"unconditional", r.tcount.unconditional},
                 {"per_outcome", r.tcount.per_outcome},
                 {"values", r.tcount.values()}};
  j["expected_tcounts"] = r.expected_tcounts;
  j["tcount_ok"] = r.tcount_ok;
  j["branch_scalars"] = r.branch_scalars;
  j["notes"] = r.notes;
  j["ok"] = r.ok();
  return j.dump(2);
}

std::string to_json(const std::vector<LedgerEntry>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json e;
    e["row"] = r.row;
    e["formula"] = r.formula;
    e["validity"] = r.validity;
    e["reference_only"] = r.reference_only;
    if (!r.reference_only) {
      e["construction"] = r.construction;
      e["k"] = r.k;
      e["m"] = r.m;
      e["variant"] = r.variant;
      e["expected"] = r.expected;
      e["measured"] = r.measured;
      e["match"] = r.match;
    }
    arr.push_back(e);
  }
  return json{{"schema", 1}, {"rows", arr}}.dump(2);
}

std::string to_json(const std::vector<IdentityResult>& ids) {
  json arr = json::array();
  for (const auto& r : ids) {
    arr.push_back({{"name", r.name}, {"k", r.k}, {"holds", r.holds}, {"detail", r.detail}});
  }
  return json{{"schema", 1}, {"identities", arr}}.dump(2);
}

}  // namespace rtof
