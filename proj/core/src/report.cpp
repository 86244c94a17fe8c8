// Copyright 2026 The meetwer Authors
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

#include "meetwer/report.hpp"

#include "json.hpp"

namespace meetwer {
namespace {

using Json = nlohmann::ordered_json;

Json optional_string(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

Json assignment_json(const ReportAssignment& a) {
  switch (a.kind) {
    case ReportAssignment::Kind::kNone:
      return nullptr;
    case ReportAssignment::Kind::kMapping: {
      Json pairs = Json::array();
      for (const auto& [r, h] : a.mapping) {
        pairs.push_back(Json::array({optional_string(r), optional_string(h)}));
      }
      return pairs;
    }
    case ReportAssignment::Kind::kSegmentLabels: {
      Json labels = Json::array();
      for (const auto& l : a.segment_labels) labels.push_back(optional_string(l));
      return labels;
    }
  }
  return nullptr;
}

Json counts_json(const ErrorCounts& c) {
  Json j = Json::object();
  const auto rate = c.error_rate();
  j["error_rate"] = rate ? Json(*rate) : Json(nullptr);
  j["errors"] = c.errors();
  j["length"] = c.ref_length;
  j["insertions"] = c.insertions;
  j["deletions"] = c.deletions;
  j["substitutions"] = c.substitutions;
  j["correct"] = c.correct;
  return j;
}

}  // namespace

ErrorCounts Report::total() const {
  ErrorCounts t;
  for (const auto& s : sessions) t += s.counts;
  return t;
}

std::string report_to_json(const Report& report, bool per_session) {
  Json doc = counts_json(report.total());
  Json assignment = Json::object();
  for (const auto& s : report.sessions) assignment[s.session_id] = assignment_json(s.assignment);
  doc["assignment"] = std::move(assignment);
  if (per_session) {
    Json sessions = Json::object();
    for (const auto& s : report.sessions) {
      Json j = counts_json(s.counts);
      j["assignment"] = assignment_json(s.assignment);
      sessions[s.session_id] = std::move(j);
    }
    doc["sessions"] = std::move(sessions);
  }
  return doc.dump(2) + "\n";
}

}  // namespace meetwer
