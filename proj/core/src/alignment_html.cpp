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

#include "meetwer/alignment_html.hpp"

#include <sstream>

#include "json.hpp"
#include "meetwer/io.hpp"
#include "viewer_bundle.hpp"

namespace meetwer {
namespace {

using Json = nlohmann::ordered_json;

Json time_json(const std::optional<double>& t) { return t ? Json(*t) : Json(nullptr); }

Json session_json(const SessionReport& s) {
  Json doc = Json::object();
  doc["session_id"] = s.session_id;
  Json ref = Json::array();
  for (const auto& w : s.alignment.ref_words) {
    ref.push_back({{"word", w.word},
                   {"begin", time_json(w.begin_time)},
                   {"end", time_json(w.end_time)},
                   {"speaker", w.speaker}});
  }
  Json hyp = Json::array();
  for (const auto& w : s.alignment.hyp_words) {
    hyp.push_back({{"word", w.word},
                   {"begin", time_json(w.begin_time)},
                   {"end", time_json(w.end_time)},
                   {"stream", w.speaker},
                   {"assigned_speaker",
                    w.assigned_speaker ? Json(*w.assigned_speaker) : Json(nullptr)}});
  }
  Json matches = Json::array();
  for (const auto& m : s.alignment.matches) {
    Json j = {{"kind", std::string(to_string(m.kind))}};
    if (m.ref_index) j["ref_index"] = *m.ref_index;
    if (m.hyp_index) j["hyp_index"] = *m.hyp_index;
    matches.push_back(std::move(j));
  }
  doc["ref_words"] = std::move(ref);
  doc["hyp_words"] = std::move(hyp);
  doc["matches"] = std::move(matches);
  return doc;
}

std::string escape_html(std::string_view text) {
  std::string out;
  for (const char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Keeps the document from closing the surrounding script element.
std::string escape_script(const std::string& json) {
  std::string out;
  for (std::size_t i = 0; i < json.size(); ++i) {
    if (json[i] == '<' && i + 1 < json.size() && json[i + 1] == '/') {
      out += "<\\/";
      ++i;
    } else {
      out += json[i];
    }
  }
  return out;
}

std::string time_text(const std::optional<double>& t) { return t ? format_number(*t) : "-"; }

void placeholder_session(std::ostringstream& out, const SessionReport& s) {
  const auto& a = s.alignment;
  out << "<section class=\"session\" id=\"session-" << escape_html(s.session_id)
      << "\" data-session-id=\"" << escape_html(s.session_id) << "\">\n";
  out << "<h2>" << escape_html(s.session_id) << "</h2>\n";
  out << "<p class=\"counts\">" << s.counts.errors() << " errors / " << s.counts.ref_length
      << " reference words: " << s.counts.insertions << " insertions, " << s.counts.deletions
      << " deletions, " << s.counts.substitutions << " substitutions</p>\n";
  out << "<table class=\"matches\">\n"
         "<tr><th>kind</th><th>reference</th><th>ref time</th><th>speaker</th>"
         "<th>hypothesis</th><th>hyp time</th><th>stream</th></tr>\n";
  for (const auto& m : a.matches) {
    out << "<tr class=\"match " << to_string(m.kind) << "\" data-kind=\"" << to_string(m.kind)
        << "\">";
    out << "<td>" << to_string(m.kind) << "</td>";
    if (m.ref_index && *m.ref_index < a.ref_words.size()) {
      const auto& w = a.ref_words[*m.ref_index];
      out << "<td><span class=\"ref-word\" data-index=\"" << *m.ref_index << "\">"
          << escape_html(w.word) << "</span></td><td>" << time_text(w.begin_time) << "&ndash;"
          << time_text(w.end_time) << "</td><td>" << escape_html(w.speaker) << "</td>";
    } else {
      out << "<td>*</td><td></td><td></td>";
    }
    if (m.hyp_index && *m.hyp_index < a.hyp_words.size()) {
      const auto& w = a.hyp_words[*m.hyp_index];
      out << "<td><span class=\"hyp-word\" data-index=\"" << *m.hyp_index << "\">"
          << escape_html(w.word) << "</span></td><td>" << time_text(w.begin_time) << "&ndash;"
          << time_text(w.end_time) << "</td><td>" << escape_html(w.speaker) << "</td>";
    } else {
      out << "<td>*</td><td></td><td></td>";
    }
    out << "</tr>\n";
  }
  out << "</table>\n</section>\n";
}

constexpr const char* kStyle = R"(body{font-family:sans-serif;margin:1em}
table{border-collapse:collapse}td,th{padding:2px 8px;border-bottom:1px solid #ddd}
tr.correct td:first-child{color:#2a2}tr.substitution td:first-child{color:#e80}
tr.insertion td:first-child,tr.deletion td:first-child{color:#d22}
)";

}  // namespace

std::string alignment_document_json(const Report& report) {
  Json doc = Json::array();
  for (const auto& s : report.sessions) doc.push_back(session_json(s));
  return doc.dump();
}

bool viewer_available() { return !std::string_view(internal::kViewerBundle).empty(); }

std::string emit_alignment_html(const Report& report) {
  std::ostringstream out;
  out << "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n<title>"
      << escape_html(report.metric) << " alignment</title>\n<style>" << kStyle
      << "</style>\n</head>\n<body>\n";
  out << "<script type=\"application/json\" id=\"meetwer-alignment\">"
      << escape_script(alignment_document_json(report)) << "</script>\n";
  if (viewer_available()) {
    out << "<div id=\"meetwer-viewer\"></div>\n<script>" << internal::kViewerBundle
        << "</script>\n";
  } else {
    out << "<h1>" << escape_html(report.metric) << " alignment</h1>\n";
    out << "<p class=\"placeholder\">Interactive viewer not built; static alignment "
           "tables follow.</p>\n";
    for (const auto& s : report.sessions) placeholder_session(out, s);
  }
  out << "</body>\n</html>\n";
  return out.str();
}

void emit_alignment_html(const Report& report, const std::filesystem::path& out_path) {
  write_file(out_path, emit_alignment_html(report));
}

}  // namespace meetwer
