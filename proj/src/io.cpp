// Copyright 2026 The pslq Authors
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

#include "pslq/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pslq {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing field \"" + key + "\"");
  return *it;
}

const Json& array_field(const Json& obj, const std::string& key,
                        const std::string& path) {
  const Json& v = field(obj, key, path);
  if (!v.is_array()) fail(path + "." + key, "expected an array");
  return v;
}

std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

// Integers may be JSON numbers; everything else must be a "p/q" string.
Rational rational_from(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::exception& e) {
      fail(path, e.what());
    }
  }
  if (v.is_number()) fail(path, "non-integer numbers must be written as \"p/q\"");
  fail(path, "expected a rational");
}

int project_from(const Json& v, const Market& market, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a project name");
  const auto p = market.index_of(v.get<std::string>());
  if (!p) fail(path, "unknown project \"" + v.get<std::string>() + "\"");
  return *p;
}

Json names(const std::vector<int>& projects, const Market& market) {
  Json out = Json::array();
  for (int p : projects) out.push_back(market.name(p));
  return out;
}

Json pattern_json(const std::vector<int>& pattern, const Market& market) {
  Json out = Json::array();
  for (int p : pattern) out.push_back(p < 0 ? Json(nullptr) : Json(market.name(p)));
  return out;
}

std::vector<int> projects_from(const Json& v, const Market& market,
                               const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(project_from(v[i], market, at(path, i)));
  }
  return out;
}

// Column permutation from the document's project list to market order.
std::vector<int> column_map(const Json& doc, const Market& market) {
  std::vector<int> map(static_cast<std::size_t>(market.projects()));
  if (!doc.contains("projects")) {
    for (int p = 0; p < market.projects(); ++p) map[p] = p;
    return map;
  }
  const auto listed = projects_from(doc["projects"], market, "projects");
  if (static_cast<int>(listed.size()) != market.projects()) {
    fail("projects", "expected " + std::to_string(market.projects()) + " projects");
  }
  std::vector<bool> seen(listed.size(), false);
  for (std::size_t c = 0; c < listed.size(); ++c) {
    if (seen[listed[c]]) fail(at("projects", c), "duplicate project");
    seen[listed[c]] = true;
    map[c] = listed[c];
  }
  return map;
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

std::string join(const std::vector<int>& projects, const Market& market) {
  std::string out = "{";
  for (std::size_t j = 0; j < projects.size(); ++j) {
    if (j) out += ",";
    out += market.name(projects[j]);
  }
  return out + "}";
}

}  // namespace

Market market_from_json(const Json& doc) {
  const Json& projects = array_field(doc, "projects", "document");
  std::vector<ProjectSpec> specs;
  for (std::size_t j = 0; j < projects.size(); ++j) {
    const std::string path = at("projects", j);
    const Json& name = field(projects[j], "name", path);
    if (!name.is_string()) fail(path + ".name", "expected a string");
    ProjectSpec spec{name.get<std::string>(), Rational(0), std::nullopt};
    if (projects[j].contains("lower")) {
      spec.lower = rational_from(projects[j]["lower"], path + ".lower");
    }
    if (projects[j].contains("upper") && !projects[j]["upper"].is_null()) {
      spec.upper = rational_from(projects[j]["upper"], path + ".upper");
    }
    specs.push_back(std::move(spec));
  }

  // Preferences are resolved against the declared names before the market
  // exists, so build a temporary lookup.
  const Json& prefs = array_field(doc, "preferences", "document");
  if (prefs.empty()) throw InputError("preferences: no students");
  const int k = static_cast<int>(specs.size());
  std::vector<std::vector<int>> rankings;
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    const std::string path = at("preferences", i);
    if (!prefs[i].is_array()) fail(path, "expected an array of project names");
    std::vector<int> ranking;
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (std::size_t r = 0; r < prefs[i].size(); ++r) {
      const Json& v = prefs[i][r];
      if (!v.is_string()) fail(at(path, r), "expected a project name");
      const auto it = std::find_if(specs.begin(), specs.end(), [&](const auto& s) {
        return s.name == v.get<std::string>();
      });
      if (it == specs.end()) {
        fail(at(path, r), "unknown project \"" + v.get<std::string>() + "\"");
      }
      const int p = static_cast<int>(it - specs.begin());
      if (seen[p]) fail(at(path, r), "project \"" + it->name + "\" listed twice");
      seen[p] = true;
      ranking.push_back(p);
    }
    if (static_cast<int>(ranking.size()) != k) {
      fail(path, "incomplete preference list: ranks " +
                     std::to_string(ranking.size()) + " of " + std::to_string(k) +
                     " projects");
    }
    rankings.push_back(std::move(ranking));
  }
  try {
    return Market(std::move(specs), PreferenceProfile(std::move(rankings), k));
  } catch (const InputError& e) {
    fail("projects", e.what());
  }
}

Market parse_market(std::string_view text) { return market_from_json(parse_json(text)); }

Json market_to_json(const Market& market) {
  Json projects = Json::array();
  for (int p = 0; p < market.projects(); ++p) {
    Json spec;
    spec["name"] = market.name(p);
    spec["lower"] = market.lower(p).str();
    spec["upper"] = market.upper_unbounded(p) ? Json(nullptr)
                                              : Json(market.upper(p).str());
    projects.push_back(std::move(spec));
  }
  Json prefs = Json::array();
  for (int i = 0; i < market.students(); ++i) {
    const auto ranking = market.profile().ranking(i);
    prefs.push_back(names({ranking.begin(), ranking.end()}, market));
  }
  Json doc;
  doc["projects"] = std::move(projects);
  doc["preferences"] = std::move(prefs);
  return doc;
}

Json matrix_to_json(const Matrix& r, const Market& market) {
  Json doc;
  doc["projects"] = market.names();
  Json rows = Json::array();
  for (int i = 0; i < r.rows(); ++i) {
    Json row = Json::array();
    for (const auto& v : r.row(i)) row.push_back(v.str());
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  return doc;
}

Matrix matrix_from_json(const Json& doc, const Market& market) {
  const auto map = column_map(doc, market);
  const Json& rows = array_field(doc, "matrix", "document");
  if (static_cast<int>(rows.size()) != market.students()) {
    fail("matrix", "expected " + std::to_string(market.students()) + " rows, got " +
                       std::to_string(rows.size()));
  }
  Matrix r(market.students(), market.projects());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string path = at("matrix", i);
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != market.projects()) {
      fail(path, "expected " + std::to_string(market.projects()) + " entries");
    }
    for (std::size_t c = 0; c < rows[i].size(); ++c) {
      r(static_cast<int>(i), map[c]) = rational_from(rows[i][c], at(path, c));
    }
  }
  return r;
}

Matrix parse_matrix(std::string_view text, const Market& market) {
  return matrix_from_json(parse_json(text), market);
}

Json lottery_to_json(const Lottery& lottery, const Market& market) {
  Json terms = Json::array();
  for (const auto& t : lottery.terms) {
    Json term;
    term["weight"] = t.weight.str();
    term["assignment"] = names(t.assignment.project_of(), market);
    terms.push_back(std::move(term));
  }
  Json doc;
  doc["terms"] = std::move(terms);
  return doc;
}

Lottery lottery_from_json(const Json& doc, const Market& market) {
  const Json& terms = array_field(doc, "terms", "document");
  Lottery lottery;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const std::string path = at("terms", j);
    const Rational w = rational_from(field(terms[j], "weight", path), path + ".weight");
    auto project_of =
        projects_from(field(terms[j], "assignment", path), market, path + ".assignment");
    if (static_cast<int>(project_of.size()) != market.students()) {
      fail(path + ".assignment", "expected one project per student");
    }
    lottery.terms.push_back(
        {w, DeterministicAssignment(std::move(project_of), market.projects())});
  }
  return lottery;
}

Json trace_to_json(const EatingTrace& trace, const Market& market) {
  Json phases = Json::array();
  for (const auto& ph : trace.phases) {
    Json j;
    j["start"] = ph.start.str();
    j["end"] = ph.end.str();
    j["kind"] = std::string(to_string(ph.kind));
    j["active"] = names(ph.active, market);
    j["pattern"] = pattern_json(ph.pattern, market);
    j["exhausted"] = names(ph.exhausted, market);
    j["pinned"] = names(ph.pinned, market);
    phases.push_back(std::move(j));
  }
  Json doc;
  doc["critical_time"] =
      trace.critical_time ? Json(trace.critical_time->str()) : Json(nullptr);
  doc["phases"] = std::move(phases);
  return doc;
}

EatingTrace trace_from_json(const Json& doc, const Market& market) {
  EatingTrace trace;
  const Json& tc = field(doc, "critical_time", "document");
  if (!tc.is_null()) trace.critical_time = rational_from(tc, "critical_time");
  const Json& phases = array_field(doc, "phases", "document");
  for (std::size_t v = 0; v < phases.size(); ++v) {
    const std::string path = at("phases", v);
    const Json& j = phases[v];
    EatingPhase ph;
    ph.start = rational_from(field(j, "start", path), path + ".start");
    ph.end = rational_from(field(j, "end", path), path + ".end");
    const Json& kind = field(j, "kind", path);
    const std::string k = kind.is_string() ? kind.get<std::string>() : "";
    if (k == to_string(EventKind::kExhaustion)) {
      ph.kind = EventKind::kExhaustion;
    } else if (k == to_string(EventKind::kCriticalShift)) {
      ph.kind = EventKind::kCriticalShift;
    } else if (k == to_string(EventKind::kEpochEnd)) {
      ph.kind = EventKind::kEpochEnd;
    } else {
      fail(path + ".kind", "unknown event kind");
    }
    ph.active = projects_from(field(j, "active", path), market, path + ".active");
    const Json& pattern = field(j, "pattern", path);
    if (!pattern.is_array()) fail(path + ".pattern", "expected an array");
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      ph.pattern.push_back(pattern[i].is_null()
                               ? -1
                               : project_from(pattern[i], market,
                                              at(path + ".pattern", i)));
    }
    ph.exhausted =
        projects_from(field(j, "exhausted", path), market, path + ".exhausted");
    ph.pinned = projects_from(field(j, "pinned", path), market, path + ".pinned");
    trace.phases.push_back(std::move(ph));
  }
  return trace;
}

Format parse_format(std::string_view name) {
  if (name == "table") return Format::kTable;
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  throw InputError("unknown format \"" + std::string(name) +
                   "\" (expected table, json or csv)");
}

std::string render(const Matrix& r, const Market& market, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::kJson:
      out << matrix_to_json(r, market).dump(2) << "\n";
      break;
    case Format::kCsv:
      out << "student,project,exact,decimal\n";
      for (int i = 0; i < r.rows(); ++i) {
        for (int p = 0; p < r.cols(); ++p) {
          out << i + 1 << "," << market.name(p) << "," << r(i, p).str() << ","
              << r(i, p).decimal(20) << "\n";
        }
      }
      break;
    case Format::kTable: {
      std::vector<std::size_t> width(static_cast<std::size_t>(r.cols()) + 1);
      width[0] = std::string("student").size();
      for (int p = 0; p < r.cols(); ++p) {
        width[p + 1] = market.name(p).size();
        for (int i = 0; i < r.rows(); ++i) {
          width[p + 1] = std::max(width[p + 1], r(i, p).str().size());
        }
      }
      out << pad("student", width[0]);
      for (int p = 0; p < r.cols(); ++p) out << "  " << pad(market.name(p), width[p + 1]);
      out << "\n";
      for (int i = 0; i < r.rows(); ++i) {
        out << pad(std::to_string(i + 1), width[0]);
        for (int p = 0; p < r.cols(); ++p) out << "  " << pad(r(i, p).str(), width[p + 1]);
        out << "\n";
      }
      break;
    }
  }
  return out.str();
}

std::string render_trace(const EatingTrace& trace, const Market& market) {
  std::ostringstream out;
  out << "critical time: " << (trace.critical_time ? trace.critical_time->str() : "none")
      << "\n";
  for (std::size_t v = 0; v < trace.phases.size(); ++v) {
    const auto& ph = trace.phases[v];
    out << "phase " << v + 1 << ": [" << ph.start << ", " << ph.end << "] "
        << to_string(ph.kind) << "\n  active " << join(ph.active, market)
        << "\n  pattern";
    for (std::size_t i = 0; i < ph.pattern.size(); ++i) {
      out << " " << i + 1 << "->"
          << (ph.pattern[i] < 0 ? std::string("-") : market.name(ph.pattern[i]));
    }
    out << "\n";
    if (!ph.exhausted.empty()) out << "  exhausted " << join(ph.exhausted, market) << "\n";
    if (!ph.pinned.empty()) out << "  pinned " << join(ph.pinned, market) << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace pslq
