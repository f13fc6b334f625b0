// Copyright 2026 The Authors.
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

#ifndef ACTSCHED_IO_HPP_
#define ACTSCHED_IO_HPP_

// JSON system and schedule files and CSV plot data.
//
// System file:   {"name": "...", "A": [[...], ...], "B": [[...], ...]}
// Schedule file: {"t": T, "m": M, "s": [[...] x T] x M, "d_avg": ...,
//                 "algo": "...", "params": {...}, "seed": N or null}
// Doubles are written in shortest round-trip form, so save then load is
// exact.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"

#include "actsched/errors.hpp"
#include "actsched/linalg.hpp"
#include "actsched/system.hpp"
#include "actsched/weighted_scheduler.hpp"

namespace actsched {

using Json = nlohmann::json;

namespace internal {

// 1-based line and column of a byte offset.
inline std::pair<int, int> LineColumn(const std::string& text, size_t offset) {
  int line = 1;
  int column = 1;
  for (size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// Position of the first occurrence of "key", or of the document start.
inline std::pair<int, int> KeyPosition(const std::string& text,
                                       const std::string& key) {
  const size_t at = text.find('"' + key + '"');
  return LineColumn(text, at == std::string::npos ? 0 : at);
}

inline Json ParseText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // byte is one past the offending character.
    const auto [line, col] = LineColumn(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(e.what(), line, col);
  }
}

inline Matrix ParseMatrix(const Json& j, const std::string& key,
                          const std::string& text) {
  const auto [line, col] = KeyPosition(text, key);
  if (!j.contains(key)) throw ParseError("missing field " + key, line, col);
  const Json& rows = j.at(key);
  if (!rows.is_array() || rows.empty()) {
    throw ParseError(key + " must be a non-empty array of rows", line, col);
  }
  const size_t width = rows.front().is_array() ? rows.front().size() : 0;
  if (width == 0) throw ParseError(key + " rows must be non-empty arrays", line, col);
  Matrix out(rows.size(), width);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != width) {
      throw ParseError(key + " is ragged at row " + std::to_string(r), line, col);
    }
    for (size_t c = 0; c < width; ++c) {
      if (!rows[r][c].is_number()) {
        throw ParseError(key + " has a non-numeric entry", line, col);
      }
      out(r, c) = rows[r][c].get<double>();
    }
  }
  return out;
}

inline Json MatrixToJson(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed for " + path);
}

}  // namespace internal

struct NamedSystem {
  LtiSystem system;
  std::string name;
};

inline NamedSystem ParseSystem(const std::string& text) {
  const Json j = internal::ParseText(text);
  if (!j.is_object()) throw ParseError("system file must be an object", 1, 1);
  Matrix a = internal::ParseMatrix(j, "A", text);
  Matrix b = internal::ParseMatrix(j, "B", text);
  std::string name;
  if (j.contains("name") && j["name"].is_string()) name = j["name"].get<std::string>();
  return {LtiSystem(std::move(a), std::move(b)), name};
}

inline NamedSystem LoadSystem(const std::string& path) {
  return ParseSystem(internal::ReadFile(path));
}

inline std::string SystemToText(const LtiSystem& sys, const std::string& name = "") {
  Json j;
  if (!name.empty()) j["name"] = name;
  j["A"] = internal::MatrixToJson(sys.a());
  j["B"] = internal::MatrixToJson(sys.b());
  return j.dump(1) + "\n";
}

inline void SaveSystem(const LtiSystem& sys, const std::string& path,
                       const std::string& name = "") {
  internal::WriteFile(path, SystemToText(sys, name));
}

struct ScheduleRecord {
  Schedule schedule;
  std::string algo;
  Json params = Json::object();
  std::optional<std::uint64_t> seed;
};

inline std::string ScheduleToText(const ScheduleRecord& rec) {
  Json j;
  j["t"] = rec.schedule.horizon();
  j["m"] = rec.schedule.inputs();
  j["s"] = internal::MatrixToJson(rec.schedule.scalings());
  j["d_avg"] = rec.schedule.AverageActive();
  j["algo"] = rec.algo;
  j["params"] = rec.params;
  j["seed"] = rec.seed ? Json(*rec.seed) : Json(nullptr);
  return j.dump(1) + "\n";
}

inline ScheduleRecord ParseSchedule(const std::string& text) {
  const Json j = internal::ParseText(text);
  if (!j.is_object()) throw ParseError("schedule file must be an object", 1, 1);
  const Matrix s = internal::ParseMatrix(j, "s", text);
  const auto [line, col] = internal::KeyPosition(text, "s");
  if (j.contains("m") && j["m"].get<long long>() != s.rows()) {
    throw ParseError("m does not match the s grid", line, col);
  }
  if (j.contains("t") && j["t"].get<long long>() != s.cols()) {
    throw ParseError("t does not match the s grid", line, col);
  }
  ScheduleRecord rec{Schedule(s), j.value("algo", std::string()),
                     j.value("params", Json::object()), std::nullopt};
  if (j.contains("seed") && !j["seed"].is_null()) {
    rec.seed = j["seed"].get<std::uint64_t>();
  }
  return rec;
}

inline void SaveSchedule(const ScheduleRecord& rec, const std::string& path) {
  internal::WriteFile(path, ScheduleToText(rec));
}

inline ScheduleRecord LoadSchedule(const std::string& path) {
  return ParseSchedule(internal::ReadFile(path));
}

inline std::string Format17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// One row per (input, time) cell, input-major.
inline std::string HeatmapCsv(const Schedule& s) {
  std::string out = "input,time,s,s_squared\n";
  for (int i = 0; i < s.inputs(); ++i) {
    for (int k = 0; k < s.horizon(); ++k) {
      const double v = s(i, k);
      out += std::to_string(i) + "," + std::to_string(k) + "," + Format17(v) +
             "," + Format17(v * v) + "\n";
    }
  }
  return out;
}

inline void EmitHeatmap(const Schedule& s, const std::string& path) {
  internal::WriteFile(path, HeatmapCsv(s));
}

// Evenly spaced grid including both ends; a single point when count is 1.
struct GridRange {
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;

  double At(int i) const {
    return count <= 1 ? lo : lo + (hi - lo) * i / (count - 1);
  }
};

// Closed-form approximation factor over (d, t/n); cells with d t/n < 1 have
// no guarantee and are written as nan.
inline std::string EpsilonSurfaceCsv(const GridRange& d, const GridRange& t_over_n) {
  if (d.count < 1 || t_over_n.count < 1) throw InvalidBudget("empty grid");
  std::string out = "d,t_over_n,epsilon\n";
  for (int i = 0; i < d.count; ++i) {
    for (int k = 0; k < t_over_n.count; ++k) {
      const double dv = d.At(i);
      const double rv = t_over_n.At(k);
      const double ratio = dv * rv;
      const double eps = ratio >= 1.0 ? EpsilonFromRatio(ratio)
                                      : std::numeric_limits<double>::quiet_NaN();
      out += Format17(dv) + "," + Format17(rv) + "," + Format17(eps) + "\n";
    }
  }
  return out;
}

inline void EpsilonSurface(const GridRange& d, const GridRange& t_over_n,
                           const std::string& path) {
  internal::WriteFile(path, EpsilonSurfaceCsv(d, t_over_n));
}

}  // namespace actsched

#endif  // ACTSCHED_IO_HPP_
