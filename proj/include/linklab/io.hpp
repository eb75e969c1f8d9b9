// Copyright 2026 The linklab Authors
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

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linklab/evaluation.hpp"
#include "linklab/features.hpp"
#include "linklab/graph.hpp"
#include "linklab/prediction.hpp"
#include "linklab/random.hpp"
#include "linklab/segmentation.hpp"

namespace linklab {

using Provenance = std::vector<std::pair<std::string, std::string>>;

/// Scores are serialized with 10 significant digits.
inline std::string fmt_g10(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

/// Value after a serialize/parse round trip of the 10-digit form. The
/// pipeline ranks with these so cached and freshly computed stages agree
/// byte for byte.
inline double round_sig10(double x) {
  return std::strtod(fmt_g10(x).c_str(), nullptr);
}

namespace detail {

inline std::string provenance_line(std::string_view command,
                                   const Provenance& kv) {
  std::string line = "# linklab ";
  line += command;
  for (const auto& [key, value] : kv) {
    line += ' ';
    line += key;
    line += '=';
    line += value;
  }
  line += '\n';
  return line;
}

inline std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  return out;
}

inline void finish_out(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("I/O error writing " + path.string());
}

struct CsvReader {
  std::ifstream in;
  std::filesystem::path path;
  std::size_t lineno = 0;
  Provenance provenance;

  explicit CsvReader(const std::filesystem::path& p) : in(p), path(p) {
    if (!in) throw std::runtime_error("cannot open " + p.string());
  }

  // Next data line split on commas; skips comments (collecting k=v pairs
  // from provenance lines) and blank lines.
  bool next_row(std::vector<std::string>& fields) {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      if (line[0] == '#') {
        std::istringstream ss(line.substr(1));
        std::string token;
        while (ss >> token) {
          const auto eq = token.find('=');
          if (eq != std::string::npos) {
            provenance.emplace_back(token.substr(0, eq), token.substr(eq + 1));
          }
        }
        continue;
      }
      fields.clear();
      std::size_t start = 0;
      for (;;) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
          fields.push_back(line.substr(start));
          break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
      }
      return true;
    }
    if (in.bad()) throw std::runtime_error("I/O error reading " + path.string());
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in " + path.string(), lineno);
  }

  std::uint64_t parse_uint(const std::string& s) const {
    try {
      std::size_t used = 0;
      const std::uint64_t v = std::stoull(s, &used);
      if (used != s.size()) fail("malformed integer '" + s + "'");
      return v;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      fail("malformed integer '" + s + "'");
    }
  }

  double parse_double(const std::string& s) const {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) fail("malformed number '" + s + "'");
      return v;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      fail("malformed number '" + s + "'");
    }
  }

  std::string provenance_value(std::string_view key) const {
    for (const auto& [k, v] : provenance) {
      if (k == key) return v;
    }
    return {};
  }
};

}  // namespace detail

/// CSV `vertex,score`, one row per vertex, scores with 10 significant
/// digits.
inline void save_scores_csv(const VertexScores& scores,
                            const std::filesystem::path& path,
                            Provenance provenance = {}) {
  provenance.emplace_back("feature", scores.feature_name);
  provenance.emplace_back("converged", scores.converged ? "1" : "0");
  auto out = detail::open_out(path);
  out << detail::provenance_line("score", provenance);
  out << "vertex,score\n";
  for (std::size_t u = 0; u < scores.values.size(); ++u) {
    out << u << ',' << fmt_g10(scores.values[u]) << '\n';
  }
  detail::finish_out(out, path);
}

inline VertexScores load_scores_csv(const std::filesystem::path& path) {
  detail::CsvReader reader(path);
  VertexScores scores;
  std::vector<std::string> fields;
  bool header_seen = false;
  while (reader.next_row(fields)) {
    if (!header_seen && fields.size() >= 1 && fields[0] == "vertex") {
      header_seen = true;
      continue;
    }
    header_seen = true;
    if (fields.size() != 2) reader.fail("expected vertex,score");
    const std::uint64_t u = reader.parse_uint(fields[0]);
    if (u != scores.values.size()) reader.fail("vertex ids must be dense and ascending");
    scores.values.push_back(reader.parse_double(fields[1]));
  }
  scores.feature_name = reader.provenance_value("feature");
  if (scores.feature_name.empty()) scores.feature_name = "unknown";
  scores.converged = reader.provenance_value("converged") != "0";
  return scores;
}

/// CSV `vertex,cluster`, one row per vertex.
inline void save_partition_csv(const Partition& partition,
                               const std::filesystem::path& path,
                               Provenance provenance = {}) {
  provenance.emplace_back("k", std::to_string(partition.k));
  auto out = detail::open_out(path);
  out << detail::provenance_line("segment", provenance);
  out << "vertex,cluster\n";
  for (std::size_t u = 0; u < partition.assignment.size(); ++u) {
    out << u << ',' << partition.assignment[u] << '\n';
  }
  detail::finish_out(out, path);
}

inline Partition load_partition_csv(const std::filesystem::path& path) {
  detail::CsvReader reader(path);
  Partition partition;
  std::vector<std::string> fields;
  bool header_seen = false;
  while (reader.next_row(fields)) {
    if (!header_seen && fields.size() >= 1 && fields[0] == "vertex") {
      header_seen = true;
      continue;
    }
    header_seen = true;
    if (fields.size() != 2) reader.fail("expected vertex,cluster");
    const std::uint64_t u = reader.parse_uint(fields[0]);
    if (u != partition.assignment.size()) {
      reader.fail("vertex ids must be dense and ascending");
    }
    partition.assignment.push_back(
        static_cast<std::uint32_t>(reader.parse_uint(fields[1])));
  }
  std::uint32_t k = 0;
  for (std::uint32_t c : partition.assignment) k = std::max(k, c + 1);
  partition.k = k;
  partition.sizes.assign(k, 0);
  for (std::uint32_t c : partition.assignment) ++partition.sizes[c];
  for (std::uint32_t c = 0; c < k; ++c) {
    if (partition.sizes[c] == 0) {
      throw std::runtime_error("partition in " + path.string() +
                               " has an empty cluster " + std::to_string(c));
    }
  }
  return partition;
}

/// CSV `target,rank,candidate,score`; targets with empty lists emit no rows.
inline void save_recommendations_csv(const Recommendations& recs,
                                     const std::filesystem::path& path,
                                     Provenance provenance = {}) {
  provenance.emplace_back("scorer", recs.scorer_name);
  provenance.emplace_back("policy", policy_name(recs.policy));
  provenance.emplace_back("targets", std::to_string(recs.lists.size()));
  auto out = detail::open_out(path);
  out << detail::provenance_line("recommend", provenance);
  out << "target,rank,candidate,score\n";
  for (std::size_t u = 0; u < recs.lists.size(); ++u) {
    const auto& list = recs.lists[u];
    for (std::size_t r = 0; r < list.size(); ++r) {
      out << u << ',' << (r + 1) << ',' << list[r].candidate << ','
          << fmt_g10(list[r].score) << '\n';
    }
  }
  detail::finish_out(out, path);
}

inline Recommendations load_recommendations_csv(
    const std::filesystem::path& path) {
  detail::CsvReader reader(path);
  Recommendations recs;
  std::vector<std::string> fields;
  bool header_seen = false;
  while (reader.next_row(fields)) {
    if (!header_seen && fields.size() >= 1 && fields[0] == "target") {
      header_seen = true;
      continue;
    }
    header_seen = true;
    if (fields.size() != 4) reader.fail("expected target,rank,candidate,score");
    const auto target = static_cast<VertexId>(reader.parse_uint(fields[0]));
    const std::uint64_t rank = reader.parse_uint(fields[1]);
    const auto candidate = static_cast<VertexId>(reader.parse_uint(fields[2]));
    const double score = reader.parse_double(fields[3]);
    if (target >= recs.lists.size()) recs.lists.resize(target + 1);
    auto& list = recs.lists[target];
    if (rank != list.size() + 1) reader.fail("ranks must be 1,2,... per target");
    list.push_back(Recommendation{candidate, score});
  }
  const std::string declared = reader.provenance_value("targets");
  if (!declared.empty()) {
    const auto n = static_cast<std::size_t>(std::strtoull(declared.c_str(), nullptr, 10));
    if (n > recs.lists.size()) recs.lists.resize(n);
  }
  recs.scorer_name = reader.provenance_value("scorer");
  if (recs.scorer_name.empty()) recs.scorer_name = "unknown";
  const std::string policy = reader.provenance_value("policy");
  recs.policy = policy == "foaf" ? CandidatePolicy::foaf
                                 : CandidatePolicy::intra_cluster;
  return recs;
}

/// CSV `N,precision,recall` for N = 1..10; the configuration echo and the
/// evaluated-target count ride in the provenance comment.
inline void save_eval_csv(const EvalReport& report,
                          const std::filesystem::path& path) {
  Provenance provenance = report.config;
  provenance.emplace_back("targets", fmt_g10(report.targets_evaluated));
  auto out = detail::open_out(path);
  out << detail::provenance_line("evaluate", provenance);
  out << "N,precision,recall\n";
  for (std::uint32_t i = 0; i < kEvalDepth; ++i) {
    out << (i + 1) << ',' << fmt_g10(report.precision_at[i]) << ','
        << fmt_g10(report.recall_at[i]) << '\n';
  }
  detail::finish_out(out, path);
}

inline EvalReport load_eval_csv(const std::filesystem::path& path) {
  detail::CsvReader reader(path);
  EvalReport report;
  std::vector<std::string> fields;
  bool header_seen = false;
  std::uint32_t rows = 0;
  while (reader.next_row(fields)) {
    if (!header_seen && fields.size() >= 1 && fields[0] == "N") {
      header_seen = true;
      continue;
    }
    header_seen = true;
    if (fields.size() != 3) reader.fail("expected N,precision,recall");
    const std::uint64_t N = reader.parse_uint(fields[0]);
    if (N < 1 || N > kEvalDepth) reader.fail("N out of range");
    report.precision_at[N - 1] = reader.parse_double(fields[1]);
    report.recall_at[N - 1] = reader.parse_double(fields[2]);
    ++rows;
  }
  if (rows != kEvalDepth) {
    throw std::runtime_error("expected " + std::to_string(kEvalDepth) +
                             " rows in " + path.string());
  }
  const std::string targets = reader.provenance_value("targets");
  if (!targets.empty()) {
    report.targets_evaluated = std::strtod(targets.c_str(), nullptr);
  }
  for (const auto& [k, v] : reader.provenance) {
    if (k != "targets") report.config.emplace_back(k, v);
  }
  return report;
}

/// Writes a whole file through a temp name plus rename, so concurrent
/// writers of identical content cannot interleave.
inline void write_text_atomic(const std::filesystem::path& path,
                              const std::string& content) {
  const auto tmp = path.string() + ".tmp" +
                   std::to_string(splitmix64(
                       reinterpret_cast<std::uintptr_t>(&content) ^
                       static_cast<std::uint64_t>(
                           std::chrono::steady_clock::now().time_since_epoch().count())));
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("I/O error writing " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace linklab
