// core/src/report.cpp
//
// Copyright 2026  The gcikit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "gci/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include <nlohmann/json.hpp>

namespace gci {

std::string format6(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

namespace {

void summary_row(std::ostream& os, const MethodSummary& s) {
  os << to_string(s.method);
  if (s.report) {
    const auto& r = *s.report;
    os << ',' << format6(r.idr_pct) << ',' << format6(r.mr_pct) << ',' << format6(r.far_pct)
       << ',' << format6(r.ida_ms) << ',' << format6(r.acc025_pct) << ',' << r.cycles;
  } else {
    os << ",nan,nan,nan,nan,nan,0";
  }
  os << '\n';
}

}  // namespace

void write_summary_csv(std::ostream& os, const ConditionResult& c) {
  os << "method,idr_pct,mr_pct,far_pct,ida_ms,acc025_pct,cycles\n";
  for (const auto& s : c.methods) summary_row(os, s);
}

void write_sweep_csv(std::ostream& os, const ExperimentResult& r) {
  os << "condition,method,idr_pct,mr_pct,far_pct,ida_ms,acc025_pct,cycles\n";
  for (const auto& c : r.conditions)
    for (const auto& s : c.methods) {
      os << c.label << ',';
      summary_row(os, s);
    }
}

void write_file_records_jsonl(std::ostream& os, const ExperimentResult& r) {
  for (const auto& c : r.conditions)
    for (const auto& f : c.files) {
      nlohmann::ordered_json j;
      j["id"] = f.id;
      j["condition"] = f.condition;
      j["method"] = f.method;
      j["ok"] = f.ok;
      if (!f.ok) j["error"] = f.error;
      j["flipped"] = f.flipped;
      j["detected"] = f.detected;
      j["cycles"] = f.counts.cycles;
      j["hits"] = f.counts.hits;
      j["misses"] = f.counts.misses;
      j["false_alarms"] = f.counts.false_alarms;
      os << j.dump() << '\n';
    }
}

void write_histogram_csv(std::ostream& os, const std::vector<HistogramBin>& bins) {
  os << "bin_center_ms,count\n";
  for (const auto& b : bins) os << format6(b.center_ms) << ',' << b.count << '\n';
}

void write_method_histograms_csv(std::ostream& os, const ConditionResult& c, double bin_ms,
                                 double range_ms) {
  os << "method,bin_center_ms,count\n";
  for (const auto& s : c.methods)
    for (const auto& b : error_histogram(s.counts.errors_ms, bin_ms, range_ms))
      os << to_string(s.method) << ',' << format6(b.center_ms) << ',' << b.count << '\n';
}

void write_rct_csv(std::ostream& os, const std::vector<RctReport>& reports) {
  std::vector<std::size_t> order(reports.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return reports[a].rct_pct < reports[b].rct_pct;
  });
  std::vector<std::size_t> rank(reports.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k + 1;
  os << "method,rct_pct,audio_seconds,cpu_seconds,rank\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    os << to_string(r.method) << ',' << format6(r.rct_pct) << ',' << format6(r.audio_seconds)
       << ',' << format6(r.cpu_seconds) << ',' << rank[i] << '\n';
  }
}

void write_gci_csv(std::ostream& os, const GciSequence& g, double fs) {
  os << "sample,time_s\n";
  char buf[32];
  for (double t : g.instants) {
    // Sample indices keep every digit.
    std::snprintf(buf, sizeof buf, "%.10g", t);
    os << buf << ',' << format6(t / fs) << '\n';
  }
}

void write_failure_report(std::ostream& os, const FailureReport& f) {
  os << "failure_pct,frames,skipped\n"
     << format6(f.failure_pct) << ',' << f.frames << ',' << f.skipped << "\n\nframe,cog_hz\n";
  for (std::size_t i = 0; i < f.cogs_hz.size(); ++i)
    os << i << ',' << format6(f.cogs_hz[i]) << '\n';
}

}  // namespace gci
