// gci/report.hpp
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

#ifndef GCI_REPORT_HPP_
#define GCI_REPORT_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "gci/evaluation.hpp"
#include "gci/experiment.hpp"
#include "gci/mixed_phase.hpp"

namespace gci {

// %.6g, with "nan" for missing values.
std::string format6(double v);

// method,idr_pct,mr_pct,far_pct,ida_ms,acc025_pct,cycles
void write_summary_csv(std::ostream& os, const ConditionResult& c);
// Same rows for every condition, with a leading condition column.
void write_sweep_csv(std::ostream& os, const ExperimentResult& r);
// One JSON object per file and method.
void write_file_records_jsonl(std::ostream& os, const ExperimentResult& r);
// bin_center_ms,count
void write_histogram_csv(std::ostream& os, const std::vector<HistogramBin>& bins);
// method,bin_center_ms,count for every method of a condition.
void write_method_histograms_csv(std::ostream& os, const ConditionResult& c,
                                 double bin_ms = 0.1, double range_ms = 2.0);
// method,rct_pct,audio_seconds,cpu_seconds,rank (1 = fastest)
void write_rct_csv(std::ostream& os, const std::vector<RctReport>& reports);
// sample,time_s per line.
void write_gci_csv(std::ostream& os, const GciSequence& g, double sample_rate_hz);
// failure_pct,frames,skipped then the CoG of every frame.
void write_failure_report(std::ostream& os, const FailureReport& f);

}  // namespace gci

#endif  // GCI_REPORT_HPP_
