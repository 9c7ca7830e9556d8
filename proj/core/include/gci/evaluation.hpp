// gci/evaluation.hpp
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

#ifndef GCI_EVALUATION_HPP_
#define GCI_EVALUATION_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "gci/reference.hpp"
#include "gci/types.hpp"

namespace gci {

/// A glottal cycle [lo, hi) around one reference GCI.
struct Cycle {
  double lo = 0.0;
  double hi = 0.0;
  double ref = 0.0;
  bool voiced = true;
};

struct ReferenceCycles {
  GciSequence ref_gcis;
  std::vector<Cycle> cycles;
  double sample_rate_hz = 16000.0;

  std::size_t voiced_count() const;
};

struct VoicingConfig {
  double min_period_ms = 2.0;
  double max_period_ms = 20.0;
};

// Boundaries at midpoints between references; the outer cycles are padded by
// half of the adjacent period. A cycle is voiced when its extent lies in the
// period range and (if strengths are given) its strength exceeds
// strength_threshold. Fewer than two references give no cycles.
ReferenceCycles make_reference_cycles(const GciSequence& ref, double sample_rate_hz,
                                      std::span<const double> strengths = {},
                                      double strength_threshold = 0.0,
                                      const VoicingConfig& vc = {});

// Peaks, alignment shift (added to every reference) and voicing gate at
// median_factor * median |dEGG| in one call.
ReferenceCycles reference_cycles_from_egg(const Waveform& egg, const PitchPrior& prior,
                                          double delay_samples = 0.0,
                                          const ReferenceConfig& rc = {},
                                          const VoicingConfig& vc = {});

/// Raw per-cycle outcomes. Pooling across files is concatenation.
struct EvalCounts {
  std::size_t cycles = 0;
  std::size_t hits = 0;
  std::size_t misses = 0;
  std::size_t false_alarms = 0;
  std::vector<double> errors_ms;  // est - ref for each hit

  void merge(const EvalCounts& other);
};

struct EvalReport {
  double idr_pct = 0.0;
  double mr_pct = 0.0;
  double far_pct = 0.0;
  double ida_ms = 0.0;
  double acc025_pct = 0.0;
  std::size_t cycles = 0;
  std::vector<double> errors_ms;
};

EvalCounts count_outcomes(const ReferenceCycles& ref, const GciSequence& est);

// Throws InvalidArgument when counts cover no cycles.
EvalReport make_report(const EvalCounts& counts, double accuracy_bound_ms = 0.25);

EvalReport evaluate(const ReferenceCycles& ref, const GciSequence& est);

struct HistogramBin {
  double center_ms = 0.0;
  std::size_t count = 0;
};

// Fixed-width bins over [-range_ms, range_ms]; values outside land in the
// outermost bins so the counts sum to errors.size().
std::vector<HistogramBin> error_histogram(std::span<const double> errors_ms,
                                          double bin_ms = 0.1, double range_ms = 2.0);

}  // namespace gci

#endif  // GCI_EVALUATION_HPP_
