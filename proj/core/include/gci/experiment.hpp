// gci/experiment.hpp
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

#ifndef GCI_EXPERIMENT_HPP_
#define GCI_EXPERIMENT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gci/degrade.hpp"
#include "gci/evaluation.hpp"
#include "gci/methods.hpp"
#include "gci/synth.hpp"
#include "gci/types.hpp"

namespace gci {

struct ManifestEntry {
  std::string id;
  std::string speech_path;
  std::string egg_path;
  std::string speaker;
  std::optional<double> delay_ms;  // manual alignment, speech lagging the EGG
};

/// Paths are resolved relative to the manifest's directory.
struct DatasetManifest {
  std::vector<ManifestEntry> entries;
  std::map<std::string, double> speaker_f0_hz;  // optional known mean f0
};

// JSON of the form
//   {"speakers": {"bdl": {"f0_mean_hz": 120}},
//    "entries": [{"id": "a1", "speech": "wav/a1.wav", "egg": "egg/a1.wav",
//                 "speaker": "bdl", "delay_ms": 0.6}]}
// "speakers", "id", "egg" and "delay_ms" are optional.
DatasetManifest load_manifest(const std::string& path);
DatasetManifest parse_manifest(const std::string& json_text, const std::string& base_dir);

/// A loaded recording. `reference` (known epochs) takes precedence over the
/// EGG when both are present.
struct Utterance {
  std::string id;
  std::string speaker;
  Waveform speech;
  std::optional<Waveform> egg;
  std::optional<GciSequence> reference;
  std::optional<double> delay_samples;
  std::optional<double> f0_mean_hz;
};

// Reads every entry, resampling to target_rate_hz. Unreadable entries are
// reported in *errors and skipped.
std::vector<Utterance> load_utterances(const DatasetManifest& m,
                                       std::vector<std::string>* errors = nullptr,
                                       double target_rate_hz = 16000.0);
// Speaker ids group utterances by f0.
std::vector<Utterance> utterances_from_synthetic(const std::vector<SyntheticUtterance>& suite,
                                                 bool use_egg = false);

struct Degradation {
  enum class Kind { none, noise, reverb };
  Kind kind = Kind::none;
  NoiseSpec noise;
  RoomSpec room;

  static Degradation clean();
  static Degradation white_noise(double snr_db, std::uint64_t seed);
  static Degradation reverb(double t60_s);
  std::string label() const;
};

// Applies d to x. Noise seeds are d.noise.seed + index.
Waveform apply_degradation(const Degradation& d, const Waveform& x, std::size_t index);

enum class PolarityMode { auto_detect, positive, negative };
PolarityMode parse_polarity_mode(const std::string& s);

struct ExperimentOptions {
  std::vector<Method> methods = base_methods();
  MethodOptions method_options;
  PolarityMode polarity = PolarityMode::auto_detect;
  double max_lag_ms = 5.0;
  std::size_t threads = 1;
  ReferenceConfig reference;
  VoicingConfig voicing;
};

/// Prior and reference cycles of one utterance on the clean signal.
struct PreparedUtterance {
  PitchPrior prior;
  ReferenceCycles cycles;
  Waveform speech;  // after polarity handling
  bool flipped = false;
};

// One prior per speaker: the known f0 if given, else the median reference
// period over the speaker's files, else the autocorrelation estimate of the
// first file. Returns one prior per utterance.
std::vector<PitchPrior> speaker_priors(const std::vector<Utterance>& utts,
                                       const ExperimentOptions& opt,
                                       std::vector<std::string>* errors = nullptr);

struct FileRecord {
  std::string id;
  std::string condition;
  std::string method;
  bool ok = false;
  std::string error;
  EvalCounts counts;
  std::size_t detected = 0;
  bool flipped = false;
};

struct MethodSummary {
  Method method = Method::sedreams;
  EvalCounts counts;
  std::optional<EvalReport> report;  // empty when no cycle was evaluated
};

struct ConditionResult {
  std::string label;
  std::vector<MethodSummary> methods;
  std::vector<FileRecord> files;
};

struct ExperimentResult {
  std::vector<ConditionResult> conditions;
  std::vector<std::string> errors;  // files skipped before detection
  const MethodSummary* find(const std::string& condition, Method m) const;
};

// For each condition and utterance: degrade the polarity-fixed speech, run
// every method and evaluate against the clean reference cycles. Failures are
// logged and skipped. Results do not depend on the thread count.
ExperimentResult run_experiment(const std::vector<Utterance>& utts,
                                const std::vector<Degradation>& conditions,
                                const ExperimentOptions& opt = {});

struct RctReport {
  Method method = Method::sedreams;
  double rct_pct = 0.0;
  double audio_seconds = 0.0;
  double cpu_seconds = 0.0;  // median over repetitions
};

// CPU time of detection only (process clock), after one untimed warm-up
// pass, over the total audio duration.
std::vector<RctReport> bench_rct(const std::vector<Utterance>& utts,
                                 const std::vector<Method>& methods, int repetitions,
                                 const ExperimentOptions& opt = {});

// Process CPU time in seconds.
double process_cpu_seconds();

}  // namespace gci

#endif  // GCI_EXPERIMENT_HPP_
