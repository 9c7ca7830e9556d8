// core/src/experiment.cpp
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

#include "gci/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "gci/log.hpp"
#include "gci/pitch.hpp"
#include "gci/polarity.hpp"
#include "gci/reference.hpp"
#include "gci/resample.hpp"
#include "gci/signal_util.hpp"
#include "gci/wav.hpp"

namespace gci {

namespace fs = std::filesystem;

DatasetManifest parse_manifest(const std::string& text, const std::string& base_dir) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("manifest: ") + e.what());
  }
  DatasetManifest m;
  auto resolve = [&](const std::string& p) {
    if (p.empty() || fs::path(p).is_absolute() || base_dir.empty()) return p;
    return (fs::path(base_dir) / p).string();
  };
  try {
    if (j.contains("speakers")) {
      for (auto& [name, v] : j.at("speakers").items())
        if (v.contains("f0_mean_hz")) m.speaker_f0_hz[name] = v.at("f0_mean_hz").get<double>();
    }
    std::size_t k = 0;
    for (const auto& e : j.at("entries")) {
      ManifestEntry me;
      me.speech_path = resolve(e.at("speech").get<std::string>());
      me.egg_path = resolve(e.value("egg", std::string()));
      me.speaker = e.value("speaker", std::string("default"));
      me.id = e.value("id", fs::path(me.speech_path).stem().string());
      if (e.contains("delay_ms")) me.delay_ms = e.at("delay_ms").get<double>();
      if (me.id.empty()) me.id = "entry" + std::to_string(k);
      m.entries.push_back(std::move(me));
      ++k;
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("manifest: ") + e.what());
  }
  return m;
}

DatasetManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open manifest " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_manifest(ss.str(), fs::path(path).parent_path().string());
}

std::vector<Utterance> load_utterances(const DatasetManifest& m, std::vector<std::string>* errors,
                                       double target_rate) {
  std::vector<Utterance> out;
  for (const auto& e : m.entries) {
    try {
      Utterance u;
      u.id = e.id;
      u.speaker = e.speaker;
      u.speech = read_wav(e.speech_path);
      if (u.speech.sample_rate_hz != target_rate) u.speech = resample(u.speech, target_rate);
      if (!e.egg_path.empty()) {
        Waveform egg = read_wav(e.egg_path);
        if (egg.sample_rate_hz != target_rate) egg = resample(egg, target_rate);
        u.egg = std::move(egg);
      }
      if (e.delay_ms) u.delay_samples = *e.delay_ms * 1e-3 * target_rate;
      auto it = m.speaker_f0_hz.find(e.speaker);
      if (it != m.speaker_f0_hz.end()) u.f0_mean_hz = it->second;
      out.push_back(std::move(u));
    } catch (const std::exception& ex) {
      const std::string msg = e.id + ": " + ex.what();
      warn(msg);
      if (errors) errors->push_back(msg);
    }
  }
  return out;
}

std::vector<Utterance> utterances_from_synthetic(const std::vector<SyntheticUtterance>& suite,
                                                 bool use_egg) {
  std::vector<Utterance> out;
  for (const auto& s : suite) {
    Utterance u;
    u.id = s.id;
    u.speaker = "f0_" + std::to_string(static_cast<int>(std::lround(s.f0_hz)));
    u.speech = s.speech;
    if (use_egg) {
      u.egg = s.egg;
    } else {
      u.reference = s.epochs;
    }
    out.push_back(std::move(u));
  }
  return out;
}

Degradation Degradation::clean() { return {}; }

Degradation Degradation::white_noise(double snr_db, std::uint64_t seed) {
  Degradation d;
  d.kind = Kind::noise;
  d.noise.kind = NoiseKind::white_gaussian;
  d.noise.snr_db = snr_db;
  d.noise.seed = seed;
  return d;
}

Degradation Degradation::reverb(double t60_s) {
  Degradation d;
  d.kind = Kind::reverb;
  d.room.t60 = t60_s;
  return d;
}

namespace {

std::string fmt_num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::string Degradation::label() const {
  switch (kind) {
    case Kind::none: return "clean";
    case Kind::noise:
      return (noise.kind == NoiseKind::white_gaussian ? "wgn_" : "noise_") +
             fmt_num(noise.snr_db) + "dB";
    case Kind::reverb: return "t60_" + fmt_num(room.t60 * 1000.0) + "ms";
  }
  return "?";
}

Waveform apply_degradation(const Degradation& d, const Waveform& x, std::size_t index) {
  switch (d.kind) {
    case Degradation::Kind::none: return x;
    case Degradation::Kind::noise: {
      NoiseSpec s = d.noise;
      s.seed = d.noise.seed + index;
      return add_noise(x, s);
    }
    case Degradation::Kind::reverb: return convolve_rir(x, simulate_rir(d.room, x.sample_rate_hz));
  }
  return x;
}

PolarityMode parse_polarity_mode(const std::string& s) {
  if (s == "auto") return PolarityMode::auto_detect;
  if (s == "pos" || s == "positive") return PolarityMode::positive;
  if (s == "neg" || s == "negative") return PolarityMode::negative;
  throw InvalidArgument("polarity must be auto, pos or neg");
}

namespace {

// Reference instants of an utterance without a known prior.
std::optional<GciSequence> raw_reference(const Utterance& u, const ReferenceConfig& rc) {
  if (u.reference) return u.reference;
  if (!u.egg) return std::nullopt;
  const PitchPrior provisional = u.f0_mean_hz
                                     ? PitchPrior::from_f0(*u.f0_mean_hz, u.egg->sample_rate_hz)
                                     : estimate_pitch_prior(*u.egg);
  return reference_gcis(*u.egg, provisional, rc);
}

void append_periods(const GciSequence& g, double fs, std::vector<double>& out) {
  for (std::size_t i = 1; i < g.instants.size(); ++i) {
    const double p = g.instants[i] - g.instants[i - 1];
    if (p >= 2e-3 * fs && p <= 20e-3 * fs) out.push_back(p);
  }
}

}  // namespace

std::vector<PitchPrior> speaker_priors(const std::vector<Utterance>& utts,
                                       const ExperimentOptions& opt,
                                       std::vector<std::string>* errors) {
  std::map<std::string, std::vector<double>> periods;
  std::map<std::string, std::size_t> first;
  std::map<std::string, double> known;
  for (std::size_t i = 0; i < utts.size(); ++i) {
    const auto& u = utts[i];
    first.emplace(u.speaker, i);
    if (u.f0_mean_hz) {
      known.emplace(u.speaker, *u.f0_mean_hz);
      continue;
    }
    try {
      if (auto r = raw_reference(u, opt.reference))
        append_periods(*r, u.speech.sample_rate_hz, periods[u.speaker]);
    } catch (const std::exception& e) {
      if (errors) errors->push_back(u.id + ": " + e.what());
    }
  }
  std::map<std::string, PitchPrior> by_speaker;
  for (const auto& [spk, idx] : first) {
    const double fs = utts[idx].speech.sample_rate_hz;
    if (auto k = known.find(spk); k != known.end()) {
      by_speaker[spk] = PitchPrior::from_f0(k->second, fs);
    } else if (auto p = periods.find(spk); p != periods.end() && !p->second.empty()) {
      by_speaker[spk] = PitchPrior(std::clamp(median(p->second), fs / 500.0, fs / 50.0));
    } else {
      by_speaker[spk] = estimate_pitch_prior(utts[idx].speech);
    }
  }
  std::vector<PitchPrior> out;
  out.reserve(utts.size());
  for (const auto& u : utts) out.push_back(by_speaker.at(u.speaker));
  return out;
}

namespace {

Waveform apply_polarity(const Waveform& x, PolarityMode mode, bool* flipped) {
  *flipped = false;
  switch (mode) {
    case PolarityMode::positive: return x;
    case PolarityMode::negative: {
      Waveform y = x;
      for (double& v : y.samples) v = -v;
      *flipped = true;
      return y;
    }
    case PolarityMode::auto_detect: {
      auto r = ensure_polarity(x);
      *flipped = r.flipped;
      return std::move(r.waveform);
    }
  }
  return x;
}

PreparedUtterance prepare(const Utterance& u, const PitchPrior& prior,
                          const ExperimentOptions& opt) {
  PreparedUtterance p;
  p.prior = prior;
  p.speech = apply_polarity(u.speech, opt.polarity, &p.flipped);
  const double fs = u.speech.sample_rate_hz;
  if (u.reference) {
    p.cycles = make_reference_cycles(*u.reference, fs, {}, 0.0, opt.voicing);
  } else if (u.egg) {
    double delay = 0.0;
    if (u.delay_samples) {
      delay = *u.delay_samples;
    } else {
      delay = static_cast<double>(align_egg(p.speech, *u.egg, opt.max_lag_ms).delay);
    }
    p.cycles = reference_cycles_from_egg(*u.egg, prior, delay, opt.reference, opt.voicing);
  } else {
    throw InvalidArgument("no reference for " + u.id);
  }
  if (p.cycles.cycles.empty()) throw InvalidArgument("no reference cycles in " + u.id);
  return p;
}

template <typename F>
void parallel_for(std::size_t n, std::size_t threads, F&& f) {
  threads = std::max<std::size_t>(1, std::min(threads, n));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) f(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

const MethodSummary* ExperimentResult::find(const std::string& condition, Method m) const {
  for (const auto& c : conditions) {
    if (c.label != condition) continue;
    for (const auto& s : c.methods)
      if (s.method == m) return &s;
  }
  return nullptr;
}

ExperimentResult run_experiment(const std::vector<Utterance>& utts,
                                const std::vector<Degradation>& conditions,
                                const ExperimentOptions& opt) {
  ExperimentResult res;
  const auto priors = speaker_priors(utts, opt, &res.errors);

  std::vector<std::optional<PreparedUtterance>> prep(utts.size());
  std::vector<std::string> prep_err(utts.size());
  parallel_for(utts.size(), opt.threads, [&](std::size_t i) {
    try {
      prep[i] = prepare(utts[i], priors[i], opt);
    } catch (const std::exception& e) {
      prep_err[i] = utts[i].id + ": " + e.what();
    }
  });
  for (const auto& e : prep_err)
    if (!e.empty()) {
      warn(e);
      res.errors.push_back(e);
    }

  const std::size_t nm = opt.methods.size();
  for (const auto& cond : conditions) {
    ConditionResult cr;
    cr.label = cond.label();
    // One room response per condition and rate.
    std::map<double, Rir> rirs;
    if (cond.kind == Degradation::Kind::reverb)
      for (const auto& p : prep)
        if (p && !rirs.count(p->speech.sample_rate_hz))
          rirs.emplace(p->speech.sample_rate_hz,
                       simulate_rir(cond.room, p->speech.sample_rate_hz));

    std::vector<std::vector<FileRecord>> per_file(utts.size());
    parallel_for(utts.size(), opt.threads, [&](std::size_t i) {
      if (!prep[i]) return;
      const auto& p = *prep[i];
      auto& recs = per_file[i];
      Waveform x;
      std::string derr;
      try {
        x = cond.kind == Degradation::Kind::reverb
                ? convolve_rir(p.speech, rirs.at(p.speech.sample_rate_hz))
                : apply_degradation(cond, p.speech, i);
      } catch (const std::exception& e) {
        derr = e.what();
      }
      for (Method m : opt.methods) {
        FileRecord r;
        r.id = utts[i].id;
        r.condition = cr.label;
        r.method = to_string(m);
        r.flipped = p.flipped;
        if (!derr.empty()) {
          r.error = derr;
          recs.push_back(std::move(r));
          continue;
        }
        try {
          const auto est = run_method(m, x, p.prior, opt.method_options);
          r.detected = est.size();
          r.counts = count_outcomes(p.cycles, est);
          r.ok = true;
        } catch (const std::exception& e) {
          r.error = e.what();
        }
        recs.push_back(std::move(r));
      }
    });

    cr.methods.resize(nm);
    for (std::size_t k = 0; k < nm; ++k) cr.methods[k].method = opt.methods[k];
    for (auto& recs : per_file) {
      for (std::size_t k = 0; k < recs.size(); ++k) {
        if (recs[k].ok) {
          cr.methods[k].counts.merge(recs[k].counts);
        } else {
          warn(recs[k].id + " [" + recs[k].method + ", " + recs[k].condition +
               "]: " + recs[k].error);
        }
        cr.files.push_back(std::move(recs[k]));
      }
    }
    for (auto& s : cr.methods)
      if (s.counts.cycles > 0) s.report = make_report(s.counts);
    res.conditions.push_back(std::move(cr));
  }
  return res;
}

double process_cpu_seconds() {
  timespec ts{};
  clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

std::vector<RctReport> bench_rct(const std::vector<Utterance>& utts,
                                 const std::vector<Method>& methods, int repetitions,
                                 const ExperimentOptions& opt) {
  if (repetitions < 1) throw InvalidArgument("repetitions must be >= 1");
  if (utts.empty()) throw InvalidArgument("nothing to benchmark");
  const auto priors = speaker_priors(utts, opt);
  std::vector<Waveform> speech;
  double audio = 0.0;
  for (const auto& u : utts) {
    bool flipped = false;
    speech.push_back(apply_polarity(u.speech, opt.polarity, &flipped));
    audio += u.speech.duration_s();
  }
  std::vector<RctReport> out;
  volatile std::size_t sink = 0;  // keeps results observable
  for (Method m : methods) {
    for (std::size_t i = 0; i < speech.size(); ++i)
      sink = sink + run_method(m, speech[i], priors[i], opt.method_options).size();
    std::vector<double> times;
    for (int r = 0; r < repetitions; ++r) {
      const double t0 = process_cpu_seconds();
      for (std::size_t i = 0; i < speech.size(); ++i)
        sink = sink + run_method(m, speech[i], priors[i], opt.method_options).size();
      times.push_back(process_cpu_seconds() - t0);
    }
    RctReport rep;
    rep.method = m;
    rep.audio_seconds = audio;
    rep.cpu_seconds = median(times);
    rep.rct_pct = 100.0 * rep.cpu_seconds / audio;
    out.push_back(rep);
  }
  return out;
}

}  // namespace gci
