// tools/gci_tool.cpp
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

// Command-line front end: detect, evaluate, degrade, bench, decompose and
// synth. Every option can also come from the file given with --config.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gci/degrade.hpp"
#include "gci/experiment.hpp"
#include "gci/log.hpp"
#include "gci/methods.hpp"
#include "gci/mixed_phase.hpp"
#include "gci/pitch.hpp"
#include "gci/polarity.hpp"
#include "gci/report.hpp"
#include "gci/synth.hpp"
#include "gci/wav.hpp"

namespace {

using namespace gci;

// Exit codes.
constexpr int kOk = 0;
constexpr int kThresholdViolated = 2;
constexpr int kFailure = 1;

struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw Error("cannot write " + path);
    os = &file;
  }
};

PitchPrior resolve_prior(const Waveform& x, double f0_mean) {
  if (f0_mean > 0.0) return PitchPrior::from_f0(f0_mean, x.sample_rate_hz);
  return estimate_pitch_prior(x);
}

Waveform apply_polarity_cli(const Waveform& x, const std::string& mode) {
  switch (parse_polarity_mode(mode)) {
    case PolarityMode::positive: return x;
    case PolarityMode::negative: {
      Waveform y = x;
      for (double& v : y.samples) v = -v;
      return y;
    }
    case PolarityMode::auto_detect: return ensure_polarity(x).waveform;
  }
  return x;
}

std::vector<Method> parse_methods(const std::vector<std::string>& names) {
  std::vector<Method> out;
  for (const auto& n : names) {
    if (n == "all") return all_methods();
    if (n == "base") return base_methods();
    out.push_back(parse_method(n));
  }
  return out;
}

GciSequence read_gci_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  GciSequence g;
  std::string line;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string cell;
    std::getline(ss, cell, ',');
    try {
      std::size_t used = 0;
      const double v = std::stod(cell, &used);
      if (used > 0) g.instants.push_back(v);
    } catch (const std::exception&) {
      // header or comment
    }
  }
  return g;
}

struct DatasetArgs {
  std::string manifest;
  double synthetic_s = 0.0;
  std::uint64_t seed = 1;
  std::vector<std::string> methods{"base"};
  std::string polarity = "auto";
  double max_lag_ms = 5.0;
  std::size_t threads = 1;
  int fast_p = 4;

  void add(CLI::App* app) {
    auto* g = app->add_option_group("dataset");
    g->add_option("--manifest", manifest, "JSON manifest of speech/EGG pairs");
    g->add_option("--synthetic", synthetic_s, "use a synthetic suite of this many seconds");
    g->require_option(1);
    app->add_option("--seed", seed, "seed of the synthetic suite and of noise");
    app->add_option("--methods", methods, "methods, or 'base' / 'all'")->delimiter(',');
    app->add_option("--polarity", polarity, "auto, pos or neg")
        ->check(CLI::IsMember({"auto", "pos", "neg"}));
    app->add_option("--max-lag-ms", max_lag_ms, "search range of the EGG alignment");
    app->add_option("--threads", threads, "files processed concurrently");
    app->add_option("--fast-p", fast_p, "decimation exponent of the fast variants");
  }

  std::vector<Utterance> load(std::vector<std::string>* errors) const {
    if (!manifest.empty()) return load_utterances(load_manifest(manifest), errors);
    return utterances_from_synthetic(synthetic_suite(synthetic_s, seed));
  }

  ExperimentOptions options() const {
    ExperimentOptions o;
    o.methods = parse_methods(methods);
    o.polarity = parse_polarity_mode(polarity);
    o.max_lag_ms = max_lag_ms;
    o.threads = threads;
    o.method_options.fast_p = fast_p;
    return o;
  }
};

struct Thresholds {
  double min_idr = -1.0;
  double max_far = -1.0;
  double max_mr = -1.0;
  double min_acc = -1.0;

  void add(CLI::App* app) {
    app->add_option("--min-idr", min_idr, "fail (exit 2) if any IDR is below this %")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--max-far", max_far, "fail if any FAR exceeds this %")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--max-mr", max_mr, "fail if any MR exceeds this %")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--min-acc025", min_acc, "fail if any accuracy to 0.25 ms is below this %")
        ->check(CLI::NonNegativeNumber);
  }

  // Reports each violation on stderr.
  bool check(const ExperimentResult& r) const {
    bool ok = true;
    auto fail = [&](const std::string& c, const MethodSummary& s, const char* what, double v) {
      std::cerr << "threshold violated: " << c << ' ' << to_string(s.method) << ' ' << what
                << " = " << format6(v) << '\n';
      ok = false;
    };
    for (const auto& c : r.conditions)
      for (const auto& s : c.methods) {
        if (!s.report) {
          if (min_idr >= 0.0 || max_far >= 0.0 || max_mr >= 0.0 || min_acc >= 0.0)
            fail(c.label, s, "cycles", 0.0);
          continue;
        }
        const auto& e = *s.report;
        if (min_idr >= 0.0 && e.idr_pct < min_idr) fail(c.label, s, "idr", e.idr_pct);
        if (max_far >= 0.0 && e.far_pct > max_far) fail(c.label, s, "far", e.far_pct);
        if (max_mr >= 0.0 && e.mr_pct > max_mr) fail(c.label, s, "mr", e.mr_pct);
        if (min_acc >= 0.0 && e.acc025_pct < min_acc) fail(c.label, s, "acc025", e.acc025_pct);
      }
    return ok;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Glottal closure instant detection and evaluation"};
  app.set_config("--config", "", "read options from a TOML/INI file");
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "suppress warnings");

  // detect
  auto* det = app.add_subcommand("detect", "detect GCIs in a WAV file");
  std::string det_in, det_out, det_method = "sedreams", det_pol = "auto";
  double det_f0 = 0.0;
  int det_p = 4;
  det->add_option("input", det_in, "16-bit mono WAV")->required()->check(CLI::ExistingFile);
  det->add_option("--method", det_method, "he, he_fast, dypsa, zfr, sedreams, sedreams_fast, yaga");
  det->add_option("--f0-mean", det_f0, "speaker mean f0 in Hz (estimated if omitted)");
  det->add_option("--polarity", det_pol, "auto, pos or neg")
      ->check(CLI::IsMember({"auto", "pos", "neg"}));
  det->add_option("--fast-p", det_p, "decimation exponent of the fast variants");
  det->add_option("-o,--output", det_out, "CSV output (default stdout)");

  // evaluate
  auto* ev = app.add_subcommand("evaluate", "run methods over a dataset and score them");
  DatasetArgs ev_data;
  ev_data.add(ev);
  std::vector<double> ev_snr, ev_t60;
  bool ev_clean = false;
  std::string ev_noise, ev_summary, ev_records, ev_hist;
  Thresholds ev_thr;
  ev->add_flag("--clean", ev_clean, "include the clean condition (default when no sweep)");
  ev->add_option("--snr", ev_snr, "segmental SNRs (dB) of a noise sweep")->delimiter(',');
  ev->add_option("--noise", ev_noise, "noise WAV for the sweep (white Gaussian if omitted)")
      ->check(CLI::ExistingFile);
  ev->add_option("--t60", ev_t60, "reverberation times (s) of a room sweep")->delimiter(',');
  ev->add_option("--summary", ev_summary, "summary CSV (default stdout)");
  ev->add_option("--records", ev_records, "per-file JSONL");
  ev->add_option("--histogram", ev_hist, "timing-error histogram CSV of the first condition");
  ev_thr.add(ev);

  // degrade
  auto* dg = app.add_subcommand("degrade", "add noise and/or reverberation to a WAV file");
  std::string dg_in, dg_out, dg_noise, dg_model = "eyring";
  std::optional<double> dg_snr, dg_t60;
  std::uint64_t dg_seed = 0;
  std::vector<double> dg_room{3.0, 4.0, 5.0}, dg_src{1.0, 1.2, 1.6}, dg_mic{2.0, 2.6, 1.6};
  dg->add_option("input", dg_in)->required()->check(CLI::ExistingFile);
  dg->add_option("output", dg_out)->required();
  dg->add_option("--snr", dg_snr, "segmental SNR in dB");
  dg->add_option("--noise", dg_noise, "noise WAV (white Gaussian if omitted)")
      ->check(CLI::ExistingFile);
  dg->add_option("--seed", dg_seed, "noise seed");
  dg->add_option("--t60", dg_t60, "reverberation time in s");
  dg->add_option("--room", dg_room, "room dimensions in m")->expected(3)->delimiter(',');
  dg->add_option("--source", dg_src, "source position in m")->expected(3)->delimiter(',');
  dg->add_option("--mic", dg_mic, "microphone position in m")->expected(3)->delimiter(',');
  dg->add_option("--absorption", dg_model, "eyring or sabine")
      ->check(CLI::IsMember({"eyring", "sabine"}));

  // bench
  auto* bn = app.add_subcommand("bench", "relative computation time of each method");
  DatasetArgs bn_data;
  bn_data.add(bn);
  int bn_reps = 3;
  std::string bn_out;
  double bn_max_rct = -1.0;
  bn->add_option("--repetitions", bn_reps, "timed passes (median reported)");
  bn->add_option("-o,--output", bn_out, "CSV output (default stdout)");
  bn->add_option("--max-rct", bn_max_rct, "fail (exit 2) if any RCT exceeds this %")
      ->check(CLI::NonNegativeNumber);

  // decompose
  auto* dc = app.add_subcommand("decompose", "mixed-phase decomposition failure rate");
  std::string dc_in, dc_gcis, dc_method = "sedreams", dc_out, dc_pol = "auto";
  double dc_f0 = 0.0, dc_thr = 2700.0, dc_max_fail = -1.0;
  dc->add_option("input", dc_in)->required()->check(CLI::ExistingFile);
  dc->add_option("--gcis", dc_gcis, "GCI CSV (first column samples); detected if omitted")
      ->check(CLI::ExistingFile);
  dc->add_option("--method", dc_method, "detector used when --gcis is absent");
  dc->add_option("--f0-mean", dc_f0, "speaker mean f0 in Hz");
  dc->add_option("--polarity", dc_pol)->check(CLI::IsMember({"auto", "pos", "neg"}));
  dc->add_option("--threshold-hz", dc_thr, "spectral CoG failure threshold");
  dc->add_option("-o,--output", dc_out, "report CSV (default stdout)");
  dc->add_option("--max-failure", dc_max_fail, "fail (exit 2) above this failure %")
      ->check(CLI::NonNegativeNumber);

  // synth
  auto* sy = app.add_subcommand("synth", "write a synthetic vowel, its EGG and epochs");
  std::string sy_prefix;
  VowelSpec sy_spec;
  double sy_delay_ms = 0.0;
  sy->add_option("prefix", sy_prefix, "writes PREFIX.wav, PREFIX_egg.wav, PREFIX_epochs.csv")
      ->required();
  sy->add_option("--f0", sy_spec.f0_hz);
  sy->add_option("--duration", sy_spec.duration_s);
  sy->add_option("--jitter", sy_spec.jitter);
  sy->add_option("--seed", sy_spec.seed);
  sy->add_option("--egg-delay-ms", sy_delay_ms, "EGG leads the speech by this much");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; usage errors share the error status.
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (quiet) set_warning_handler([](const std::string&) {});

  try {
    if (*det) {
      Waveform x = read_wav(det_in);
      x = apply_polarity_cli(x, det_pol);
      const PitchPrior prior = resolve_prior(x, det_f0);
      MethodOptions mo;
      mo.fast_p = det_p;
      const auto g = run_method(parse_method(det_method), x, prior, mo);
      Output out(det_out);
      write_gci_csv(*out.os, g, x.sample_rate_hz);
      return kOk;
    }

    if (*ev) {
      std::vector<std::string> errors;
      const auto utts = ev_data.load(&errors);
      std::vector<Degradation> conds;
      if (ev_clean || (ev_snr.empty() && ev_t60.empty())) conds.push_back(Degradation::clean());
      std::optional<Waveform> noise;
      if (!ev_noise.empty()) noise = read_wav(ev_noise);
      for (double snr : ev_snr) {
        auto d = Degradation::white_noise(snr, ev_data.seed);
        if (noise) {
          d.noise.kind = NoiseKind::external;
          d.noise.noise = noise;
        }
        conds.push_back(d);
      }
      for (double t : ev_t60) conds.push_back(Degradation::reverb(t));
      const auto res = run_experiment(utts, conds, ev_data.options());
      {
        Output out(ev_summary);
        if (res.conditions.size() == 1) {
          write_summary_csv(*out.os, res.conditions.front());
        } else {
          write_sweep_csv(*out.os, res);
        }
      }
      if (!ev_records.empty()) {
        Output out(ev_records);
        write_file_records_jsonl(*out.os, res);
      }
      if (!ev_hist.empty() && !res.conditions.empty()) {
        Output out(ev_hist);
        write_method_histograms_csv(*out.os, res.conditions.front());
      }
      return ev_thr.check(res) ? kOk : kThresholdViolated;
    }

    if (*dg) {
      Waveform x = read_wav(dg_in);
      if (!dg_snr && !dg_t60) throw InvalidArgument("give --snr and/or --t60");
      if (dg_t60) {
        RoomSpec room;
        std::copy(dg_room.begin(), dg_room.end(), room.dimensions.begin());
        std::copy(dg_src.begin(), dg_src.end(), room.source.begin());
        std::copy(dg_mic.begin(), dg_mic.end(), room.mic.begin());
        room.t60 = *dg_t60;
        room.model = dg_model == "sabine" ? AbsorptionModel::sabine : AbsorptionModel::eyring;
        x = convolve_rir(x, simulate_rir(room, x.sample_rate_hz));
      }
      if (dg_snr) {
        NoiseSpec ns;
        ns.snr_db = *dg_snr;
        ns.seed = dg_seed;
        if (!dg_noise.empty()) {
          ns.kind = NoiseKind::external;
          ns.noise = read_wav(dg_noise);
        }
        x = add_noise(x, ns);
      }
      const std::size_t clipped = write_wav(dg_out, x);
      if (clipped > 0) warn(std::to_string(clipped) + " samples clipped in " + dg_out);
      return kOk;
    }

    if (*bn) {
      std::vector<std::string> errors;
      const auto utts = bn_data.load(&errors);
      const auto opt = bn_data.options();
      const auto rep = bench_rct(utts, opt.methods, bn_reps, opt);
      Output out(bn_out);
      write_rct_csv(*out.os, rep);
      bool ok = true;
      for (const auto& r : rep)
        if (bn_max_rct >= 0.0 && r.rct_pct > bn_max_rct) {
          std::cerr << "threshold violated: " << to_string(r.method)
                    << " rct = " << format6(r.rct_pct) << '\n';
          ok = false;
        }
      return ok ? kOk : kThresholdViolated;
    }

    if (*dc) {
      Waveform x = read_wav(dc_in);
      x = apply_polarity_cli(x, dc_pol);
      const PitchPrior prior = resolve_prior(x, dc_f0);
      const GciSequence g =
          dc_gcis.empty() ? run_method(parse_method(dc_method), x, prior) : read_gci_csv(dc_gcis);
      MixedPhaseConfig mc;
      mc.cog_threshold_hz = dc_thr;
      const auto f = failure_rate(x, g, mc, prior);
      Output out(dc_out);
      write_failure_report(*out.os, f);
      return dc_max_fail >= 0.0 && f.failure_pct > dc_max_fail ? kThresholdViolated : kOk;
    }

    if (*sy) {
      sy_spec.egg_delay = std::lround(sy_delay_ms * 1e-3 * sy_spec.sample_rate_hz);
      const auto u = synthesize_vowel(sy_spec);
      write_wav(sy_prefix + ".wav", u.speech);
      write_wav(sy_prefix + "_egg.wav", u.egg);
      std::ofstream ep(sy_prefix + "_epochs.csv");
      write_gci_csv(ep, u.epochs, u.speech.sample_rate_hz);
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
