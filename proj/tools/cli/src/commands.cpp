// Copyright 2026 The coemap Authors.
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

#include "coemap/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "coemap/analytics.hpp"
#include "coemap/cli/config_file.hpp"
#include "coemap/cli/manifest.hpp"
#include "coemap/cli/synth.hpp"
#include "coemap/corpus.hpp"
#include "coemap/error.hpp"
#include "coemap/excellence.hpp"

namespace coemap::cli {
namespace {

namespace fs = std::filesystem;

template <typename T>
T parse_number(const std::string &key, const std::string &value) {
  T v{};
  const char *end = value.data() + value.size();
  auto [p, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc() || p != end || value.empty()) {
    throw ConfigError(fmt::format("invalid value '{}' for {}", value, key));
  }
  return v;
}

struct RunSettings {
  PipelineConfig pipeline;
  ReportFormat format = ReportFormat::kCsv;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
};

// Applies merged key=value settings on top of the defaults.
RunSettings resolve_settings(const std::map<std::string, std::string> &kv) {
  RunSettings s;
  for (const auto &[key, value] : kv) {
    if (key == "decile") {
      s.pipeline.decile_fraction = parse_number<double>(key, value);
    } else if (key == "min_cluster_size") {
      s.pipeline.min_cluster_size = parse_number<int>(key, value);
    } else if (key == "top_k") {
      s.pipeline.top_k = parse_number<int>(key, value);
    } else if (key == "unit_level") {
      auto v = parse_unit_level(value);
      if (!v) throw ConfigError(fmt::format("invalid unit level '{}'", value));
      s.pipeline.unit_level = *v;
    } else if (key == "fss_scope") {
      auto v = parse_fss_scope(value);
      if (!v) throw ConfigError(fmt::format("invalid fss scope '{}'", value));
      s.pipeline.fss_scope = *v;
    } else if (key == "years") {
      s.pipeline.window = YearRange::parse(value);
    } else if (key == "format") {
      auto v = parse_report_format(value);
      if (!v) throw ConfigError(fmt::format("invalid format '{}'", value));
      s.format = *v;
    } else if (key == "workers") {
      int w = parse_number<int>(key, value);
      if (w < 1) throw ConfigError(fmt::format("workers must be >= 1, got {}", w));
      s.workers = static_cast<unsigned>(w);
    }
  }
  s.pipeline.validate();
  return s;
}

void write_text(const fs::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(fmt::format("cannot open '{}' for writing", path.string()));
  out << text;
  out.flush();
  if (!out) throw Error(fmt::format("write to '{}' failed", path.string()));
}

template <typename Fn>
void write_csv(const fs::path &path, Fn &&fn) {
  std::ostringstream os;
  fn(os);
  write_text(path, os.str());
}

std::string timestamp() {
  const char *epoch = std::getenv("SOURCE_DATE_EPOCH");
  return epoch && *epoch ? epoch : "unset";
}

struct RunArgs {
  std::string input, out, config;
  std::map<std::string, std::string> flags;  // only flags given explicitly
};

int cmd_run(const RunArgs &a, std::ostream &out, std::ostream &err) {
  std::map<std::string, std::string> kv;
  if (!a.config.empty()) kv = read_config_file(a.config);
  for (const auto &[k, v] : a.flags) kv[k] = v;
  RunSettings s = resolve_settings(kv);

  err << fmt::format("coemap: loading corpus from {}\n", a.input);
  Corpus corpus = load_corpus(a.input, s.pipeline.window);
  err << fmt::format("coemap: running pipeline on {} publications, {} workers\n",
                     corpus.publications().size(), s.workers);
  ExcellenceMap map = run_pipeline(corpus, s.pipeline, s.workers);
  for (const auto &w : map.warnings) err << "coemap: warning: " << w << '\n';

  fs::path dir(a.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error(fmt::format("cannot create '{}': {}", dir.string(), ec.message()));
  }
  write_csv(dir / "tsc.csv", [&](std::ostream &os) { write_tsc(os, map); });
  write_csv(dir / "top_scientists.csv",
            [&](std::ostream &os) { write_top_scientists(os, map); });
  write_csv(dir / "scores.csv",
            [&](std::ostream &os) { write_scores(os, map.scores); });
  write_csv(dir / "excluded_pubs.csv",
            [&](std::ostream &os) { write_excluded_pubs(os, map.excluded); });
  write_csv(dir / "unresolved_mentions.csv", [&](std::ostream &os) {
    write_unresolved_mentions(os, map.authorships, corpus);
  });

  auto extra = input_digests(a.input);
  extra["timestamp"] = timestamp();
  extra["tool.version"] = kToolVersion;
  auto files = emit_reports(map, corpus, dir, s.format, extra);
  err << fmt::format("coemap: wrote {} report files to {}\n", files.size(),
                     dir.string());

  out << "top_scientists=" << map.top_scientists.size() << '\n'
      << "tsc=" << map.clusters().size() << '\n'
      << "coe=" << map.centers().size() << '\n'
      << "unresolved_mentions=" << map.authorships.unresolved().size() << '\n'
      << "excluded_pubs=" << map.excluded.size() << '\n';
  return kExitOk;
}

int cmd_validate(const std::string &input, const std::string &years,
                 std::ostream &out, std::ostream &err) {
  YearRange window = years.empty() ? PipelineConfig{}.window
                                   : YearRange::parse(years);
  err << fmt::format("coemap: validating {}\n", input);
  Corpus corpus = load_corpus(input, window);
  out << "categories=" << corpus.categories().size() << '\n'
      << "journals=" << corpus.journals().size() << '\n'
      << "impact_factors=" << corpus.impact_factor_count() << '\n'
      << "organizations=" << corpus.organizations().size() << '\n'
      << "researchers=" << corpus.researchers().size() << '\n'
      << "publications=" << corpus.publications().size() << '\n';
  return kExitOk;
}

int cmd_synth(const SynthSpec &spec, const std::string &out_dir,
              std::ostream &out, std::ostream &err) {
  SynthCorpus sc = synthesize(spec);
  fs::path dir(out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error(fmt::format("cannot create '{}': {}", dir.string(), ec.message()));
  }
  write_corpus_data(sc.data, dir);
  write_csv(dir / "planted.csv",
            [&](std::ostream &os) { write_planted(os, sc.planted); });
  err << fmt::format("coemap: wrote synthetic corpus to {}\n", dir.string());
  out << "researchers=" << sc.data.researchers.size() << '\n'
      << "publications=" << sc.data.publications.size() << '\n'
      << "planted=" << sc.planted.size() << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Maps centers of excellence from bibliographic records.",
               "coemap"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  RunArgs run;
  auto *run_cmd = app.add_subcommand("run", "Run the pipeline and write outputs");
  run_cmd->add_option("--input", run.input, "Input corpus directory")->required();
  run_cmd->add_option("--out", run.out, "Output directory")->required();
  run_cmd->add_option("--config", run.config, "key=value config file");
  // Flag values are collected as text and merged over the config file.
  struct FlagSpec {
    const char *flag, *key, *help;
  };
  static constexpr FlagSpec kFlags[] = {
      {"--decile", "decile", "Top-decile fraction (0.10)"},
      {"--min-cluster-size", "min_cluster_size", "Minimum cluster size (4)"},
      {"--top-k", "top_k", "Centers of excellence per category (3)"},
      {"--unit-level", "unit_level", "org|site (site)"},
      {"--fss-scope", "fss_scope", "category|all (category)"},
      {"--years", "years", "Observation window A-B (2001-2003)"},
      {"--format", "format", "Report format csv|markdown (csv)"},
      {"--workers", "workers", "Worker threads (machine parallelism)"},
  };
  std::map<std::string, std::string> flag_values;
  for (const auto &f : kFlags) {
    run_cmd->add_option(f.flag, flag_values[f.key], f.help);
  }

  std::string validate_input, validate_years;
  auto *validate_cmd =
      app.add_subcommand("validate", "Load the corpus and print entity counts");
  validate_cmd->add_option("--input", validate_input, "Input corpus directory")
      ->required();
  validate_cmd->add_option("--years", validate_years,
                           "Observation window A-B (2001-2003)");

  SynthSpec spec;
  std::string synth_out, synth_years;
  auto *synth_cmd =
      app.add_subcommand("synth", "Write a synthetic corpus with planted clusters");
  synth_cmd->add_option("--out", synth_out, "Output directory")->required();
  synth_cmd->add_option("--seed", spec.seed, "Random seed")->capture_default_str();
  synth_cmd->add_option("--researchers", spec.researchers)->capture_default_str();
  synth_cmd->add_option("--publications", spec.publications)->capture_default_str();
  synth_cmd->add_option("--macro-areas", spec.macro_areas)->capture_default_str();
  synth_cmd->add_option("--categories-per-macro", spec.categories_per_macro)
      ->capture_default_str();
  synth_cmd->add_option("--journals-per-category", spec.journals_per_category)
      ->capture_default_str();
  synth_cmd->add_option("--organizations", spec.organizations)
      ->capture_default_str();
  synth_cmd->add_option("--planted", spec.planted, "Planted clusters")
      ->capture_default_str();
  synth_cmd->add_option("--planted-size", spec.planted_size)
      ->capture_default_str();
  synth_cmd->add_option("--planted-publications", spec.planted_publications)
      ->capture_default_str();
  synth_cmd->add_option("--years", synth_years, "Observation window A-B");

  try {
    std::vector<std::string> rev(args.begin() + std::min<std::size_t>(1, args.size()),
                                 args.end());
    std::reverse(rev.begin(), rev.end());
    app.parse(rev);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "coemap: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (run_cmd->parsed()) {
      for (const auto &f : kFlags) {
        if (run_cmd->count(f.flag) > 0) run.flags[f.key] = flag_values[f.key];
      }
      return cmd_run(run, out, err);
    }
    if (validate_cmd->parsed()) {
      return cmd_validate(validate_input, validate_years, out, err);
    }
    if (!synth_years.empty()) spec.window = YearRange::parse(synth_years);
    return cmd_synth(spec, synth_out, out, err);
  } catch (const ConfigError &e) {
    err << "coemap: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "coemap: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace coemap::cli
