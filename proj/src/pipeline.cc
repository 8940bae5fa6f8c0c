// Copyright 2026 The SlangLex Authors.
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

#include "slanglex/pipeline.h"

#include <sstream>

#include "json.hpp"
#include "slanglex/files.h"
#include "slanglex/lexicon_io.h"

namespace slanglex {
namespace {

using nlohmann::json;

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

ScaleMap parse_scale(const json& j, const std::string& id) {
  if (!j.is_object()) throw ConfigError("seed lexicon '" + id + "': 'scale' must be an object");
  try {
    if (j.contains("from")) {
      const auto from = j.at("from").get<std::vector<double>>();
      const auto to = j.contains("to") ? j.at("to").get<std::vector<double>>()
                                       : std::vector<double>{kMinStrength, kMaxStrength};
      if (from.size() != 2 || to.size() != 2) throw ConfigError("ranges need two numbers");
      return ScaleMap::between(from[0], from[1], to[0], to[1]);
    }
    ScaleMap m;
    m.scale = j.value("factor", 1.0);
    m.offset = j.value("offset", 0.0);
    if (!(m.scale > 0)) throw ConfigError("factor must be positive");
    return m;
  } catch (const json::exception& e) {
    throw ConfigError("seed lexicon '" + id + "': bad scale: " + e.what());
  } catch (const ScaleError& e) {
    throw ConfigError("seed lexicon '" + id + "': " + e.what());
  } catch (const ConfigError& e) {
    throw ConfigError("seed lexicon '" + id + "': " + e.what());
  }
}

template <typename F>
auto in_stage(const char* stage, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    throw StageError(stage, std::current_exception(), e.what());
  }
}

}  // namespace

PipelineConfig parse_pipeline_config(std::string_view json_text,
                                     const std::filesystem::path& base_dir) {
  json j = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) throw ConfigError("configuration is not a JSON object");
  PipelineConfig config;
  try {
    for (const auto& p : j.at("entries")) config.entry_files.push_back(resolve(base_dir, p.get<std::string>()));
    for (const auto& s : j.at("seed_lexicons")) {
      SeedLexiconConfig seed;
      seed.id = s.at("id").get<std::string>();
      seed.path = resolve(base_dir, s.at("path").get<std::string>());
      if (s.contains("scale")) seed.scale = parse_scale(s.at("scale"), seed.id);
      config.seed_lexicons.push_back(std::move(seed));
    }
    config.corpus = resolve(base_dir, j.at("corpus").get<std::string>());
    config.output_dir = resolve(base_dir, j.value("output_dir", std::string("out")));
    if (j.contains("max_docs")) {
      const auto max_docs = j.at("max_docs").get<std::int64_t>();
      if (max_docs < 1) throw ConfigError("max_docs must be at least 1");
      config.max_docs = static_cast<std::size_t>(max_docs);
    }
    config.sample_seed = j.value("sample_seed", std::uint64_t{0});
    const std::string mode = j.value("ingest_mode", std::string("lenient"));
    if (mode == "strict") {
      config.ingest_mode = IngestMode::kStrict;
    } else if (mode == "lenient") {
      config.ingest_mode = IngestMode::kLenient;
    } else {
      throw ConfigError("ingest_mode must be 'strict' or 'lenient'");
    }
    config.workers = j.value("workers", 1u);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad configuration: ") + e.what());
  }
  return config;
}

PipelineConfig load_pipeline_config(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const IoError& e) {
    throw ConfigError(e.what());
  }
  return parse_pipeline_config(text, path.parent_path());
}

void validate(const PipelineConfig& config) {
  if (config.max_docs < 1) throw ConfigError("max_docs must be at least 1");
  if (config.entry_files.empty()) throw ConfigError("no entry files configured");
  std::error_code ec;
  auto require = [&](const std::filesystem::path& p, const std::string& what) {
    if (!std::filesystem::is_regular_file(p, ec)) {
      throw ConfigError(what + " '" + p.string() + "' does not exist");
    }
  };
  for (const auto& p : config.entry_files) require(p, "entry file");
  std::vector<std::string> ids;
  for (const auto& s : config.seed_lexicons) {
    if (s.id.empty() || s.id.find_first_of(",\t\n ") != std::string::npos) {
      throw ConfigError("invalid seed lexicon id '" + s.id + "'");
    }
    for (const auto& other : ids) {
      if (other == s.id) throw ConfigError("duplicate seed lexicon id '" + s.id + "'");
    }
    ids.push_back(s.id);
    if (!(s.scale.scale > 0)) throw ConfigError("seed lexicon '" + s.id + "': scale not increasing");
    require(s.path, "seed lexicon");
  }
  require(config.corpus, "corpus");
  if (config.output_dir.empty()) throw ConfigError("no output directory configured");
}

std::vector<SeedSource> load_seed_sources(const std::vector<SeedLexiconConfig>& configs) {
  std::vector<SeedSource> sources;
  for (const auto& c : configs) {
    try {
      sources.push_back(load_seed_source(c.path, c.id, c.scale));
    } catch (const ParseError& e) {
      throw ParseError(e.line(), c.path.string() + ": " + e.what());
    }
  }
  return sources;
}

Lexicon assemble(const Lexicon& seed, const Lexicon& estimates, const Lexicon& propagated) {
  Lexicon out;
  for (const Lexicon* part : {&seed, &estimates, &propagated}) {
    for (const auto& [term, entry] : *part) {
      if (!out.contains(term)) out.insert(entry);
    }
  }
  return out;
}

Lexicon propagation_seeds(const Lexicon& seed, const Lexicon& estimates) {
  return assemble(seed, estimates, Lexicon{});
}

StageReport export_all(const Lexicon& final_lexicon, const ExportPaths& paths) {
  write_file(paths.slangsd, export_slangsd(final_lexicon));
  write_file(paths.idiom_table, export_idiom_table(final_lexicon));
  StageReport report = stage_report(final_lexicon);
  write_file(paths.report_text, report.render_text());
  write_file(paths.report_json, report.render_json());
  return report;
}

PipelineResult run_pipeline(const PipelineConfig& config) {
  validate(config);
  const std::filesystem::path& out = config.output_dir;
  PipelineResult result;
  std::ostringstream diagnostics;

  const Vocabulary vocabulary = in_stage("ingest", [&] {
    IngestResult ingested = load_entries(config.entry_files, config.ingest_mode);
    for (const auto& issue : ingested.skipped) {
      diagnostics << "ingest: skipped line " << issue.line << ": " << issue.message << '\n';
    }
    result.skipped_records = ingested.skipped.size();
    Vocabulary v = build_vocabulary(ingested.entries);
    std::string persisted;
    for (const SlangEntry& e : v.entries()) persisted += serialize_entry(e) + "\n";
    write_file(out / artifacts::kVocabulary, persisted);
    return v;
  });
  result.vocabulary_size = vocabulary.size();

  const Lexicon seed = in_stage("seed", [&] {
    Lexicon merged = merge_seed_lexicons(load_seed_sources(config.seed_lexicons));
    write_file(out / artifacts::kSeed, export_staged(merged));
    return merged;
  });

  const Lexicon estimates = in_stage("estimate", [&] {
    const OfflineCorpus corpus = OfflineCorpus::load(config.corpus, config.sample_seed);
    EstimationRun run =
        estimate_all(vocabulary, corpus, seed, {config.max_docs, config.workers});
    for (const auto& f : run.failures) {
      diagnostics << "estimate: " << f.term << ": " << f.message << '\n';
    }
    result.estimation_failures = run.failures.size();
    write_file(out / artifacts::kEstimates, export_staged(run.labeled));
    return std::move(run.labeled);
  });

  const Lexicon propagated = in_stage("propagate", [&] {
    PropagationResult run =
        propagate(build_graph(vocabulary), propagation_seeds(seed, estimates));
    result.propagation_iterations = run.iterations;
    result.unreached = run.unreached.size();
    write_file(out / artifacts::kPropagated, export_staged(run.labeled));
    return std::move(run.labeled);
  });

  result.final_lexicon = in_stage("assemble", [&] {
    Lexicon final_lexicon = assemble(seed, estimates, propagated);
    write_file(out / artifacts::kFinal, export_staged(final_lexicon));
    return final_lexicon;
  });

  result.report = in_stage("export", [&] {
    write_file(out / artifacts::kDiagnostics, diagnostics.str());
    return export_all(result.final_lexicon,
                      {out / artifacts::kSlangSD, out / artifacts::kIdiomTable,
                       out / artifacts::kReportText, out / artifacts::kReportJson});
  });
  return result;
}

}  // namespace slanglex
