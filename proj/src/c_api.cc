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

#include "slanglex/slanglex.h"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "json.hpp"
#include "slanglex/corpus_estimator.h"
#include "slanglex/distant_labeler.h"
#include "slanglex/errors.h"
#include "slanglex/files.h"
#include "slanglex/ingestion.h"
#include "slanglex/lexicon.h"
#include "slanglex/lexicon_io.h"
#include "slanglex/pipeline.h"
#include "slanglex/propagation.h"
#include "slanglex/scorer.h"

struct slx_lexicon {
  slanglex::Lexicon lexicon;
};
struct slx_vocabulary {
  slanglex::Vocabulary vocabulary;
};
struct slx_corpus {
  slanglex::OfflineCorpus corpus;
};
struct slx_emoticons {
  slanglex::EmoticonSet set;
};
struct slx_seed_builder {
  std::vector<slanglex::SeedSource> sources;
};

namespace {

using namespace slanglex;

thread_local std::string g_last_error;
thread_local std::string g_last_stage;

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

slx_status classify_current() {
  try {
    throw;
  } catch (const StageError& e) {
    g_last_error = e.what();
    const std::string stage = e.stage();
    slx_status status = SLX_ERR_INTERNAL;
    try {
      std::rethrow_exception(e.cause());
    } catch (...) {
      status = classify_current();
    }
    g_last_error = e.what();
    g_last_stage = stage;
    return status;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    g_last_stage.clear();
    try {
      throw;
    } catch (const ArgumentError&) {
      return SLX_ERR_ARGUMENT;
    } catch (const std::invalid_argument&) {
      return SLX_ERR_ARGUMENT;
    } catch (const ConfigError&) {
      return SLX_ERR_CONFIG;
    } catch (const IoError&) {
      return SLX_ERR_IO;
    } catch (const ParseError&) {
      return SLX_ERR_PARSE;
    } catch (const IngestError&) {
      return SLX_ERR_INGEST;
    } catch (const NormalizationError&) {
      return SLX_ERR_NORMALIZATION;
    } catch (const ScaleError&) {
      return SLX_ERR_SCALE;
    } catch (const RangeError&) {
      return SLX_ERR_RANGE;
    } catch (const ProviderError&) {
      return SLX_ERR_PROVIDER;
    } catch (const EstimationError&) {
      return SLX_ERR_PROVIDER;
    } catch (const EmptyEvaluationError&) {
      return SLX_ERR_EMPTY_EVALUATION;
    } catch (const NotFoundError&) {
      return SLX_ERR_NOT_FOUND;
    } catch (...) {
      return SLX_ERR_INTERNAL;
    }
  } catch (...) {
    g_last_error = "unknown error";
    g_last_stage.clear();
    return SLX_ERR_INTERNAL;
  }
}

template <typename F>
slx_status guard(F&& body) {
  try {
    body();
    return SLX_OK;
  } catch (...) {
    return classify_current();
  }
}

void require(const void* p, const char* name) {
  if (!p) throw ArgumentError(std::string(name) + " must not be NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

void set_string(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

Date date_or_throw(const char* text) {
  require(text, "date");
  auto date = parse_date(text);
  if (!date) throw ArgumentError(std::string("not a YYYY-MM-DD date: '") + text + "'");
  return *date;
}

}  // namespace

extern "C" {

const char* slx_version(void) { return "1.0.0"; }
const char* slx_last_error(void) { return g_last_error.c_str(); }
const char* slx_last_error_stage(void) { return g_last_stage.c_str(); }
void slx_string_free(char* s) { std::free(s); }

slx_status slx_normalize_term(const char* raw, char** out) {
  return guard([&] {
    require(raw, "raw");
    require(out, "out");
    *out = dup(normalize_term(raw));
  });
}

slx_status slx_extension_url(const char* date, char** out) {
  return guard([&] {
    require(out, "out");
    *out = dup(extension_url(date_or_throw(date)));
  });
}

slx_status slx_extension_urls(const char* from, const char* to, char** out) {
  return guard([&] {
    require(out, "out");
    using std::chrono::sys_days;
    std::string urls;
    for (sys_days d = sys_days(date_or_throw(from)); d <= sys_days(date_or_throw(to));
         d += std::chrono::days(1)) {
      urls += extension_url(Date(d)) + "\n";
    }
    *out = dup(urls);
  });
}

slx_status slx_lexicon_load(const char* path, slx_lexicon** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new slx_lexicon{load_lexicon(path)};
  });
}

slx_status slx_lexicon_parse(const char* text, size_t length, slx_lexicon** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    std::istringstream in(std::string(text, length));
    const bool staged = std::string_view(text, length).starts_with(kStagedHeader);
    *out = new slx_lexicon{staged ? parse_staged(in) : parse_slangsd(in)};
  });
}

void slx_lexicon_free(slx_lexicon* lexicon) { delete lexicon; }

size_t slx_lexicon_size(const slx_lexicon* lexicon) {
  return lexicon ? lexicon->lexicon.size() : 0;
}

slx_status slx_lexicon_lookup(const slx_lexicon* lexicon, const char* term, double* strength,
                              int* sentiment_class, slx_stage* stage) {
  return guard([&] {
    require(lexicon, "lexicon");
    require(term, "term");
    const LexiconEntry* entry = lexicon->lexicon.find(normalize_term(term));
    if (!entry) throw NotFoundError(std::string("term not in lexicon: '") + term + "'");
    if (strength) *strength = entry->strength.value();
    if (sentiment_class) *sentiment_class = classify(entry->strength).value();
    if (stage) *stage = static_cast<slx_stage>(entry->stage);
  });
}

slx_status slx_lexicon_export(const slx_lexicon* lexicon, slx_format format, char** out) {
  return guard([&] {
    require(lexicon, "lexicon");
    require(out, "out");
    switch (format) {
      case SLX_FORMAT_SLANGSD:
        *out = dup(export_slangsd(lexicon->lexicon));
        return;
      case SLX_FORMAT_IDIOM_TABLE:
        *out = dup(export_idiom_table(lexicon->lexicon));
        return;
      case SLX_FORMAT_STAGED:
        *out = dup(export_staged(lexicon->lexicon));
        return;
    }
    throw ArgumentError("unknown format");
  });
}

slx_status slx_lexicon_save(const slx_lexicon* lexicon, slx_format format, const char* path) {
  char* text = nullptr;
  slx_status status = slx_lexicon_export(lexicon, format, &text);
  if (status != SLX_OK) return status;
  status = guard([&] {
    require(path, "path");
    write_file(path, text);
  });
  slx_string_free(text);
  return status;
}

slx_status slx_lexicon_report(const slx_lexicon* lexicon, char** text, char** json) {
  return guard([&] {
    require(lexicon, "lexicon");
    const StageReport report = stage_report(lexicon->lexicon);
    set_string(text, report.render_text());
    set_string(json, report.render_json());
  });
}

slx_status slx_lexicon_assemble(const slx_lexicon* seed, const slx_lexicon* estimates,
                                const slx_lexicon* propagated, slx_lexicon** out) {
  return guard([&] {
    require(seed, "seed");
    require(out, "out");
    const Lexicon empty;
    *out = new slx_lexicon{assemble(seed->lexicon, estimates ? estimates->lexicon : empty,
                                    propagated ? propagated->lexicon : empty)};
  });
}

slx_status slx_seed_builder_create(slx_seed_builder** out) {
  return guard([&] {
    require(out, "out");
    *out = new slx_seed_builder{};
  });
}

void slx_seed_builder_free(slx_seed_builder* builder) { delete builder; }

slx_status slx_seed_builder_add_file(slx_seed_builder* builder, const char* id,
                                     const char* path, double factor, double offset) {
  return guard([&] {
    require(builder, "builder");
    require(id, "id");
    require(path, "path");
    if (!(factor > 0)) throw ScaleError("scale factor must be positive");
    auto loaded = load_seed_sources({{id, path, ScaleMap{factor, offset}}});
    builder->sources.push_back(std::move(loaded.front()));
  });
}

slx_status slx_seed_builder_add_config(slx_seed_builder* builder, const char* config_path) {
  return guard([&] {
    require(builder, "builder");
    require(config_path, "config_path");
    const PipelineConfig config = load_pipeline_config(config_path);
    for (auto& s : load_seed_sources(config.seed_lexicons)) builder->sources.push_back(std::move(s));
  });
}

slx_status slx_seed_builder_build(const slx_seed_builder* builder, slx_lexicon** out) {
  return guard([&] {
    require(builder, "builder");
    require(out, "out");
    *out = new slx_lexicon{merge_seed_lexicons(builder->sources)};
  });
}

slx_status slx_vocabulary_ingest(const char* const* paths, size_t count, int strict,
                                 slx_vocabulary** out, char** diagnostics) {
  return guard([&] {
    require(out, "out");
    if (count) require(paths, "paths");
    std::vector<std::filesystem::path> files;
    for (size_t i = 0; i < count; ++i) {
      require(paths[i], "paths[i]");
      files.emplace_back(paths[i]);
    }
    IngestResult result =
        load_entries(files, strict ? IngestMode::kStrict : IngestMode::kLenient);
    std::string report;
    for (const auto& issue : result.skipped) {
      report += "skipped line " + std::to_string(issue.line) + ": " + issue.message + "\n";
    }
    *out = new slx_vocabulary{build_vocabulary(result.entries)};
    set_string(diagnostics, report);
  });
}

void slx_vocabulary_free(slx_vocabulary* vocabulary) { delete vocabulary; }

size_t slx_vocabulary_size(const slx_vocabulary* vocabulary) {
  return vocabulary ? vocabulary->vocabulary.size() : 0;
}

slx_status slx_vocabulary_save(const slx_vocabulary* vocabulary, const char* path) {
  return guard([&] {
    require(vocabulary, "vocabulary");
    require(path, "path");
    std::string text;
    for (const SlangEntry& e : vocabulary->vocabulary.entries()) text += serialize_entry(e) + "\n";
    write_file(path, text);
  });
}

slx_status slx_extend(const char* fetch_dir, const char* from, const char* to, int strict,
                      const char* out_path, char** report, size_t* failures) {
  return guard([&] {
    require(fetch_dir, "fetch_dir");
    require(out_path, "out_path");
    const Date first = date_or_throw(from);
    const Date last = date_or_throw(to);
    DirectoryFetcher fetcher(fetch_dir);
    FetchReport fetched =
        fetch_new_entries(fetcher, first, last, strict ? IngestMode::kStrict : IngestMode::kLenient);
    std::string text;
    for (const SlangEntry& e : fetched.entries) text += serialize_entry(e) + "\n";
    write_file(out_path, text);

    std::string summary = "dates " + std::to_string(fetched.dates_requested) + ", entries " +
                          std::to_string(fetched.entries.size()) + ", failures " +
                          std::to_string(fetched.failures.size()) + "\n";
    for (const auto& f : fetched.failures) summary += format_date(f.date) + ": " + f.message + "\n";
    for (const auto& s : fetched.skipped) {
      summary += "skipped line " + std::to_string(s.line) + ": " + s.message + "\n";
    }
    set_string(report, summary);
    if (failures) *failures = fetched.failures.size();
    if (fetched.dates_requested > 0 && fetched.failures.size() == fetched.dates_requested) {
      throw ProviderError("every requested date failed to fetch");
    }
  });
}

slx_status slx_corpus_open(const char* path, uint64_t sample_seed, slx_corpus** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new slx_corpus{OfflineCorpus::load(path, sample_seed)};
  });
}

void slx_corpus_free(slx_corpus* corpus) { delete corpus; }

size_t slx_corpus_size(const slx_corpus* corpus) { return corpus ? corpus->corpus.size() : 0; }

slx_status slx_estimate_term(const slx_corpus* corpus, const slx_lexicon* seed, const char* term,
                             size_t max_docs, double* strength, int* labeled) {
  return guard([&] {
    require(corpus, "corpus");
    require(seed, "seed");
    require(term, "term");
    require(strength, "strength");
    require(labeled, "labeled");
    auto estimate = estimate_strength(normalize_term(term), corpus->corpus, seed->lexicon, max_docs);
    *labeled = estimate.has_value();
    *strength = estimate ? estimate->value() : 0.0;
  });
}

slx_status slx_estimate_all(const slx_vocabulary* vocabulary, const slx_corpus* corpus,
                            const slx_lexicon* seed, size_t max_docs, unsigned workers,
                            slx_lexicon** out, char** diagnostics) {
  return guard([&] {
    require(vocabulary, "vocabulary");
    require(corpus, "corpus");
    require(seed, "seed");
    require(out, "out");
    EstimationRun run = estimate_all(vocabulary->vocabulary, corpus->corpus, seed->lexicon,
                                     {max_docs, workers});
    std::string report = "attempted " + std::to_string(run.attempted) + ", labeled " +
                         std::to_string(run.labeled.size()) + ", unlabelable " +
                         std::to_string(run.unlabelable.size()) + ", failed " +
                         std::to_string(run.failures.size()) + "\n";
    for (const auto& f : run.failures) report += f.term + ": " + f.message + "\n";
    *out = new slx_lexicon{std::move(run.labeled)};
    set_string(diagnostics, report);
  });
}

slx_status slx_propagate(const slx_vocabulary* vocabulary, const slx_lexicon* seeds,
                         slx_lexicon** out, slx_propagation_stats* stats) {
  return guard([&] {
    require(vocabulary, "vocabulary");
    require(seeds, "seeds");
    require(out, "out");
    const SynonymGraph graph = build_graph(vocabulary->vocabulary);
    PropagationResult result = propagate(graph, seeds->lexicon);
    if (stats) {
      stats->nodes = graph.node_count();
      stats->edges = graph.edge_count();
      stats->labeled = result.labeled.size();
      stats->unreached = result.unreached.size();
      stats->iterations = result.iterations;
    }
    *out = new slx_lexicon{std::move(result.labeled)};
  });
}

void slx_pipeline_overrides_init(slx_pipeline_overrides* overrides) {
  if (!overrides) return;
  overrides->output_dir = nullptr;
  overrides->max_docs = 0;
  overrides->has_sample_seed = 0;
  overrides->sample_seed = 0;
  overrides->ingest_mode = -1;
  overrides->workers = 0;
}

slx_status slx_pipeline_run(const char* config_path, const slx_pipeline_overrides* overrides,
                            char** summary) {
  return guard([&] {
    require(config_path, "config_path");
    PipelineConfig config = load_pipeline_config(config_path);
    if (overrides) {
      if (overrides->output_dir) config.output_dir = overrides->output_dir;
      if (overrides->max_docs > 0) config.max_docs = static_cast<std::size_t>(overrides->max_docs);
      if (overrides->has_sample_seed) config.sample_seed = overrides->sample_seed;
      if (overrides->ingest_mode == 0) config.ingest_mode = IngestMode::kStrict;
      if (overrides->ingest_mode == 1) config.ingest_mode = IngestMode::kLenient;
      if (overrides->workers > 0) config.workers = overrides->workers;
    }
    const PipelineResult result = run_pipeline(config);
    std::string text = "vocabulary " + std::to_string(result.vocabulary_size) +
                       ", skipped records " + std::to_string(result.skipped_records) +
                       ", estimation failures " + std::to_string(result.estimation_failures) +
                       ", propagation iterations " +
                       std::to_string(result.propagation_iterations) + ", unreached " +
                       std::to_string(result.unreached) + "\n\n" + result.report.render_text();
    set_string(summary, text);
  });
}

slx_status slx_score_text(const slx_lexicon* lexicon, const char* text, double* total,
                          slx_polarity* polarity, char** matches_json) {
  return guard([&] {
    require(lexicon, "lexicon");
    require(text, "text");
    const ScoreBreakdown score = score_text(text, lexicon->lexicon);
    if (total) *total = score.total;
    if (polarity) *polarity = static_cast<slx_polarity>(score.polarity);
    if (matches_json) {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const TermMatch& m : score.matches) {
        j.push_back({{"term", m.term},
                     {"first", m.span.first},
                     {"last", m.span.last},
                     {"strength", m.strength}});
      }
      *matches_json = dup(j.dump());
    }
  });
}

slx_status slx_score_corpus(const slx_lexicon* lexicon, const char* corpus_path, char** out) {
  return guard([&] {
    require(lexicon, "lexicon");
    require(corpus_path, "corpus_path");
    require(out, "out");
    const PhraseMatcher matcher(lexicon->lexicon);
    std::string text;
    for (const auto& [id, raw] : parse_id_text_lines(read_file(corpus_path))) {
      const ScoreBreakdown score = score_tokens(tokenize(raw), matcher);
      char total[32];
      std::snprintf(total, sizeof total, "%.6g", score.total);
      text += id + "\t" + std::string(polarity_name(score.polarity)) + "\t" + total + "\n";
    }
    *out = dup(text);
  });
}

slx_status slx_emoticons_load(const char* path, slx_emoticons** out) {
  return guard([&] {
    require(out, "out");
    *out = new slx_emoticons{path ? EmoticonSet::load(path) : EmoticonSet::defaults()};
  });
}

void slx_emoticons_free(slx_emoticons* emoticons) { delete emoticons; }

slx_status slx_label_corpus(const char* in_path, const slx_emoticons* emoticons,
                            const char* out_path, char** report_json) {
  return guard([&] {
    require(in_path, "in_path");
    require(emoticons, "emoticons");
    require(out_path, "out_path");
    std::istringstream in(read_file(in_path));
    const EvalCorpus corpus = build_eval_corpus(in, emoticons->set);
    write_file(out_path, serialize_labeled_corpus(corpus.documents));
    if (report_json) {
      const LabelingReport& r = corpus.report;
      nlohmann::ordered_json j{{"read", r.read},
                               {"positive", r.positive},
                               {"negative", r.negative},
                               {"discarded_conflict", r.discarded_conflict},
                               {"discarded_no_emoticon", r.discarded_no_emoticon}};
      *report_json = dup(j.dump(2) + "\n");
    }
  });
}

slx_status slx_evaluate(const slx_lexicon* lexicon, const char* labeled_path, slx_subset subset,
                        char** text, char** json) {
  return guard([&] {
    require(lexicon, "lexicon");
    require(labeled_path, "labeled_path");
    if (subset != SLX_SUBSET_ALL && subset != SLX_SUBSET_SLANG) throw ArgumentError("bad subset");
    const auto corpus = load_labeled_corpus(labeled_path);
    const EvaluationReport report = evaluate(
        corpus, lexicon->lexicon, subset == SLX_SUBSET_ALL ? Subset::kAll : Subset::kSlangOnly);
    set_string(text, report.render_text());
    set_string(json, report.render_json());
  });
}

}  // extern "C"
