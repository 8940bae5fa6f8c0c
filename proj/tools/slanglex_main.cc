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

// slanglex command-line tool. Every operation goes through the C API.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "slanglex/slanglex.h"

namespace {

// Exit codes: 0 success, 1 usage/config error, 2 data error, 3 provider error.
int exit_code(slx_status status) {
  switch (status) {
    case SLX_OK:
      return 0;
    case SLX_ERR_ARGUMENT:
    case SLX_ERR_CONFIG:
    case SLX_ERR_IO:
      return 1;
    case SLX_ERR_PROVIDER:
      return 3;
    default:
      return 2;
  }
}

struct Failure {
  slx_status status;
  std::string message;  // empty: take it from slx_last_error()
};

void check(slx_status status) {
  if (status != SLX_OK) throw Failure{status, {}};
}

struct StringDeleter {
  void operator()(char* s) const { slx_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct LexiconDeleter {
  void operator()(slx_lexicon* p) const { slx_lexicon_free(p); }
};
using Lexicon = std::unique_ptr<slx_lexicon, LexiconDeleter>;

struct VocabularyDeleter {
  void operator()(slx_vocabulary* p) const { slx_vocabulary_free(p); }
};
using Vocabulary = std::unique_ptr<slx_vocabulary, VocabularyDeleter>;

Lexicon load_lexicon(const std::string& path) {
  slx_lexicon* raw = nullptr;
  check(slx_lexicon_load(path.c_str(), &raw));
  return Lexicon(raw);
}

Vocabulary load_vocabulary(const std::vector<std::string>& paths, bool strict,
                           bool print_diagnostics) {
  std::vector<const char*> c_paths;
  for (const auto& p : paths) c_paths.push_back(p.c_str());
  slx_vocabulary* raw = nullptr;
  char* diagnostics = nullptr;
  check(slx_vocabulary_ingest(c_paths.data(), c_paths.size(), strict ? 1 : 0, &raw,
                              &diagnostics));
  OwnedString owned(diagnostics);
  if (print_diagnostics && diagnostics && *diagnostics) std::cerr << diagnostics;
  return Vocabulary(raw);
}

std::string take(char* s) {
  OwnedString owned(s);
  return s ? std::string(s) : std::string();
}

void write_text(const std::string& path, const std::string& text) {
  // Lexicon save is the only writer the C API exposes for arbitrary text, so
  // reports go through stdio here.
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw Failure{SLX_ERR_IO, "cannot write '" + path + "'"};
  std::fwrite(text.data(), 1, text.size(), f);
  std::fclose(f);
}

// report.txt -> report.json; report.json -> report.json.json.
std::string json_twin(const std::string& path) {
  std::filesystem::path twin(path);
  if (twin.extension() == ".json") return path + ".json";
  return twin.replace_extension(".json").string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build, apply and evaluate a slang sentiment lexicon."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(slx_version()));

  // run
  auto* run = app.add_subcommand("run", "Run the whole construction pipeline from a config file");
  std::string run_config;
  std::string run_output;
  std::int64_t run_max_docs = 0;
  std::optional<std::uint64_t> run_seed;
  bool run_strict = false;
  bool run_lenient = false;
  unsigned run_workers = 0;
  run->add_option("--config", run_config, "Pipeline configuration (JSON)")->required();
  run->add_option("--output-dir", run_output, "Override the output directory");
  run->add_option("--max-docs", run_max_docs, "Documents sampled per term")->check(CLI::PositiveNumber);
  run->add_option("--sample-seed", run_seed, "Seed for document sampling");
  auto* run_strict_flag = run->add_flag("--strict", run_strict, "Abort on malformed entry records");
  run->add_flag("--lenient", run_lenient, "Skip malformed entry records")->excludes(run_strict_flag);
  run->add_option("--workers", run_workers, "Estimation threads");

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Parse entry records and build the vocabulary");
  std::vector<std::string> ingest_inputs;
  std::string ingest_out;
  bool ingest_strict = false;
  bool ingest_lenient = false;
  ingest->add_option("--input", ingest_inputs, "Entry record files (.jsonl, .jsonl.gz)")
      ->required()
      ->check(CLI::ExistingFile);
  auto* ingest_strict_flag = ingest->add_flag("--strict", ingest_strict, "Abort on malformed records");
  ingest->add_flag("--lenient", ingest_lenient, "Skip malformed records (default)")
      ->excludes(ingest_strict_flag);
  ingest->add_option("--out", ingest_out, "Merged vocabulary output")->required();

  // seed
  auto* seed = app.add_subcommand("seed", "Merge seed lexicons into the first-stage lexicon");
  std::string seed_config;
  std::vector<std::string> seed_sources;
  std::string seed_out;
  seed->add_option("--config", seed_config, "Pipeline configuration listing seed lexicons");
  seed->add_option("--source", seed_sources, "Extra source as id=path[:factor[:offset]]");
  seed->add_option("--out", seed_out, "Staged lexicon output")->required();

  // estimate
  auto* estimate = app.add_subcommand("estimate", "Label terms from corpus co-occurrence");
  std::string est_corpus;
  std::string est_seed;
  std::vector<std::string> est_vocab;
  std::string est_term;
  std::string est_out;
  std::size_t est_max_docs = 150;
  std::uint64_t est_sample_seed = 0;
  unsigned est_workers = 1;
  estimate->add_option("--corpus", est_corpus, "Corpus file, id<TAB>text per line")->required();
  estimate->add_option("--seed", est_seed, "Seed lexicon")->required();
  estimate->add_option("--vocabulary", est_vocab, "Vocabulary / entry record files");
  estimate->add_option("--term", est_term, "Estimate a single term and print it");
  estimate->add_option("--max-docs", est_max_docs, "Documents sampled per term")
      ->check(CLI::PositiveNumber);
  estimate->add_option("--sample-seed", est_sample_seed, "Seed for document sampling");
  estimate->add_option("--workers", est_workers, "Estimation threads");
  estimate->add_option("--out", est_out, "Staged lexicon output");

  // propagate
  auto* prop = app.add_subcommand("propagate", "Propagate labels over the related-word graph");
  std::vector<std::string> prop_graph;
  std::vector<std::string> prop_seeds;
  std::string prop_out;
  std::string prop_report;
  prop->add_option("--graph-from", prop_graph, "Vocabulary / entry record files")->required();
  prop->add_option("--seeds", prop_seeds, "Labeled lexicons, earliest stage first")->required();
  prop->add_option("--out", prop_out, "Staged lexicon output (propagated terms only)");
  prop->add_option("--report", prop_report, "Report path; a .json twin is written next to it");

  // assemble
  auto* assemble = app.add_subcommand("assemble", "Combine stage outputs into the final lexicon");
  std::string asm_seed;
  std::string asm_est;
  std::string asm_prop;
  std::string asm_out;
  assemble->add_option("--seed", asm_seed, "Seed-stage lexicon")->required();
  assemble->add_option("--estimates", asm_est, "Corpus-stage lexicon");
  assemble->add_option("--propagated", asm_prop, "Propagation-stage lexicon");
  assemble->add_option("--out", asm_out, "Staged lexicon output")->required();

  // export
  auto* exp = app.add_subcommand("export", "Write SlangSD and idiom-table files");
  std::string exp_lexicon;
  std::string exp_slangsd;
  std::string exp_idioms;
  exp->add_option("--lexicon", exp_lexicon, "Lexicon to export")->required();
  exp->add_option("--slangsd", exp_slangsd, "SlangSD output (term<TAB>class)");
  exp->add_option("--idioms", exp_idioms, "Idiom lookup table output");

  // report
  auto* report = app.add_subcommand("report", "Stage and class counts of a lexicon");
  std::string rep_lexicon;
  std::string rep_json;
  report->add_option("--lexicon", rep_lexicon, "Lexicon")->required();
  report->add_option("--json", rep_json, "Also write the counts as JSON");

  // score
  auto* score = app.add_subcommand("score", "Score text with a lexicon");
  std::string score_lexicon;
  std::string score_text;
  std::string score_corpus;
  bool score_matches = false;
  score->add_option("--lexicon", score_lexicon, "Lexicon")->required();
  auto* score_text_opt = score->add_option("--text", score_text, "Text to score");
  score->add_option("--corpus", score_corpus, "Corpus file, id<TAB>text per line")
      ->excludes(score_text_opt);
  score->add_flag("--matches", score_matches, "Print matched terms as JSON");

  // evaluate
  auto* eval = app.add_subcommand("evaluate", "Accuracy and one-vs-all P/R/F on a labeled corpus");
  std::string eval_lexicon;
  std::string eval_corpus;
  std::string eval_subset = "all";
  std::string eval_json;
  eval->add_option("--lexicon", eval_lexicon, "Lexicon")->required();
  eval->add_option("--corpus", eval_corpus, "Labeled corpus, id<TAB>gold<TAB>text")->required();
  eval->add_option("--subset", eval_subset, "all or slang")
      ->check(CLI::IsMember({"all", "slang"}));
  eval->add_option("--json", eval_json, "Also write the report as JSON");

  // label
  auto* label = app.add_subcommand("label", "Label documents by emoticons");
  std::string label_corpus;
  std::string label_emoticons;
  std::string label_out;
  label->add_option("--corpus", label_corpus, "Corpus file, id<TAB>text per line")->required();
  label->add_option("--emoticons", label_emoticons, "Emoticon set file (default: built-in)");
  label->add_option("--out", label_out, "Labeled corpus output")->required();

  // extend
  auto* extend = app.add_subcommand("extend", "Fetch entries created in a date range");
  std::string ext_from;
  std::string ext_to;
  std::string ext_dir;
  std::string ext_out;
  bool ext_strict = false;
  bool ext_lenient = false;
  bool ext_urls = false;
  extend->add_option("--from", ext_from, "First date, YYYY-MM-DD")->required();
  extend->add_option("--to", ext_to, "Last date, YYYY-MM-DD")->required();
  extend->add_option("--fetch-dir", ext_dir, "Directory of YYYY-MM-DD.jsonl[.gz] files");
  extend->add_option("--out", ext_out, "Entry records output");
  extend->add_flag("--print-urls", ext_urls, "Only print the extension URLs");
  auto* ext_strict_flag = extend->add_flag("--strict", ext_strict, "Fail a date on any bad record");
  extend->add_flag("--lenient", ext_lenient, "Skip bad records (default)")->excludes(ext_strict_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; anything else is a usage error.
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*run) {
      slx_pipeline_overrides o;
      slx_pipeline_overrides_init(&o);
      if (!run_output.empty()) o.output_dir = run_output.c_str();
      o.max_docs = run_max_docs;
      if (run_seed) {
        o.has_sample_seed = 1;
        o.sample_seed = *run_seed;
      }
      if (run_strict) o.ingest_mode = 0;
      if (run_lenient) o.ingest_mode = 1;
      o.workers = run_workers;
      char* summary = nullptr;
      check(slx_pipeline_run(run_config.c_str(), &o, &summary));
      std::cout << take(summary);
    } else if (*ingest) {
      Vocabulary v = load_vocabulary(ingest_inputs, ingest_strict, true);
      check(slx_vocabulary_save(v.get(), ingest_out.c_str()));
      std::cerr << "vocabulary: " << slx_vocabulary_size(v.get()) << " terms\n";
    } else if (*seed) {
      if (seed_config.empty() && seed_sources.empty()) {
        std::cerr << "slanglex seed: give --config or at least one --source\n";
        return 1;
      }
      slx_seed_builder* builder = nullptr;
      check(slx_seed_builder_create(&builder));
      std::unique_ptr<slx_seed_builder, void (*)(slx_seed_builder*)> owned(builder,
                                                                          slx_seed_builder_free);
      if (!seed_config.empty()) check(slx_seed_builder_add_config(builder, seed_config.c_str()));
      for (const std::string& spec : seed_sources) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos) {
          std::cerr << "slanglex seed: --source expects id=path[:factor[:offset]]\n";
          return 1;
        }
        std::string rest = spec.substr(eq + 1);
        double factor = 1.0;
        double offset = 0.0;
        try {
          if (auto c1 = rest.find(':'); c1 != std::string::npos) {
            std::string nums = rest.substr(c1 + 1);
            rest.resize(c1);
            if (auto c2 = nums.find(':'); c2 != std::string::npos) {
              offset = std::stod(nums.substr(c2 + 1));
              nums.resize(c2);
            }
            factor = std::stod(nums);
          }
        } catch (const std::exception&) {
          std::cerr << "slanglex seed: bad scale in '" << spec << "'\n";
          return 1;
        }
        check(slx_seed_builder_add_file(builder, spec.substr(0, eq).c_str(), rest.c_str(), factor,
                                        offset));
      }
      slx_lexicon* raw = nullptr;
      check(slx_seed_builder_build(builder, &raw));
      Lexicon lexicon(raw);
      check(slx_lexicon_save(lexicon.get(), SLX_FORMAT_STAGED, seed_out.c_str()));
      std::cerr << "seed lexicon: " << slx_lexicon_size(lexicon.get()) << " terms\n";
    } else if (*estimate) {
      Lexicon seed_lexicon = load_lexicon(est_seed);
      slx_corpus* raw_corpus = nullptr;
      check(slx_corpus_open(est_corpus.c_str(), est_sample_seed, &raw_corpus));
      std::unique_ptr<slx_corpus, void (*)(slx_corpus*)> corpus(raw_corpus, slx_corpus_free);
      if (!est_term.empty()) {
        double strength = 0;
        int labeled = 0;
        check(slx_estimate_term(corpus.get(), seed_lexicon.get(), est_term.c_str(), est_max_docs,
                                &strength, &labeled));
        char* normalized = nullptr;
        check(slx_normalize_term(est_term.c_str(), &normalized));
        const std::string term = take(normalized);
        if (labeled) {
          std::printf("%s\t%.6f\n", term.c_str(), strength);
        } else {
          std::printf("%s\tunlabelable\n", term.c_str());
        }
      } else {
        if (est_vocab.empty() || est_out.empty()) {
          std::cerr << "slanglex estimate: --vocabulary and --out are required without --term\n";
          return 1;
        }
        Vocabulary v = load_vocabulary(est_vocab, false, false);
        slx_lexicon* raw = nullptr;
        char* diagnostics = nullptr;
        check(slx_estimate_all(v.get(), corpus.get(), seed_lexicon.get(), est_max_docs,
                               est_workers, &raw, &diagnostics));
        Lexicon labeled(raw);
        std::cerr << take(diagnostics);
        check(slx_lexicon_save(labeled.get(), SLX_FORMAT_STAGED, est_out.c_str()));
      }
    } else if (*prop) {
      Vocabulary v = load_vocabulary(prop_graph, false, false);
      Lexicon seeds = load_lexicon(prop_seeds.front());
      for (std::size_t i = 1; i < prop_seeds.size(); ++i) {
        Lexicon more = load_lexicon(prop_seeds[i]);
        slx_lexicon* combined = nullptr;
        check(slx_lexicon_assemble(seeds.get(), more.get(), nullptr, &combined));
        seeds.reset(combined);
      }
      slx_lexicon* raw = nullptr;
      slx_propagation_stats stats{};
      check(slx_propagate(v.get(), seeds.get(), &raw, &stats));
      Lexicon propagated(raw);
      if (!prop_out.empty()) {
        check(slx_lexicon_save(propagated.get(), SLX_FORMAT_STAGED, prop_out.c_str()));
      }
      std::string summary = "nodes " + std::to_string(stats.nodes) + ", edges " +
                            std::to_string(stats.edges) + ", labeled " +
                            std::to_string(stats.labeled) + ", unreached " +
                            std::to_string(stats.unreached) + ", iterations " +
                            std::to_string(stats.iterations) + "\n";
      std::cerr << summary;
      if (!prop_report.empty()) {
        slx_lexicon* combined = nullptr;
        check(slx_lexicon_assemble(seeds.get(), propagated.get(), nullptr, &combined));
        Lexicon all(combined);
        char* text = nullptr;
        char* json = nullptr;
        check(slx_lexicon_report(all.get(), &text, &json));
        write_text(prop_report, summary + "\n" + take(text));
        write_text(json_twin(prop_report), take(json));
      }
    } else if (*assemble) {
      Lexicon s = load_lexicon(asm_seed);
      Lexicon e = asm_est.empty() ? nullptr : load_lexicon(asm_est);
      Lexicon p = asm_prop.empty() ? nullptr : load_lexicon(asm_prop);
      slx_lexicon* raw = nullptr;
      check(slx_lexicon_assemble(s.get(), e.get(), p.get(), &raw));
      Lexicon final_lexicon(raw);
      check(slx_lexicon_save(final_lexicon.get(), SLX_FORMAT_STAGED, asm_out.c_str()));
      std::cerr << "final lexicon: " << slx_lexicon_size(final_lexicon.get()) << " terms\n";
    } else if (*exp) {
      Lexicon lexicon = load_lexicon(exp_lexicon);
      if (exp_slangsd.empty() && exp_idioms.empty()) {
        char* text = nullptr;
        check(slx_lexicon_export(lexicon.get(), SLX_FORMAT_SLANGSD, &text));
        std::cout << take(text);
      }
      if (!exp_slangsd.empty()) {
        check(slx_lexicon_save(lexicon.get(), SLX_FORMAT_SLANGSD, exp_slangsd.c_str()));
      }
      if (!exp_idioms.empty()) {
        check(slx_lexicon_save(lexicon.get(), SLX_FORMAT_IDIOM_TABLE, exp_idioms.c_str()));
      }
    } else if (*report) {
      Lexicon lexicon = load_lexicon(rep_lexicon);
      char* text = nullptr;
      char* json = nullptr;
      check(slx_lexicon_report(lexicon.get(), &text, &json));
      std::cout << take(text);
      const std::string json_text = take(json);
      if (!rep_json.empty()) write_text(rep_json, json_text);
    } else if (*score) {
      Lexicon lexicon = load_lexicon(score_lexicon);
      if (!score_corpus.empty()) {
        char* out = nullptr;
        check(slx_score_corpus(lexicon.get(), score_corpus.c_str(), &out));
        std::cout << take(out);
      } else {
        double total = 0;
        slx_polarity polarity = SLX_NEUTRAL;
        char* matches = nullptr;
        check(slx_score_text(lexicon.get(), score_text.c_str(), &total, &polarity,
                             score_matches ? &matches : nullptr));
        const char* names[] = {"positive", "negative", "neutral"};
        std::printf("%s\t%g\n", names[polarity], total);
        if (score_matches) std::cout << take(matches) << '\n';
      }
    } else if (*eval) {
      Lexicon lexicon = load_lexicon(eval_lexicon);
      char* text = nullptr;
      char* json = nullptr;
      check(slx_evaluate(lexicon.get(), eval_corpus.c_str(),
                         eval_subset == "slang" ? SLX_SUBSET_SLANG : SLX_SUBSET_ALL, &text,
                         &json));
      std::cout << take(text);
      const std::string json_text = take(json);
      if (!eval_json.empty()) write_text(eval_json, json_text);
    } else if (*label) {
      slx_emoticons* raw = nullptr;
      check(slx_emoticons_load(label_emoticons.empty() ? nullptr : label_emoticons.c_str(), &raw));
      std::unique_ptr<slx_emoticons, void (*)(slx_emoticons*)> set(raw, slx_emoticons_free);
      char* report_json = nullptr;
      check(slx_label_corpus(label_corpus.c_str(), set.get(), label_out.c_str(), &report_json));
      std::cout << take(report_json);
    } else if (*extend) {
      if (ext_urls) {
        char* urls = nullptr;
        check(slx_extension_urls(ext_from.c_str(), ext_to.c_str(), &urls));
        std::cout << take(urls);
      } else {
        if (ext_dir.empty() || ext_out.empty()) {
          std::cerr << "slanglex extend: --fetch-dir and --out are required\n";
          return 1;
        }
        char* summary = nullptr;
        std::size_t failures = 0;
        const slx_status status = slx_extend(ext_dir.c_str(), ext_from.c_str(), ext_to.c_str(),
                                             ext_strict ? 1 : 0, ext_out.c_str(), &summary,
                                             &failures);
        std::cerr << take(summary);
        check(status);
      }
    }
  } catch (const Failure& f) {
    const std::string stage = f.message.empty() ? slx_last_error_stage() : "";
    std::cerr << "slanglex: error";
    if (!stage.empty()) std::cerr << " in stage " << stage;
    std::cerr << ": " << (f.message.empty() ? slx_last_error() : f.message) << '\n';
    return exit_code(f.status);
  }
  return 0;
}
