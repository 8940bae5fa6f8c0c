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

// End-to-end construction: ingest, seed merge, corpus estimation,
// propagation, assembly and export. Each stage persists its output in the
// module file formats so a run can be resumed from any intermediate file.

#ifndef SLANGLEX_PIPELINE_H_
#define SLANGLEX_PIPELINE_H_

#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "slanglex/corpus_estimator.h"
#include "slanglex/errors.h"
#include "slanglex/ingestion.h"
#include "slanglex/lexicon.h"
#include "slanglex/propagation.h"

namespace slanglex {

struct SeedLexiconConfig {
  std::string id;
  std::filesystem::path path;
  ScaleMap scale;
};

struct PipelineConfig {
  std::vector<std::filesystem::path> entry_files;
  std::vector<SeedLexiconConfig> seed_lexicons;
  std::filesystem::path corpus;
  std::filesystem::path output_dir;
  std::size_t max_docs = kDefaultMaxDocs;
  std::uint64_t sample_seed = 0;
  IngestMode ingest_mode = IngestMode::kLenient;
  unsigned workers = 1;
};

// JSON configuration. Relative paths resolve against the file's directory.
//
//   {"entries": ["entries.jsonl"],
//    "seed_lexicons": [{"id": "a", "path": "a.tsv",
//                       "scale": {"from": [-5, 5], "to": [-2, 2]}},
//                      {"id": "b", "path": "b.tsv",
//                       "scale": {"factor": 1, "offset": 0}}],
//    "corpus": "corpus.tsv", "output_dir": "out",
//    "max_docs": 150, "sample_seed": 0, "ingest_mode": "lenient", "workers": 1}
//
// Throws ConfigError.
PipelineConfig load_pipeline_config(const std::filesystem::path& path);
PipelineConfig parse_pipeline_config(std::string_view json_text,
                                     const std::filesystem::path& base_dir);

// Checks max_docs, seed ids and that every input path exists. Throws
// ConfigError.
void validate(const PipelineConfig& config);

// Names of the persisted artifacts inside output_dir.
namespace artifacts {
inline constexpr const char* kVocabulary = "vocabulary.jsonl";
inline constexpr const char* kSeed = "seed.lex";
inline constexpr const char* kEstimates = "estimates.lex";
inline constexpr const char* kPropagated = "propagated.lex";
inline constexpr const char* kFinal = "final.lex";
inline constexpr const char* kSlangSD = "SlangSD.txt";
inline constexpr const char* kIdiomTable = "IdiomLookupTable.slangsd.txt";
inline constexpr const char* kReportText = "stage_report.txt";
inline constexpr const char* kReportJson = "stage_report.json";
inline constexpr const char* kDiagnostics = "diagnostics.txt";
}  // namespace artifacts

// A fatal error inside one pipeline stage. cause() holds the original
// exception.
class StageError : public Error {
 public:
  StageError(std::string stage, std::exception_ptr cause, const std::string& what)
      : Error("stage '" + stage + "': " + what), stage_(std::move(stage)), cause_(cause) {}
  const std::string& stage() const { return stage_; }
  std::exception_ptr cause() const { return cause_; }

 private:
  std::string stage_;
  std::exception_ptr cause_;
};

std::vector<SeedSource> load_seed_sources(const std::vector<SeedLexiconConfig>& configs);

// Union of the three stage outputs. A term keeps the label of the earliest
// stage that produced it.
Lexicon assemble(const Lexicon& seed, const Lexicon& estimates, const Lexicon& propagated);

// Seeds for propagation: every labeled term from the first two stages.
Lexicon propagation_seeds(const Lexicon& seed, const Lexicon& estimates);

struct ExportPaths {
  std::filesystem::path slangsd;
  std::filesystem::path idiom_table;
  std::filesystem::path report_text;
  std::filesystem::path report_json;
};

// Writes SlangSD, idiom table and stage report for `final_lexicon`.
StageReport export_all(const Lexicon& final_lexicon, const ExportPaths& paths);

struct PipelineResult {
  Lexicon final_lexicon;
  StageReport report;
  std::size_t vocabulary_size = 0;
  std::size_t skipped_records = 0;
  std::size_t estimation_failures = 0;
  std::size_t propagation_iterations = 0;
  std::size_t unreached = 0;
};

// Validates, then runs every stage and persists all artifacts. Throws
// ConfigError before doing any work, StageError afterwards.
PipelineResult run_pipeline(const PipelineConfig& config);

}  // namespace slanglex

#endif  // SLANGLEX_PIPELINE_H_
