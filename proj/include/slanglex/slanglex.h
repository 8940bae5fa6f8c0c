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

/* C interface to libslanglex.
 *
 * Objects are opaque handles created by slx_*_create/load/open functions and
 * released with the matching slx_*_free. Every fallible call returns an
 * slx_status; on failure slx_last_error() describes it (per thread, valid
 * until the next failing call on that thread). Strings returned through
 * char** out-parameters are owned by the caller and released with
 * slx_string_free. Handles are not synchronized: a handle may be read from
 * several threads only if none of them modifies it.
 */

#ifndef SLANGLEX_SLANGLEX_H_
#define SLANGLEX_SLANGLEX_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SLANGLEX_BUILDING)
#define SLX_API __declspec(dllexport)
#else
#define SLX_API __declspec(dllimport)
#endif
#else
#define SLX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum slx_status {
  SLX_OK = 0,
  SLX_ERR_ARGUMENT = 1,
  SLX_ERR_CONFIG = 2,
  SLX_ERR_IO = 3,
  SLX_ERR_PARSE = 4,
  SLX_ERR_INGEST = 5,
  SLX_ERR_NORMALIZATION = 6,
  SLX_ERR_SCALE = 7,
  SLX_ERR_RANGE = 8,
  SLX_ERR_PROVIDER = 9,
  SLX_ERR_EMPTY_EVALUATION = 10,
  SLX_ERR_NOT_FOUND = 11,
  SLX_ERR_INTERNAL = 99
} slx_status;

typedef enum slx_stage {
  SLX_STAGE_SEED_LEXICON = 0,
  SLX_STAGE_CORPUS_ESTIMATE = 1,
  SLX_STAGE_PROPAGATION = 2,
  SLX_STAGE_IMPORTED = 3
} slx_stage;

typedef enum slx_format {
  SLX_FORMAT_SLANGSD = 0,     /* term<TAB>class */
  SLX_FORMAT_IDIOM_TABLE = 1, /* term<TAB>2*class, non-neutral only */
  SLX_FORMAT_STAGED = 2       /* lossless intermediate format */
} slx_format;

typedef enum slx_polarity {
  SLX_POSITIVE = 0,
  SLX_NEGATIVE = 1,
  SLX_NEUTRAL = 2
} slx_polarity;

typedef enum slx_subset { SLX_SUBSET_ALL = 0, SLX_SUBSET_SLANG = 1 } slx_subset;

typedef struct slx_lexicon slx_lexicon;
typedef struct slx_vocabulary slx_vocabulary;
typedef struct slx_corpus slx_corpus;
typedef struct slx_emoticons slx_emoticons;
typedef struct slx_seed_builder slx_seed_builder;

SLX_API const char* slx_version(void);
SLX_API const char* slx_last_error(void);
/* Pipeline stage of the last failure, or "" when it did not come from one. */
SLX_API const char* slx_last_error_stage(void);
SLX_API void slx_string_free(char* s);

SLX_API slx_status slx_normalize_term(const char* raw, char** out);
/* date is "YYYY-MM-DD". */
SLX_API slx_status slx_extension_url(const char* date, char** out);
/* One URL per line for every date in [from, to]; empty when from > to. */
SLX_API slx_status slx_extension_urls(const char* from, const char* to, char** out);

/* Lexicons ---------------------------------------------------------------- */

/* Staged or SlangSD format, detected from the first line; gzip is accepted. */
SLX_API slx_status slx_lexicon_load(const char* path, slx_lexicon** out);
SLX_API slx_status slx_lexicon_parse(const char* text, size_t length, slx_lexicon** out);
SLX_API void slx_lexicon_free(slx_lexicon* lexicon);
SLX_API size_t slx_lexicon_size(const slx_lexicon* lexicon);
/* SLX_ERR_NOT_FOUND when the normalized term is absent. Outputs may be NULL. */
SLX_API slx_status slx_lexicon_lookup(const slx_lexicon* lexicon, const char* term,
                                      double* strength, int* sentiment_class,
                                      slx_stage* stage);
SLX_API slx_status slx_lexicon_export(const slx_lexicon* lexicon, slx_format format,
                                      char** out);
SLX_API slx_status slx_lexicon_save(const slx_lexicon* lexicon, slx_format format,
                                    const char* path);
/* Stage and class counts. Either output may be NULL. */
SLX_API slx_status slx_lexicon_report(const slx_lexicon* lexicon, char** text, char** json);
/* Earliest stage wins. estimates and propagated may be NULL. */
SLX_API slx_status slx_lexicon_assemble(const slx_lexicon* seed, const slx_lexicon* estimates,
                                        const slx_lexicon* propagated, slx_lexicon** out);

/* Seed-lexicon merge --------------------------------------------------------- */

SLX_API slx_status slx_seed_builder_create(slx_seed_builder** out);
SLX_API void slx_seed_builder_free(slx_seed_builder* builder);
/* Source file of term<TAB>value lines; mapped = factor * value + offset. */
SLX_API slx_status slx_seed_builder_add_file(slx_seed_builder* builder, const char* id,
                                             const char* path, double factor, double offset);
/* Adds every seed lexicon listed in a pipeline configuration file. */
SLX_API slx_status slx_seed_builder_add_config(slx_seed_builder* builder,
                                               const char* config_path);
SLX_API slx_status slx_seed_builder_build(const slx_seed_builder* builder, slx_lexicon** out);

/* Vocabulary ---------------------------------------------------------------- */

/* diagnostics (may be NULL) receives one line per skipped record. */
SLX_API slx_status slx_vocabulary_ingest(const char* const* paths, size_t count, int strict,
                                         slx_vocabulary** out, char** diagnostics);
SLX_API void slx_vocabulary_free(slx_vocabulary* vocabulary);
SLX_API size_t slx_vocabulary_size(const slx_vocabulary* vocabulary);
SLX_API slx_status slx_vocabulary_save(const slx_vocabulary* vocabulary, const char* path);

/* Fetches [from, to] from <fetch_dir>/YYYY-MM-DD.jsonl[.gz] and writes the
 * entries to out_path. Dates that fail are listed in report and counted in
 * failures; SLX_ERR_PROVIDER only when every date failed. */
SLX_API slx_status slx_extend(const char* fetch_dir, const char* from, const char* to,
                              int strict, const char* out_path, char** report,
                              size_t* failures);

/* Corpus estimation ----------------------------------------------------------- */

SLX_API slx_status slx_corpus_open(const char* path, uint64_t sample_seed, slx_corpus** out);
SLX_API void slx_corpus_free(slx_corpus* corpus);
SLX_API size_t slx_corpus_size(const slx_corpus* corpus);
/* labeled is set to 0 when no document contains the term. */
SLX_API slx_status slx_estimate_term(const slx_corpus* corpus, const slx_lexicon* seed,
                                     const char* term, size_t max_docs, double* strength,
                                     int* labeled);
SLX_API slx_status slx_estimate_all(const slx_vocabulary* vocabulary, const slx_corpus* corpus,
                                    const slx_lexicon* seed, size_t max_docs,
                                    unsigned workers, slx_lexicon** out, char** diagnostics);

/* Propagation ---------------------------------------------------------------- */

typedef struct slx_propagation_stats {
  size_t nodes;
  size_t edges;
  size_t labeled;
  size_t unreached;
  size_t iterations;
} slx_propagation_stats;

SLX_API slx_status slx_propagate(const slx_vocabulary* vocabulary, const slx_lexicon* seeds,
                                 slx_lexicon** out, slx_propagation_stats* stats);

/* Pipeline ------------------------------------------------------------------- */

typedef struct slx_pipeline_overrides {
  const char* output_dir; /* NULL: keep */
  int64_t max_docs;       /* <= 0: keep */
  int has_sample_seed;
  uint64_t sample_seed;
  int ingest_mode; /* -1 keep, 0 strict, 1 lenient */
  unsigned workers; /* 0: keep */
} slx_pipeline_overrides;

SLX_API void slx_pipeline_overrides_init(slx_pipeline_overrides* overrides);
/* summary receives the stage report text. */
SLX_API slx_status slx_pipeline_run(const char* config_path,
                                    const slx_pipeline_overrides* overrides, char** summary);

/* Scoring and evaluation -------------------------------------------------------- */

/* matches_json (may be NULL) receives [{"term":..,"first":..,"last":..,"strength":..}]. */
SLX_API slx_status slx_score_text(const slx_lexicon* lexicon, const char* text, double* total,
                                  slx_polarity* polarity, char** matches_json);
/* Scores an id<TAB>text corpus; out receives id<TAB>polarity<TAB>total lines. */
SLX_API slx_status slx_score_corpus(const slx_lexicon* lexicon, const char* corpus_path,
                                    char** out);

/* path NULL loads the built-in set. */
SLX_API slx_status slx_emoticons_load(const char* path, slx_emoticons** out);
SLX_API void slx_emoticons_free(slx_emoticons* emoticons);
/* Reads id<TAB>text, writes id<TAB>gold<TAB>text for labeled documents. */
SLX_API slx_status slx_label_corpus(const char* in_path, const slx_emoticons* emoticons,
                                    const char* out_path, char** report_json);

SLX_API slx_status slx_evaluate(const slx_lexicon* lexicon, const char* labeled_path,
                                slx_subset subset, char** text, char** json);

#ifdef __cplusplus
}
#endif

#endif /* SLANGLEX_SLANGLEX_H_ */
