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

// Text formats for lexicons.
//
//   SlangSD       term<TAB>class, sorted by term, LF-terminated. Classes only.
//   Idiom table   term<TAB>2*class for non-neutral terms, in the layout of
//                 SentiStrength's IdiomLookupTable.txt.
//   Staged        header line, then term<TAB>strength<TAB>stage<TAB>sources.
//                 Lossless; used for intermediate pipeline artifacts.
//   Seed source   term<TAB>native value, '#' comments. Input to the merge.

#ifndef SLANGLEX_LEXICON_IO_H_
#define SLANGLEX_LEXICON_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "slanglex/lexicon.h"

namespace slanglex {

inline constexpr std::string_view kStagedHeader = "#slanglex-staged-lexicon\tv1";

std::string export_slangsd(const Lexicon& lexicon);
// Inverse of export_slangsd up to quantization: strength = class value,
// stage = kImported. Throws ParseError with the offending line number.
Lexicon parse_slangsd(std::istream& in);

std::string export_idiom_table(const Lexicon& lexicon);

std::string export_staged(const Lexicon& lexicon);
Lexicon parse_staged(std::istream& in);

// Reads either the staged or the SlangSD format, chosen by the first line.
// Gzip-compressed files are read transparently.
Lexicon load_lexicon(const std::filesystem::path& path);

SeedSource parse_seed_source(std::istream& in, std::string id, ScaleMap scale);
SeedSource load_seed_source(const std::filesystem::path& path, std::string id,
                            ScaleMap scale);

}  // namespace slanglex

#endif  // SLANGLEX_LEXICON_IO_H_
