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

#ifndef SLANGLEX_FILES_H_
#define SLANGLEX_FILES_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace slanglex {

// Whole-file read. Gzip input is decompressed transparently; plain files pass
// through unchanged. Throws IoError.
std::string read_file(const std::filesystem::path& path);

// Writes through a temporary sibling and renames, so readers never observe a
// half-written artifact. Creates missing parent directories. Throws IoError.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace slanglex

#endif  // SLANGLEX_FILES_H_
