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

/* Compiled as C to keep the public header C-clean. */
#include <stdio.h>
#include <string.h>

#include "slanglex/slanglex.h"

int main(void) {
  char* out = NULL;
  if (slx_normalize_term("  LoL ", &out) != SLX_OK || strcmp(out, "lol") != 0) {
    fprintf(stderr, "normalize failed: %s\n", slx_last_error());
    return 1;
  }
  slx_string_free(out);
  slx_lexicon* lex = NULL;
  const char text[] = "lol\t1\n";
  if (slx_lexicon_parse(text, sizeof text - 1, &lex) != SLX_OK || slx_lexicon_size(lex) != 1) {
    fprintf(stderr, "parse failed: %s\n", slx_last_error());
    return 1;
  }
  slx_lexicon_free(lex);
  printf("slanglex %s\n", slx_version());
  return 0;
}
