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

#ifndef SLANGLEX_SRC_AVERAGING_H_
#define SLANGLEX_SRC_AVERAGING_H_

#include <vector>

namespace slanglex::detail {

// Arithmetic mean that is exactly invariant under permutation of the inputs
// and exactly odd (mean(-x) == -mean(x)). Positive and negative magnitudes
// are summed separately in ascending order and subtracted once; the result
// is clamped to [min, max] of the inputs. Empty input yields 0.
double symmetric_mean(std::vector<double> values);

}  // namespace slanglex::detail

#endif  // SLANGLEX_SRC_AVERAGING_H_
