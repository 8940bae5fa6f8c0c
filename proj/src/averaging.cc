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

#include "averaging.h"

#include <algorithm>

namespace slanglex::detail {

double symmetric_mean(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::vector<double> positive;
  std::vector<double> negative;
  double lo = values.front();
  double hi = values.front();
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    if (v > 0) positive.push_back(v);
    if (v < 0) negative.push_back(-v);
  }
  std::sort(positive.begin(), positive.end());
  std::sort(negative.begin(), negative.end());
  double pos_sum = 0.0;
  for (double v : positive) pos_sum += v;
  double neg_sum = 0.0;
  for (double v : negative) neg_sum += v;
  const double mean = (pos_sum - neg_sum) / static_cast<double>(values.size());
  return std::clamp(mean, lo, hi);
}

}  // namespace slanglex::detail
