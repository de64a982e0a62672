// Copyright 2026 The belrev Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/distribution.hpp"

#include <cmath>
#include <numeric>

#include "core/error.hpp"

namespace belrev {

Distribution Distribution::from_weights(std::shared_ptr<const Space> space,
                                        std::vector<double> raw) {
    if (!space) fail(ErrorCode::invalid_argument, "null space");
    if (raw.size() != space->world_count())
        fail(ErrorCode::invalid_prior,
             "expected " + std::to_string(space->world_count()) + " weights, got " +
                 std::to_string(raw.size()));
    double sum = 0.0;
    for (double w : raw) {
        if (!std::isfinite(w) || w < 0.0)
            fail(ErrorCode::invalid_prior, "weights must be finite and non-negative");
        sum += w;
    }
    if (sum <= 0.0) fail(ErrorCode::invalid_prior, "at least one weight must be positive");
    for (double& w : raw) w /= sum;
    return Distribution(std::move(space), std::move(raw));
}

Distribution Distribution::uniform(std::shared_ptr<const Space> space) {
    if (!space) fail(ErrorCode::invalid_argument, "null space");
    std::vector<double> w(space->world_count(), 1.0 / space->world_count());
    return Distribution(std::move(space), std::move(w));
}

Distribution Distribution::adopt_normalized(std::shared_ptr<const Space> space,
                                            std::vector<double> weights) {
    double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (std::abs(sum - 1.0) > 1e-9)
        fail(ErrorCode::invalid_prior, "weights do not sum to 1");
    return Distribution(std::move(space), std::move(weights));
}

double Distribution::prob(const Sentence& s) const {
    double total = 0.0;
    for (World w = 0; w < space_->world_count(); ++w)
        if (s.evaluate(*space_, w)) total += weights_[w];
    return total;
}

double Distribution::conditional(const Sentence& x, const Sentence& y) const {
    // The denominator is a sum of non-negative weights, so it is zero
    // exactly when every model of y has weight zero; no tolerance needed.
    double py = prob(y);
    if (py == 0.0)
        fail(ErrorCode::zero_condition,
             "conditioning sentence '" + y.text() + "' has probability zero");
    return prob(x & y) / py;
}

}  // namespace belrev
