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

#ifndef BELREV_CORE_DISTRIBUTION_HPP
#define BELREV_CORE_DISTRIBUTION_HPP

#include <memory>
#include <vector>

#include "core/sentence.hpp"
#include "core/space.hpp"

namespace belrev {

// A probability distribution over the worlds of a Space.  Weights are
// non-negative and sum to 1; the vector is indexed by World in canonical
// order.  Immutable after construction.
class Distribution {
  public:
    // Normalizes raw weights.  Throws invalid_prior when a weight is
    // negative or not finite, or when all weights are zero.
    static Distribution from_weights(std::shared_ptr<const Space> space,
                                     std::vector<double> raw);

    static Distribution uniform(std::shared_ptr<const Space> space);

    const Space& space() const noexcept { return *space_; }
    std::shared_ptr<const Space> space_ptr() const noexcept { return space_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    double weight(World w) const { return weights_.at(w); }

    // Probability of a sentence: the summed weight of its models.
    double prob(const Sentence& s) const;

    // prob(x ∧ y) / prob(y).  Throws zero_condition when prob(y) = 0.
    // Never mutates this distribution.
    double conditional(const Sentence& x, const Sentence& y) const;

  private:
    friend class BeliefState;
    friend Distribution jeffrey_update(const Distribution&, const struct SoftEvidence&);
    friend Distribution virtual_update(const Distribution&, const struct SoftEvidence&);

    // Adopts weights that already sum to 1 (within 1e-9) without
    // renormalizing, so update rules control the result to the last ulp.
    static Distribution adopt_normalized(std::shared_ptr<const Space> space,
                                         std::vector<double> weights);

    Distribution(std::shared_ptr<const Space> space, std::vector<double> weights)
        : space_(std::move(space)), weights_(std::move(weights)) {}

    std::shared_ptr<const Space> space_;
    std::vector<double> weights_;
};

}  // namespace belrev

#endif  // BELREV_CORE_DISTRIBUTION_HPP
