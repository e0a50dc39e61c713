// Copyright 2026 The Plausible Authors
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

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace plausible {

/// A precondition of an operation was violated; the call was rejected.
class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The tested hypothesis had vanishing probability, so the system was discarded.
class DiscardedError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A rescale factor exceeded the largest factor that keeps every probability <= 1.
class InadmissibleRescale : public DomainError {
   public:
    InadmissibleRescale(double factor, double bound)
        : DomainError("rescale factor " + std::to_string(factor) + " exceeds admissible bound " +
                      std::to_string(bound)),
          factor_(factor),
          bound_(bound) {}

    double factor() const { return factor_; }
    double bound() const { return bound_; }

   private:
    double factor_;
    double bound_;
};

/// Numeric rank disagreed between sample points that should have identical rank.
class RankInstability : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace plausible
