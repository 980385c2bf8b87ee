// Copyright 2026 The lspan Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace lspan {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (edge list, labels JSON, TSPLIB tour).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  // 1-based line of the offending input, 0 when not line-oriented.
  int line() const { return line_; }

 private:
  int line_ = 0;
};

/// The graph is disconnected where a finite distance is required.
class Disconnected : public Error {
 public:
  using Error::Error;
};

/// Some vertex pair is farther apart than the separation vector covers.
class DiameterExceedsK : public Error {
 public:
  using Error::Error;
};

/// p_max > 2 * p_min, outside the regime where the reduction is metric.
class RatioViolated : public Error {
 public:
  using Error::Error;
};

/// A separation vector entry is zero; all entries must be positive.
class ZeroSeparation : public Error {
 public:
  using Error::Error;
};

/// Instance exceeds an exact solver's configured size cap.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

/// Weight matrix violates the triangle inequality where one is required.
class NonMetricInstance : public Error {
 public:
  using Error::Error;
};

/// A labeling does not assign a label to every vertex.
class MissingLabel : public Error {
 public:
  using Error::Error;
};

/// A tour document does not describe a permutation of the cities.
class BadTour : public Error {
 public:
  using Error::Error;
};

}  // namespace lspan
