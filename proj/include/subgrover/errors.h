// Copyright 2026 The Subgrover Authors
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

#include <stdexcept>
#include <string>

namespace subgrover {

// Bad argument values (n < 2, M < 1, malformed bitstrings, ...).
class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Marked set too large for the register (4M > 2^n).
class SizeError : public std::length_error {
  public:
    using std::length_error::length_error;
};

// Stage index or similar out of bounds.
class RangeError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

// Register wider than the configured qubit cap, or a dense matrix request
// beyond the verification limit.
class CapacityError : public std::length_error {
  public:
    using std::length_error::length_error;
};

class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Arcsin argument outside [0, 1] when computing a matched phase.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// A marked-prefix superposition cannot be normalized because two items share
// the same prefix.
class NormalizationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The marked set failed validation and the caller did not opt into unsafe
// execution.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Odd n - n0 under strict parity.
class ParityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// No qubit permutation separates the stage-1 prefixes.
class NotFoundError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// State norm drifted beyond tolerance during a run.
class NumericalIntegrityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace subgrover
