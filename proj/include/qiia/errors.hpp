// Copyright 2026 The qiia Authors
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

namespace qiia {

/// Base class for all qiia errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input file (integral, state or circuit file). CLI exit code 2.
struct ParseError : Error {
  using Error::Error;
};

/// Numerical degeneracy (e.g. a vanishing perturbation denominator). Exit 3.
struct DegeneracyError : Error {
  using Error::Error;
};

/// Domain violation: indices out of range, empty sectors, size guards. Exit 4.
struct DomainError : Error {
  using Error::Error;
};

/// Invalid option combination (e.g. postselection on a rotated clique). Exit 6.
struct OptionError : Error {
  using Error::Error;
};

}  // namespace qiia
