// Copyright 2026 The swipt_sinr Authors.
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

namespace swipt {

// Operand shapes do not conform (product, sum, composition).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Condition number beyond the inversion threshold.
class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotHermitian : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Hermitian input with an eigenvalue below the PSD tolerance.
class Indefinite : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class RankDeficient : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Distribution parameters outside the region where the density exists.
class InvalidParameters : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed, unreadable or non-conforming configuration document.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace swipt
