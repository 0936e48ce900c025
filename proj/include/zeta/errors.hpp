// Copyright 2026 The zeta-llt Authors
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

#ifndef ZETA_ERRORS_HPP_
#define ZETA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace zeta {

// Precondition violations on caller-supplied input (CLI exit code 3).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Base for every failure to certify a numerical result (CLI exit code 2).
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TruncationInsufficient : public CertificationError {
 public:
  using CertificationError::CertificationError;
};

class LimitTooLarge : public CertificationError {
 public:
  using CertificationError::CertificationError;
};

class DivergentConstant : public CertificationError {
 public:
  using CertificationError::CertificationError;
};

class TailNotCertified : public CertificationError {
 public:
  using CertificationError::CertificationError;
};

class SupNotCertified : public CertificationError {
 public:
  using CertificationError::CertificationError;
};

class QuadratureNotConverged : public CertificationError {
 public:
  using CertificationError::CertificationError;
};

class MarginTooSmall : public CertificationError {
 public:
  using CertificationError::CertificationError;
};

class GridOutsideNeighborhood : public CertificationError {
 public:
  using CertificationError::CertificationError;
};

}  // namespace zeta

#endif  // ZETA_ERRORS_HPP_
