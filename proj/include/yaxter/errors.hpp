// Copyright 2026 The yaxter Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Exception types shared by the numerical core and the command line.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace yaxter {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A parameter lies outside the admissible domain of a family or operation.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Matrix dimensions are incompatible with the requested operation.
class DimensionError : public Error {
  public:
    using Error::Error;
};

class SingularMatrixError : public Error {
  public:
    using Error::Error;
};

/// Two eigenvalues that must be distinct coincide.
class DegenerateSpectrumError : public Error {
  public:
    using Error::Error;
};

/// The supplied eigenvalues do not annihilate the matrix.
class SpectrumMismatchError : public Error {
  public:
    using Error::Error;
};

class NonHermitianError : public Error {
  public:
    using Error::Error;
};

/// A product expected to be proportional to the identity is not.
class StructuralError : public Error {
  public:
    using Error::Error;
};

} // namespace yaxter
