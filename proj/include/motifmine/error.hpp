// Copyright 2026 The motifmine Authors
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

#ifndef MOTIFMINE_ERROR_HPP_
#define MOTIFMINE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace motifmine {

// Base for everything this library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// File or stream access failed.
class IoError : public Error {
 public:
  using Error::Error;
};

// Container bytes are malformed (bad magic, truncated chunk, ...).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Container is valid but the encoding is not one we decode.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// An input that must carry data is empty or too short to start.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

// A scalar parameter is out of its documented domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// An input is too small (or too large, for guarded paths) for the operation.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Matrix/vector dimensions do not line up.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Cross-referenced data is internally inconsistent (index out of range, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

// Sampling needs more distinct tracks or species than the input provides.
class DiversityError : public Error {
 public:
  using Error::Error;
};

}  // namespace motifmine

#endif  // MOTIFMINE_ERROR_HPP_
