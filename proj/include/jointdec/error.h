// Copyright 2026 jointdec contributors
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

namespace jointdec {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input or construction argument violates a documented invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A file, template, or serialized document is malformed.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A request asks for an unsupported mode or format.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace jointdec
