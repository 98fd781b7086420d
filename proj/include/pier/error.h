// include/pier/error.h
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PIER_ERROR_H_
#define PIER_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pier {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data (markup, TSV corpora, annotation sidecars).
// line/column are 1-based; 0 means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line(line), column(column) {}
  std::size_t line;
  std::size_t column;
};

// Invalid configuration: contradictory flags, bad rates, impossible modes.
// The CLI maps this to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A metric was requested where it is mathematically undefined
// (|REF| == 0 for WER/CER/MER, |I| == 0 for PIER).
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

// File system problems: missing or unreadable inputs.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace pier

#endif  // PIER_ERROR_H_
