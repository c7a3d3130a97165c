// Copyright 2026 The vc-harness Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vch {

// Root of every error the harness raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value broke a documented type invariant or precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Bad or missing configuration (flags, config files, environment).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Filesystem failure while reading or writing artifacts.
class IoError : public Error {
 public:
  using Error::Error;
};

// Model output did not match the constrained grammar. Keeps the text that
// was scanned so reports can show exactly what the model produced.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string scanned,
             std::size_t offset = 0)
      : Error(what), scanned_(std::move(scanned)), offset_(offset) {}

  const std::string& scanned() const { return scanned_; }
  // Byte offset into scanned() where parsing stopped.
  std::size_t offset() const { return offset_; }

 private:
  std::string scanned_;
  std::size_t offset_;
};

// More than one constrained-output line was found.
class AmbiguousOutputError : public ParseError {
 public:
  using ParseError::ParseError;
};

// A corpus file line could not be decoded into the data model.
class CorpusError : public Error {
 public:
  CorpusError(std::string source, std::size_t line, std::string field,
              const std::string& detail)
      : Error(source + ":" + std::to_string(line) + ": field '" + field +
              "': " + detail),
        source_(std::move(source)),
        line_(line),
        field_(std::move(field)) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::string source_;
  std::size_t line_;
  std::string field_;
};

// A chat backend failed. status is the last HTTP status seen (0 when no
// response arrived at all).
class TransportError : public Error {
 public:
  TransportError(const std::string& what, int status = 0, int attempts = 0)
      : Error(what), status_(status), attempts_(attempts) {}

  int status() const { return status_; }
  int attempts() const { return attempts_; }

 private:
  int status_;
  int attempts_;
};

// A sequential-only object was used from two threads at once.
class ConcurrentUseError : public Error {
 public:
  using Error::Error;
};

}  // namespace vch
