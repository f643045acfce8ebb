// Copyright 2026 The lexmark authors
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

namespace lexmark {

// Root of every exception this library throws on hard failures.  Soft
// findings (validation, reference checks) travel as Diagnostic values
// instead.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Input is not well-formed XML.  line/column are 1-based; 0 means unknown.
class WellFormednessError : public Error {
 public:
  WellFormednessError(const std::string& message, std::string source, int line,
                      int column)
      : Error(source + ":" + std::to_string(line) + ":" +
              std::to_string(column) + ": " + message),
        source_(std::move(source)),
        line_(line),
        column_(column),
        detail_(message) {}

  const std::string& source() const { return source_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string source_;
  int line_ = 0;
  int column_ = 0;
  std::string detail_;
};

// Two elements carry the same id value.
class DuplicateIdError : public Error {
 public:
  explicit DuplicateIdError(const std::string& id)
      : Error("duplicate id \"" + id + "\""), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

// Schema text does not parse.
class SchemaSyntaxError : public Error {
 public:
  SchemaSyntaxError(const std::string& message, std::string source, int line,
                    int column)
      : Error(source + ":" + std::to_string(line) + ":" +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_ = 0;
  int column_ = 0;
};

// A schema reference names a definition that does not exist.
class DanglingDefinitionError : public Error {
 public:
  explicit DanglingDefinitionError(const std::string& name)
      : Error("reference to undefined pattern \"" + name + "\""),
        name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Rule DSL text does not parse.
class RuleSyntaxError : public Error {
 public:
  RuleSyntaxError(const std::string& message, std::string source, int line)
      : Error(source + ":" + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

// Base for failures while binding a generic tree to a typed model.
class BindError : public Error {
 public:
  using Error::Error;
};

// Strict binding met an element it does not know.
class UnknownElementError : public BindError {
 public:
  UnknownElementError(const std::string& name, const std::string& context)
      : BindError("unknown element <" + name + "> in " + context),
        name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// A headword form carries no orthography.
class MissingHeadwordError : public BindError {
 public:
  MissingHeadwordError() : BindError("headword form has no orth") {}
};

// An intra-entry link names an id that the entry does not define.
class DanglingLinkError : public BindError {
 public:
  explicit DanglingLinkError(const std::string& id)
      : BindError("link references undefined id \"" + id + "\""), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

}  // namespace lexmark
