//  Copyright 2026 The pbwcheck Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef PBW_ERROR_HPP_
#define PBW_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pbw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments that do not fit together: non-composable pair, wrong hom-set.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed tables, dangling names, mistyped transformations.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A required (reflexive) coequalizer does not exist.
class AssumptionError : public Error {
 public:
  using Error::Error;
};

// A finite-set computation would exceed the configured size bound.
class BoundError : public Error {
 public:
  using Error::Error;
};

// A relation that must hold for a witness failed.
class RelationError : public Error {
 public:
  using Error::Error;
};

/// Malformed instance text; the message carries line and column.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

struct Issue {
  enum class Kind { structural, law };
  Kind kind;
  std::string rule;
  std::string detail;
};

/// Collected findings of a validator. Empty means the checked object is
/// well formed and satisfies every law the validator knows about.
class ValidationReport {
 public:
  void structural(std::string rule, std::string detail) {
    issues_.push_back({Issue::Kind::structural, std::move(rule), std::move(detail)});
  }
  void law(std::string rule, std::string detail) {
    issues_.push_back({Issue::Kind::law, std::move(rule), std::move(detail)});
  }

  bool ok() const { return issues_.empty(); }
  bool has_structural() const {
    for (const auto& i : issues_)
      if (i.kind == Issue::Kind::structural) return true;
    return false;
  }
  const std::vector<Issue>& issues() const { return issues_; }

  // Appends other's issues, prefixing their detail with `context`.
  void merge(const ValidationReport& other, std::string_view context = {}) {
    for (const auto& i : other.issues_) {
      Issue copy = i;
      if (!context.empty()) copy.detail = std::string(context) + ": " + copy.detail;
      issues_.push_back(std::move(copy));
    }
  }

  bool mentions(std::string_view rule) const {
    for (const auto& i : issues_)
      if (i.rule == rule) return true;
    return false;
  }

  std::string summary() const {
    std::string out;
    for (const auto& i : issues_) {
      if (!out.empty()) out += "; ";
      out += (i.kind == Issue::Kind::structural ? "[structural] " : "[law] ");
      out += i.rule + ": " + i.detail;
    }
    return out;
  }

 private:
  std::vector<Issue> issues_;
};

}  // namespace pbw

#endif  // PBW_ERROR_HPP_
