// Copyright 2026 The qdc Authors.
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

#ifndef QDC_ERROR_H_
#define QDC_ERROR_H_

#include <stdexcept>
#include <string>

namespace qdc {

enum class ErrorKind {
  kDivisionByZero,
  kPole,
  kConvergence,
  kPrecondition,
  kResource,
  kNonRepresentable,
  kParse,
};

const char* ErrorKindName(ErrorKind kind);

// Base of every error raised by the library. Callers that only need the
// category can switch on kind(); tests catch the concrete subclasses.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

#define QDC_DEFINE_ERROR(Name, Kind)                                  \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(Kind, what) {}     \
  };

QDC_DEFINE_ERROR(DivisionByZeroError, ErrorKind::kDivisionByZero)
QDC_DEFINE_ERROR(PoleError, ErrorKind::kPole)
QDC_DEFINE_ERROR(ConvergenceError, ErrorKind::kConvergence)
QDC_DEFINE_ERROR(PreconditionError, ErrorKind::kPrecondition)
QDC_DEFINE_ERROR(ResourceError, ErrorKind::kResource)
QDC_DEFINE_ERROR(NonRepresentableError, ErrorKind::kNonRepresentable)
QDC_DEFINE_ERROR(ParseError, ErrorKind::kParse)

#undef QDC_DEFINE_ERROR

inline const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDivisionByZero: return "division_by_zero";
    case ErrorKind::kPole: return "pole";
    case ErrorKind::kConvergence: return "convergence";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kResource: return "resource";
    case ErrorKind::kNonRepresentable: return "non_representable";
    case ErrorKind::kParse: return "parse";
  }
  return "unknown";
}

}  // namespace qdc

#endif  // QDC_ERROR_H_
