// Copyright 2026 The qmce Authors
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

#ifndef QMCE_ERRORS_H
#define QMCE_ERRORS_H

#include <stdexcept>
#include <string>

namespace qmce {

/// Broad failure classes. The CLI maps each class onto an exit code.
enum class ErrorKind {
  kFormat,     // malformed or unsupported file contents
  kDimension,  // incompatible sizes
  kParameter,  // invalid or infeasible parameters
  kBudget,     // work or qubit cap exceeded
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define QMCE_DEFINE_ERROR(Name, Kind)                                     \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
  };

QMCE_DEFINE_ERROR(FormatError, kFormat)
QMCE_DEFINE_ERROR(DimensionError, kDimension)
QMCE_DEFINE_ERROR(ParameterError, kParameter)
QMCE_DEFINE_ERROR(SingularMatrix, kParameter)
QMCE_DEFINE_ERROR(NotFullRowRank, kParameter)
QMCE_DEFINE_ERROR(UnknownSyndrome, kParameter)
QMCE_DEFINE_ERROR(SupportOutsideImage, kParameter)
QMCE_DEFINE_ERROR(DecodeError, kParameter)
QMCE_DEFINE_ERROR(BudgetError, kBudget)
QMCE_DEFINE_ERROR(QubitCapExceeded, kBudget)
QMCE_DEFINE_ERROR(InternalError, kInternal)

#undef QMCE_DEFINE_ERROR

}  // namespace qmce

#endif  // QMCE_ERRORS_H
