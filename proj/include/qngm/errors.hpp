// Copyright 2026 The qngm Authors
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

namespace qngm {

/// Base of every error raised by the library. `category()` is the stable tag
/// printed by the command-line tool.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
    [[nodiscard]] virtual const char *category() const noexcept = 0;
};

/// Errors caused by user input rather than numerics; exit code 2 in the CLI.
class ConfigError : public Error {
  public:
    using Error::Error;
};

#define QNGM_DECLARE_ERROR(Name, Base)                                         \
    class Name : public Base {                                                 \
      public:                                                                  \
        using Base::Base;                                                      \
        [[nodiscard]] const char *category() const noexcept override {         \
            return #Name;                                                      \
        }                                                                      \
    };

QNGM_DECLARE_ERROR(NotHermitian, Error)
QNGM_DECLARE_ERROR(DomainError, Error)
QNGM_DECLARE_ERROR(Singular, Error)
QNGM_DECLARE_ERROR(DegenerateSupport, Error)
QNGM_DECLARE_ERROR(ShapeMismatch, Error)
QNGM_DECLARE_ERROR(RankDeficient, Error)
QNGM_DECLARE_ERROR(NumericalError, Error)
QNGM_DECLARE_ERROR(MetricUndefined, Error)
QNGM_DECLARE_ERROR(ParseError, ConfigError)
QNGM_DECLARE_ERROR(ValidationError, ConfigError)

#undef QNGM_DECLARE_ERROR

} // namespace qngm
