// Copyright 2026 The uqt Authors.
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

namespace uqt {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Parameter outside a documented range.
class RangeError : public Error {
  public:
    using Error::Error;
};

/// Rejected state or channel. `value()` carries the offending residual or
/// minimum eigenvalue.
class ValidationError : public Error {
  public:
    enum class Kind {
        NotHermitian,
        Trace,
        NegativeEigenvalue,
        Completeness,
        ChoiNegative,
        KrausCount,
        NotUnitary,
        Parse,
    };

    ValidationError(Kind kind, double value, const std::string &what)
        : Error(what), kind_(kind), value_(value) {}

    Kind kind() const noexcept { return kind_; }
    double value() const noexcept { return value_; }

  private:
    Kind kind_;
    double value_;
};

} // namespace uqt
