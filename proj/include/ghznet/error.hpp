// Copyright 2026 The ghznet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ghznet {

enum class ErrorKind {
    Shape,
    Data,
    Index,
    Spec,
    Numerical,
    Bracket,
    DivisionByZero,
    Config,
    Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a category so that front ends
/// can map it onto exit codes without parsing messages.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace ghznet
