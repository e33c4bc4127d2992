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

#include "ghznet/error.hpp"

namespace ghznet {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Shape:
            return "shape error";
        case ErrorKind::Data:
            return "data error";
        case ErrorKind::Index:
            return "index error";
        case ErrorKind::Spec:
            return "spec error";
        case ErrorKind::Numerical:
            return "numerical error";
        case ErrorKind::Bracket:
            return "bracket error";
        case ErrorKind::DivisionByZero:
            return "division by zero";
        case ErrorKind::Config:
            return "config error";
        case ErrorKind::Io:
            return "i/o error";
    }
    return "error";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {
}

}  // namespace ghznet
