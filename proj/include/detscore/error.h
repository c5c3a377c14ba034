// Copyright 2026 The detscore Authors.
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

#ifndef DETSCORE_ERROR_H_
#define DETSCORE_ERROR_H_

#include <stdexcept>
#include <string>

namespace detscore {

enum class ErrorKind {
  kValidation,
  kIo,
  kEncoding,
  kNotInUniverse,
};

// All library failures are reported with this exception type. The kind
// decides the CLI exit code (kIo -> 2, everything else -> 1).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void ThrowValidation(const std::string& message) {
  throw Error(ErrorKind::kValidation, message);
}

[[noreturn]] inline void ThrowIo(const std::string& message) {
  throw Error(ErrorKind::kIo, message);
}

}  // namespace detscore

#endif  // DETSCORE_ERROR_H_
