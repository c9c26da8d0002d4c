// Copyright 2026 The Topicshift Authors.
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

#ifndef TOPICSHIFT_ERROR_H_
#define TOPICSHIFT_ERROR_H_

#include <stdexcept>
#include <string>

namespace topicshift {

enum class ErrorKind {
  kInvalidArgument,  // parameter outside its documented range
  kDomain,           // arithmetic undefined for the input (zero totals etc.)
  kMissingInput,     // file not found or unreadable
  kSchema,           // input records violate the documented format
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string &message) {
  throw Error(kind, message);
}

}  // namespace topicshift

#endif  // TOPICSHIFT_ERROR_H_
