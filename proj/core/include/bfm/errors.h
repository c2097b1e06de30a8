// Copyright 2026 The Authors.
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

#ifndef BFM_ERRORS_H_
#define BFM_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace bfm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: bad documents, bad rationals, invalid instances.
class InputError : public Error {
 public:
  using Error::Error;
};

// A valuation that cannot answer a query (e.g. an explicit table without S).
class MalformedValuationError : public InputError {
 public:
  using InputError::InputError;
};

// Exhaustive routines refuse inputs beyond their desk-scale ceiling.
class LimitError : public Error {
 public:
  using Error::Error;
};

// A caller broke a documented precondition.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// A mechanism property (monotonicity, bracketing) failed; carries a witness.
class PropertyViolation : public Error {
 public:
  PropertyViolation(const std::string& what, std::string witness)
      : Error(what + ": " + witness), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

}  // namespace bfm

#endif  // BFM_ERRORS_H_
