// Copyright 2026 The qadd Authors.
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

namespace qadd {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class invalid_qudit : public error {
 public:
  using error::error;
};

class width_mismatch : public error {
 public:
  using error::error;
};

/// Input outside the arithmetic contract, e.g. a carry-in other than 0 or 1.
class contract_violation : public error {
 public:
  using error::error;
};

class arity_error : public error {
 public:
  using error::error;
};

/// A node or port refers to an id that does not exist.
class dangling_reference : public error {
 public:
  using error::error;
};

/// A node refers to an id that is not strictly smaller than its own.
class cycle_error : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  using error::error;
};

class version_error : public error {
 public:
  using error::error;
};

class unknown_signal : public error {
 public:
  using error::error;
};

class missing_assignment : public error {
 public:
  using error::error;
};

class invalid_spec : public error {
 public:
  using error::error;
};

/// Exhaustive verification requested above the configured width bound.
class bound_exceeded : public error {
 public:
  using error::error;
};

}  // namespace qadd
