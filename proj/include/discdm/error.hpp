/*
 * Copyright 2026 The discdm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace discdm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input: bad literals, unknown codes, schema
/// problems, mismatched dimensions. The CLI maps this to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A computation that cannot proceed on otherwise well-formed input
/// (degenerate weights, violated method contracts). CLI exit code 3.
class ComputationError : public Error {
 public:
  using Error::Error;
};

/// Runs `fn`, prefixing any library error with the stage name while
/// preserving its category.
template <class Fn>
decltype(auto) in_stage(const std::string& stage, Fn&& fn) {
  try {
    return std::forward<Fn>(fn)();
  } catch (const InputError& e) {
    throw InputError("stage '" + stage + "': " + e.what());
  } catch (const ComputationError& e) {
    throw ComputationError("stage '" + stage + "': " + e.what());
  }
}

}  // namespace discdm
