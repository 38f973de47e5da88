// Copyright 2026 The extwit Authors
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

#ifndef EXTWIT_ERRORS_H
#define EXTWIT_ERRORS_H

#include <stdexcept>
#include <string>

namespace extwit {

/// Subsystem bookkeeping is inconsistent (bad dims, cut, index set, permutation).
struct LayoutError : std::invalid_argument {
    explicit LayoutError(const std::string &msg) : std::invalid_argument(msg) {}
};

/// Malformed user input: files, non-Hermitian data, non-PSD caps, bad parameters.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string &msg) : std::invalid_argument(msg) {}
};

/// An operation was called on an object that does not satisfy its precondition
/// (e.g. a spanning check on an operator that is not a witness).
struct PreconditionError : std::logic_error {
    explicit PreconditionError(const std::string &msg) : std::logic_error(msg) {}
};

/// Numerical failure: eigensolver non-convergence, imaginary residue where a
/// real value is required, rank deficiency.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string &msg) : std::runtime_error(msg) {}
};

}  // namespace extwit

#endif
