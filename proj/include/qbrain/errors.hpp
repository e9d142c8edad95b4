// Copyright 2026 The qbrain Authors
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

namespace qbrain {

// Bad arguments (lengths, indices, arity, non-unitary matrices) are reported
// with std::invalid_argument. The types below cover the remaining failure
// classes so callers (the CLI in particular) can map them to exit codes.

/// A request exceeded a hard size guard, e.g. a dense unitary too large to build.
struct ResourceLimitError : std::length_error {
    using std::length_error::length_error;
};

/// A gate kind that the requested pass or emitter cannot handle.
struct UnsupportedGateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Something that should be impossible if the circuits and passes are correct,
/// e.g. the robot circuit producing a non-deterministic readout.
struct InternalConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/// An operation was invoked on an object in the wrong lifecycle state.
struct InvalidStateError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace qbrain
