/*
Copyright 2026 the apfc authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <stdexcept>

namespace apfc {

// A documented precondition was broken by the caller (bad arguments,
// out-of-range symbol, mismatched parameters).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The container envelope is malformed: short file, bad magic, bad version,
// bad mode byte or alphabet size.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The payload bits do not decode under the advertised parameters.
class CorruptStreamError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File system failure, reported by the CLI layer.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace apfc
