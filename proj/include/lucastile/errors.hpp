// Copyright 2026 The lucastile Authors
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

#ifndef LUCASTILE_ERRORS_HPP
#define LUCASTILE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lucastile {

/// A caller violated an operation's precondition (wrong parity, dimension
/// mismatch, out-of-range position...). The CLI maps this to exit code 2.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive check refused to run because it would exceed its budget.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact division left a remainder. Always an implementation fault.
class divisibility_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool condition, const std::string& message)
{
    if (!condition) {
        throw precondition_error(message);
    }
}

inline void require_odd_at_least(int n, int minimum, const char* what)
{
    if (n < minimum || n % 2 == 0) {
        throw precondition_error(std::string(what) + ": n must be odd and >= " +
                                 std::to_string(minimum) + " (got " + std::to_string(n) + ")");
    }
}

} // namespace detail
} // namespace lucastile

#endif
