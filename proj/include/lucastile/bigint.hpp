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

#ifndef LUCASTILE_BIGINT_HPP
#define LUCASTILE_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "lucastile/errors.hpp"

namespace lucastile {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned exponent)
{
    BigInt result = 1;
    result <<= exponent;
    return result;
}

/// (-1)^n
inline int sign_power(int n)
{
    return n % 2 == 0 ? 1 : -1;
}

/// numerator / denominator, throwing divisibility_error on a remainder.
inline BigInt exact_div(const BigInt& numerator, const BigInt& denominator, const char* context)
{
    BigInt quotient;
    BigInt remainder;
    boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
    if (remainder != 0) {
        throw divisibility_error(std::string(context) + ": " + numerator.str() +
                                 " is not divisible by " + denominator.str());
    }
    return quotient;
}

inline std::string to_decimal(const BigInt& value)
{
    return value.str();
}

inline BigInt from_decimal(const std::string& text)
{
    return BigInt(text);
}

} // namespace lucastile

#endif
