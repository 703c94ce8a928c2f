// Copyright 2026 The taures Authors.
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


#ifndef TAURES_UTIL_HPP
#define TAURES_UTIL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace taures {

/// Decimal digits of p^s; works past 64 bits.
std::string decimal_power(std::uint32_t p, std::uint64_t s);

/// s such that `digits` spells p^s in decimal, if any.
std::optional<std::uint64_t> decimal_log(std::uint32_t p,
                                         std::string_view digits);

}  // namespace taures

#endif  // TAURES_UTIL_HPP
