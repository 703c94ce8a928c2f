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


#include "taures/util.hpp"

#include <algorithm>
#include <vector>

namespace taures {

std::string decimal_power(std::uint32_t p, std::uint64_t s) {
  std::vector<std::uint32_t> d{1};  // little-endian base 10
  for (std::uint64_t i = 0; i < s; ++i) {
    std::uint64_t carry = 0;
    for (auto& x : d) {
      const std::uint64_t v = static_cast<std::uint64_t>(x) * p + carry;
      x = static_cast<std::uint32_t>(v % 10);
      carry = v / 10;
    }
    while (carry > 0) {
      d.push_back(static_cast<std::uint32_t>(carry % 10));
      carry /= 10;
    }
  }
  std::string out;
  for (auto it = d.rbegin(); it != d.rend(); ++it) out += char('0' + *it);
  return out;
}

std::optional<std::uint64_t> decimal_log(std::uint32_t p,
                                         std::string_view digits) {
  if (digits.empty() || p < 2) return std::nullopt;
  std::string cur(digits);
  if (!std::all_of(cur.begin(), cur.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  cur.erase(0, std::min(cur.find_first_not_of('0'), cur.size()));
  std::uint64_t s = 0;
  while (cur != "1") {
    if (cur.empty()) return std::nullopt;
    std::string q;
    std::uint64_t rem = 0;
    for (char c : cur) {
      rem = rem * 10 + static_cast<std::uint64_t>(c - '0');
      const std::uint64_t digit = rem / p;
      rem %= p;
      if (!q.empty() || digit != 0) q += char('0' + digit);
    }
    if (rem != 0) return std::nullopt;
    cur = q;
    ++s;
  }
  return s;
}

}  // namespace taures
