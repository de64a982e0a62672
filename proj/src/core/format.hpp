// Copyright 2026 The belrev Authors
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

#ifndef BELREV_CORE_FORMAT_HPP
#define BELREV_CORE_FORMAT_HPP

#include <charconv>
#include <cstdio>
#include <string>

namespace belrev {

// Six decimal places, the precision used in traces.  Negative zero is
// normalized so rounding noise never prints as "-0.000000".
inline std::string fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    std::string out = buf;
    if (out == "-0.000000") out = "0.000000";
    return out;
}

// Shortest decimal text that round-trips to the same double.  Used where a
// value is data rather than display, e.g. when a scenario is re-rendered.
inline std::string shortest(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

}  // namespace belrev

#endif  // BELREV_CORE_FORMAT_HPP
