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

#ifndef BELREV_TESTS_SUPPORT_HPP
#define BELREV_TESTS_SUPPORT_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "core/error.hpp"

namespace support {

// Runs fn expecting it to throw belrev::Error; returns the code it threw.
template <typename Fn>
belrev::ErrorCode error_code_of(Fn&& fn) {
    try {
        fn();
    } catch (const belrev::Error& e) {
        return e.code();
    }
    throw std::runtime_error("expected the call to throw belrev::Error");
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace support

#endif  // BELREV_TESTS_SUPPORT_HPP
