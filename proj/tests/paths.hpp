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

#ifndef BELREV_TESTS_PATHS_HPP
#define BELREV_TESTS_PATHS_HPP

#include <string>

// Filled from --cli-path= and --root= arguments by the test main, which
// ctest supplies; see tests/CMakeLists.txt.
extern std::string g_cli_path;
extern std::string g_source_root;

#endif  // BELREV_TESTS_PATHS_HPP
