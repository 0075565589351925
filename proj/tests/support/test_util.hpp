// Copyright 2026 The Abugida Toolkit Authors
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

#include <initializer_list>
#include <string>
#include <string_view>

#include "abugida/unicode.hpp"

namespace abugida::testing {

inline Word W(std::string_view utf8) { return utf8_decode(utf8); }
inline Word CPS(std::initializer_list<char32_t> cps) { return Word(cps); }
inline std::string S(WordView word) { return utf8_encode(word); }

}  // namespace abugida::testing
