// Copyright 2026 The emocov Authors.
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

#ifndef EMOCOV_TOKENIZER_H_
#define EMOCOV_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace emocov {

// Splits UTF-8 text on Unicode whitespace and punctuation. With `lowercase`,
// ASCII and Latin-1 letters are folded to lower case. Bytes that are not
// valid UTF-8 are kept inside tokens unchanged.
std::vector<std::string> Tokenize(std::string_view text, bool lowercase);

}  // namespace emocov

#endif  // EMOCOV_TOKENIZER_H_
