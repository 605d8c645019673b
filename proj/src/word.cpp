/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qmo/word.hpp"

#include <cstddef>

namespace qmo {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string word_to_string(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

Word word_from_string(const std::string& text) {
  Word out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string token =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (token.empty() || token.size() > 9) {
      throw Error(ErrorCode::bad_arguments, "bad word token \"" + token + "\"");
    }
    int value = 0;
    for (char ch : token) {
      if (ch < '0' || ch > '9') {
        throw Error(ErrorCode::bad_arguments, "bad word token \"" + token + "\"");
      }
      value = value * 10 + (ch - '0');
    }
    if (value < 1) {
      throw Error(ErrorCode::bad_arguments, "word indices start at 1");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace qmo
