// Copyright 2026 The Emolex Authors.
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

#include "emolex/tokenizer.hpp"

#include <fmt/format.h>

#include <cstdint>
#include <fstream>
#include <istream>

#include "emolex/error.hpp"
#include "emolex/text_util.hpp"

namespace emolex {
namespace {

// English stop words, list version "en-1" (the 179-word NLTK list).
constexpr std::string_view kBundledStopwords =
    "i\nme\nmy\nmyself\nwe\nour\nours\nourselves\nyou\nyou're\nyou've\n"
    "you'll\nyou'd\nyour\nyours\nyourself\nyourselves\nhe\nhim\nhis\n"
    "himself\nshe\nshe's\nher\nhers\nherself\nit\nit's\nits\nitself\nthey\n"
    "them\ntheir\ntheirs\nthemselves\nwhat\nwhich\nwho\nwhom\nthis\nthat\n"
    "that'll\nthese\nthose\nam\nis\nare\nwas\nwere\nbe\nbeen\nbeing\nhave\n"
    "has\nhad\nhaving\ndo\ndoes\ndid\ndoing\na\nan\nthe\nand\nbut\nif\nor\n"
    "because\nas\nuntil\nwhile\nof\nat\nby\nfor\nwith\nabout\nagainst\n"
    "between\ninto\nthrough\nduring\nbefore\nafter\nabove\nbelow\nto\nfrom\n"
    "up\ndown\nin\nout\non\noff\nover\nunder\nagain\nfurther\nthen\nonce\n"
    "here\nthere\nwhen\nwhere\nwhy\nhow\nall\nany\nboth\neach\nfew\nmore\n"
    "most\nother\nsome\nsuch\nno\nnor\nnot\nonly\nown\nsame\nso\nthan\ntoo\n"
    "very\ns\nt\ncan\nwill\njust\ndon\ndon't\nshould\nshould've\nnow\nd\nll\n"
    "m\no\nre\nve\ny\nain\naren\naren't\ncouldn\ncouldn't\ndidn\ndidn't\n"
    "doesn\ndoesn't\nhadn\nhadn't\nhasn\nhasn't\nhaven\nhaven't\nisn\nisn't\n"
    "ma\nmightn\nmightn't\nmustn\nmustn't\nneedn\nneedn't\nshan\nshan't\n"
    "shouldn\nshouldn't\nwasn\nwasn't\nweren\nweren't\nwon\nwon't\nwouldn\n"
    "wouldn't\n";

constexpr char32_t kApostrophe = U'\'';
constexpr char32_t kRightQuote = 0x2019;

bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_word_char(char32_t c) noexcept {
  if (c < 0x80) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9');
  }
  // Everything outside these punctuation/symbol blocks counts as a letter.
  if (c <= 0xBF || c == 0xD7 || c == 0xF7) return false;
  if (c >= 0x2000 && c <= 0x2BFF) return false;
  if (c >= 0x2E00 && c <= 0x2E7F) return false;
  if (c >= 0x3000 && c <= 0x303F) return false;
  if (c >= 0xFE00 && c <= 0xFE0F) return false;
  if (c >= 0xFF01 && c <= 0xFF0F) return false;
  if (c == 0xFEFF || c == 0xFFFD) return false;
  if (c >= 0x1F000 && c <= 0x1FAFF) return false;
  if (c >= 0xE0000) return false;
  return true;
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    char c = s[i];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
    if (c != prefix[i]) return false;
  }
  return true;
}

/// Byte offset of the first URL start inside a whitespace-free chunk.
std::size_t url_start(std::string_view chunk) {
  for (std::size_t i = 0; i < chunk.size(); ++i) {
    if (starts_with_ci(chunk.substr(i), "http://") ||
        starts_with_ci(chunk.substr(i), "https://") ||
        starts_with_ci(chunk.substr(i), "www.")) {
      return i;
    }
  }
  return chunk.size();
}

void flush_token(std::u32string& current, TokenSequence& out) {
  std::size_t b = 0, e = current.size();
  while (b < e && current[b] == kApostrophe) ++b;
  while (e > b && current[e - 1] == kApostrophe) --e;
  if (b < e) {
    std::string token;
    for (std::size_t i = b; i < e; ++i) append_utf8(token, current[i]);
    out.push_back(std::move(token));
  }
  current.clear();
}

void tokenize_chunk(std::string_view chunk, TokenSequence& out) {
  chunk = chunk.substr(0, url_start(chunk));
  std::u32string current;
  bool prev_word = false;
  std::size_t pos = 0;
  while (pos < chunk.size()) {
    char32_t c = decode_utf8(chunk, pos);
    if (c == U'@' && !prev_word) {
      // Mention: '@' plus the handle characters that follow.
      flush_token(current, out);
      while (pos < chunk.size()) {
        std::size_t next = pos;
        const char32_t h = decode_utf8(chunk, next);
        if (!(is_word_char(h) || h == U'_')) break;
        pos = next;
      }
      prev_word = false;
      continue;
    }
    if (c == kRightQuote) c = kApostrophe;
    if (is_word_char(c) || c == kApostrophe) {
      current.push_back(fold_case(c));
      prev_word = c != kApostrophe;
    } else {
      flush_token(current, out);
      prev_word = false;
    }
  }
  flush_token(current, out);
}

}  // namespace

TokenSequence tokenize(std::string_view text) {
  TokenSequence out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) tokenize_chunk(text.substr(i, j - i), out);
    i = j;
  }
  return out;
}

StopList::StopList(std::unordered_set<std::string> words) {
  for (const auto& w : words) words_.insert(fold_case(w));
}

StopList StopList::from_stream(std::istream& in) {
  StopList list;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = chomp(line);
    view = view.substr(0, view.find('#'));
    while (!view.empty() && is_space(view.front())) view.remove_prefix(1);
    while (!view.empty() && is_space(view.back())) view.remove_suffix(1);
    if (!view.empty()) list.words_.insert(fold_case(view));
  }
  return list;
}

StopList StopList::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open stop-word list '" + path + "'");
  return from_stream(in);
}

const StopList& StopList::bundled() {
  static const StopList list = [] {
    StopList l;
    for (auto w : split(kBundledStopwords, '\n')) {
      if (!w.empty()) l.words_.emplace(w);
    }
    return l;
  }();
  return list;
}

bool StopList::contains(std::string_view word) const {
  return words_.find(word) != words_.end();
}

TokenSequence remove_stopwords(const TokenSequence& tokens,
                               const StopList& stoplist) {
  TokenSequence out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!stoplist.contains(t)) out.push_back(t);
  }
  return out;
}

std::string_view bundled_stopwords_text() noexcept {
  return kBundledStopwords;
}

std::string bundled_stopwords_id() {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : kBundledStopwords) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return fmt::format("en-1:{:016x}", hash);
}

}  // namespace emolex
