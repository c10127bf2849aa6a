#pragma once

#include <cctype>
#include <string>

#include "capgames/errors.hpp"

namespace capgames::dsl::detail {

// Minimal lexer shared by the two DSL parsers: identifiers/numbers and fixed
// punctuation, with 1-based line/column tracking for errors.
class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      step();
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(const std::string& token) {
    skip_ws();
    if (text_.compare(pos_, token.size(), token) != 0) {
      fail("expected '" + token + "'");
    }
    advance(token.size());
  }

  bool try_consume(const std::string& token) {
    skip_ws();
    if (text_.compare(pos_, token.size(), token) != 0) return false;
    // Keywords must not swallow a longer identifier prefix.
    if (is_word(token)) {
      size_t end = pos_ + token.size();
      if (end < text_.size() && is_word_char(text_[end])) return false;
    }
    advance(token.size());
    return true;
  }

  std::string word() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && is_word_char(text_[pos_])) step();
    if (start == pos_) fail("expected an identifier");
    return text_.substr(start, pos_ - start);
  }

  // A signed rational or decimal literal: -3, 5/2, 0.75.
  std::string number() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) step();
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' ||
            text_[pos_] == '.')) {
      step();
    }
    if (start == pos_) fail("expected a number");
    return text_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(message, line_, col_);
  }

 private:
  static bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool is_word(const std::string& s) { return !s.empty() && is_word_char(s[0]); }

  void step() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void advance(size_t k) {
    for (size_t i = 0; i < k && pos_ < text_.size(); ++i) step();
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace capgames::dsl::detail
