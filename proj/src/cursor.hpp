#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "sylrank/error.hpp"
#include "sylrank/ring.hpp"

namespace sylrank::detail {

// Single-line recursive-descent helper; columns are 1-based and offset by `origin`.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line = 1, std::size_t origin = 1)
      : text_(text), line_(line), origin_(origin) {}

  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect_end() {
    if (!done()) fail("unexpected trailing input");
  }

  Integer integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected integer");
    }
    std::string s(text_.substr(start, pos_ - start));
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s);
  }

  Rational rational() {
    Integer num = integer();
    Integer den = 1;
    if (peek() == '/') {
      ++pos_;
      std::size_t at = pos_;
      den = integer();
      if (den <= 0) {
        pos_ = at;
        fail("denominator must be positive");
      }
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::size_t count() {
    std::size_t at = pos_;
    Integer v = integer();
    if (v < 0 || !v.fits_ulong_p()) {
      pos_ = at;
      fail("expected nonnegative count");
    }
    return static_cast<std::size_t>(v.get_ui());
  }

  /// Text up to the matching close of the current nesting level at one of `stops`.
  std::string_view balanced_until(std::string_view stops) {
    skip_space();
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (depth == 0 && stops.find(c) != std::string_view::npos) break;
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') {
        if (depth == 0) break;
        --depth;
      }
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  std::size_t column() const { return origin_ + pos_; }
  std::size_t line() const { return line_; }
  std::size_t position() const { return pos_; }
  void seek(std::size_t pos) { pos_ = pos; }
  std::string_view text() const { return text_; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, origin_ + pos_); }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t origin_;
  std::size_t pos_ = 0;
};

}  // namespace sylrank::detail
