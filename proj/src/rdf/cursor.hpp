#pragma once

// Character cursor shared by the N-Triples and Turtle readers.

#include <cstdint>
#include <string>
#include <string_view>

#include "kgsaf/util/error.hpp"

namespace kgsaf::rdf::detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool eof() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }
  char get() {
    if (eof()) fail("unexpected end of input");
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && !eof(); ++i) get();
  }
  bool consume(char c) {
    if (peek() != c || eof()) return false;
    get();
    return true;
  }
  void expect(char c, const char* what) {
    if (!consume(c)) fail(std::string("expected ") + what);
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }
  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, col_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

inline void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

inline int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// Reads the hex digits of \uXXXX or \UXXXXXXXX after the 'u'/'U'.
inline void read_uchar(Cursor& cur, std::size_t digits, std::string& out) {
  std::uint32_t cp = 0;
  for (std::size_t i = 0; i < digits; ++i) {
    const int v = hex_value(cur.peek());
    if (v < 0 || cur.eof()) cur.fail("invalid unicode escape");
    cp = cp * 16 + static_cast<std::uint32_t>(v);
    cur.get();
  }
  if (cp > 0x10FFFF) cur.fail("code point out of range");
  append_utf8(out, cp);
}

// Handles the character after a backslash in a string literal (ECHAR or UCHAR).
inline void read_string_escape(Cursor& cur, std::string& out) {
  const char c = cur.get();
  switch (c) {
    case 't': out += '\t'; break;
    case 'b': out += '\b'; break;
    case 'n': out += '\n'; break;
    case 'r': out += '\r'; break;
    case 'f': out += '\f'; break;
    case '"': out += '"'; break;
    case '\'': out += '\''; break;
    case '\\': out += '\\'; break;
    case 'u': read_uchar(cur, 4, out); break;
    case 'U': read_uchar(cur, 8, out); break;
    default: cur.fail(std::string("invalid escape \\") + c);
  }
}

// IRIREF body after '<' up to and including '>'.
inline std::string read_iriref(Cursor& cur) {
  std::string out;
  while (true) {
    if (cur.eof()) cur.fail("unterminated IRI");
    const char c = cur.get();
    if (c == '>') return out;
    if (c == '\\') {
      const char u = cur.get();
      if (u == 'u') {
        read_uchar(cur, 4, out);
      } else if (u == 'U') {
        read_uchar(cur, 8, out);
      } else {
        cur.fail("invalid escape in IRI");
      }
      continue;
    }
    const auto uc = static_cast<unsigned char>(c);
    if (uc <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' || c == '`') {
      cur.fail("invalid character in IRI");
    }
    out += c;
  }
}

inline bool is_pn_chars_base(char c) {
  const auto uc = static_cast<unsigned char>(c);
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || uc >= 0x80;
}
inline bool is_pn_chars_u(char c) { return is_pn_chars_base(c) || c == '_'; }
inline bool is_pn_chars(char c) { return is_pn_chars_u(c) || c == '-' || (c >= '0' && c <= '9'); }

// Blank node label after "_:".
inline std::string read_blank_label(Cursor& cur) {
  std::string out;
  const char first = cur.peek();
  if (!(is_pn_chars_u(first) || (first >= '0' && first <= '9')) || cur.eof()) cur.fail("invalid blank node label");
  out += cur.get();
  while (!cur.eof()) {
    const char c = cur.peek();
    if (is_pn_chars(c)) {
      out += cur.get();
    } else if (c == '.' && is_pn_chars(cur.peek(1))) {
      out += cur.get();
    } else {
      break;
    }
  }
  return out;
}

inline std::string read_langtag(Cursor& cur) {
  std::string out;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
  if (!alpha(cur.peek())) cur.fail("invalid language tag");
  while (alpha(cur.peek())) out += cur.get();
  while (cur.peek() == '-' && alnum(cur.peek(1))) {
    out += cur.get();
    while (alnum(cur.peek())) out += cur.get();
  }
  return out;
}

}  // namespace kgsaf::rdf::detail
