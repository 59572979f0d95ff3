#ifndef ISGA_DETAIL_SCANNER_HPP_
#define ISGA_DETAIL_SCANNER_HPP_

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "isga/error.hpp"

namespace isga::detail {

  // Character cursor shared by the small recursive-descent parsers. Tracks
  // line and column so SyntaxError can point at the offending character.
  class Scanner {
   public:
    explicit Scanner(std::string_view text) : _text(text) {}

    bool at_end() const noexcept {
      return _pos >= _text.size();
    }

    char peek() const noexcept {
      return at_end() ? '\0' : _text[_pos];
    }

    char peek(std::size_t ahead) const noexcept {
      return _pos + ahead < _text.size() ? _text[_pos + ahead] : '\0';
    }

    char get() {
      char c = _text[_pos++];
      if (c == '\n') {
        ++_line;
        _col = 1;
      } else {
        ++_col;
      }
      return c;
    }

    void skip_space() {
      while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
        get();
      }
    }

    bool consume(char c) {
      skip_space();
      if (peek() == c) {
        get();
        return true;
      }
      return false;
    }

    void expect(char c) {
      if (!consume(c)) {
        fail(std::string("'") + c + "'");
      }
    }

    void expect_end() {
      skip_space();
      if (!at_end()) {
        fail("end of input");
      }
    }

    std::size_t read_unsigned() {
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("a non-negative integer");
      }
      std::size_t value = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        value = value * 10 + static_cast<std::size_t>(get() - '0');
      }
      return value;
    }

    long read_signed() {
      skip_space();
      bool negative = false;
      if (peek() == '-' || peek() == '+') {
        negative = get() == '-';
      }
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("an integer");
      }
      return negative ? -static_cast<long>(read_unsigned())
                      : static_cast<long>(read_unsigned());
    }

    [[noreturn]] void fail(std::string expected) const {
      throw SyntaxError(_line, _col, std::move(expected));
    }

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t col() const noexcept {
      return _col;
    }

   private:
    std::string_view _text;
    std::size_t      _pos  = 0;
    std::size_t      _line = 1;
    std::size_t      _col  = 1;
  };

}  // namespace isga::detail

#endif  // ISGA_DETAIL_SCANNER_HPP_
