#ifndef ISGA_ERROR_HPP_
#define ISGA_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isga {

  // Base for every failure that is a property of the input data (a table
  // that is not associative, partitions with different sums, ...). The CLI
  // maps these to exit status 1.
  class Error : public std::runtime_error {
   public:
    Error(std::string kind, std::string const& what)
        : std::runtime_error(kind + ": " + what), _kind(std::move(kind)) {}

    std::string const& kind() const noexcept {
      return _kind;
    }

   private:
    std::string _kind;
  };

  // Malformed text input. Positions are 1-based. The CLI maps these to exit
  // status 2 together with option errors.
  class SyntaxError : public std::runtime_error {
   public:
    SyntaxError(std::size_t line, std::size_t col, std::string expected)
        : std::runtime_error("syntax error at " + std::to_string(line) + ":"
                             + std::to_string(col) + ": expected "
                             + expected),
          _line(line),
          _col(col),
          _expected(std::move(expected)) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t col() const noexcept {
      return _col;
    }
    std::string const& expected() const noexcept {
      return _expected;
    }

   private:
    std::size_t _line;
    std::size_t _col;
    std::string _expected;
  };

}  // namespace isga

#endif  // ISGA_ERROR_HPP_
