#include <istream>
#include <iterator>
#include <sstream>
#include <string>

#include "isga/detail/scanner.hpp"
#include "isga/inverse_semigroup.hpp"

namespace isga {

  namespace {
    // Blank out comments in place so that reported columns stay correct.
    std::string strip_comments(std::string_view text) {
      std::string out(text);
      bool        in_comment = false;
      for (char& c : out) {
        if (c == '\n') {
          in_comment = false;
        } else if (c == '#' || in_comment) {
          in_comment = true;
          c          = ' ';
        }
      }
      return out;
    }

    void skip_blanks(detail::Scanner& in) {
      while (in.peek() == ' ' || in.peek() == '\t' || in.peek() == '\r') {
        in.get();
      }
    }
  }  // namespace

  CayleyTable parse_cayley_table(std::string_view text) {
    std::string const clean = strip_comments(text);
    detail::Scanner   in(clean);
    std::size_t const n = in.read_unsigned();
    if (n == 0) {
      throw Error("InvalidTable", "a table needs at least one element");
    }
    std::optional<std::size_t> declared_zero;
    skip_blanks(in);
    if (in.peek() == 'z') {
      for (char c : std::string_view("zero")) {
        if (in.peek() != c) {
          in.fail("'zero='");
        }
        in.get();
      }
      if (in.peek() != '=') {
        in.fail("'='");
      }
      in.get();
      declared_zero = in.read_unsigned();
      skip_blanks(in);
    }
    if (!in.at_end() && in.peek() != '\n') {
      in.fail("end of header line");
    }
    std::vector<element_type> entries;
    entries.reserve(n * n);
    for (std::size_t row = 0; row < n; ++row) {
      std::size_t row_line = 0;
      for (std::size_t col = 0; col < n; ++col) {
        in.skip_space();
        if (col == 0) {
          row_line = in.line();
        } else if (in.line() != row_line) {
          in.fail(std::to_string(n) + " entries in row " + std::to_string(row));
        }
        std::size_t const x = in.read_unsigned();
        if (x >= n) {
          throw Error("InvalidTable",
                      "entry " + std::to_string(x) + " in row "
                          + std::to_string(row) + " is not an element id");
        }
        entries.push_back(static_cast<element_type>(x));
      }
      skip_blanks(in);
      if (!in.at_end() && in.peek() != '\n') {
        in.fail("end of row " + std::to_string(row));
      }
    }
    in.expect_end();
    CayleyTable table(n, std::move(entries));
    if (declared_zero && table.zero() != declared_zero) {
      throw Error("ZeroMismatch",
                  "declared zero " + std::to_string(*declared_zero)
                      + " is not a zero of the table");
    }
    return table;
  }

  CayleyTable read_cayley_table(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return parse_cayley_table(text);
  }

  std::string to_string(CayleyTable const& table) {
    std::ostringstream out;
    out << table.size();
    if (table.zero()) {
      out << " zero=" << *table.zero();
    }
    out << '\n';
    for (element_type a = 0; a < table.size(); ++a) {
      for (element_type b = 0; b < table.size(); ++b) {
        out << (b ? " " : "") << table.product(a, b);
      }
      out << '\n';
    }
    return out.str();
  }

}  // namespace isga
