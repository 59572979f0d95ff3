#include "isga/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "isga/detail/scanner.hpp"

namespace isga {

  void push_reduced(std::vector<Letter>& letters, Letter letter) {
    if (!letters.empty() && letters.back().cancels(letter)) {
      letters.pop_back();
    } else {
      letters.push_back(letter);
    }
  }

  Word::Word(std::vector<Letter> letters) {
    _letters.reserve(letters.size());
    for (Letter l : letters) {
      push_reduced(_letters, l);
    }
  }

  Word::Word(std::initializer_list<Letter> letters)
      : Word(std::vector<Letter>(letters)) {}

  Word Word::generator(generator_type gen, long exponent) {
    Word w;
    w._letters.assign(static_cast<std::size_t>(std::labs(exponent)),
                      Letter{gen, exponent < 0});
    return w;
  }

  generator_type Word::support_bound() const noexcept {
    generator_type bound = 0;
    for (Letter l : _letters) {
      bound = std::max(bound, l.generator + 1);
    }
    return bound;
  }

  Word Word::inverse() const {
    Word w;
    w._letters.reserve(_letters.size());
    for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
      w._letters.push_back(it->inverted());
    }
    return w;
  }

  Word Word::power(long k) const {
    Word base = k < 0 ? inverse() : *this;
    Word result;
    for (long i = 0; i < std::labs(k); ++i) {
      result *= base;
    }
    return result;
  }

  Word& Word::operator*=(Word const& v) {
    for (Letter l : v._letters) {
      push_reduced(_letters, l);
    }
    return *this;
  }

  Word operator*(Word const& u, Word const& v) {
    Word w = u;
    w *= v;
    return w;
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Letter l : w.letters()) {
      h ^= (static_cast<std::size_t>(l.generator) << 1) | l.inverse;
      h *= 1099511628211ULL;
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet Alphabet::indexed(char prefix) {
    Alphabet a;
    a._prefix = prefix;
    return a;
  }

  Alphabet Alphabet::labelled(std::vector<std::string> labels) {
    Alphabet a;
    a._labels = std::move(labels);
    return a;
  }

  std::string Alphabet::label(generator_type gen) const {
    if (is_finite()) {
      return gen < _labels.size() ? _labels[gen] : "?" + std::to_string(gen);
    }
    return _prefix + std::to_string(gen);
  }

  std::optional<generator_type> Alphabet::index(std::string_view label) const {
    if (is_finite()) {
      auto it = std::find(_labels.begin(), _labels.end(), label);
      if (it == _labels.end()) {
        return std::nullopt;
      }
      return static_cast<generator_type>(it - _labels.begin());
    }
    if (label.size() < 2 || label[0] != _prefix) {
      return std::nullopt;
    }
    generator_type value = 0;
    for (char c : label.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        return std::nullopt;
      }
      value = value * 10 + static_cast<generator_type>(c - '0');
    }
    return value;
  }

  Alphabet const& default_alphabet() {
    static Alphabet const alphabet;
    return alphabet;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool starts_label(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) != 0;
    }

    std::string read_label(detail::Scanner& in) {
      std::string label(1, in.get());
      while (std::isdigit(static_cast<unsigned char>(in.peek()))) {
        label += in.get();
      }
      if (in.peek() == '_'
          && std::isdigit(static_cast<unsigned char>(in.peek(1)))) {
        label += in.get();
        while (std::isdigit(static_cast<unsigned char>(in.peek()))) {
          label += in.get();
        }
      }
      return label;
    }

    Word parse_factor(detail::Scanner& in, Alphabet const& alphabet);

    Word parse_product(detail::Scanner& in, Alphabet const& alphabet) {
      Word result;
      in.skip_space();
      if (in.peek() == '1'
          && !std::isdigit(static_cast<unsigned char>(in.peek(1)))) {
        in.get();
        return result;
      }
      if (!starts_label(in.peek()) && in.peek() != '(') {
        in.fail("a generator label, '(' or '1'");
      }
      while (true) {
        in.skip_space();
        if (!starts_label(in.peek()) && in.peek() != '(') {
          break;
        }
        result *= parse_factor(in, alphabet);
      }
      return result;
    }

    Word parse_factor(detail::Scanner& in, Alphabet const& alphabet) {
      Word atom;
      if (in.peek() == '(') {
        in.get();
        atom = parse_product(in, alphabet);
        in.expect(')');
      } else {
        auto line = in.line();
        auto col  = in.col();
        auto name = read_label(in);
        auto gen  = alphabet.index(name);
        if (!gen) {
          throw SyntaxError(line, col, "a known generator label, got " + name);
        }
        atom = Word::generator(*gen);
      }
      while (true) {
        if (in.peek() == '\'') {
          in.get();
          atom = atom.inverse();
        } else if (in.peek() == '^') {
          in.get();
          atom = atom.power(in.read_signed());
        } else {
          break;
        }
      }
      return atom;
    }
  }  // namespace

  Word parse_word(detail::Scanner& in, Alphabet const& alphabet) {
    return parse_product(in, alphabet);
  }

  Word parse_word(std::string_view text, Alphabet const& alphabet) {
    detail::Scanner in(text);
    Word            w = parse_product(in, alphabet);
    in.expect_end();
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Printing
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Word const& w, Alphabet const& alphabet) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (Letter l : w.letters()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += alphabet.label(l.generator);
      if (l.inverse) {
        out += '\'';
      }
    }
    return out;
  }

  std::string to_power_string(Word const& w, Alphabet const& alphabet) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    auto        letters = w.letters();
    for (std::size_t i = 0; i < letters.size();) {
      std::size_t j = i;
      while (j < letters.size() && letters[j] == letters[i]) {
        ++j;
      }
      long exponent = static_cast<long>(j - i) * (letters[i].inverse ? -1 : 1);
      if (!out.empty()) {
        out += ' ';
      }
      out += alphabet.label(letters[i].generator);
      if (exponent != 1) {
        out += '^' + std::to_string(exponent);
      }
      i = j;
    }
    return out;
  }

}  // namespace isga
