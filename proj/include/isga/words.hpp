#ifndef ISGA_WORDS_HPP_
#define ISGA_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace isga {

  namespace detail {
    class Scanner;
  }

  using generator_type = std::uint32_t;

  struct Letter {
    generator_type generator = 0;
    bool           inverse   = false;

    Letter inverted() const noexcept {
      return Letter{generator, !inverse};
    }

    bool cancels(Letter other) const noexcept {
      return generator == other.generator && inverse != other.inverse;
    }

    friend auto operator<=>(Letter const&, Letter const&) = default;
  };

  // A freely reduced word over an unbounded set of generators x0, x1, ...;
  // elements of a free group of any (possibly infinite) rank. Every public
  // constructor reduces its input.
  class Word {
   public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);
    Word(std::initializer_list<Letter> letters);

    // x_gen^exponent
    static Word generator(generator_type gen, long exponent = 1);

    std::span<Letter const> letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }

    // Largest generator index + 1, or 0 for the empty word.
    generator_type support_bound() const noexcept;

    Word inverse() const;
    Word power(long k) const;

    friend Word operator*(Word const& u, Word const& v);
    Word&       operator*=(Word const& v);

    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::vector<Letter> _letters;
  };

  // Appends `letter` to an already reduced letter sequence, cancelling if
  // needed.
  void push_reduced(std::vector<Letter>& letters, Letter letter);

  // Generator labels for parsing and printing. The default alphabet names
  // generator i as "x<i>" for every i; a prefixed alphabet does the same with
  // another letter; an explicit alphabet has a fixed finite label list.
  class Alphabet {
   public:
    Alphabet() = default;
    static Alphabet indexed(char prefix);
    static Alphabet labelled(std::vector<std::string> labels);

    std::string                   label(generator_type gen) const;
    std::optional<generator_type> index(std::string_view label) const;
    bool                          is_finite() const noexcept {
      return !_labels.empty();
    }
    std::size_t size() const noexcept {
      return _labels.size();
    }

   private:
    char                     _prefix = 'x';
    std::vector<std::string> _labels;
  };

  Alphabet const& default_alphabet();

  // Grammar: `1` for the identity, otherwise juxtaposed factors; a factor is
  // a label ([A-Za-z][0-9]*(_[0-9]+)?) or a parenthesised word, followed by
  // any number of postfix `'` (inverse) or `^k` (power).
  Word parse_word(std::string_view text,
                  Alphabet const&  alphabet = default_alphabet());
  // Parses a word prefix; stops at the first character that cannot start a
  // factor and leaves it unconsumed.
  Word parse_word(detail::Scanner& in,
                  Alphabet const&  alphabet = default_alphabet());

  // Canonical form: letters separated by single spaces, inverse letters with a
  // trailing `'`, the identity as `1`.
  std::string to_string(Word const&     w,
                        Alphabet const& alphabet = default_alphabet());
  // Runs collapsed into powers: `a^3 b^-3`.
  std::string to_power_string(Word const&     w,
                              Alphabet const& alphabet = default_alphabet());

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

}  // namespace isga

#endif  // ISGA_WORDS_HPP_
