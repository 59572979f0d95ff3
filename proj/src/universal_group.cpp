#include "isga/universal_group.hpp"

#include "isga/detail/scanner.hpp"

namespace isga {

  GroupPresentation
  universal_group_presentation(FiniteInverseSemigroup const& s) {
    if (!s.zero()) {
      throw Error("NoZero", "the universal group needs a zero");
    }
    element_type const        zero = *s.zero();
    std::vector<std::size_t>  generator_of(s.size(), 0);
    GroupPresentation         p;
    for (element_type a = 0; a < s.size(); ++a) {
      if (a != zero) {
        generator_of[a] = p.generators.size();
        p.generators.push_back("s" + std::to_string(a));
      }
    }
    auto gen = [&](element_type a) {
      return Word::generator(static_cast<generator_type>(generator_of[a]));
    };
    for (element_type a = 0; a < s.size(); ++a) {
      for (element_type b = 0; b < s.size(); ++b) {
        element_type const c = s.mul(a, b);
        if (a == zero || b == zero || c == zero) {
          continue;
        }
        Word r = gen(a) * gen(b) * gen(c).inverse();
        if (!r.empty()) {
          p.relators.push_back(std::move(r));
        }
      }
    }
    return p;
  }

  GroupPresentation
  combine_universal_groups(GroupPresentation const&                  gs,
                           GroupPresentation const&                  gt,
                           std::vector<std::pair<Word, Word>> const& gu_images) {
    return amalgamate_presentations(gs, gt, gu_images);
  }

  ////////////////////////////////////////////////////////////////////////
  // Special amalgams
  ////////////////////////////////////////////////////////////////////////

  SpecialAmalgamHost::SpecialAmalgamHost(DirectedGraph graph)
      : _graph(std::move(graph)) {
    std::vector<std::string> labels;
    for (std::size_t e = 0; e < _graph.edge_count(); ++e) {
      labels.push_back(_graph.edge(e).name);
    }
    for (std::size_t e = 0; e < _graph.edge_count(); ++e) {
      labels.push_back(_graph.edge(e).name + "_2");
    }
    _alphabet = Alphabet::labelled(std::move(labels));
  }

  SpecialAmalgamHost SpecialAmalgamHost::named(std::string_view name) {
    if (name == "bicyclic") {
      return SpecialAmalgamHost(polycyclic(1));
    }
    if (name.starts_with("pc:")) {
      std::size_t n = 0;
      try {
        detail::Scanner in(name.substr(3));
        n = in.read_unsigned();
        in.expect_end();
      } catch (SyntaxError const&) {
        throw Error("UnsupportedHost", "expected pc:<n>, got '"
                                           + std::string(name) + "'");
      }
      return SpecialAmalgamHost(polycyclic(n));
    }
    throw Error("UnsupportedHost",
                "'" + std::string(name)
                    + "' is not a supported host (bicyclic, pc:<n>)");
  }

  AmalgamWord normalize(SpecialAmalgamHost const&   host,
                        std::vector<AmalgamLetter> letters) {
    AmalgamWord w;
    for (AmalgamLetter& l : letters) {
      if (l.copy != 1 && l.copy != 2) {
        throw Error("InvalidLetter", "copy must be 1 or 2");
      }
      if (l.element.zero) {
        return AmalgamWord{true, {}};
      }
      if (!w.letters.empty() && w.letters.back().copy == l.copy) {
        GraphISGElement merged
            = gisg_mul(host.graph(), w.letters.back().element, l.element);
        if (merged.zero) {
          return AmalgamWord{true, {}};
        }
        w.letters.back().element = std::move(merged);
      } else {
        w.letters.push_back(std::move(l));
      }
    }
    return w;
  }

  AmalgamWord concatenate(SpecialAmalgamHost const& host,
                          AmalgamWord const&        u,
                          AmalgamWord const&        v) {
    if (u.zero || v.zero) {
      return AmalgamWord{true, {}};
    }
    std::vector<AmalgamLetter> letters = u.letters;
    letters.insert(letters.end(), v.letters.begin(), v.letters.end());
    return normalize(host, std::move(letters));
  }

  GraphISGElement host_product(SpecialAmalgamHost const& host,
                               AmalgamWord const&        w) {
    if (w.zero) {
      return GraphISGElement::make_zero();
    }
    if (w.letters.empty()) {
      throw Error("EmptyWord", "an amalgam word needs a letter");
    }
    GraphISGElement x = w.letters.front().element;
    for (std::size_t i = 1; i < w.letters.size() && !x.zero; ++i) {
      x = gisg_mul(host.graph(), x, w.letters[i].element);
    }
    return x;
  }

  std::optional<Word> gamma_image(SpecialAmalgamHost const& host,
                                  AmalgamWord const&        w) {
    if (host_product(host, w).zero) {
      return std::nullopt;
    }
    auto const offset = static_cast<generator_type>(host.rank());
    std::vector<Letter> letters;
    for (AmalgamLetter const& l : w.letters) {
      Word const image = universal_group_image(l.element);
      for (Letter x : image.letters()) {
        if (l.copy == 2) {
          x.generator += offset;
        }
        push_reduced(letters, x);
      }
    }
    return Word(std::move(letters));
  }

  AmalgamWord parse_amalgam_word(SpecialAmalgamHost const& host,
                                 std::string_view          text) {
    detail::Scanner in(text);
    in.skip_space();
    if (in.peek() == '0') {
      in.get();
      in.expect_end();
      return AmalgamWord{true, {}};
    }
    std::vector<AmalgamLetter> letters;
    do {
      in.expect('[');
      std::size_t const line = in.line(), col = in.col();
      std::string       inner;
      while (!in.at_end() && in.peek() != ']') {
        inner += in.get();
      }
      in.expect(']');
      GraphISGElement element;
      try {
        element = parse_gisg(host.graph(), inner);
      } catch (SyntaxError const& e) {
        throw SyntaxError(line + e.line() - 1,
                          e.line() == 1 ? col + e.col() - 1 : e.col(),
                          e.expected());
      }
      if (in.peek() != '1' && in.peek() != '2') {
        in.fail("copy tag '1' or '2'");
      }
      int const copy = in.get() - '0';
      letters.push_back(AmalgamLetter{copy, std::move(element)});
      in.skip_space();
    } while (!in.at_end());
    return normalize(host, std::move(letters));
  }

  std::string to_string(AmalgamWord const& w, SpecialAmalgamHost const& host) {
    if (w.zero) {
      return "0";
    }
    std::string out;
    for (AmalgamLetter const& l : w.letters) {
      out += (out.empty() ? "[" : " [") + to_string(l.element, host.graph())
             + "]" + std::to_string(l.copy);
    }
    return out;
  }

}  // namespace isga
