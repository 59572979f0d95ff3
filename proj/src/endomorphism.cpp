#include "isga/endomorphism.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "isga/detail/scanner.hpp"

namespace isga {

  FreeEndomorphism FreeEndomorphism::identity() {
    FreeEndomorphism a;
    a._tail      = tail_rule::identity;
    a._injective = true;
    return a;
  }

  FreeEndomorphism FreeEndomorphism::shift(generator_type by) {
    FreeEndomorphism a;
    a._tail      = tail_rule::shift;
    a._param     = static_cast<long>(by);
    a._injective = true;
    return a;
  }

  FreeEndomorphism FreeEndomorphism::power(long exponent) {
    if (exponent == 0) {
      throw Error("InvalidEndomorphism", "power:0 is the trivial map");
    }
    FreeEndomorphism a;
    a._tail      = tail_rule::power;
    a._param     = exponent;
    a._injective = true;
    return a;
  }

  FreeEndomorphism FreeEndomorphism::from_images(std::vector<Word> images,
                                                 bool declared_injective) {
    FreeEndomorphism a;
    a._images    = std::move(images);
    a._tail      = tail_rule::none;
    a._injective = declared_injective;
    return a;
  }

  FreeEndomorphism FreeEndomorphism::parse(std::string const& text) {
    if (text == "identity" || text == "id") {
      return identity();
    }
    if (text.rfind("shift", 0) == 0 || text.rfind("power", 0) == 0) {
      bool is_shift = text[0] == 's';
      long k        = 1;
      if (text.size() > 5) {
        detail::Scanner in(std::string_view(text).substr(5));
        in.expect(':');
        k = in.read_signed();
        in.expect_end();
      } else if (!is_shift) {
        throw SyntaxError(1, 6, "':<exponent>' after power");
      }
      if (is_shift) {
        if (k < 0) {
          throw Error("InvalidEndomorphism", "shift amount must be >= 0");
        }
        return shift(static_cast<generator_type>(k));
      }
      return power(k);
    }
    std::map<generator_type, Word> images;
    detail::Scanner                in(text);
    while (true) {
      Word head = parse_word(in);
      if (head.size() != 1 || head.letters()[0].inverse) {
        in.fail("a single generator before '->'");
      }
      in.expect('-');
      in.expect('>');
      images[head.letters()[0].generator] = parse_word(in);
      if (!in.consume(',')) {
        break;
      }
    }
    in.expect_end();
    std::vector<Word> list;
    for (auto const& [gen, w] : images) {
      if (gen != list.size()) {
        throw Error("InvalidEndomorphism",
                    "missing image for x" + std::to_string(list.size()));
      }
      list.push_back(w);
    }
    return from_images(std::move(list), true);
  }

  Word FreeEndomorphism::image(generator_type gen) const {
    if (gen < _images.size()) {
      return _images[gen];
    }
    switch (_tail) {
      case tail_rule::identity:
        return Word::generator(gen);
      case tail_rule::shift:
        return Word::generator(gen + static_cast<generator_type>(_param));
      case tail_rule::power:
        return Word::generator(gen, _param);
      case tail_rule::none:
        break;
    }
    throw Error("GeneratorOutOfRange",
                "x" + std::to_string(gen) + " has no image under " + name());
  }

  Word FreeEndomorphism::apply(Word const& w) const {
    Word result;
    for (Letter l : w.letters()) {
      Word img = image(l.generator);
      result *= l.inverse ? img.inverse() : img;
    }
    return result;
  }

  Word FreeEndomorphism::power_apply(std::size_t k, Word const& w) const {
    if (_images.empty() && _tail == tail_rule::shift) {
      std::vector<Letter> letters(w.letters().begin(), w.letters().end());
      for (Letter& l : letters) {
        l.generator += static_cast<generator_type>(k * _param);
      }
      return Word(std::move(letters));
    }
    if (_images.empty() && _tail == tail_rule::identity) {
      return w;
    }
    Word result = w;
    for (std::size_t i = 0; i < k; ++i) {
      result = apply(result);
    }
    return result;
  }

  std::string FreeEndomorphism::name() const {
    std::string out;
    for (std::size_t i = 0; i < _images.size(); ++i) {
      out += (i ? "," : "") + std::string("x") + std::to_string(i) + "->"
             + to_string(_images[i]);
    }
    std::string tail;
    switch (_tail) {
      case tail_rule::identity:
        tail = "identity";
        break;
      case tail_rule::shift:
        tail = _param == 1 ? "shift" : "shift:" + std::to_string(_param);
        break;
      case tail_rule::power:
        tail = "power:" + std::to_string(_param);
        break;
      case tail_rule::none:
        break;
    }
    if (out.empty()) {
      return tail;
    }
    return tail.empty() ? out : out + ";" + tail;
  }

  std::vector<generator_type>
  FreeEndomorphism::relevant_generators(Word const& g) const {
    std::set<generator_type> result;
    std::set<generator_type> letters;
    for (Letter l : g.letters()) {
      letters.insert(l.generator);
    }
    for (generator_type i = 0; i < _images.size(); ++i) {
      result.insert(i);
      for (Letter l : _images[i].letters()) {
        letters.insert(l.generator);
      }
    }
    auto const rank = static_cast<generator_type>(_images.size());
    for (generator_type l : letters) {
      switch (_tail) {
        case tail_rule::identity:
        case tail_rule::power:
          if (l >= rank) {
            result.insert(l);
          }
          break;
        case tail_rule::shift: {
          auto by = static_cast<generator_type>(_param);
          if (l >= by && l - by >= rank) {
            result.insert(l - by);
          }
          break;
        }
        case tail_rule::none:
          break;
      }
    }
    return {result.begin(), result.end()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Folding
  ////////////////////////////////////////////////////////////////////////

  NotInjectiveEvidence::NotInjectiveEvidence(Word kernel_element)
      : Error("NotInjectiveEvidence",
              "the endomorphism kills " + to_string(kernel_element)),
        _kernel(std::move(kernel_element)) {}

  FoldedSubgroup::FoldedSubgroup(FreeEndomorphism const&            alpha,
                                 std::vector<generator_type> const& domain) {
    constexpr std::size_t base = 0;
    for (generator_type d : domain) {
      Word img = alpha.image(d);
      if (img.empty()) {
        throw NotInjectiveEvidence(Word::generator(d));
      }
      auto        letters = img.letters();
      std::size_t prev    = base;
      for (std::size_t i = 0; i < letters.size(); ++i) {
        std::size_t next
            = (i + 1 == letters.size()) ? base : _vertex_count++;
        Word tag;
        if (i == 0) {
          tag = Word::generator(d, letters[i].inverse ? -1 : 1);
        }
        if (letters[i].inverse) {
          _edges.push_back({next, prev, letters[i].generator, tag});
        } else {
          _edges.push_back({prev, next, letters[i].generator, tag});
        }
        prev = next;
      }
    }
    fold();
  }

  // Each edge u -> v with label a and tag t satisfies
  // alpha(t) == L(u) a L(v)^-1 for some vertex potentials L with L(base)
  // trivial. Re-gauging a vertex before merging it keeps this true, so two
  // parallel edges with equal labels but different tags t1, t2 certify that
  // alpha(t1 t2^-1) is trivial.
  void FoldedSubgroup::fold() {
    constexpr std::size_t base = 0;
    while (true) {
      // (vertex, label, outgoing?) -> edge index
      std::map<std::tuple<std::size_t, generator_type, bool>, std::size_t>
                  seen;
      std::size_t first = 0, second = 0;
      bool        outgoing = false, found = false;
      for (std::size_t e = 0; e < _edges.size() && !found; ++e) {
        for (bool out : {true, false}) {
          auto key = std::make_tuple(
              out ? _edges[e].source : _edges[e].target, _edges[e].label, out);
          auto [it, inserted] = seen.emplace(key, e);
          if (!inserted) {
            first    = it->second;
            second   = e;
            outgoing = out;
            found    = true;
            break;
          }
        }
      }
      if (!found) {
        return;
      }
      Edge const  e1 = _edges[first];
      Edge const  e2 = _edges[second];
      std::size_t v1 = outgoing ? e1.target : e1.source;
      std::size_t v2 = outgoing ? e2.target : e2.source;
      if (v1 == v2) {
        if (e1.tag != e2.tag) {
          throw NotInjectiveEvidence(e1.tag * e2.tag.inverse());
        }
        _edges.erase(_edges.begin() + static_cast<std::ptrdiff_t>(second));
        continue;
      }
      // Merge `drop` into `keep`, re-gauging `drop` so the edge ending there
      // gets the same tag as its partner.
      std::size_t keep = v1, drop = v2;
      Word        t_keep = e1.tag, t_drop = e2.tag;
      if (drop == base) {
        std::swap(keep, drop);
        std::swap(t_keep, t_drop);
      }
      Word c = outgoing ? t_keep.inverse() * t_drop : t_keep * t_drop.inverse();
      Word c_inv = c.inverse();
      for (Edge& e : _edges) {
        if (e.source == drop) {
          e.tag = c * e.tag;
        }
        if (e.target == drop) {
          e.tag = e.tag * c_inv;
        }
      }
      for (Edge& e : _edges) {
        if (e.source == drop) {
          e.source = keep;
        }
        if (e.target == drop) {
          e.target = keep;
        }
      }
      // Both edges now coincide; drop the second copy.
      _edges.erase(_edges.begin() + static_cast<std::ptrdiff_t>(second));
      --_vertex_count;
    }
  }

  std::optional<Word> FoldedSubgroup::express(Word const& g) const {
    constexpr std::size_t base = 0;
    std::size_t           cur  = base;
    Word                  h;
    for (Letter l : g.letters()) {
      bool moved = false;
      for (Edge const& e : _edges) {
        if (e.label != l.generator) {
          continue;
        }
        if (!l.inverse && e.source == cur) {
          h *= e.tag;
          cur   = e.target;
          moved = true;
          break;
        }
        if (l.inverse && e.target == cur) {
          h *= e.tag.inverse();
          cur   = e.source;
          moved = true;
          break;
        }
      }
      if (!moved) {
        return std::nullopt;
      }
    }
    if (cur != base) {
      return std::nullopt;
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // PreimageSolver
  ////////////////////////////////////////////////////////////////////////

  PreimageSolver::PreimageSolver(FreeEndomorphism alpha)
      : _alpha(std::move(alpha)) {
    if (!_alpha.declared_injective()) {
      throw Error("NotDeclaredInjective",
                  "preimages need an endomorphism declared injective");
    }
  }

  std::optional<Word> PreimageSolver::preimage(Word const& g) const {
    if (g.empty()) {
      return Word();
    }
    auto                                  domain = _alpha.relevant_generators(g);
    std::shared_ptr<FoldedSubgroup const> graph;
    {
      std::lock_guard<std::mutex> lock(_mutex);
      auto                        it = _cache.find(domain);
      if (it != _cache.end()) {
        graph = it->second;
      }
    }
    if (!graph) {
      graph = std::make_shared<FoldedSubgroup const>(_alpha, domain);
      std::lock_guard<std::mutex> lock(_mutex);
      if (_cache.size() > 4096) {
        _cache.clear();
      }
      _cache.emplace(domain, graph);
    }
    auto h = graph->express(g);
    if (h && _alpha.apply(*h) != g) {
      throw std::logic_error("preimage reconstruction failed for "
                             + to_string(g));
    }
    return h;
  }

  std::optional<Word> PreimageSolver::preimage(std::size_t k,
                                               Word const& g) const {
    Word current = g;
    for (std::size_t i = 0; i < k; ++i) {
      auto next = preimage(current);
      if (!next) {
        return std::nullopt;
      }
      current = std::move(*next);
    }
    return current;
  }

  std::optional<Word> preimage(FreeEndomorphism const& alpha, Word const& g) {
    return PreimageSolver(alpha).preimage(g);
  }

}  // namespace isga
