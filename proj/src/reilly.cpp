#include "isga/reilly.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "isga/block_graph.hpp"
#include "isga/detail/scanner.hpp"

namespace isga {

  ReillyElement parse_reilly(std::string_view text, Alphabet const& alphabet) {
    detail::Scanner in(text);
    in.expect('(');
    ReillyElement x;
    x.i = in.read_unsigned();
    in.expect(',');
    in.skip_space();
    x.g = parse_word(in, alphabet);
    in.expect(',');
    x.j = in.read_unsigned();
    in.expect(')');
    in.expect_end();
    return x;
  }

  std::string to_string(ReillyElement const& x, Alphabet const& alphabet) {
    return "(" + std::to_string(x.i) + "," + to_string(x.g, alphabet) + ","
           + std::to_string(x.j) + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // ReillySemigroup
  ////////////////////////////////////////////////////////////////////////

  ReillySemigroup::ReillySemigroup(FreeEndomorphism alpha)
      : _solver(std::make_shared<PreimageSolver const>(std::move(alpha))) {}

  ReillyElement ReillySemigroup::mul(ReillyElement const& x,
                                     ReillyElement const& y) const {
    FreeEndomorphism const& a = alpha();
    if (y.i >= x.j) {
      std::size_t const d = y.i - x.j;
      return ReillyElement{x.i + d, a.power_apply(d, x.g) * y.g, y.j};
    }
    std::size_t const d = x.j - y.i;
    return ReillyElement{x.i, x.g * a.power_apply(d, y.g), y.j + d};
  }

  ReillyElement ReillySemigroup::inverse(ReillyElement const& x) const {
    return ReillyElement{x.j, x.g.inverse(), x.i};
  }

  bool ReillySemigroup::natural_leq(ReillyElement const& x,
                                    ReillyElement const& y) const {
    return mul(mul(x, inverse(x)), y) == x;
  }

  std::vector<ReillyElement>
  ReillySemigroup::elements_above(ReillyElement const& x) const {
    std::vector<ReillyElement> out{x};
    Word                       h = x.g;
    // alpha^{k+1}(h') = g iff alpha(h') is the level-k preimage, so the
    // preimages are taken one level at a time.
    for (std::size_t k = 1; k <= std::min(x.i, x.j); ++k) {
      auto next = _solver->preimage(h);
      if (!next) {
        break;
      }
      h = std::move(*next);
      out.push_back(ReillyElement{x.i - k, h, x.j - k});
    }
    return out;
  }

  ReillyElement ReillySemigroup::max_above(ReillyElement const& x) const {
    auto const above = elements_above(x);
    for (std::size_t a = 0; a + 1 < above.size(); ++a) {
      if (!natural_leq(above[a], above[a + 1])) {
        throw Error("NotUnique",
                    to_string(above[a]) + " and " + to_string(above[a + 1])
                        + " are incomparable above " + to_string(x));
      }
    }
    return above.back();
  }

  bool ReillySemigroup::sigma_equivalent(ReillyElement const& x,
                                         ReillyElement const& y) const {
    if (x.i + y.j != y.i + x.j) {
      return false;
    }
    std::size_t const level = std::max(x.i, y.i);
    return alpha().power_apply(level - x.i, x.g)
           == alpha().power_apply(level - y.i, y.g);
  }

  ////////////////////////////////////////////////////////////////////////
  // Bicyclic monoid
  ////////////////////////////////////////////////////////////////////////

  BicyclicElement bicyclic_mul(BicyclicElement x, BicyclicElement y) noexcept {
    if (y.i >= x.j) {
      return BicyclicElement{x.i + y.i - x.j, y.j};
    }
    return BicyclicElement{x.i, y.j + x.j - y.i};
  }

  bool bn_membership(std::size_t n, BicyclicElement b) {
    if (n < 2) {
      throw Error("InvalidN", "B(n) needs n >= 2, got " + std::to_string(n));
    }
    return b.i % n == b.j % n;
  }

  std::string to_string(SubmonoidClass const& c) {
    switch (c.kind) {
      case SubmonoidKind::idempotents:
        return "E(B)";
      case SubmonoidKind::bn:
        return "B(" + std::to_string(c.n) + ")";
      case SubmonoidKind::whole:
        return "B";
      case SubmonoidKind::other:
        return "other";
    }
    return "other";
  }

  SubmonoidClass bn_classifier(std::vector<BicyclicElement> const& sample,
                               std::size_t                          depth) {
    std::size_t largest = 0;
    for (auto const& b : sample) {
      largest = std::max({largest, b.i, b.j});
    }
    std::size_t const outer = depth > 0 ? depth : std::max<std::size_t>(24, 4 * largest);
    std::size_t const inner = outer / 2;
    auto in_box = [&](BicyclicElement b) { return b.i <= outer && b.j <= outer; };

    std::set<BicyclicElement>    closure;
    std::vector<BicyclicElement> pending;
    auto add = [&](BicyclicElement b) {
      if (in_box(b) && closure.insert(b).second) {
        pending.push_back(b);
      }
    };
    for (std::size_t k = 0; k <= outer; ++k) {
      add({k, k});
    }
    for (auto const& b : sample) {
      add(b);
      add(bicyclic_inverse(b));
    }
    while (!pending.empty()) {
      BicyclicElement const x = pending.back();
      pending.pop_back();
      add(bicyclic_inverse(x));
      std::vector<BicyclicElement> const current(closure.begin(), closure.end());
      for (BicyclicElement const& y : current) {
        add(bicyclic_mul(x, y));
        add(bicyclic_mul(y, x));
      }
    }

    std::size_t d = 0;
    for (auto const& b : closure) {
      d = std::gcd(d, b.i > b.j ? b.i - b.j : b.j - b.i);
    }
    if (d == 0) {
      return SubmonoidClass{SubmonoidKind::idempotents, 0};
    }
    for (std::size_t i = 0; i <= inner; ++i) {
      for (std::size_t j = 0; j <= inner; ++j) {
        bool const expected = d == 1 || bn_membership(d, {i, j});
        if (expected != closure.contains({i, j})) {
          return SubmonoidClass{SubmonoidKind::other, 0};
        }
      }
    }
    return d == 1 ? SubmonoidClass{SubmonoidKind::whole, 0}
                  : SubmonoidClass{SubmonoidKind::bn, d};
  }

  ////////////////////////////////////////////////////////////////////////
  // Toeplitz amalgams
  ////////////////////////////////////////////////////////////////////////

  BicyclicSubmonoid BicyclicSubmonoid::parse(std::string_view text) {
    detail::Scanner in(text);
    in.skip_space();
    if (in.consume('E')) {
      if (in.consume('(')) {
        in.expect('B');
        in.expect(')');
      }
      in.expect_end();
      return BicyclicSubmonoid{true, 0};
    }
    in.expect('B');
    std::size_t n = 0;
    if (in.consume(':')) {
      n = in.read_unsigned();
    } else {
      in.expect('(');
      n = in.read_unsigned();
      in.expect(')');
    }
    in.expect_end();
    if (n < 2) {
      throw Error("InvalidN", "B(n) needs n >= 2, got " + std::to_string(n));
    }
    return BicyclicSubmonoid{false, n};
  }

  GroupPresentation toeplitz_amalgam_group(BicyclicSubmonoid const& u) {
    auto const a = free_presentation({"a"});
    auto const b = free_presentation({"b"});
    if (u.idempotents) {
      return amalgamate_presentations(a, b, {});
    }
    if (u.n < 2) {
      throw Error("InvalidN", "B(n) needs n >= 2, got " + std::to_string(u.n));
    }
    auto const power = static_cast<long>(u.n);
    return amalgamate_presentations(
        a, b, {{Word::generator(0, power), Word::generator(0, power)}});
  }

  std::optional<std::size_t>
  toeplitz_subgroup_rank(BicyclicSubmonoid const& u) {
    if (u.idempotents) {
      return std::nullopt;
    }
    if (u.n < 2) {
      throw Error("InvalidN", "B(n) needs n >= 2, got " + std::to_string(u.n));
    }
    // Block graph: one vertex per copy of B (a single D-class each) and one
    // edge per D-class of U.
    return decompose(Composition{u.n}, Composition{u.n}).k1_rank;
  }

}  // namespace isga
