#include <algorithm>

#include "catch_amalgamated.hpp"

#include "isga/presentation.hpp"
#include "isga/universal_group.hpp"

#include "oracle/generators.hpp"
#include "oracle/semigroups.hpp"
#include "oracle/string_action.hpp"

namespace isga {

  namespace {
    AmalgamWord random_amalgam_word(testing::Rng&             rng,
                                    SpecialAmalgamHost const& host,
                                    std::size_t               max_letters) {
      std::vector<AmalgamLetter> letters;
      int copy = testing::coin(rng) ? 1 : 2;
      for (std::size_t k = testing::uniform(rng, 1, max_letters); k > 0; --k) {
        letters.push_back(
            AmalgamLetter{copy, testing::random_gisg(rng, host.graph(), 2)});
        copy = 3 - copy;
      }
      return normalize(host, std::move(letters));
    }

    AmalgamWord inverse(SpecialAmalgamHost const& host, AmalgamWord const& w) {
      std::vector<AmalgamLetter> letters;
      for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        letters.push_back(AmalgamLetter{it->copy, gisg_inverse(it->element)});
      }
      return normalize(host, std::move(letters));
    }

    std::vector<GraphISGElement> host_letters(AmalgamWord const& w) {
      std::vector<GraphISGElement> out;
      for (auto const& l : w.letters) {
        out.push_back(l.element);
      }
      return out;
    }
  }  // namespace

  TEST_CASE("universal groups of finite semigroups", "[ugroup]") {
    auto const b2 = universal_group_presentation(
        validate(testing::brandt_union({2})));
    CHECK(b2.generators.size() == 4);
    CHECK(abelianization(b2) == AbelianInvariants{1, {}});

    auto const chain
        = universal_group_presentation(validate(testing::chain_semilattice(4)));
    CHECK(abelianization(chain).free_rank == 0);
    CHECK(to_string(abelianization(chain)) == "0");

    for (std::size_t d = 2; d <= 5; ++d) {
      auto const shift = universal_group_presentation(
          validate(testing::partial_shift(d).table));
      CHECK(abelianization(shift) == AbelianInvariants{1, {}});
    }

    // B_2(Z_2): G is Z x Z_2
    auto const b2z2 = universal_group_presentation(
        to_finite(BlockSum({Block{2, GroupSpec::cyclic(2)}})).semigroup());
    CHECK(abelianization(b2z2) == AbelianInvariants{1, {2}});

    try {
      universal_group_presentation(validate(testing::cyclic_group(3)));
      FAIL("no exception");
    } catch (Error const& e) {
      CHECK(e.kind() == "NoZero");
    }
  }

  TEST_CASE("Brandt universal groups have rank n - 1", "[ugroup][property]") {
    for (std::size_t n = 1; n <= 5; ++n) {
      auto const p = universal_group_presentation(
          validate(testing::brandt_union({n})));
      CHECK(abelianization(p) == AbelianInvariants{n - 1, {}});
    }
    auto const two = universal_group_presentation(
        validate(testing::brandt_union({3, 2})));
    CHECK(abelianization(two) == AbelianInvariants{3, {}});
  }

  TEST_CASE("combining universal groups", "[ugroup]") {
    auto const g  = polycyclic(2);
    auto const fg = graph_universal_group(g);
    auto const h  = combine_universal_groups(fg, fg, {});
    CHECK(abelianization(h) == AbelianInvariants{4, {}});
    CHECK(h.relators.empty());
    for (std::size_t n = 1; n <= 3; ++n) {
      auto const p3 = graph_universal_group(polycyclic(n));
      CHECK(abelianization(combine_universal_groups(p3, p3, {})).free_rank
            == 2 * n);
    }

    auto const a = free_presentation({"a"});
    auto const b = free_presentation({"b"});
    for (long n = 1; n <= 4; ++n) {
      auto const bn = combine_universal_groups(
          a, b, {{Word::generator(0, n), Word::generator(0, n)}});
      CHECK(to_string(bn)
            == (n == 1 ? std::string("<a,b | a b^-1")
                           : "<a,b | a^" + std::to_string(n) + " b^-"
                                 + std::to_string(n)) + ">");
      CHECK(relation_matrix(bn) == std::vector<std::vector<long>>{{n, -n}});
    }

    // anything over itself along the identity
    GroupPresentation k{{"x", "y"}, {Word::generator(0, 2), Word::generator(1, 3)}};
    std::vector<std::pair<Word, Word>> identity{
        {Word::generator(0), Word::generator(0)},
        {Word::generator(1), Word::generator(1)}};
    CHECK(abelianization(combine_universal_groups(k, k, identity))
          == abelianization(k));
  }

  TEST_CASE("special amalgam hosts", "[ugroup]") {
    CHECK(SpecialAmalgamHost::named("bicyclic").rank() == 1);
    CHECK(SpecialAmalgamHost::named("pc:3").rank() == 3);
    CHECK_THROWS_AS(SpecialAmalgamHost::named("pc:x"), Error);
    CHECK_THROWS_AS(SpecialAmalgamHost::named("klein"), Error);
    auto const host = SpecialAmalgamHost::named("pc:2");
    CHECK(host.alphabet().size() == 4);
    CHECK(host.alphabet().label(0) == "a1");
    CHECK(host.alphabet().label(3) == "a2_2");
  }

  TEST_CASE("gamma images", "[ugroup]") {
    auto const host = SpecialAmalgamHost::named("pc:2");
    auto       w    = [&](char const* text) {
      return parse_amalgam_word(host, text);
    };
    // s theta(s^-1) with s = a1 a2*
    auto const g = gamma_image(host, w("[a1 * a2']1 [a2 * a1']2"));
    REQUIRE(g);
    CHECK(*g
          == Word::generator(0) * Word::generator(1, -1) * Word::generator(3)
                 * Word::generator(2, -1));
    CHECK(gamma_image(host, w("[@v * a1']1 [a2 * @v']2")) == std::nullopt);
    CHECK(gamma_image(host, w("[a1 * a1']1 [a1.a2 * a1.a2']2 [@v * @v']1"))
          == Word());
    CHECK(gamma_image(host, w("0")) == std::nullopt);
    // same-copy neighbours are multiplied out
    CHECK(w("[a1 * @v']1 [a2 * @v']1") == w("[a1.a2 * @v']1"));
    CHECK(w("[@v * a1']1 [a2 * @v']1").zero);
    CHECK_THROWS_AS(w("[a1 * @v']3"), SyntaxError);
    CHECK_THROWS_AS(w("[a1 * @v'"), SyntaxError);
  }

  TEST_CASE("amalgam word text round trip", "[ugroup][io][property]") {
    testing::Rng rng(71);
    auto const   host = SpecialAmalgamHost::named("pc:2");
    for (int trial = 0; trial < 300; ++trial) {
      auto const x = random_amalgam_word(rng, host, 5);
      CHECK(parse_amalgam_word(host, to_string(x, host)) == x);
    }
  }

  TEST_CASE("gamma is a 0-morphism", "[ugroup][property]") {
    testing::Rng rng(72);
    for (char const* name : {"bicyclic", "pc:2", "pc:3"}) {
      auto const host = SpecialAmalgamHost::named(name);
      for (int trial = 0; trial < 500; ++trial) {
        auto const u  = random_amalgam_word(rng, host, 4);
        auto const v  = random_amalgam_word(rng, host, 4);
        auto const uv = concatenate(host, u, v);
        auto const gu = gamma_image(host, u);
        auto const gv = gamma_image(host, v);
        auto const g  = gamma_image(host, uv);
        CAPTURE(to_string(u, host), to_string(v, host));
        CHECK(g.has_value() == !host_product(host, uv).zero);
        CHECK(g.has_value()
              == (!uv.zero
                  && testing::product_is_nonzero(host_letters(uv), host.rank())));
        if (g) {
          REQUIRE(gu);
          REQUIRE(gv);
          CHECK(*g == *gu * *gv);
        }
      }
    }
  }

  TEST_CASE("idempotent amalgam words have trivial gamma images",
            "[ugroup][property]") {
    testing::Rng rng(73);
    auto const   host = SpecialAmalgamHost::named("pc:2");
    for (int trial = 0; trial < 500; ++trial) {
      auto const u = random_amalgam_word(rng, host, 5);
      auto const e = concatenate(host, u, inverse(host, u));
      if (auto const g = gamma_image(host, e)) {
        CHECK(g->empty());
      } else {
        CHECK(host_product(host, u).zero);
      }
      auto const f = concatenate(host, e, u);
      CHECK(gamma_image(host, f) == gamma_image(host, u));
    }
  }

}  // namespace isga
