#include "catch_amalgamated.hpp"

#include "isga/presentation.hpp"

namespace isga {

  namespace {
    Word a_pow(long n) {
      return Word::generator(0, n);
    }
  }  // namespace

  TEST_CASE("amalgamating cyclic groups", "[presentation]") {
    auto const za = free_presentation({"a"});
    auto const zb = free_presentation({"b"});
    for (long n : {1, 2, 3, 5}) {
      auto const h = amalgamate_presentations(za, zb, {{a_pow(n), a_pow(n)}});
      CHECK(to_string(h)
            == (n == 1 ? std::string("<a,b | a b^-1")
                           : "<a,b | a^" + std::to_string(n) + " b^-"
                                 + std::to_string(n))
                   + ">");
      auto const ab = abelianization(h);
      CHECK(ab.free_rank == 1);
      if (n == 1) {
        CHECK(ab.torsion.empty());
      } else {
        CHECK(ab.torsion == std::vector<long>{n});
      }
      CHECK(relation_matrix(h) == std::vector<std::vector<long>>{{n, -n}});
    }
    auto const f2 = amalgamate_presentations(za, zb, {});
    CHECK(to_string(f2) == "<a,b |>");
    CHECK(abelianization(f2) == AbelianInvariants{2, {}});
  }

  TEST_CASE("amalgamating with the trivial group", "[presentation]") {
    GroupPresentation p{{"a", "b"}, {Word::generator(0, 2) * Word::generator(1)}};
    auto const q = amalgamate_presentations(p, GroupPresentation{}, {});
    CHECK(q.generators == p.generators);
    CHECK(q.relators == p.relators);
  }

  TEST_CASE("clashing generator names are renamed", "[presentation]") {
    auto const q = amalgamate_presentations(free_presentation({"a"}),
                                            free_presentation({"a"}), {});
    CHECK(q.generators == std::vector<std::string>{"a", "a_2"});
  }

  TEST_CASE("Smith normal form", "[presentation]") {
    CHECK(smith_invariant_factors({{2, 0}, {0, 3}}, 2)
          == std::vector<long>{1, 6});
    CHECK(smith_invariant_factors({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3)
          == std::vector<long>{2, 6, 12});
    CHECK(smith_invariant_factors({}, 3).empty());
    GroupPresentation klein{{"a", "b"},
                            {Word::generator(0, 2), Word::generator(1, 2),
                             Word::generator(0) * Word::generator(1)
                                 * Word::generator(0, -1)
                                 * Word::generator(1, -1)}};
    auto const ab = abelianization(klein);
    CHECK(ab == AbelianInvariants{0, {2, 2}});
    CHECK(to_string(ab) == "Z/2 + Z/2");
    CHECK(to_string(AbelianInvariants{}) == "0");
  }

}  // namespace isga
