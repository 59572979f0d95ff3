#include <algorithm>
#include <set>

#include "catch_amalgamated.hpp"

#include "isga/brandt.hpp"
#include "isga/inverse_semigroup.hpp"

#include "oracle/generators.hpp"
#include "oracle/semigroups.hpp"

namespace isga {

  namespace {
    using testing::brandt_union;
    using testing::product;
    using testing::with_identity;

    std::vector<CayleyTable> zoo() {
      return {testing::chain_semilattice(1),
              testing::chain_semilattice(2),
              testing::chain_semilattice(4),
              testing::cyclic_group(3),
              testing::cyclic_group(4),
              brandt_union({1}),
              brandt_union({2}),
              brandt_union({3, 2}),
              brandt_union({2, 2, 1}),
              with_identity(brandt_union({2})),
              product(testing::cyclic_group(2), testing::chain_semilattice(2)),
              product(testing::cyclic_group(3), brandt_union({2})),
              testing::symmetric_inverse_monoid(2).table,
              testing::symmetric_inverse_monoid(3).table,
              testing::partial_shift(3).table,
              testing::partial_shift(5).table};
    }

    std::vector<element_type> ids(std::initializer_list<element_type> xs) {
      return std::vector<element_type>(xs);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // validate
  ////////////////////////////////////////////////////////////////////////

  TEST_CASE("validation accepts inverse semigroups", "[isg]") {
    auto const s = validate(testing::chain_semilattice(2));
    CHECK(s.idempotents() == ids({0, 1}));
    CHECK(s.zero() == 0u);
    CHECK(s.identity() == 1u);

    auto const b2 = validate(brandt_union({2}));
    CHECK(b2.size() == 5);
    CHECK(b2.idempotents().size() == 3);
    // (1,2) and (2,1) are mutually inverse
    CHECK(b2.inverse(2) == 3);
  }

  TEST_CASE("validation names the first violated axiom", "[isg]") {
    // left zero semigroup: x y = x
    try {
      validate(CayleyTable(2, {0, 0, 1, 1}));
      FAIL("no exception");
    } catch (IdempotentsDontCommute const& e) {
      CHECK(std::set<element_type>{e.e, e.f} == std::set<element_type>{0, 1});
    }
    // null semigroup on {0, a}: a a = 0
    try {
      validate(CayleyTable(2, {0, 0, 0, 0}));
      FAIL("no exception");
    } catch (NotRegular const& e) {
      CHECK(e.a == 1);
    }
    try {
      validate(CayleyTable(2, {1, 0, 0, 0}));
      FAIL("no exception");
    } catch (NotAssociative const& e) {
      CHECK(e.kind() == "NotAssociative");
    }
    CHECK_THROWS_AS(CayleyTable(2, {0, 0, 0, 2}), Error);
    CHECK_THROWS_AS(CayleyTable(2, {0, 0, 0}), Error);
  }

  TEST_CASE("serial and parallel validation agree", "[isg][kernels]") {
    for (auto const& t : zoo()) {
      auto const a = validate(t);
      auto const b = validate_serial(t);
      CHECK(a.idempotents() == b.idempotents());
      for (element_type x = 0; x < a.size(); ++x) {
        CHECK(a.inverse(x) == b.inverse(x));
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Cayley table text
  ////////////////////////////////////////////////////////////////////////

  TEST_CASE("Cayley table text format", "[isg][io]") {
    auto const t = parse_cayley_table(
        "# B_1 with zero\n2 zero=0\n0 0\n0 1   # e\n");
    CHECK(t == testing::chain_semilattice(2));
    CHECK(t.zero() == 0u);
    CHECK(parse_cayley_table(to_string(t)) == t);
    for (auto const& s : zoo()) {
      CHECK(parse_cayley_table(to_string(s)) == s);
    }
    CHECK_THROWS_AS(parse_cayley_table("2 zero=1\n0 0\n0 1\n"), Error);
    CHECK_THROWS_AS(parse_cayley_table("2\n0 0\n0 5\n"), Error);
    try {
      parse_cayley_table("2\n0 0\n0\n1\n");
      FAIL("no exception");
    } catch (SyntaxError const& e) {
      CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(parse_cayley_table("2\n0 0\n0 1 1\n"), SyntaxError);
    CHECK_THROWS_AS(parse_cayley_table("x\n"), SyntaxError);
  }

  ////////////////////////////////////////////////////////////////////////
  // natural order
  ////////////////////////////////////////////////////////////////////////

  TEST_CASE("natural partial order examples", "[isg]") {
    auto const b2 = validate(brandt_union({2}));
    for (element_type a = 0; a < b2.size(); ++a) {
      CHECK(natural_leq(b2, 0, a));
    }
    for (element_type e : b2.idempotents()) {
      CHECK(natural_leq(b2, e, e));
    }
    CHECK(natural_leq(b2, 2, 2));
    CHECK_FALSE(natural_leq(b2, 2, 3));
    CHECK_FALSE(natural_leq(b2, 1, 4));
  }

  TEST_CASE("natural order is a partial order with two characterisations",
            "[isg][property]") {
    for (auto const& t : zoo()) {
      auto const s = validate(t);
      auto const n = static_cast<element_type>(s.size());
      for (element_type a = 0; a < n; ++a) {
        CHECK(natural_leq(s, a, a));
        CHECK(s.inverse(s.inverse(a)) == a);
        CHECK(s.is_idempotent(s.mul(a, s.inverse(a))));
        CHECK(s.is_idempotent(s.mul(s.inverse(a), a)));
        for (element_type b = 0; b < n; ++b) {
          bool const leq = natural_leq(s, a, b);
          CHECK(leq == (a == s.mul(s.mul(a, s.inverse(a)), b)));
          if (a != b && leq) {
            CHECK_FALSE(natural_leq(s, b, a));
          }
          if (leq) {
            for (element_type c = 0; c < n; ++c) {
              if (natural_leq(s, b, c)) {
                CHECK(natural_leq(s, a, c));
              }
            }
          }
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  TEST_CASE("Green's relations examples", "[isg][green]") {
    auto const b2 = validate(brandt_union({2}));
    auto const g  = green(b2);
    CHECK(g.D.size() == 2);
    CHECK(g.D.classes()[g.D.class_of(1)].size() == 4);
    CHECK(g.D.classes()[g.D.class_of(0)].size() == 1);

    auto const sl = green(validate(testing::chain_semilattice(4)));
    for (Partition const* p : {&sl.R, &sl.L, &sl.H, &sl.D, &sl.J}) {
      CHECK(p->size() == 4);
    }

    auto const u = green(validate(brandt_union({3, 2})));
    CHECK(u.J.size() == 3);
  }

  TEST_CASE("Green's relations agree with principal ideals",
            "[isg][green][property]") {
    for (auto const& t : zoo()) {
      auto const s = validate(t);
      auto const g = green(s);
      auto const o = testing::green_by_ideals(s);
      CHECK(g.R == o.R);
      CHECK(g.L == o.L);
      CHECK(g.H == o.H);
      CHECK(g.D == o.D);
      CHECK(g.J == o.J);
      CHECK(g.D == g.J);
      CHECK(g.H.refines(g.R));
      CHECK(g.H.refines(g.L));
      for (element_type e : s.idempotents()) {
        CHECK(is_group(maximal_subgroup(s, e).table));
        CHECK(maximal_subgroup(s, e).elements.size()
              == g.H.classes()[g.H.class_of(e)].size());
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // sigma
  ////////////////////////////////////////////////////////////////////////

  TEST_CASE("sigma examples", "[isg][sigma]") {
    for (auto const& t : {brandt_union({2}), testing::chain_semilattice(3),
                          testing::partial_shift(4).table}) {
      auto const sigma = sigma_classes(validate(t));
      CHECK(sigma.classes.size() == 1);
      CHECK(sigma.collapsed_by_zero);
    }
    auto const z3 = sigma_classes(validate(testing::cyclic_group(3)));
    CHECK(z3.classes.size() == 3);
    CHECK(z3.quotient == testing::cyclic_group(3));
    CHECK_FALSE(z3.collapsed_by_zero);

    // {1, e}: e <= 1
    auto const m = sigma_classes(validate(CayleyTable(2, {0, 0, 0, 1})));
    CHECK(m.classes.size() == 1);
    CHECK(is_group(m.quotient));
  }

  TEST_CASE("sigma is the least group congruence", "[isg][sigma][property]") {
    for (auto const& t : zoo()) {
      if (t.size() > 30) {
        continue;
      }
      auto const s     = validate(t);
      auto const sigma = sigma_classes(s);
      CHECK(is_group(sigma.quotient));
      CHECK(testing::quotient_table(s, sigma.classes).size()
            == sigma.quotient.size());
      std::size_t group_congruences = 0;
      for (Partition const& c : testing::all_congruences(s)) {
        if (is_group(testing::quotient_table(s, c))) {
          ++group_congruences;
          CHECK(sigma.classes.refines(c));
        }
      }
      CHECK(group_congruences >= 1);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // predicates
  ////////////////////////////////////////////////////////////////////////

  TEST_CASE("full subsemigroups", "[isg]") {
    auto const b2 = validate(brandt_union({2}));
    CHECK(is_full(b2, b2.idempotents()));
    CHECK(is_full(b2, ids({0, 1, 4})));
    CHECK_FALSE(is_full(b2, ids({0, 1})));
    CHECK_THROWS_AS(is_full(b2, ids({0, 2})), NotASubsemigroup);
    CHECK_THROWS_AS(is_full(b2, ids({0, 1, 2, 4})), NotASubsemigroup);
  }

  TEST_CASE("unitarity", "[isg]") {
    CHECK(is_e_unitary(validate(testing::chain_semilattice(3))));
    auto const b2 = validate(brandt_union({2}));
    CHECK(is_zero_e_star_unitary(b2));
    CHECK_FALSE(is_e_unitary(b2));
    CHECK(is_e_unitary(validate(testing::cyclic_group(3))));
    CHECK_THROWS_AS(is_zero_e_star_unitary(validate(testing::cyclic_group(3))),
                    Error);
    // on 3 points, the map fixing 0 and swapping 1, 2 lies above the
    // partial identity on {0}
    CHECK_FALSE(is_zero_e_star_unitary(
        validate(testing::symmetric_inverse_monoid(3).table)));
    CHECK(is_zero_e_star_unitary(
        validate(testing::symmetric_inverse_monoid(2).table)));
  }

  TEST_CASE("maximal subgroups", "[isg]") {
    auto const sl = validate(testing::chain_semilattice(3));
    for (element_type e : sl.idempotents()) {
      CHECK(maximal_subgroup(sl, e).elements.size() == 1);
    }
    auto const b3 = validate(brandt_union({3}));
    for (element_type e : b3.idempotents()) {
      CHECK(maximal_subgroup(b3, e).elements.size() == 1);
    }
    auto const b2z2 = to_finite(BlockSum({Block{2, GroupSpec::cyclic(2)}}));
    element_type const e = b2z2.id(BrandtElement::make(0, 1, 0, 1));
    auto const h         = maximal_subgroup(b2z2.semigroup(), e);
    CHECK(h.elements.size() == 2);
    CHECK(h.elements.front() == e);
    CHECK(is_group(h.table));
    CHECK_THROWS_AS(maximal_subgroup(b3, 2), Error);
  }

}  // namespace isga
