#include <stdexcept>

#include "catch_amalgamated.hpp"

#include "isga/kernels.hpp"

#include "oracle/generators.hpp"
#include "oracle/semigroups.hpp"

namespace isga {

  namespace {
    std::vector<kernels::id_type> raw_table(CayleyTable const& t) {
      std::vector<kernels::id_type> out;
      for (element_type a = 0; a < t.size(); ++a) {
        for (element_type b = 0; b < t.size(); ++b) {
          out.push_back(static_cast<kernels::id_type>(t.product(a, b)));
        }
      }
      return out;
    }
  }  // namespace

  TEST_CASE("associativity scans agree", "[kernels]") {
    for (auto const& t : {testing::brandt_union({3, 2}),
                          testing::symmetric_inverse_monoid(3).table,
                          testing::cyclic_group(7)}) {
      auto const raw = raw_table(t);
      CHECK(kernels::first_nonassociative_serial(raw, t.size()) == std::nullopt);
      CHECK(kernels::first_nonassociative_parallel(raw, t.size()) == std::nullopt);
    }
    testing::Rng rng(81);
    for (int trial = 0; trial < 200; ++trial) {
      std::size_t const n = testing::uniform(rng, 1, 12);
      std::vector<kernels::id_type> raw(n * n);
      for (auto& x : raw) {
        x = static_cast<kernels::id_type>(testing::uniform(rng, 0, n - 1));
      }
      CHECK(kernels::first_nonassociative_serial(raw, n)
            == kernels::first_nonassociative_parallel(raw, n));
    }
  }

  TEST_CASE("tabulation agrees", "[kernels]") {
    auto f = [](std::size_t a, std::size_t b) {
      return static_cast<kernels::id_type>((a * 31 + b * 17) % 101);
    };
    for (std::size_t n : {0, 1, 5, 64}) {
      CHECK(kernels::tabulate_serial(n, f) == kernels::tabulate_parallel(n, f));
    }
    auto bad = [](std::size_t a, std::size_t b) -> kernels::id_type {
      if (a == 3 && b == 2) {
        throw std::runtime_error("row 3");
      }
      return 0;
    };
    CHECK_THROWS_WITH(kernels::tabulate_parallel(8, bad), "row 3");
  }

  TEST_CASE("maps agree", "[kernels]") {
    std::vector<int> in(500);
    for (int i = 0; i < 500; ++i) {
      in[i] = i;
    }
    auto sq = [](int x) {
      return std::to_string(x * x);
    };
    CHECK(kernels::map_serial(in, sq) == kernels::map_parallel(in, sq));
    auto bad = [](int x) {
      if (x == 77) {
        throw std::runtime_error("77");
      }
      return x;
    };
    CHECK_THROWS_WITH(kernels::map_parallel(in, bad), "77");
    CHECK(kernels::max_threads() >= 1);
  }

}  // namespace isga
