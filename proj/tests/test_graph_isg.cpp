#include <set>

#include "catch_amalgamated.hpp"

#include "isga/graph_isg.hpp"
#include "isga/reilly.hpp"

#include "oracle/generators.hpp"
#include "oracle/string_action.hpp"

namespace isga {

  namespace {
    // A finite path as (source, edges), independent of the library's Path.
    struct RawPath {
      std::size_t              source;
      std::vector<std::size_t> edges;

      friend bool operator==(RawPath const&, RawPath const&) = default;
    };

    std::vector<RawPath> raw_paths(DirectedGraph const& g, std::size_t max_length) {
      std::vector<RawPath> out;
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        out.push_back(RawPath{v, {}});
      }
      for (std::size_t k = 0; k < out.size(); ++k) {
        if (out[k].edges.size() == max_length) {
          continue;
        }
        std::size_t const end
            = out[k].edges.empty() ? out[k].source : g.edge(out[k].edges.back()).range;
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
          if (g.edge(e).source == end) {
            RawPath next = out[k];
            next.edges.push_back(e);
            out.push_back(next);
          }
        }
      }
      return out;
    }

    RawPath raw(DirectedGraph const& g, Path const& p) {
      return RawPath{p.source(g), p.edge_ids()};
    }

    // p q* sends q t to p t.
    std::optional<RawPath> act(DirectedGraph const&   g,
                               GraphISGElement const& x,
                               std::optional<RawPath> w) {
      if (!w || x.zero) {
        return std::nullopt;
      }
      RawPath const q = raw(g, x.q);
      if (w->source != q.source || w->edges.size() < q.edges.size()
          || !std::equal(q.edges.begin(), q.edges.end(), w->edges.begin())) {
        return std::nullopt;
      }
      RawPath out = raw(g, x.p);
      out.edges.insert(out.edges.end(), w->edges.begin() + q.edges.size(),
                       w->edges.end());
      return out;
    }

    GraphISGElement e(DirectedGraph const& g, char const* text) {
      return parse_gisg(g, text);
    }

    std::vector<DirectedGraph> graphs() {
      testing::Rng               rng(61);
      std::vector<DirectedGraph> out{polycyclic(1), polycyclic(2), polycyclic(3)};
      for (int k = 0; k < 5; ++k) {
        out.push_back(testing::random_graph(rng, testing::uniform(rng, 1, 4),
                                            testing::uniform(rng, 1, 5)));
      }
      return out;
    }
  }  // namespace

  TEST_CASE("graph files", "[gisg][io]") {
    auto const g = parse_graph("# two vertices\nvertex u\nvertex w\nedge f u w\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.edge(0).source == 0);
    CHECK(g.edge(0).range == 1);
    CHECK(parse_graph(to_string(g)) == g);
    CHECK(parse_graph(to_string(polycyclic(3))) == polycyclic(3));
    CHECK_THROWS(parse_graph("edge f u w\n"));
    CHECK_THROWS(parse_graph("vertex u\nvertex u\n"));
    CHECK_THROWS_AS(parse_graph("vertex\n"), SyntaxError);
  }

  TEST_CASE("composing paths", "[gisg]") {
    DirectedGraph g;
    g.add_vertex("u");
    g.add_vertex("w");
    auto const f = g.add_edge("f", 0, 1);
    auto const h = g.add_edge("h", 1, 0);
    auto const k = g.add_edge("k", 1, 1);
    auto const pf = Path::edges(g, {f});
    CHECK(compose_paths(g, Path::vertex(0), pf) == pf);
    CHECK(compose_paths(g, pf, Path::vertex(1)) == pf);
    CHECK(compose_paths(g, pf, Path::edges(g, {h})) == Path::edges(g, {f, h}));
    CHECK(compose_paths(g, pf, pf) == std::nullopt);
    CHECK(compose_paths(g, Path::vertex(1), pf) == std::nullopt);
    CHECK(compose_paths(g, Path::edges(g, {k}), Path::edges(g, {k, h}))
          == Path::edges(g, {k, k, h}));
    CHECK_THROWS(Path::edges(g, {f, f}));
    CHECK(to_string(Path::edges(g, {f, k}), g) == "f.k");
    CHECK(to_string(Path::vertex(1), g) == "@w");
  }

  TEST_CASE("graph inverse semigroup products", "[gisg]") {
    auto const g = polycyclic(2);
    CHECK(gisg_mul(g, e(g, "a1.a2 * a1.a2'"), e(g, "a1.a2 * a2'"))
          == e(g, "a1.a2 * a2'"));
    CHECK(gisg_mul(g, edge_star_element(g, 0), edge_element(g, 1)).zero);
    CHECK(gisg_mul(g, edge_star_element(g, 0), edge_element(g, 0))
          == vertex_element(g, 0));
    CHECK(gisg_mul(g, edge_element(g, 0), edge_star_element(g, 0))
          == e(g, "a1 * a1'"));
    CHECK(gisg_mul(g, e(g, "a1 * a2'"), e(g, "a2.a1 * @v'")) == e(g, "a1.a1 * @v'"));
    CHECK(gisg_mul(g, e(g, "@v * a2.a1'"), e(g, "a2 * @v'")) == e(g, "@v * a1'"));
    CHECK(gisg_mul(g, GraphISGElement::make_zero(), vertex_element(g, 0)).zero);
    CHECK(gisg_inverse(e(g, "a1 * a2'")) == e(g, "a2 * a1'"));
    DirectedGraph h;
    h.add_vertex("u");
    h.add_vertex("w");
    CHECK_THROWS_AS(make_element(h, Path::vertex(0), Path::vertex(1)), Error);
  }

  TEST_CASE("graph element text", "[gisg][io]") {
    auto const g = polycyclic(2);
    CHECK(to_string(e(g, "a1.a2 * a2'"), g) == "a1.a2 * a2'");
    CHECK(e(g, "a1.a2") == e(g, "a1.a2 * @v'"));
    CHECK(e(g, "0").zero);
    CHECK(to_string(GraphISGElement::make_zero(), g) == "0");
    CHECK_THROWS_AS(e(g, "a3 * @v'"), SyntaxError);
    CHECK_THROWS_AS(e(g, "a1 *"), SyntaxError);
    for (auto const& h : graphs()) {
      for (auto const& x : all_elements(h, 2)) {
        CHECK(parse_gisg(h, to_string(x, h)) == x);
      }
    }
  }

  TEST_CASE("natural order on graph elements", "[gisg]") {
    auto const g = polycyclic(2);
    auto const x = e(g, "a1.a2 * a2'");
    CHECK(gisg_leq(g, x, x));
    CHECK(gisg_leq(g, e(g, "a1.a2 * a1.a2'"), e(g, "a1 * a1'")));
    CHECK_FALSE(gisg_leq(g, e(g, "a1 * a1'"), e(g, "a2 * a2'")));
    CHECK(gisg_leq(g, GraphISGElement::make_zero(), x));
    CHECK_FALSE(gisg_leq(g, x, GraphISGElement::make_zero()));
  }

  TEST_CASE("universal group images", "[gisg]") {
    auto const g = polycyclic(2);
    CHECK(universal_group_image(e(g, "a1.a2 * a1.a2'")).empty());
    CHECK(universal_group_image(e(g, "a1.a2 * a2'")) == Word::generator(0));
    CHECK(universal_group_image(e(g, "a1 * a2'"))
          == Word::generator(0) * Word::generator(1, -1));
    CHECK_THROWS_AS(universal_group_image(GraphISGElement::make_zero()), Error);
    CHECK(to_string(graph_universal_group(g)) == "<a1,a2 |>");
  }

  TEST_CASE("strong E*-unitarity", "[gisg]") {
    auto const p2 = verify_strongly_e_star_unitary(polycyclic(2), 3);
    CHECK(p2.holds);
    CHECK(p2.checked == all_elements(polycyclic(2), 3).size());
    CHECK_FALSE(p2.counterexample);

    DirectedGraph point;
    point.add_vertex("v");
    auto const c = verify_strongly_e_star_unitary(point, 5);
    CHECK(c.holds);
    CHECK(c.checked == 1);

    DirectedGraph line;
    line.add_vertex("u");
    line.add_vertex("w");
    line.add_edge("f", 0, 1);
    CHECK(verify_strongly_e_star_unitary(line, 2).holds);
    CHECK(all_elements(line, 2).size() == 5);
  }

  TEST_CASE("Munn action", "[gisg]") {
    auto const p1 = polycyclic(1);
    auto const x  = e(p1, "a1 * @v'");
    CHECK(munn_action(p1, x, vertex_element(p1, 0)) == e(p1, "a1 * a1'"));
    auto const p2 = polycyclic(2);
    auto const y  = e(p2, "a1 * a2.a2'");
    CHECK(munn_action(p2, y, e(p2, "a2.a2 * a2.a2'")) == e(p2, "a1 * a1'"));
    CHECK(munn_action(p2, y, e(p2, "a2.a2.a1 * a2.a2.a1'"))
          == e(p2, "a1.a1 * a1.a1'"));
    CHECK(munn_action(p2, y, e(p2, "a1 * a1'")) == std::nullopt);
    auto const f = e(p2, "a1 * a1'");
    CHECK(munn_action(p2, f, e(p2, "a1.a2 * a1.a2'")) == e(p2, "a1.a2 * a1.a2'"));
  }

  TEST_CASE("polycyclic monoids", "[gisg]") {
    auto const p2 = polycyclic(2);
    CHECK(gisg_is_idempotent(e(p2, "a1 * a1'")));
    CHECK(e(p2, "a1 * a1'") != vertex_element(p2, 0));
    CHECK_THROWS_AS(polycyclic(0), Error);
    for (std::size_t n = 1; n <= 3; ++n) {
      CHECK(relation_audit(polycyclic(n)).empty());
    }
    for (auto const& g : graphs()) {
      CHECK(relation_audit(g).empty());
    }
  }

  TEST_CASE("the bicyclic bridge", "[gisg][bicyclic]") {
    auto const p1 = polycyclic(1);
    CHECK(to_bicyclic(p1, e(p1, "@v * a1'")) == BicyclicElement{0, 1});
    CHECK(from_bicyclic(p1, {2, 3}) == e(p1, "a1.a1 * a1.a1.a1'"));
    CHECK_THROWS_AS(to_bicyclic(polycyclic(2), vertex_element(p1, 0)), Error);
    CHECK_THROWS_AS(to_bicyclic(p1, GraphISGElement::make_zero()), Error);
    for (std::size_t i = 0; i <= 6; ++i) {
      for (std::size_t j = 0; j <= 6; ++j) {
        BicyclicElement const b{i, j};
        CHECK(to_bicyclic(p1, from_bicyclic(p1, b)) == b);
        for (std::size_t k = 0; k <= 6; ++k) {
          for (std::size_t l = 0; l <= 6; ++l) {
            BicyclicElement const c{k, l};
            auto const xy = gisg_mul(p1, from_bicyclic(p1, b), from_bicyclic(p1, c));
            REQUIRE_FALSE(xy.zero);
            CHECK(to_bicyclic(p1, xy) == bicyclic_mul(b, c));
          }
        }
      }
    }
  }

  TEST_CASE("graph arithmetic matches the action on paths", "[gisg][property]") {
    testing::Rng rng(62);
    for (auto const& g : graphs()) {
      auto const paths = raw_paths(g, 6);
      for (int trial = 0; trial < 150; ++trial) {
        auto const x  = testing::random_gisg(rng, g, 3);
        auto const y  = testing::random_gisg(rng, g, 3);
        auto const xy = gisg_mul(g, x, y);
        CAPTURE(to_string(g), to_string(x, g), to_string(y, g));
        bool defined = false;
        for (auto const& w : paths) {
          auto const direct = act(g, xy, w);
          CHECK(direct == act(g, x, act(g, y, w)));
          defined = defined || direct.has_value();
        }
        CHECK(defined != xy.zero);
      }
    }
  }

  TEST_CASE("graph inverse semigroup laws", "[gisg][property]") {
    testing::Rng rng(63);
    for (int round = 0; round < 20; ++round) {
      auto const g = testing::random_graph(rng, testing::uniform(rng, 1, 5),
                                           testing::uniform(rng, 1, 8));
      for (int trial = 0; trial < 200; ++trial) {
        auto const x  = testing::random_gisg(rng, g, 6);
        auto const y  = testing::random_gisg(rng, g, 6);
        auto const z  = testing::random_gisg(rng, g, 6);
        auto const xi = gisg_inverse(x);
        CHECK(gisg_mul(g, gisg_mul(g, x, y), z) == gisg_mul(g, x, gisg_mul(g, y, z)));
        CHECK(gisg_mul(g, gisg_mul(g, x, xi), x) == x);
        CHECK(gisg_is_idempotent(gisg_mul(g, x, xi)));
        CHECK(gisg_is_idempotent(x) == (x.p == x.q));
        CHECK(gisg_is_idempotent(x) == (gisg_mul(g, x, x) == x));
        auto const f = gisg_mul(g, xi, x);
        auto const h = gisg_mul(g, gisg_inverse(y), y);
        CHECK(gisg_mul(g, f, h) == gisg_mul(g, h, f));
        auto const xy = gisg_mul(g, x, y);
        if (!xy.zero) {
          CHECK(universal_group_image(xy)
                == universal_group_image(x) * universal_group_image(y));
        }
        CHECK(gisg_leq(g, x, y) == (x == gisg_mul(g, gisg_mul(g, x, xi), y)));
      }
    }
  }

  TEST_CASE("Munn action is an order isomorphism", "[gisg][property]") {
    for (auto const& g : graphs()) {
      std::size_t const L        = 3;
      auto const        elements = all_elements(g, L);
      std::vector<GraphISGElement> idempotents;
      for (auto const& x : elements) {
        if (gisg_is_idempotent(x)) {
          idempotents.push_back(x);
        }
      }
      for (auto const& x : elements) {
        if (x.p.length() > 1 || x.q.length() > 1) {
          continue;
        }
        // domain: idempotents below x^-1 x whose image stays inside the bound
        std::vector<GraphISGElement> domain, image;
        for (auto const& f : idempotents) {
          auto const y = munn_action(g, x, f);
          CHECK(y.has_value() == gisg_leq(g, f, gisg_mul(g, gisg_inverse(x), x)));
          if (y) {
            CHECK(*y == gisg_mul(g, gisg_mul(g, x, f), gisg_inverse(x)));
            CHECK(gisg_leq(g, *y, gisg_mul(g, x, gisg_inverse(x))));
            if (y->p.length() <= L) {
              domain.push_back(f);
              image.push_back(*y);
            }
          }
        }
        CHECK(std::set<GraphISGElement>(image.begin(), image.end()).size()
              == image.size());
        for (std::size_t a = 0; a < domain.size(); ++a) {
          for (std::size_t b = 0; b < domain.size(); ++b) {
            CHECK(gisg_leq(g, domain[a], domain[b])
                  == gisg_leq(g, image[a], image[b]));
          }
        }
        // inverse action maps the image back
        for (std::size_t a = 0; a < domain.size(); ++a) {
          CHECK(munn_action(g, gisg_inverse(x), image[a]) == domain[a]);
        }
      }
    }
  }

  TEST_CASE("zero detection agrees with the string action", "[gisg][property]") {
    testing::Rng rng(64);
    auto const   g = polycyclic(2);
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<GraphISGElement> xs;
      GraphISGElement              product = testing::random_gisg(rng, g, 3);
      xs.push_back(product);
      for (std::size_t k = testing::uniform(rng, 1, 4); k > 0; --k) {
        xs.push_back(testing::random_gisg(rng, g, 3));
        product = gisg_mul(g, product, xs.back());
      }
      CHECK(product.zero != testing::product_is_nonzero(xs, 2));
    }
  }

}  // namespace isga
