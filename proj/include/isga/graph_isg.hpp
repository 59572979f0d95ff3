#ifndef ISGA_GRAPH_ISG_HPP_
#define ISGA_GRAPH_ISG_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isga/error.hpp"
#include "isga/presentation.hpp"
#include "isga/reilly.hpp"
#include "isga/words.hpp"

namespace isga {

  class DirectedGraph {
   public:
    struct Edge {
      std::string name;
      std::size_t source;
      std::size_t range;
    };

    // Throws Error("DuplicateName").
    std::size_t add_vertex(std::string name);
    // Throws Error("UnknownVertex") or Error("DuplicateName").
    std::size_t add_edge(std::string name, std::size_t source, std::size_t range);

    std::size_t vertex_count() const noexcept {
      return _vertices.size();
    }
    std::size_t edge_count() const noexcept {
      return _edges.size();
    }
    std::string const& vertex_name(std::size_t v) const {
      return _vertices.at(v);
    }
    Edge const& edge(std::size_t e) const {
      return _edges.at(e);
    }
    std::optional<std::size_t> find_vertex(std::string_view name) const;
    std::optional<std::size_t> find_edge(std::string_view name) const;
    // Edge ids with source v, ascending.
    std::vector<std::size_t> out_edges(std::size_t v) const;

    friend bool operator==(DirectedGraph const& x, DirectedGraph const& y);

   private:
    std::vector<std::string> _vertices;
    std::vector<Edge>        _edges;
  };

  // Lines `vertex <name>` and `edge <name> <src> <dst>`, `#` comments.
  DirectedGraph parse_graph(std::string_view text);
  std::string   to_string(DirectedGraph const& g);

  // One vertex `v` with loops a1..an.
  DirectedGraph polycyclic(std::size_t n);

  // A vertex, or a nonempty sequence of composable edges.
  class Path {
   public:
    Path() = default;
    static Path vertex(std::size_t v) {
      Path p;
      p._vertex = v;
      return p;
    }
    // Throws Error("NotAPath").
    static Path edges(DirectedGraph const& g, std::vector<std::size_t> edges);

    bool is_vertex() const noexcept {
      return _edges.empty();
    }
    std::size_t length() const noexcept {
      return _edges.size();
    }
    std::vector<std::size_t> const& edge_ids() const noexcept {
      return _edges;
    }
    std::size_t source(DirectedGraph const& g) const;
    std::size_t range(DirectedGraph const& g) const;

    // If *this = prefix . t, returns t.
    std::optional<Path> strip_prefix(DirectedGraph const& g,
                                     Path const&          prefix) const;

    friend auto operator<=>(Path const&, Path const&) = default;

   private:
    std::size_t              _vertex = 0;  // meaningful only without edges
    std::vector<std::size_t> _edges;
  };

  // a b, or nullopt (the zero) when r(a) != s(b).
  std::optional<Path>
  compose_paths(DirectedGraph const& g, Path const& a, Path const& b);

  std::string to_string(Path const& p, DirectedGraph const& g);

  // Zero, or p q* with r(p) = r(q).
  struct GraphISGElement {
    bool zero = true;
    Path p;
    Path q;

    static GraphISGElement make_zero() {
      return GraphISGElement{};
    }
    friend auto operator<=>(GraphISGElement const&,
                            GraphISGElement const&) = default;
  };

  // Throws Error("RangeMismatch").
  GraphISGElement make_element(DirectedGraph const& g, Path p, Path q);

  GraphISGElement vertex_element(DirectedGraph const& g, std::size_t v);
  GraphISGElement edge_element(DirectedGraph const& g, std::size_t e);
  GraphISGElement edge_star_element(DirectedGraph const& g, std::size_t e);

  // `a1.a2 * a2'`, `@v * @v'`, `0`. A lone path p stands for p r(p)*.
  GraphISGElement parse_gisg(DirectedGraph const& g, std::string_view text);
  std::string     to_string(GraphISGElement const& x, DirectedGraph const& g);

  GraphISGElement gisg_mul(DirectedGraph const&   g,
                           GraphISGElement const& x,
                           GraphISGElement const& y);
  GraphISGElement gisg_inverse(GraphISGElement const& x);
  bool            gisg_is_idempotent(GraphISGElement const& x);

  // p q* <= r s* iff p = r t and q = s t for one path t. Zero lies below
  // everything.
  bool gisg_leq(DirectedGraph const&   g,
                GraphISGElement const& x,
                GraphISGElement const& y);

  // p q^-1 in the free group on the edges (edge id = generator index).
  // Throws Error("ZeroHasNoImage").
  Word universal_group_image(GraphISGElement const& x);
  Alphabet edge_alphabet(DirectedGraph const& g);
  GroupPresentation graph_universal_group(DirectedGraph const& g);

  // All paths of length <= max_length, vertices first, then by length and
  // edge ids.
  std::vector<Path> all_paths(DirectedGraph const& g, std::size_t max_length);
  // All nonzero elements p q* with |p|, |q| <= max_length.
  std::vector<GraphISGElement> all_elements(DirectedGraph const& g,
                                            std::size_t          max_length);

  struct UnitarityCertificate {
    bool        holds   = true;
    std::size_t checked = 0;
    // first element whose image is trivial exactly when it is not
    // idempotent
    std::optional<GraphISGElement> counterexample;
  };

  // Checks that the universal image of p q* is trivial iff p = q, over all
  // elements with |p|, |q| <= max_length.
  UnitarityCertificate
  verify_strongly_e_star_unitary(DirectedGraph const& g, std::size_t max_length);

  // The Munn action of x = p q* on an idempotent e = r r*: (pt)(pt)* when
  // r = q t, nullopt when e is not below x^-1 x.
  std::optional<GraphISGElement> munn_action(DirectedGraph const&   g,
                                             GraphISGElement const& x,
                                             GraphISGElement const& e);

  // Violations of the defining relations checked on the generators (vertices,
  // edges and starred edges); empty when all hold.
  std::vector<std::string> relation_audit(DirectedGraph const& g);

  // Bicyclic bridge for polycyclic(1): a^{-i} a^{j} <-> p q* with |p| = i,
  // |q| = j, since the generator a corresponds to the starred edge.
  BicyclicElement to_bicyclic(DirectedGraph const& g, GraphISGElement const& x);
  GraphISGElement from_bicyclic(DirectedGraph const& g, BicyclicElement b);

}  // namespace isga

#endif  // ISGA_GRAPH_ISG_HPP_
