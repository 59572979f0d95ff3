#ifndef ISGA_BLOCK_GRAPH_HPP_
#define ISGA_BLOCK_GRAPH_HPP_

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isga/brandt.hpp"

namespace isga {

  // Block sizes of a diagonal subalgebra partition, e.g. {3,3,2}.
  using Composition = std::vector<std::size_t>;

  // `3,3,2`; throws SyntaxError.
  Composition parse_composition(std::string_view text);
  std::string to_string(Composition const& c);

  // Bipartite multigraph with a vertex per block of P (ids 0..r-1), a vertex
  // per block of Q (ids r..r+s-1) and an edge per diagonal label 1..N joining
  // the two blocks that contain it.
  class BlockGraph {
   public:
    struct Edge {
      std::size_t label;
      std::size_t left;   // vertex id of the P block
      std::size_t right;  // vertex id of the Q block
    };

    BlockGraph() = default;
    // Labels go to blocks by cumulative sums in the given order. Throws
    // Error("SumMismatch") or Error("InvalidPartition").
    BlockGraph(Composition const& left, Composition const& right);

    // left_block[j-1] / right_block[j-1] is the block of label j. Every block
    // must receive at least one label.
    static BlockGraph from_assignment(std::size_t                     r,
                                      std::size_t                     s,
                                      std::vector<std::size_t> const& left_block,
                                      std::vector<std::size_t> const& right_block);

    std::size_t left_count() const noexcept {
      return _r;
    }
    std::size_t right_count() const noexcept {
      return _s;
    }
    std::size_t vertex_count() const noexcept {
      return _r + _s;
    }
    std::size_t edge_count() const noexcept {
      return _edges.size();
    }
    Edge const& edge(std::size_t label) const;
    std::vector<Edge> const& edges() const noexcept {
      return _edges;
    }
    // Labels of the edges at vertex v, ascending.
    std::vector<std::size_t> const& incident(std::size_t v) const {
      return _incident.at(v);
    }
    bool is_left(std::size_t v) const noexcept {
      return v < _r;
    }
    // `P1`, `Q2`, ...
    std::string vertex_name(std::size_t v) const;

    friend bool operator==(BlockGraph const& x, BlockGraph const& y) {
      return x._r == y._r && x._s == y._s && x._assignment == y._assignment;
    }

   private:
    void build();

    std::size_t                           _r = 0;
    std::size_t                           _s = 0;
    std::vector<std::pair<std::size_t, std::size_t>> _assignment;
    std::vector<Edge>                     _edges;
    std::vector<std::vector<std::size_t>> _incident;
  };

  inline constexpr std::size_t no_index = std::numeric_limits<std::size_t>::max();

  struct Component {
    std::size_t              k = 0;  // edges
    std::size_t              q = 0;  // edges outside a spanning tree
    std::vector<std::size_t> vertices;    // ascending
    std::vector<std::size_t> edges;       // labels, ascending
    std::vector<std::size_t> tree_edges;  // labels, ascending
    std::vector<std::size_t> free_edges;  // labels, ascending

    friend bool operator==(Component const&, Component const&) = default;
  };

  // Connected components of a block graph, the spanning forest used for
  // normal forms, and the K-theory data derived from them.
  struct DecompositionReport {
    std::vector<Component> components;  // ordered by lowest vertex
    std::size_t            p       = 0;
    std::size_t            k0_rank = 0;
    std::size_t            k1_rank = 0;

    BlockGraph graph;
    // per vertex: component index, BFS depth, label of the tree edge to the
    // parent (0 at the root)
    std::vector<std::size_t> vertex_component;
    std::vector<std::size_t> depth;
    std::vector<std::size_t> parent_edge;
    // per label (index label-1): component, position in the component's
    // edge list, position in its free edge list or no_index
    std::vector<std::size_t> edge_component;
    std::vector<std::size_t> edge_position;
    std::vector<std::size_t> free_position;

    std::size_t component_of_label(std::size_t label) const {
      return edge_component.at(label - 1);
    }

    // `M_3(C*(Z)) (+) M_5(C*(F_2))`, with ` (+) C` appended when unital.
    std::string display(bool unital = false) const;
    // (k, q) pairs sorted ascending, for comparing reports up to relabelling.
    std::vector<std::pair<std::size_t, std::size_t>> signature() const;

    friend bool operator==(DecompositionReport const&,
                           DecompositionReport const&) = default;
  };

  std::string summand_name(std::size_t k, std::size_t q);

  DecompositionReport decompose(BlockGraph const& g);
  DecompositionReport decompose(Composition const& left,
                                Composition const& right);

  // Reports for many independent (left, right) jobs; the parallel version
  // produces identical output.
  std::vector<DecompositionReport> decompose_batch_serial(
      std::vector<std::pair<Composition, Composition>> const& jobs);
  std::vector<DecompositionReport> decompose_batch_parallel(
      std::vector<std::pair<Composition, Composition>> const& jobs);

  struct AmalgamStructure {
    BlockSum sum;  // blocks (k_i, F_{q_i})
    // relabel[j-1] = (component, position) for label j, both 1-based
    std::vector<std::pair<std::size_t, std::size_t>> relabel;
  };

  AmalgamStructure amalgam_semigroup_structure(Composition const& left,
                                               Composition const& right);
  AmalgamStructure amalgam_semigroup_structure(DecompositionReport const& r);

}  // namespace isga

#endif  // ISGA_BLOCK_GRAPH_HPP_
