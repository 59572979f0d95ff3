#include "isga/block_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "isga/detail/scanner.hpp"
#include "isga/kernels.hpp"

namespace isga {

  Composition parse_composition(std::string_view text) {
    detail::Scanner in(text);
    Composition     parts;
    do {
      parts.push_back(in.read_unsigned());
    } while (in.consume(','));
    in.expect_end();
    return parts;
  }

  std::string to_string(Composition const& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
      out += (i ? "," : "") + std::to_string(c[i]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // BlockGraph
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::size_t> blocks_by_cumulative_sum(Composition const& c,
                                                      char side) {
      if (c.empty()) {
        throw Error("InvalidPartition",
                    std::string(1, side) + " has no blocks");
      }
      std::vector<std::size_t> block_of;
      for (std::size_t b = 0; b < c.size(); ++b) {
        if (c[b] == 0) {
          throw Error("InvalidPartition",
                      std::string(1, side) + " has a block of size 0");
        }
        block_of.insert(block_of.end(), c[b], b);
      }
      return block_of;
    }
  }  // namespace

  BlockGraph::BlockGraph(Composition const& left, Composition const& right) {
    std::size_t const n = std::accumulate(left.begin(), left.end(), std::size_t{0});
    std::size_t const m
        = std::accumulate(right.begin(), right.end(), std::size_t{0});
    if (n != m) {
      throw Error("SumMismatch",
                  "left sums to " + std::to_string(n) + ", right sums to "
                      + std::to_string(m));
    }
    auto lb = blocks_by_cumulative_sum(left, 'P');
    auto rb = blocks_by_cumulative_sum(right, 'Q');
    *this   = from_assignment(left.size(), right.size(), lb, rb);
  }

  BlockGraph
  BlockGraph::from_assignment(std::size_t                     r,
                              std::size_t                     s,
                              std::vector<std::size_t> const& left_block,
                              std::vector<std::size_t> const& right_block) {
    if (left_block.size() != right_block.size()) {
      throw Error("SumMismatch", "label counts differ");
    }
    BlockGraph g;
    g._r = r;
    g._s = s;
    for (std::size_t j = 0; j < left_block.size(); ++j) {
      if (left_block[j] >= r || right_block[j] >= s) {
        throw Error("InvalidPartition",
                    "label " + std::to_string(j + 1)
                        + " assigned to a missing block");
      }
      g._assignment.emplace_back(left_block[j], right_block[j]);
    }
    g.build();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (g._incident[v].empty()) {
        throw Error("InvalidPartition",
                    "block " + g.vertex_name(v) + " has no labels");
      }
    }
    return g;
  }

  void BlockGraph::build() {
    _edges.clear();
    _incident.assign(_r + _s, {});
    for (std::size_t j = 0; j < _assignment.size(); ++j) {
      Edge e{j + 1, _assignment[j].first, _r + _assignment[j].second};
      _edges.push_back(e);
      _incident[e.left].push_back(e.label);
      _incident[e.right].push_back(e.label);
    }
  }

  BlockGraph::Edge const& BlockGraph::edge(std::size_t label) const {
    if (label == 0 || label > _edges.size()) {
      throw Error("InvalidLabel",
                  "label " + std::to_string(label) + " not in 1.."
                      + std::to_string(_edges.size()));
    }
    return _edges[label - 1];
  }

  std::string BlockGraph::vertex_name(std::size_t v) const {
    return v < _r ? "P" + std::to_string(v + 1)
                  : "Q" + std::to_string(v - _r + 1);
  }

  ////////////////////////////////////////////////////////////////////////
  // Decomposition
  ////////////////////////////////////////////////////////////////////////

  std::string summand_name(std::size_t k, std::size_t q) {
    std::string out = "M_" + std::to_string(k);
    if (q == 1) {
      out += "(C*(Z))";
    } else if (q > 1) {
      out += "(C*(F_" + std::to_string(q) + "))";
    }
    return out;
  }

  std::string DecompositionReport::display(bool unital) const {
    std::string out;
    for (std::size_t i = 0; i < components.size(); ++i) {
      out += (i ? " (+) " : "")
             + summand_name(components[i].k, components[i].q);
    }
    if (unital) {
      out += out.empty() ? "C" : " (+) C";
    }
    return out;
  }

  std::vector<std::pair<std::size_t, std::size_t>>
  DecompositionReport::signature() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (Component const& c : components) {
      out.emplace_back(c.k, c.q);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  DecompositionReport decompose(BlockGraph const& g) {
    std::size_t const V = g.vertex_count();
    std::size_t const N = g.edge_count();

    std::vector<std::size_t> parent(V);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    for (auto const& e : g.edges()) {
      std::size_t a = find(e.left), b = find(e.right);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
      }
    }

    DecompositionReport r;
    r.graph = g;
    r.vertex_component.assign(V, no_index);
    r.depth.assign(V, 0);
    r.parent_edge.assign(V, 0);
    r.edge_component.assign(N, no_index);
    r.edge_position.assign(N, no_index);
    r.free_position.assign(N, no_index);

    // Roots are the smallest vertex of each class, so visiting vertices in
    // order numbers the components by lowest vertex.
    for (std::size_t v = 0; v < V; ++v) {
      if (find(v) == v) {
        r.components.emplace_back();
      }
      std::size_t const root = find(v);
      if (root == v) {
        r.vertex_component[v] = r.components.size() - 1;
      } else {
        r.vertex_component[v] = r.vertex_component[root];
      }
      r.components[r.vertex_component[v]].vertices.push_back(v);
    }
    for (auto const& e : g.edges()) {
      std::size_t const c = r.vertex_component[e.left];
      r.edge_component[e.label - 1] = c;
      r.edge_position[e.label - 1]  = r.components[c].edges.size();
      r.components[c].edges.push_back(e.label);
    }

    std::vector<bool> in_tree(N, false);
    for (Component& comp : r.components) {
      std::size_t const       root = comp.vertices.front();
      std::vector<bool>       seen(V, false);
      std::deque<std::size_t> queue{root};
      seen[root] = true;
      while (!queue.empty()) {
        std::size_t const v = queue.front();
        queue.pop_front();
        for (std::size_t label : g.incident(v)) {
          auto const&       e     = g.edge(label);
          std::size_t const other = e.left == v ? e.right : e.left;
          if (!seen[other]) {
            seen[other]          = true;
            in_tree[label - 1]   = true;
            r.parent_edge[other] = label;
            r.depth[other]       = r.depth[v] + 1;
            queue.push_back(other);
          }
        }
      }
      for (std::size_t label : comp.edges) {
        if (in_tree[label - 1]) {
          comp.tree_edges.push_back(label);
        } else {
          r.free_position[label - 1] = comp.free_edges.size();
          comp.free_edges.push_back(label);
        }
      }
      comp.k = comp.edges.size();
      comp.q = comp.k - (comp.vertices.size() - 1);
      r.k1_rank += comp.q;
    }
    r.p       = r.components.size();
    r.k0_rank = r.p;
    return r;
  }

  DecompositionReport decompose(Composition const& left,
                                Composition const& right) {
    return decompose(BlockGraph(left, right));
  }

  std::vector<DecompositionReport> decompose_batch_serial(
      std::vector<std::pair<Composition, Composition>> const& jobs) {
    return kernels::map_serial(jobs, [](auto const& job) {
      return decompose(job.first, job.second);
    });
  }

  std::vector<DecompositionReport> decompose_batch_parallel(
      std::vector<std::pair<Composition, Composition>> const& jobs) {
    return kernels::map_parallel(jobs, [](auto const& job) {
      return decompose(job.first, job.second);
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Semigroup structure
  ////////////////////////////////////////////////////////////////////////

  AmalgamStructure amalgam_semigroup_structure(DecompositionReport const& r) {
    std::vector<Block> blocks;
    for (Component const& c : r.components) {
      blocks.push_back(Block{c.k, GroupSpec::free(c.q)});
    }
    AmalgamStructure out{BlockSum(std::move(blocks)), {}};
    for (std::size_t j = 0; j < r.edge_component.size(); ++j) {
      out.relabel.emplace_back(r.edge_component[j] + 1,
                               r.edge_position[j] + 1);
    }
    return out;
  }

  AmalgamStructure amalgam_semigroup_structure(Composition const& left,
                                               Composition const& right) {
    return amalgam_semigroup_structure(decompose(left, right));
  }

}  // namespace isga
