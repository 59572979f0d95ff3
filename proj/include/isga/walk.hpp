#ifndef ISGA_WALK_HPP_
#define ISGA_WALK_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "isga/block_graph.hpp"
#include "isga/inverse_semigroup.hpp"
#include "isga/words.hpp"

namespace isga {

  enum class Side { P, Q };

  // Element of the full amalgam S *_U T of two combinatorial block sums over
  // the same diagonal. Nonzero elements are reduced walks in the subdivided
  // block graph: a start midpoint m_j (one per label) followed by steps, each
  // crossing a block vertex into a new midpoint. Steps alternate between P
  // and Q blocks since every midpoint touches exactly one of each.
  class AmalgamWalk {
   public:
    struct Step {
      std::size_t vertex;
      std::size_t midpoint;  // label

      friend auto operator<=>(Step const&, Step const&) = default;
    };

    AmalgamWalk() = default;  // zero

    static AmalgamWalk zero() {
      return AmalgamWalk{};
    }

    bool is_zero() const noexcept {
      return _start == 0;
    }
    std::size_t start() const noexcept {
      return _start;
    }
    std::size_t end() const noexcept {
      return _steps.empty() ? _start : _steps.back().midpoint;
    }
    std::vector<Step> const& steps() const noexcept {
      return _steps;
    }
    bool is_idempotent() const noexcept {
      return is_zero() || _steps.empty();
    }

    friend auto operator<=>(AmalgamWalk const&, AmalgamWalk const&) = default;

   private:
    friend class AmalgamContext;

    std::size_t       _start = 0;  // 0 encodes the zero element
    std::vector<Step> _steps;
  };

  // (component, row label, word, column label); `component` is 1-based.
  struct NormalForm {
    bool        zero      = true;
    std::size_t component = 0;
    std::size_t row       = 0;
    Word        word;
    std::size_t col = 0;

    friend bool operator==(NormalForm const&, NormalForm const&) = default;
  };

  // Generator labels `g<edge label>` for the free edges of a component.
  Alphabet free_edge_alphabet(Component const& c);

  // `(comp=1, 1, g2, 1)`, or `0`.
  std::string to_string(NormalForm const& nf, DecompositionReport const& r);

  // The amalgam of the combinatorial block sums with block sizes `left` and
  // `right`, together with the decomposition that names its components.
  class AmalgamContext {
   public:
    AmalgamContext(Composition const& left, Composition const& right);
    explicit AmalgamContext(BlockGraph graph);

    BlockGraph const& graph() const noexcept {
      return _report.graph;
    }
    DecompositionReport const& report() const noexcept {
      return _report;
    }
    std::size_t label_count() const noexcept {
      return graph().edge_count();
    }

    // The trivial walk at m_j, i.e. the idempotent e_j.
    AmalgamWalk idempotent(std::size_t label) const;
    // Image of the matrix unit (p, q) of the given side. Throws
    // Error("DifferentBlocks").
    AmalgamWalk embed(Side side, std::size_t p, std::size_t q) const;
    // Reduces an arbitrary walk. Throws Error("InvalidWalk") if a step is
    // not along incident half-edges.
    AmalgamWalk make(std::size_t start,
                     std::vector<AmalgamWalk::Step> const& steps) const;

    AmalgamWalk mul(AmalgamWalk const& x, AmalgamWalk const& y) const;
    AmalgamWalk inverse(AmalgamWalk const& x) const;

    NormalForm normal_form(AmalgamWalk const& x) const;

    // Steps of `x` as generators, e.g. `[1,2]P * [2,1]Q`; `e3` for a trivial
    // walk and `0` for zero. Parsing this string gives `x` back.
    std::string to_string(AmalgamWalk const& x) const;
    // Grammar: products with `*` of `0`, `e<j>`, `[p,q]P`, `[p,q]Q` or a
    // parenthesised expression, each followed by any number of `'`.
    AmalgamWalk parse(std::string_view text) const;

   private:
    void check_label(std::size_t label) const;

    DecompositionReport _report;
  };

  // Normal form against an explicitly supplied report. Throws
  // Error("MismatchedReport") if the report was built for another graph.
  NormalForm normal_form(AmalgamWalk const&         x,
                         BlockGraph const&          graph,
                         DecompositionReport const& report);

  struct FiniteAmalgam {
    FiniteInverseSemigroup   semigroup;  // element 0 is zero
    std::vector<AmalgamWalk> elements;
    FiniteBlockSum           target;
    // isomorphism[a] is the element of `target` corresponding to element a
    std::vector<element_type> isomorphism;
  };

  // The whole amalgam as a Cayley table when the block graph is a forest,
  // with the isomorphism onto the 0-direct union of B_{k_i} checked on every
  // pair. Throws Error("Infinite") if some component has a cycle and
  // Error("TooLarge") if the element count exceeds `bound`.
  FiniteAmalgam enumerate_if_finite(Composition const& left,
                                    Composition const& right,
                                    std::size_t        bound);

}  // namespace isga

#endif  // ISGA_WALK_HPP_
