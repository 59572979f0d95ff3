#ifndef ISGA_ENDOMORPHISM_HPP_
#define ISGA_ENDOMORPHISM_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "isga/error.hpp"
#include "isga/words.hpp"

namespace isga {

  // Endomorphism of a free group given by generator images. Generators below
  // `explicit_rank()` use the stored images; the remaining generators follow
  // the tail rule, which lets the shift x_i -> x_{i+1} act on F_infinity.
  class FreeEndomorphism {
   public:
    enum class tail_rule {
      none,      // generators past the explicit images are out of range
      identity,  // x_i -> x_i
      shift,     // x_i -> x_{i+k}
      power      // x_i -> x_i^k
    };

    static FreeEndomorphism identity();
    static FreeEndomorphism shift(generator_type by = 1);
    static FreeEndomorphism power(long exponent);
    static FreeEndomorphism from_images(std::vector<Word> images,
                                        bool declared_injective);

    // Parses `identity`, `shift`, `shift:k`, `power:k`, or explicit images
    // `x0->x0^2,x1->x1 x0` (injectivity is then declared, not checked).
    static FreeEndomorphism parse(std::string const& text);

    Word image(generator_type gen) const;
    Word apply(Word const& w) const;
    Word power_apply(std::size_t k, Word const& w) const;

    bool declared_injective() const noexcept {
      return _injective;
    }
    std::size_t explicit_rank() const noexcept {
      return _images.size();
    }
    tail_rule tail() const noexcept {
      return _tail;
    }
    long tail_parameter() const noexcept {
      return _param;
    }
    std::string name() const;

    // Domain generators whose images can contribute to a preimage of `g`:
    // all explicit generators plus the tail generators whose image letters
    // occur in `g` or in an explicit image.
    std::vector<generator_type> relevant_generators(Word const& g) const;

   private:
    std::vector<Word> _images;
    tail_rule         _tail      = tail_rule::none;
    long              _param     = 0;
    bool              _injective = false;
  };

  // Folded (Stallings) graph of the subgroup generated by the images of a set
  // of domain generators. Every edge carries the domain word it contributes,
  // so reading an element along its path at the base vertex yields a
  // preimage.
  class FoldedSubgroup {
   public:
    FoldedSubgroup(FreeEndomorphism const&            alpha,
                   std::vector<generator_type> const& domain);

    // h with alpha(h) == g, if g lies in the subgroup.
    std::optional<Word> express(Word const& g) const;

    std::size_t vertex_count() const noexcept {
      return _vertex_count;
    }
    std::size_t edge_count() const noexcept {
      return _edges.size();
    }

   private:
    struct Edge {
      std::size_t    source;
      std::size_t    target;
      generator_type label;
      Word           tag;
    };

    void fold();

    std::size_t       _vertex_count = 1;
    std::vector<Edge> _edges;
  };

  // Raised when folding identifies two paths with different domain words, a
  // nontrivial element of the kernel.
  class NotInjectiveEvidence : public Error {
   public:
    explicit NotInjectiveEvidence(Word kernel_element);
    Word const& kernel_element() const noexcept {
      return _kernel;
    }

   private:
    Word _kernel;
  };

  // Solves alpha(h) == g. Folded graphs are cached per generator set, so one
  // solver should be reused for many queries against the same alpha. Safe to
  // share between threads.
  class PreimageSolver {
   public:
    explicit PreimageSolver(FreeEndomorphism alpha);

    std::optional<Word> preimage(Word const& g) const;
    // h with alpha^k(h) == g.
    std::optional<Word> preimage(std::size_t k, Word const& g) const;

    FreeEndomorphism const& alpha() const noexcept {
      return _alpha;
    }

   private:
    FreeEndomorphism _alpha;
    mutable std::mutex _mutex;
    mutable std::map<std::vector<generator_type>,
                     std::shared_ptr<FoldedSubgroup const>>
        _cache;
  };

  // One-shot convenience wrapper around PreimageSolver.
  std::optional<Word> preimage(FreeEndomorphism const& alpha, Word const& g);

}  // namespace isga

#endif  // ISGA_ENDOMORPHISM_HPP_
