#ifndef ISGA_REILLY_HPP_
#define ISGA_REILLY_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isga/endomorphism.hpp"
#include "isga/presentation.hpp"
#include "isga/words.hpp"

namespace isga {

  // (i, g, j) with i, j >= 0; the identity is (0, 1, 0).
  struct ReillyElement {
    std::size_t i = 0;
    Word        g;
    std::size_t j = 0;

    friend bool operator==(ReillyElement const&, ReillyElement const&) = default;
    friend auto operator<=>(ReillyElement const&, ReillyElement const&) = default;
  };

  // `(1,x0 x1',2)`
  ReillyElement parse_reilly(std::string_view text,
                             Alphabet const&  alphabet = default_alphabet());
  std::string   to_string(ReillyElement const& x,
                          Alphabet const&      alphabet = default_alphabet());

  // The Reilly semigroup B(G, alpha) over a free group G and an injective
  // endomorphism alpha.
  class ReillySemigroup {
   public:
    // Throws Error("NotDeclaredInjective").
    explicit ReillySemigroup(FreeEndomorphism alpha);

    FreeEndomorphism const& alpha() const noexcept {
      return _solver->alpha();
    }

    ReillyElement mul(ReillyElement const& x, ReillyElement const& y) const;
    ReillyElement inverse(ReillyElement const& x) const;
    static bool   is_idempotent(ReillyElement const& x) noexcept {
      return x.i == x.j && x.g.empty();
    }
    // x <= y iff x = x x^-1 y.
    bool natural_leq(ReillyElement const& x, ReillyElement const& y) const;

    // Every (i-k, h, j-k) with alpha^k(h) = g, ordered by k ascending (so
    // from x upwards).
    std::vector<ReillyElement> elements_above(ReillyElement const& x) const;
    // Largest element above x. Throws Error("NotUnique") if the elements
    // above x do not form a chain.
    ReillyElement max_above(ReillyElement const& x) const;

    // x and y have the same image in the maximal group image: i - j = k - l
    // and the words agree after lifting both to the level max(i, k).
    bool sigma_equivalent(ReillyElement const& x, ReillyElement const& y) const;

   private:
    std::shared_ptr<PreimageSolver const> _solver;
  };

  // a^{-i} a^{j} in the bicyclic monoid <a | a a^-1 = 1>.
  struct BicyclicElement {
    std::size_t i = 0;
    std::size_t j = 0;

    friend auto operator<=>(BicyclicElement const&,
                            BicyclicElement const&) = default;
  };

  BicyclicElement bicyclic_mul(BicyclicElement x, BicyclicElement y) noexcept;
  inline BicyclicElement bicyclic_inverse(BicyclicElement x) noexcept {
    return BicyclicElement{x.j, x.i};
  }

  // a^{-i} a^{j} lies in B(n) iff i = j mod n. Throws Error("InvalidN") for
  // n < 2.
  bool bn_membership(std::size_t n, BicyclicElement b);

  enum class SubmonoidKind { idempotents, bn, whole, other };

  struct SubmonoidClass {
    SubmonoidKind kind = SubmonoidKind::other;
    std::size_t   n    = 0;  // for SubmonoidKind::bn

    friend bool operator==(SubmonoidClass const&, SubmonoidClass const&) = default;
  };

  // `E(B)`, `B(3)`, `B` or `other`
  std::string to_string(SubmonoidClass const& c);

  // Identifies the full inverse submonoid generated by `sample` together
  // with E(B) among E(B), B(n) and B. The closure is computed inside the box
  // i, j <= depth and compared with the candidates on the inner half of the
  // box.
  SubmonoidClass bn_classifier(std::vector<BicyclicElement> const& sample,
                               std::size_t                          depth = 0);

  // Full unitary submonoid U of the bicyclic monoid: E(B) or B(n).
  struct BicyclicSubmonoid {
    bool        idempotents = true;
    std::size_t n           = 0;

    static BicyclicSubmonoid parse(std::string_view text);  // `E` or `B:n`
  };

  // Maximal group image H of B *_U B: F_2 for U = E(B), <a,b | a^n b^-n>
  // for U = B(n).
  GroupPresentation toeplitz_amalgam_group(BicyclicSubmonoid const& u);
  // Rank of the maximal subgroup of B *_U B at 1; nullopt for infinite rank.
  std::optional<std::size_t> toeplitz_subgroup_rank(BicyclicSubmonoid const& u);

}  // namespace isga

#endif  // ISGA_REILLY_HPP_
