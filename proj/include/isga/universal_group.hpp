#ifndef ISGA_UNIVERSAL_GROUP_HPP_
#define ISGA_UNIVERSAL_GROUP_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isga/graph_isg.hpp"
#include "isga/inverse_semigroup.hpp"
#include "isga/presentation.hpp"
#include "isga/words.hpp"

namespace isga {

  // Universal group G(S) of a finite inverse semigroup with zero: one
  // generator `s<id>` per nonzero element and a relator a b c^-1 for every
  // nonzero product a b = c. Throws Error("NoZero").
  GroupPresentation universal_group_presentation(FiniteInverseSemigroup const& s);

  // G(S) *_{G(U)} G(T) from presentations of G(S), G(T) and the images of the
  // generators of G(U) in each.
  GroupPresentation
  combine_universal_groups(GroupPresentation const&                  gs,
                           GroupPresentation const&                  gt,
                           std::vector<std::pair<Word, Word>> const& gu_images);

  // Host S of a special amalgam S *_E S: a graph inverse semigroup, which
  // covers the bicyclic monoid with zero as polycyclic(1).
  class SpecialAmalgamHost {
   public:
    explicit SpecialAmalgamHost(DirectedGraph graph);
    // `bicyclic` or `pc:<n>`. Throws Error("UnsupportedHost").
    static SpecialAmalgamHost named(std::string_view name);

    DirectedGraph const& graph() const noexcept {
      return _graph;
    }
    // Generators of G(S) *_E G(S): the edges of the first copy, then the
    // edges of the second copy with a `_2` suffix.
    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::size_t rank() const noexcept {
      return _graph.edge_count();
    }

   private:
    DirectedGraph _graph;
    Alphabet      _alphabet;
  };

  struct AmalgamLetter {
    int             copy = 1;  // 1 for s_i, 2 for theta(t_i)
    GraphISGElement element;

    friend auto operator<=>(AmalgamLetter const&, AmalgamLetter const&) = default;
  };

  // s_1 theta(t_1) s_2 ... with adjacent letters of the same copy multiplied
  // out in the host. A zero letter makes the whole word zero.
  struct AmalgamWord {
    bool                       zero = false;
    std::vector<AmalgamLetter> letters;

    friend bool operator==(AmalgamWord const&, AmalgamWord const&) = default;
  };

  AmalgamWord normalize(SpecialAmalgamHost const&   host,
                        std::vector<AmalgamLetter> letters);
  AmalgamWord concatenate(SpecialAmalgamHost const& host,
                          AmalgamWord const&        u,
                          AmalgamWord const&        v);

  // Product s_1 t_1 ... s_n t_n of all letters in the host, forgetting the
  // copies.
  GraphISGElement host_product(SpecialAmalgamHost const& host,
                               AmalgamWord const&        w);

  // Image of w in G(S) *_E G(S), or nullopt when w is zero, i.e. when its
  // host product is zero.
  std::optional<Word> gamma_image(SpecialAmalgamHost const& host,
                                  AmalgamWord const&        w);

  // `[a1 * @v']1 [a2]2`, or `0`.
  AmalgamWord parse_amalgam_word(SpecialAmalgamHost const& host,
                                 std::string_view          text);
  std::string to_string(AmalgamWord const& w, SpecialAmalgamHost const& host);

}  // namespace isga

#endif  // ISGA_UNIVERSAL_GROUP_HPP_
