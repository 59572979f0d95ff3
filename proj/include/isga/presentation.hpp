#ifndef ISGA_PRESENTATION_HPP_
#define ISGA_PRESENTATION_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "isga/words.hpp"

namespace isga {

  // Finitely presented group: labelled generators and relators. Presentations
  // are emitted data; no word problem is attempted on them.
  struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word>        relators;

    Alphabet alphabet() const {
      return Alphabet::labelled(generators);
    }

    // Throws if a relator uses an undeclared generator.
    void check() const;
  };

  // Free group on the given labels.
  GroupPresentation free_presentation(std::vector<std::string> labels);

  // Disjoint union of the two presentations plus one relator u v^-1 for each
  // (u, v), with u over the first generators and v over the second. Labels of
  // the second factor that collide with the first get a `_2` suffix.
  GroupPresentation
  amalgamate_presentations(GroupPresentation const&                 first,
                           GroupPresentation const&                 second,
                           std::vector<std::pair<Word, Word>> const& pairs);

  // `<a,b | a^3 b^-3>`; relators separated by `, `.
  std::string to_string(GroupPresentation const& p);

  // Abelian invariants of a finitely generated abelian group Z^r + sum Z/d_i.
  struct AbelianInvariants {
    std::size_t       free_rank = 0;
    std::vector<long> torsion;  // invariant factors d_i > 1, d_i | d_{i+1}

    friend bool operator==(AbelianInvariants const&,
                           AbelianInvariants const&) = default;
  };

  std::string to_string(AbelianInvariants const& a);

  // Row i of the result is the exponent-sum vector of relator i.
  std::vector<std::vector<long>> relation_matrix(GroupPresentation const& p);

  // Diagonal of the Smith normal form (nonzero entries only, each dividing the
  // next). Exact arithmetic; entries may grow past 64 bits internally.
  std::vector<long>
  smith_invariant_factors(std::vector<std::vector<long>> const& matrix,
                          std::size_t                           columns);

  AbelianInvariants abelianization(GroupPresentation const& p);

}  // namespace isga

#endif  // ISGA_PRESENTATION_HPP_
