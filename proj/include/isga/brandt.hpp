#ifndef ISGA_BRANDT_HPP_
#define ISGA_BRANDT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isga/inverse_semigroup.hpp"

namespace isga {

  // Structure group of a Brandt block: trivial, a finite group given by its
  // Cayley table, or a free group kept only as a symbol.
  class GroupSpec {
   public:
    enum class kind { trivial, finite, free };

    GroupSpec() = default;
    static GroupSpec trivial();
    static GroupSpec cyclic(std::size_t order);
    // Throws Error("NotAGroup"). The identity need not be element 0.
    static GroupSpec finite(CayleyTable table);
    // Rank 0 gives the trivial group.
    static GroupSpec free(std::size_t rank);

    kind type() const noexcept {
      return _kind;
    }
    bool is_trivial() const noexcept {
      return _kind == kind::trivial;
    }
    // |G| for finite groups, nullopt for free groups of positive rank.
    std::optional<std::size_t> order() const noexcept;
    std::size_t free_rank() const noexcept {
      return _rank;
    }
    CayleyTable const& table() const noexcept {
      return _table;
    }
    element_type identity() const noexcept;
    element_type mul(element_type g, element_type h) const noexcept;
    element_type inverse(element_type g) const;

    // `1`, `F2`, `Z3` (cyclic) or `G6` (other finite groups)
    std::string label() const;

    friend bool operator==(GroupSpec const& x, GroupSpec const& y) {
      return x._kind == y._kind && x._rank == y._rank && x._table == y._table;
    }

   private:
    kind        _kind = kind::trivial;
    std::size_t _rank = 0;
    CayleyTable _table;
    bool        _cyclic = false;
  };

  struct Block {
    std::size_t size = 1;
    GroupSpec   group;

    friend bool operator==(Block const&, Block const&) = default;
  };

  // Zero, or (row, g, col) in block `block`. Rows and columns are 1-based
  // within the block; g is an element id of the block group.
  struct BrandtElement {
    bool         zero  = true;
    std::size_t  block = 0;
    std::size_t  row   = 0;
    element_type g     = 0;
    std::size_t  col   = 0;

    static BrandtElement make_zero() {
      return BrandtElement{};
    }
    static BrandtElement make(std::size_t  block,
                              std::size_t  row,
                              element_type g,
                              std::size_t  col) {
      return BrandtElement{false, block, row, g, col};
    }

    friend bool operator==(BrandtElement const& x, BrandtElement const& y) {
      return x.zero ? y.zero
                    : !y.zero && x.block == y.block && x.row == y.row
                          && x.g == y.g && x.col == y.col;
    }
  };

  // 0-direct union of Brandt semigroups B_{n_i}(G_i). The diagonal positions
  // are labelled 1..N globally, block by block, so two sums over the same N
  // share their idempotents.
  class BlockSum {
   public:
    BlockSum() = default;
    // Throws Error("InvalidBlock") for a block of size 0.
    explicit BlockSum(std::vector<Block> blocks);
    static BlockSum combinatorial(std::vector<std::size_t> const& sizes);

    std::vector<Block> const& blocks() const noexcept {
      return _blocks;
    }
    std::size_t label_count() const noexcept {
      return _offsets.empty() ? 0 : _offsets.back();
    }
    // (block, position within block), both 0-based block and 1-based
    // position, for a label in 1..N.
    std::pair<std::size_t, std::size_t> locate(std::size_t label) const;
    std::size_t label(std::size_t block, std::size_t position) const;

    bool is_finite() const noexcept;

    friend bool operator==(BlockSum const& x, BlockSum const& y) {
      return x._blocks == y._blocks;
    }

   private:
    std::vector<Block>       _blocks;
    std::vector<std::size_t> _offsets;  // _offsets[b] labels precede block b
  };

  // Throws Error("InvalidElement") if either argument does not fit `s`.
  BrandtElement
  brandt_mul(BlockSum const& s, BrandtElement const& x, BrandtElement const& y);
  BrandtElement brandt_inverse(BlockSum const& s, BrandtElement const& x);

  // `0`, `b1:(1,2)` for trivial groups, `b1:(1,g3,2)` otherwise.
  std::string to_string(BrandtElement const& x, BlockSum const& s);

  // Finite model of a block sum. Element 0 is the zero; the block elements
  // follow block by block, row-major in (row, col), then by group element.
  class FiniteBlockSum {
   public:
    FiniteBlockSum(BlockSum sum, FiniteInverseSemigroup semigroup,
                   std::vector<BrandtElement> elements);

    BlockSum const& sum() const noexcept {
      return _sum;
    }
    FiniteInverseSemigroup const& semigroup() const noexcept {
      return _semigroup;
    }
    BrandtElement const& element(element_type id) const {
      return _elements.at(id);
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }
    element_type id(BrandtElement const& x) const;

   private:
    BlockSum                   _sum;
    FiniteInverseSemigroup     _semigroup;
    std::vector<BrandtElement> _elements;
    std::vector<std::size_t>   _block_start;
  };

  // Throws Error("InfiniteGroupBlock") if a block group is free of positive
  // rank.
  FiniteBlockSum to_finite(BlockSum const& s);

  // Dense square integer matrix.
  class IntMatrix {
   public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : _n(n), _data(n * n, 0) {}

    static IntMatrix unit(std::size_t n, std::size_t i, std::size_t j);

    std::size_t dimension() const noexcept {
      return _n;
    }
    long& at(std::size_t i, std::size_t j) {
      return _data.at(i * _n + j);
    }
    long at(std::size_t i, std::size_t j) const {
      return _data.at(i * _n + j);
    }

    friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
    friend bool      operator==(IntMatrix const&, IntMatrix const&) = default;

   private:
    std::size_t       _n = 0;
    std::vector<long> _data;
  };

  // Rows on separate lines, entries separated by single spaces.
  std::string to_string(IntMatrix const& m);

  // Matrix-unit model of a combinatorial block sum inside M_N: the element
  // (i, j) of block b maps to E_{pq} where p, q are the global labels of
  // positions i, j, and zero maps to the zero matrix. Throws
  // Error("NonTrivialGroup").
  IntMatrix to_matrix_unit(BlockSum const& s, BrandtElement const& x);
  // Every element of to_finite(s) paired with its matrix.
  std::vector<std::pair<BrandtElement, IntMatrix>>
  to_matrix_units(BlockSum const& s);

  struct AlgebraReport {
    std::vector<std::string> summands;
    std::size_t              dimension = 0;
    std::string              display;
  };

  // Summands M_{n_i}(C*(G_i)) of the contracted algebra, with `(+) C`
  // appended for the full algebra. Throws Error("InfiniteGroupBlock") for
  // free blocks of positive rank, which have no finite dimension.
  AlgebraReport algebra_dimensions(BlockSum const& s, bool contracted);

  // `blocks = 3,3,2` and optionally `groups = 1,F1,Z2`, one assignment per
  // line, `#` comments.
  BlockSum    parse_block_sum(std::string_view text);
  std::string to_string(BlockSum const& s);

}  // namespace isga

#endif  // ISGA_BRANDT_HPP_
