#ifndef ISGA_INVERSE_SEMIGROUP_HPP_
#define ISGA_INVERSE_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isga/error.hpp"

namespace isga {

  using element_type = std::uint32_t;

  // Finite multiplication table on the dense ids 0..n-1. Zero and identity
  // are computed from the table, never declared.
  class CayleyTable {
   public:
    CayleyTable() = default;
    // `entries` is row-major; throws Error("InvalidTable") if an entry is not
    // a valid id or the size is wrong.
    CayleyTable(std::size_t n, std::vector<element_type> entries);

    std::size_t size() const noexcept {
      return _n;
    }
    element_type product(element_type a, element_type b) const noexcept {
      return _entries[a * _n + b];
    }
    std::vector<element_type> const& entries() const noexcept {
      return _entries;
    }

    std::optional<element_type> zero() const noexcept {
      return _zero;
    }
    std::optional<element_type> identity() const noexcept {
      return _identity;
    }

    friend bool operator==(CayleyTable const& x, CayleyTable const& y) {
      return x._n == y._n && x._entries == y._entries;
    }

   private:
    std::size_t                 _n = 0;
    std::vector<element_type>   _entries;
    std::optional<element_type> _zero;
    std::optional<element_type> _identity;
  };

  // Text format: first line `n [zero=<id>]`, then n rows of n ids; `#` starts
  // a comment. A declared zero must agree with the computed one.
  CayleyTable parse_cayley_table(std::string_view text);
  CayleyTable read_cayley_table(std::istream& in);
  std::string to_string(CayleyTable const& table);

  class NotAssociative : public Error {
   public:
    NotAssociative(element_type a, element_type b, element_type c);
    element_type a, b, c;
  };

  class NotRegular : public Error {
   public:
    explicit NotRegular(element_type a);
    element_type a;
  };

  class IdempotentsDontCommute : public Error {
   public:
    IdempotentsDontCommute(element_type e, element_type f);
    element_type e, f;
  };

  // Cayley table that passed validate(): associative, regular, commuting
  // idempotents. Immutable.
  class FiniteInverseSemigroup {
   public:
    CayleyTable const& table() const noexcept {
      return _table;
    }
    std::size_t size() const noexcept {
      return _table.size();
    }
    element_type mul(element_type a, element_type b) const noexcept {
      return _table.product(a, b);
    }
    element_type inverse(element_type a) const noexcept {
      return _inverse[a];
    }
    std::vector<element_type> const& idempotents() const noexcept {
      return _idempotents;
    }
    bool is_idempotent(element_type a) const noexcept {
      return mul(a, a) == a;
    }
    std::optional<element_type> zero() const noexcept {
      return _table.zero();
    }
    std::optional<element_type> identity() const noexcept {
      return _table.identity();
    }

   private:
    friend FiniteInverseSemigroup validate(CayleyTable table);
    friend FiniteInverseSemigroup validate_serial(CayleyTable table);

    CayleyTable               _table;
    std::vector<element_type> _inverse;
    std::vector<element_type> _idempotents;
  };

  // Checks the axioms in the order associativity, regularity, commuting
  // idempotents, and throws the first failure. The associativity scan uses
  // the parallel kernel; validate_serial uses the serial reference.
  FiniteInverseSemigroup validate(CayleyTable table);
  FiniteInverseSemigroup validate_serial(CayleyTable table);

  // a <= b iff a = e b for some idempotent e.
  bool natural_leq(FiniteInverseSemigroup const& s,
                   element_type                  a,
                   element_type                  b);

  // A partition of 0..n-1. Classes are numbered by first occurrence, so two
  // equal partitions compare equal.
  class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<std::size_t> labels);

    std::size_t class_of(element_type a) const noexcept {
      return _class_of[a];
    }
    std::vector<std::vector<element_type>> const& classes() const noexcept {
      return _classes;
    }
    std::size_t size() const noexcept {
      return _classes.size();
    }
    bool same(element_type a, element_type b) const noexcept {
      return _class_of[a] == _class_of[b];
    }
    // every class of *this lies inside a class of `coarser`
    bool refines(Partition const& coarser) const;

    friend bool operator==(Partition const&, Partition const&) = default;

   private:
    std::vector<std::size_t>               _class_of;
    std::vector<std::vector<element_type>> _classes;
  };

  struct GreenData {
    Partition R, L, H, D, J;
  };

  GreenData green(FiniteInverseSemigroup const& s);

  struct SigmaData {
    Partition classes;
    // group table on the classes, class i being element i
    CayleyTable quotient;
    // S has a zero, so the quotient is trivial
    bool collapsed_by_zero = false;
  };

  // Least group congruence: a ~ b iff a and b have a common lower bound,
  // closed transitively.
  SigmaData sigma_classes(FiniteInverseSemigroup const& s);

  class NotASubsemigroup : public Error {
   public:
    NotASubsemigroup(element_type a, element_type b);
  };

  // True iff every idempotent of S lies in `subset`. Throws NotASubsemigroup
  // if `subset` is not closed under products and inverses.
  bool is_full(FiniteInverseSemigroup const& s,
               std::span<element_type const> subset);

  bool is_e_unitary(FiniteInverseSemigroup const& s);
  // Throws Error("NoZero") if S has no zero.
  bool is_zero_e_star_unitary(FiniteInverseSemigroup const& s);

  struct Subgroup {
    std::vector<element_type> elements;  // ids in S, identity first
    CayleyTable               table;     // on positions in `elements`
  };

  // The H-class of the idempotent e with the induced product. Throws
  // Error("NotIdempotent").
  Subgroup maximal_subgroup(FiniteInverseSemigroup const& s, element_type e);

  // Group axioms on a Cayley table: associative, identity, inverses.
  bool is_group(CayleyTable const& table);

}  // namespace isga

#endif  // ISGA_INVERSE_SEMIGROUP_HPP_
