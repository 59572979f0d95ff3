#include "isga/inverse_semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "isga/kernels.hpp"

namespace isga {

  namespace {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), std::size_t{0});
      }
      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          _parent[std::max(a, b)] = std::min(a, b);
        }
      }
      std::vector<std::size_t> labels() {
        std::vector<std::size_t> out(_parent.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
          out[i] = find(i);
        }
        return out;
      }

     private:
      std::vector<std::size_t> _parent;
    };
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // CayleyTable
  ////////////////////////////////////////////////////////////////////////

  CayleyTable::CayleyTable(std::size_t n, std::vector<element_type> entries)
      : _n(n), _entries(std::move(entries)) {
    if (_entries.size() != n * n) {
      throw Error("InvalidTable",
                  "expected " + std::to_string(n * n) + " entries, got "
                      + std::to_string(_entries.size()));
    }
    for (element_type x : _entries) {
      if (x >= n) {
        throw Error("InvalidTable",
                    "entry " + std::to_string(x) + " is not an element id");
      }
    }
    for (element_type z = 0; z < n && !_zero; ++z) {
      bool ok = true;
      for (element_type a = 0; a < n && ok; ++a) {
        ok = product(z, a) == z && product(a, z) == z;
      }
      if (ok) {
        _zero = z;
      }
    }
    for (element_type u = 0; u < n && !_identity; ++u) {
      bool ok = true;
      for (element_type a = 0; a < n && ok; ++a) {
        ok = product(u, a) == a && product(a, u) == a;
      }
      if (ok) {
        _identity = u;
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  NotAssociative::NotAssociative(element_type a_, element_type b_, element_type c_)
      : Error("NotAssociative",
              "(" + std::to_string(a_) + "*" + std::to_string(b_) + ")*"
                  + std::to_string(c_) + " != " + std::to_string(a_) + "*("
                  + std::to_string(b_) + "*" + std::to_string(c_) + ")"),
        a(a_),
        b(b_),
        c(c_) {}

  NotRegular::NotRegular(element_type a_)
      : Error("NotRegular",
              "no x with a*x*a = a for a = " + std::to_string(a_)),
        a(a_) {}

  IdempotentsDontCommute::IdempotentsDontCommute(element_type e_,
                                                 element_type f_)
      : Error("IdempotentsDontCommute",
              std::to_string(e_) + "*" + std::to_string(f_)
                  + " != " + std::to_string(f_) + "*" + std::to_string(e_)),
        e(e_),
        f(f_) {}

  namespace {
    void finish_validation(CayleyTable const&                    table,
                           std::optional<kernels::triple> const& bad,
                           std::vector<element_type>&            inverse,
                           std::vector<element_type>&            idempotents) {
      if (bad) {
        throw NotAssociative((*bad)[0], (*bad)[1], (*bad)[2]);
      }
      std::size_t const n = table.size();
      inverse.assign(n, 0);
      for (element_type a = 0; a < n; ++a) {
        bool found = false;
        for (element_type x = 0; x < n && !found; ++x) {
          if (table.product(table.product(a, x), a) == a) {
            // y = x a x is the inverse of a in any regular semigroup
            inverse[a] = table.product(table.product(x, a), x);
            found      = true;
          }
        }
        if (!found) {
          throw NotRegular(a);
        }
      }
      idempotents.clear();
      for (element_type a = 0; a < n; ++a) {
        if (table.product(a, a) == a) {
          idempotents.push_back(a);
        }
      }
      for (std::size_t i = 0; i < idempotents.size(); ++i) {
        for (std::size_t j = i + 1; j < idempotents.size(); ++j) {
          element_type e = idempotents[i], f = idempotents[j];
          if (table.product(e, f) != table.product(f, e)) {
            throw IdempotentsDontCommute(e, f);
          }
        }
      }
    }
  }  // namespace

  FiniteInverseSemigroup validate(CayleyTable table) {
    FiniteInverseSemigroup s;
    auto bad = kernels::first_nonassociative_parallel(table.entries(),
                                                      table.size());
    finish_validation(table, bad, s._inverse, s._idempotents);
    s._table = std::move(table);
    return s;
  }

  FiniteInverseSemigroup validate_serial(CayleyTable table) {
    FiniteInverseSemigroup s;
    auto bad
        = kernels::first_nonassociative_serial(table.entries(), table.size());
    finish_validation(table, bad, s._inverse, s._idempotents);
    s._table = std::move(table);
    return s;
  }

  bool natural_leq(FiniteInverseSemigroup const& s,
                   element_type                  a,
                   element_type                  b) {
    return std::any_of(s.idempotents().begin(),
                       s.idempotents().end(),
                       [&](element_type e) { return s.mul(e, b) == a; });
  }

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition::Partition(std::vector<std::size_t> labels) {
    std::map<std::size_t, std::size_t> renumber;
    _class_of.resize(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto [it, inserted] = renumber.emplace(labels[i], _classes.size());
      if (inserted) {
        _classes.emplace_back();
      }
      _class_of[i] = it->second;
      _classes[it->second].push_back(static_cast<element_type>(i));
    }
  }

  bool Partition::refines(Partition const& coarser) const {
    for (auto const& cls : _classes) {
      for (element_type a : cls) {
        if (!coarser.same(a, cls.front())) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  GreenData green(FiniteInverseSemigroup const& s) {
    std::size_t const        n = s.size();
    std::vector<std::size_t> r(n), l(n), h(n);
    for (element_type a = 0; a < n; ++a) {
      r[a] = s.mul(a, s.inverse(a));
      l[a] = s.mul(s.inverse(a), a);
      h[a] = r[a] * n + l[a];
    }
    UnionFind d_on_idempotents(n);
    for (element_type c = 0; c < n; ++c) {
      d_on_idempotents.unite(r[c], l[c]);
    }
    std::vector<std::size_t> d(n);
    for (element_type a = 0; a < n; ++a) {
      d[a] = d_on_idempotents.find(r[a]);
    }

    // J via principal two-sided ideals S^1 a S^1
    std::vector<std::vector<bool>> ideal(n, std::vector<bool>(n, false));
    for (element_type a = 0; a < n; ++a) {
      std::vector<element_type> left{a};
      for (element_type x = 0; x < n; ++x) {
        left.push_back(s.mul(x, a));
      }
      for (element_type y : left) {
        ideal[a][y] = true;
        for (element_type z = 0; z < n; ++z) {
          ideal[a][s.mul(y, z)] = true;
        }
      }
    }
    std::map<std::vector<bool>, std::size_t> ideal_ids;
    std::vector<std::size_t>                 j(n);
    for (element_type a = 0; a < n; ++a) {
      j[a] = ideal_ids.emplace(ideal[a], ideal_ids.size()).first->second;
    }
    return GreenData{Partition(r),
                     Partition(l),
                     Partition(h),
                     Partition(d),
                     Partition(j)};
  }

  ////////////////////////////////////////////////////////////////////////
  // sigma
  ////////////////////////////////////////////////////////////////////////

  SigmaData sigma_classes(FiniteInverseSemigroup const& s) {
    std::size_t const n = s.size();
    UnionFind         uf(n);
    for (element_type c = 0; c < n; ++c) {
      std::optional<element_type> first_above;
      for (element_type a = 0; a < n; ++a) {
        if (natural_leq(s, c, a)) {
          if (first_above) {
            uf.unite(*first_above, a);
          } else {
            first_above = a;
          }
        }
      }
    }
    SigmaData result;
    result.classes           = Partition(uf.labels());
    result.collapsed_by_zero = s.zero().has_value();
    auto const&               classes = result.classes.classes();
    std::size_t const         k       = classes.size();
    std::vector<element_type> entries(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t jj = 0; jj < k; ++jj) {
        entries[i * k + jj] = static_cast<element_type>(result.classes.class_of(
            s.mul(classes[i].front(), classes[jj].front())));
      }
    }
    result.quotient = CayleyTable(k, std::move(entries));
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Structural predicates
  ////////////////////////////////////////////////////////////////////////

  NotASubsemigroup::NotASubsemigroup(element_type a, element_type b)
      : Error("NotASubsemigroup",
              a == b ? "inverse of " + std::to_string(a) + " is missing"
                     : std::to_string(a) + "*" + std::to_string(b)
                           + " leaves the subset") {}

  bool is_full(FiniteInverseSemigroup const& s,
               std::span<element_type const> subset) {
    std::vector<bool> member(s.size(), false);
    for (element_type a : subset) {
      if (a >= s.size()) {
        throw Error("InvalidElement", std::to_string(a) + " is not an id");
      }
      member[a] = true;
    }
    for (element_type a : subset) {
      if (!member[s.inverse(a)]) {
        throw NotASubsemigroup(a, a);
      }
      for (element_type b : subset) {
        if (!member[s.mul(a, b)]) {
          throw NotASubsemigroup(a, b);
        }
      }
    }
    return std::all_of(s.idempotents().begin(),
                       s.idempotents().end(),
                       [&](element_type e) { return member[e]; });
  }

  namespace {
    bool unitary_scan(FiniteInverseSemigroup const& s,
                      std::optional<element_type>   skip) {
      for (element_type e : s.idempotents()) {
        if (skip && e == *skip) {
          continue;
        }
        for (element_type a = 0; a < s.size(); ++a) {
          if (natural_leq(s, e, a) && !s.is_idempotent(a)) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  bool is_e_unitary(FiniteInverseSemigroup const& s) {
    return unitary_scan(s, std::nullopt);
  }

  bool is_zero_e_star_unitary(FiniteInverseSemigroup const& s) {
    if (!s.zero()) {
      throw Error("NoZero", "0-E*-unitarity needs a zero");
    }
    return unitary_scan(s, s.zero());
  }

  Subgroup maximal_subgroup(FiniteInverseSemigroup const& s, element_type e) {
    if (e >= s.size() || !s.is_idempotent(e)) {
      throw Error("NotIdempotent", std::to_string(e) + " is not idempotent");
    }
    Subgroup g;
    g.elements.push_back(e);
    for (element_type a = 0; a < s.size(); ++a) {
      if (a != e && s.mul(a, s.inverse(a)) == e
          && s.mul(s.inverse(a), a) == e) {
        g.elements.push_back(a);
      }
    }
    std::size_t const         k = g.elements.size();
    std::vector<element_type> entries(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        auto p  = s.mul(g.elements[i], g.elements[j]);
        auto it = std::find(g.elements.begin(), g.elements.end(), p);
        entries[i * k + j] = static_cast<element_type>(it - g.elements.begin());
      }
    }
    g.table = CayleyTable(k, std::move(entries));
    if (!is_group(g.table)) {
      throw std::logic_error("H-class of an idempotent is not a group");
    }
    return g;
  }

  bool is_group(CayleyTable const& table) {
    if (table.size() == 0 || !table.identity()) {
      return false;
    }
    if (kernels::first_nonassociative_serial(table.entries(), table.size())) {
      return false;
    }
    element_type const one = *table.identity();
    for (element_type a = 0; a < table.size(); ++a) {
      bool has_inverse = false;
      for (element_type b = 0; b < table.size() && !has_inverse; ++b) {
        has_inverse = table.product(a, b) == one && table.product(b, a) == one;
      }
      if (!has_inverse) {
        return false;
      }
    }
    return true;
  }

}  // namespace isga
