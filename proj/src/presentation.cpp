#include "isga/presentation.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "isga/error.hpp"

namespace isga {

  using boost::multiprecision::cpp_int;

  void GroupPresentation::check() const {
    for (Word const& r : relators) {
      if (r.support_bound() > generators.size()) {
        throw Error("UndeclaredGenerator",
                    "relator uses generator index "
                        + std::to_string(r.support_bound() - 1));
      }
    }
  }

  GroupPresentation free_presentation(std::vector<std::string> labels) {
    return GroupPresentation{std::move(labels), {}};
  }

  namespace {
    Word shift_generators(Word const& w, generator_type by) {
      std::vector<Letter> letters(w.letters().begin(), w.letters().end());
      for (Letter& l : letters) {
        l.generator += by;
      }
      return Word(std::move(letters));
    }
  }  // namespace

  GroupPresentation
  amalgamate_presentations(GroupPresentation const&                 first,
                           GroupPresentation const&                 second,
                           std::vector<std::pair<Word, Word>> const& pairs) {
    first.check();
    second.check();
    GroupPresentation result = first;
    auto const offset = static_cast<generator_type>(first.generators.size());
    for (std::string const& label : second.generators) {
      bool clash = std::find(first.generators.begin(),
                             first.generators.end(),
                             label)
                   != first.generators.end();
      result.generators.push_back(clash ? label + "_2" : label);
    }
    for (Word const& r : second.relators) {
      result.relators.push_back(shift_generators(r, offset));
    }
    for (auto const& [u, v] : pairs) {
      if (u.support_bound() > first.generators.size()
          || v.support_bound() > second.generators.size()) {
        throw Error("UndeclaredGenerator", "amalgamating pair out of range");
      }
      Word r = u * shift_generators(v, offset).inverse();
      if (!r.empty()) {
        result.relators.push_back(std::move(r));
      }
    }
    return result;
  }

  std::string to_string(GroupPresentation const& p) {
    std::string out = "<";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
      out += (i ? "," : "") + p.generators[i];
    }
    out += " |";
    auto alphabet = p.alphabet();
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      out += (i ? ", " : " ") + to_power_string(p.relators[i], alphabet);
    }
    return out + ">";
  }

  std::string to_string(AbelianInvariants const& a) {
    std::string out;
    if (a.free_rank > 0) {
      out = a.free_rank == 1 ? "Z" : "Z^" + std::to_string(a.free_rank);
    }
    for (long d : a.torsion) {
      out += (out.empty() ? "" : " + ") + std::string("Z/")
             + std::to_string(d);
    }
    return out.empty() ? "0" : out;
  }

  std::vector<std::vector<long>> relation_matrix(GroupPresentation const& p) {
    std::vector<std::vector<long>> rows;
    for (Word const& r : p.relators) {
      std::vector<long> row(p.generators.size(), 0);
      for (Letter l : r.letters()) {
        row.at(l.generator) += l.inverse ? -1 : 1;
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  std::vector<long>
  smith_invariant_factors(std::vector<std::vector<long>> const& matrix,
                          std::size_t                           columns) {
    std::size_t const                 rows = matrix.size();
    std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(columns));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < columns; ++j) {
        a[i][j] = matrix[i].at(j);
      }
    }
    std::vector<cpp_int> diagonal;
    std::size_t          t = 0;
    while (t < rows && t < columns) {
      // pivot: smallest nonzero absolute value in the remaining block
      std::size_t pr = rows, pc = columns;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < columns; ++j) {
          if (a[i][j] != 0
              && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) {
        break;
      }
      std::swap(a[t], a[pr]);
      for (auto& row : a) {
        std::swap(row[t], row[pc]);
      }
      bool clean = false;
      while (!clean) {
        clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a[i][t] == 0) {
            continue;
          }
          cpp_int q = a[i][t] / a[t][t];
          for (std::size_t j = t; j < columns; ++j) {
            a[i][j] -= q * a[t][j];
          }
          if (a[i][t] != 0) {
            std::swap(a[t], a[i]);
            clean = false;
          }
        }
        for (std::size_t j = t + 1; j < columns; ++j) {
          if (a[t][j] == 0) {
            continue;
          }
          cpp_int q = a[t][j] / a[t][t];
          for (std::size_t i = t; i < rows; ++i) {
            a[i][j] -= q * a[i][t];
          }
          if (a[t][j] != 0) {
            for (auto& row : a) {
              std::swap(row[t], row[j]);
            }
            clean = false;
          }
        }
        if (clean) {
          // the pivot must divide the rest of the block
          for (std::size_t i = t + 1; i < rows && clean; ++i) {
            for (std::size_t j = t + 1; j < columns; ++j) {
              if (a[i][j] % a[t][t] != 0) {
                for (std::size_t k = t; k < columns; ++k) {
                  a[t][k] += a[i][k];
                }
                clean = false;
                break;
              }
            }
          }
        }
      }
      diagonal.push_back(abs(a[t][t]));
      ++t;
    }
    std::vector<long> result;
    for (cpp_int const& d : diagonal) {
      if (d > cpp_int(std::numeric_limits<long>::max())) {
        throw std::overflow_error("invariant factor exceeds 64 bits");
      }
      result.push_back(d.convert_to<long>());
    }
    return result;
  }

  AbelianInvariants abelianization(GroupPresentation const& p) {
    p.check();
    auto factors
        = smith_invariant_factors(relation_matrix(p), p.generators.size());
    AbelianInvariants result;
    result.free_rank = p.generators.size() - factors.size();
    for (long d : factors) {
      if (d != 1) {
        result.torsion.push_back(d);
      }
    }
    return result;
  }

}  // namespace isga
