#include "isga/brandt.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "isga/detail/scanner.hpp"
#include "isga/kernels.hpp"

namespace isga {

  ////////////////////////////////////////////////////////////////////////
  // GroupSpec
  ////////////////////////////////////////////////////////////////////////

  GroupSpec GroupSpec::trivial() {
    return GroupSpec{};
  }

  GroupSpec GroupSpec::cyclic(std::size_t order) {
    if (order == 0) {
      throw Error("NotAGroup", "a cyclic group needs order >= 1");
    }
    if (order == 1) {
      return trivial();
    }
    std::vector<element_type> entries(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        entries[a * order + b] = static_cast<element_type>((a + b) % order);
      }
    }
    GroupSpec g = finite(CayleyTable(order, std::move(entries)));
    g._cyclic   = true;
    return g;
  }

  GroupSpec GroupSpec::finite(CayleyTable table) {
    if (!is_group(table)) {
      throw Error("NotAGroup", "table does not satisfy the group axioms");
    }
    if (table.size() == 1) {
      return trivial();
    }
    GroupSpec g;
    g._kind  = kind::finite;
    g._table = std::move(table);
    return g;
  }

  GroupSpec GroupSpec::free(std::size_t rank) {
    if (rank == 0) {
      return trivial();
    }
    GroupSpec g;
    g._kind = kind::free;
    g._rank = rank;
    return g;
  }

  std::optional<std::size_t> GroupSpec::order() const noexcept {
    switch (_kind) {
      case kind::trivial:
        return 1;
      case kind::finite:
        return _table.size();
      case kind::free:
        return std::nullopt;
    }
    return std::nullopt;
  }

  element_type GroupSpec::identity() const noexcept {
    return _kind == kind::finite ? *_table.identity() : 0;
  }

  element_type GroupSpec::mul(element_type g, element_type h) const noexcept {
    return _kind == kind::finite ? _table.product(g, h) : 0;
  }

  element_type GroupSpec::inverse(element_type g) const {
    if (_kind != kind::finite) {
      return 0;
    }
    for (element_type h = 0; h < _table.size(); ++h) {
      if (_table.product(g, h) == identity()) {
        return h;
      }
    }
    throw std::logic_error("group element without inverse");
  }

  std::string GroupSpec::label() const {
    switch (_kind) {
      case kind::trivial:
        return "1";
      case kind::free:
        return "F" + std::to_string(_rank);
      case kind::finite:
        return (_cyclic ? "Z" : "G") + std::to_string(_table.size());
    }
    return "?";
  }

  ////////////////////////////////////////////////////////////////////////
  // BlockSum
  ////////////////////////////////////////////////////////////////////////

  BlockSum::BlockSum(std::vector<Block> blocks) : _blocks(std::move(blocks)) {
    _offsets.push_back(0);
    for (Block const& b : _blocks) {
      if (b.size == 0) {
        throw Error("InvalidBlock", "blocks must have size >= 1");
      }
      _offsets.push_back(_offsets.back() + b.size);
    }
  }

  BlockSum BlockSum::combinatorial(std::vector<std::size_t> const& sizes) {
    std::vector<Block> blocks;
    for (std::size_t n : sizes) {
      blocks.push_back(Block{n, GroupSpec::trivial()});
    }
    return BlockSum(std::move(blocks));
  }

  std::pair<std::size_t, std::size_t>
  BlockSum::locate(std::size_t label) const {
    if (label == 0 || label > label_count()) {
      throw Error("InvalidLabel",
                  "label " + std::to_string(label) + " not in 1.."
                      + std::to_string(label_count()));
    }
    auto it = std::upper_bound(_offsets.begin(), _offsets.end(), label - 1);
    std::size_t const block = static_cast<std::size_t>(it - _offsets.begin()) - 1;
    return {block, label - _offsets[block]};
  }

  std::size_t BlockSum::label(std::size_t block, std::size_t position) const {
    if (block >= _blocks.size() || position == 0
        || position > _blocks[block].size) {
      throw Error("InvalidLabel", "no such block position");
    }
    return _offsets[block] + position;
  }

  bool BlockSum::is_finite() const noexcept {
    return std::all_of(_blocks.begin(), _blocks.end(), [](Block const& b) {
      return b.group.order().has_value();
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Arithmetic
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check_element(BlockSum const& s, BrandtElement const& x) {
      if (x.zero) {
        return;
      }
      if (x.block >= s.blocks().size()) {
        throw Error("InvalidElement", "block index out of range");
      }
      Block const& b = s.blocks()[x.block];
      if (x.row == 0 || x.row > b.size || x.col == 0 || x.col > b.size) {
        throw Error("InvalidElement", "row or column outside the block");
      }
      if (b.group.type() == GroupSpec::kind::free) {
        throw Error("InfiniteGroupBlock",
                    "free block groups are symbolic only");
      }
      if (x.g >= *b.group.order()) {
        throw Error("InvalidElement", "group element out of range");
      }
    }
  }  // namespace

  BrandtElement brandt_mul(BlockSum const&      s,
                           BrandtElement const& x,
                           BrandtElement const& y) {
    check_element(s, x);
    check_element(s, y);
    if (x.zero || y.zero || x.block != y.block || x.col != y.row) {
      return BrandtElement::make_zero();
    }
    return BrandtElement::make(
        x.block, x.row, s.blocks()[x.block].group.mul(x.g, y.g), y.col);
  }

  BrandtElement brandt_inverse(BlockSum const& s, BrandtElement const& x) {
    check_element(s, x);
    if (x.zero) {
      return x;
    }
    return BrandtElement::make(
        x.block, x.col, s.blocks()[x.block].group.inverse(x.g), x.row);
  }

  std::string to_string(BrandtElement const& x, BlockSum const& s) {
    if (x.zero) {
      return "0";
    }
    std::string out = "b" + std::to_string(x.block + 1) + ":("
                      + std::to_string(x.row) + ",";
    if (!s.blocks().at(x.block).group.is_trivial()) {
      out += "g" + std::to_string(x.g) + ",";
    }
    return out + std::to_string(x.col) + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite model
  ////////////////////////////////////////////////////////////////////////

  FiniteBlockSum::FiniteBlockSum(BlockSum                   sum,
                                 FiniteInverseSemigroup     semigroup,
                                 std::vector<BrandtElement> elements)
      : _sum(std::move(sum)),
        _semigroup(std::move(semigroup)),
        _elements(std::move(elements)) {
    std::size_t start = 1;
    for (Block const& b : _sum.blocks()) {
      _block_start.push_back(start);
      start += b.size * b.size * *b.group.order();
    }
  }

  element_type FiniteBlockSum::id(BrandtElement const& x) const {
    check_element(_sum, x);
    if (x.zero) {
      return 0;
    }
    Block const&      b     = _sum.blocks()[x.block];
    std::size_t const order = *b.group.order();
    return static_cast<element_type>(
        _block_start[x.block]
        + ((x.row - 1) * b.size + (x.col - 1)) * order + x.g);
  }

  FiniteBlockSum to_finite(BlockSum const& s) {
    if (!s.is_finite()) {
      throw Error("InfiniteGroupBlock",
                  "to_finite needs finite block groups");
    }
    std::vector<BrandtElement> elements{BrandtElement::make_zero()};
    for (std::size_t b = 0; b < s.blocks().size(); ++b) {
      Block const& block = s.blocks()[b];
      for (std::size_t i = 1; i <= block.size; ++i) {
        for (std::size_t j = 1; j <= block.size; ++j) {
          for (element_type g = 0; g < *block.group.order(); ++g) {
            elements.push_back(BrandtElement::make(b, i, g, j));
          }
        }
      }
    }
    // Ids are computed arithmetically, so build a throwaway index first.
    FiniteBlockSum    index(s, FiniteInverseSemigroup{}, elements);
    std::size_t const n     = elements.size();
    auto              table = kernels::tabulate_parallel(
        n, [&](std::size_t a, std::size_t b) {
          return index.id(brandt_mul(s, elements[a], elements[b]));
        });
    auto semigroup = validate(CayleyTable(n, std::move(table)));
    return FiniteBlockSum(s, std::move(semigroup), std::move(elements));
  }

  ////////////////////////////////////////////////////////////////////////
  // Matrix units
  ////////////////////////////////////////////////////////////////////////

  IntMatrix IntMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    IntMatrix m(n);
    m.at(i, j) = 1;
    return m;
  }

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a._n != b._n) {
      throw std::invalid_argument("matrix dimensions differ");
    }
    std::size_t const n = a._n;
    IntMatrix         c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        long const aik = a._data[i * n + k];
        if (aik == 0) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          c._data[i * n + j] += aik * b._data[k * n + j];
        }
      }
    }
    return c;
  }

  std::string to_string(IntMatrix const& m) {
    std::string out;
    for (std::size_t i = 0; i < m.dimension(); ++i) {
      for (std::size_t j = 0; j < m.dimension(); ++j) {
        out += (j ? " " : "") + std::to_string(m.at(i, j));
      }
      out += '\n';
    }
    return out;
  }

  namespace {
    void require_combinatorial(BlockSum const& s) {
      for (Block const& b : s.blocks()) {
        if (!b.group.is_trivial()) {
          throw Error("NonTrivialGroup",
                      "matrix units need trivial block groups");
        }
      }
    }
  }  // namespace

  IntMatrix to_matrix_unit(BlockSum const& s, BrandtElement const& x) {
    require_combinatorial(s);
    check_element(s, x);
    std::size_t const n = s.label_count();
    if (x.zero) {
      return IntMatrix(n);
    }
    return IntMatrix::unit(
        n, s.label(x.block, x.row) - 1, s.label(x.block, x.col) - 1);
  }

  std::vector<std::pair<BrandtElement, IntMatrix>>
  to_matrix_units(BlockSum const& s) {
    require_combinatorial(s);
    FiniteBlockSum                                   f = to_finite(s);
    std::vector<std::pair<BrandtElement, IntMatrix>> out;
    for (element_type a = 0; a < f.size(); ++a) {
      out.emplace_back(f.element(a), to_matrix_unit(s, f.element(a)));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Algebra dimensions
  ////////////////////////////////////////////////////////////////////////

  AlgebraReport algebra_dimensions(BlockSum const& s, bool contracted) {
    AlgebraReport report;
    for (Block const& b : s.blocks()) {
      auto order = b.group.order();
      if (!order) {
        throw Error("InfiniteGroupBlock",
                    "M_" + std::to_string(b.size) + "(C*(F"
                        + std::to_string(b.group.free_rank())
                        + ")) is infinite dimensional");
      }
      std::string summand = "M_" + std::to_string(b.size);
      if (!b.group.is_trivial()) {
        summand += "(C*(" + b.group.label() + "))";
      }
      report.summands.push_back(summand);
      report.dimension += b.size * b.size * *order;
    }
    if (!contracted) {
      report.summands.emplace_back("C");
      report.dimension += 1;
    }
    for (std::size_t i = 0; i < report.summands.size(); ++i) {
      report.display += (i ? " (+) " : "") + report.summands[i];
    }
    if (report.display.empty()) {
      report.display = "0";
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string read_key(detail::Scanner& in) {
      in.skip_space();
      std::string key;
      while (std::isalpha(static_cast<unsigned char>(in.peek()))) {
        key += in.get();
      }
      if (key.empty()) {
        in.fail("'blocks' or 'groups'");
      }
      return key;
    }

    GroupSpec read_group(detail::Scanner& in) {
      in.skip_space();
      char const c = in.peek();
      if (c == 'F' || c == 'Z') {
        in.get();
        std::size_t const k = in.read_unsigned();
        return c == 'F' ? GroupSpec::free(k) : GroupSpec::cyclic(k);
      }
      if (c == '1') {
        in.get();
        return GroupSpec::trivial();
      }
      in.fail("a group (1, F<r> or Z<n>)");
    }

    std::string strip_comments(std::string_view text) {
      std::string out(text);
      bool        in_comment = false;
      for (char& c : out) {
        if (c == '\n') {
          in_comment = false;
        } else if (c == '#' || in_comment) {
          in_comment = true;
          c          = ' ';
        }
      }
      return out;
    }
  }  // namespace

  BlockSum parse_block_sum(std::string_view text) {
    std::string const          clean = strip_comments(text);
    detail::Scanner            in(clean);
    std::optional<std::vector<std::size_t>> sizes;
    std::optional<std::vector<GroupSpec>>   groups;
    in.skip_space();
    while (!in.at_end()) {
      std::string const key = read_key(in);
      in.expect('=');
      if (key == "blocks" && !sizes) {
        sizes.emplace();
        do {
          sizes->push_back(in.read_unsigned());
        } while (in.consume(','));
      } else if (key == "groups" && !groups) {
        groups.emplace();
        do {
          groups->push_back(read_group(in));
        } while (in.consume(','));
      } else {
        in.fail("'blocks' or 'groups' (each once)");
      }
      in.skip_space();
    }
    if (!sizes) {
      throw Error("InvalidBlockSum", "missing 'blocks = ...'");
    }
    if (groups && groups->size() != sizes->size()) {
      throw Error("InvalidBlockSum",
                  "groups lists " + std::to_string(groups->size())
                      + " entries for " + std::to_string(sizes->size())
                      + " blocks");
    }
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < sizes->size(); ++i) {
      blocks.push_back(
          Block{(*sizes)[i], groups ? (*groups)[i] : GroupSpec::trivial()});
    }
    return BlockSum(std::move(blocks));
  }

  std::string to_string(BlockSum const& s) {
    std::string blocks = "blocks = ", groups = "groups = ";
    bool        trivial = true;
    for (std::size_t i = 0; i < s.blocks().size(); ++i) {
      Block const& b = s.blocks()[i];
      blocks += (i ? "," : "") + std::to_string(b.size);
      groups += (i ? "," : "") + b.group.label();
      trivial = trivial && b.group.is_trivial();
    }
    return trivial ? blocks + "\n" : blocks + "\n" + groups + "\n";
  }

}  // namespace isga
