#include "isga/walk.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "isga/detail/scanner.hpp"
#include "isga/kernels.hpp"

namespace isga {

  Alphabet free_edge_alphabet(Component const& c) {
    std::vector<std::string> labels;
    for (std::size_t label : c.free_edges) {
      labels.push_back("g" + std::to_string(label));
    }
    return Alphabet::labelled(std::move(labels));
  }

  std::string to_string(NormalForm const& nf, DecompositionReport const& r) {
    if (nf.zero) {
      return "0";
    }
    Component const& c = r.components.at(nf.component - 1);
    std::string const w
        = c.free_edges.empty() ? to_string(nf.word)
                               : to_string(nf.word, free_edge_alphabet(c));
    return "(comp=" + std::to_string(nf.component) + ", "
           + std::to_string(nf.row) + ", " + w + ", "
           + std::to_string(nf.col) + ")";
  }

  AmalgamContext::AmalgamContext(Composition const& left,
                                 Composition const& right)
      : _report(decompose(left, right)) {}

  AmalgamContext::AmalgamContext(BlockGraph graph)
      : _report(decompose(graph)) {}

  void AmalgamContext::check_label(std::size_t label) const {
    if (label == 0 || label > label_count()) {
      throw Error("InvalidLabel",
                  "label " + std::to_string(label) + " not in 1.."
                      + std::to_string(label_count()));
    }
  }

  AmalgamWalk AmalgamContext::idempotent(std::size_t label) const {
    check_label(label);
    AmalgamWalk w;
    w._start = label;
    return w;
  }

  AmalgamWalk
  AmalgamContext::embed(Side side, std::size_t p, std::size_t q) const {
    check_label(p);
    check_label(q);
    auto const& ep = graph().edge(p);
    auto const& eq = graph().edge(q);
    std::size_t const vp = side == Side::P ? ep.left : ep.right;
    std::size_t const vq = side == Side::P ? eq.left : eq.right;
    if (vp != vq) {
      throw Error("DifferentBlocks",
                  std::to_string(p) + " and " + std::to_string(q)
                      + " lie in different " + (side == Side::P ? "P" : "Q")
                      + " blocks");
    }
    return make(p, {{vp, q}});
  }

  AmalgamWalk
  AmalgamContext::make(std::size_t                           start,
                       std::vector<AmalgamWalk::Step> const& steps) const {
    check_label(start);
    AmalgamWalk w;
    w._start        = start;
    std::size_t cur = start;
    for (auto const& [v, m] : steps) {
      check_label(m);
      auto const& ec = graph().edge(cur);
      auto const& em = graph().edge(m);
      if ((v != ec.left && v != ec.right) || (v != em.left && v != em.right)) {
        throw Error("InvalidWalk",
                    "no half-edges m" + std::to_string(cur) + " - "
                        + graph().vertex_name(v) + " - m" + std::to_string(m));
      }
      if (!w._steps.empty() && w._steps.back().vertex == v) {
        // ... m' v cur v m  ->  ... m' v m
        w._steps.pop_back();
        std::size_t const before = w.end();
        if (m != before) {
          w._steps.push_back({v, m});
        }
      } else if (m != cur) {
        w._steps.push_back({v, m});
      }
      cur = w.end();
    }
    return w;
  }

  AmalgamWalk AmalgamContext::mul(AmalgamWalk const& x,
                                  AmalgamWalk const& y) const {
    if (x.is_zero() || y.is_zero() || x.end() != y.start()) {
      return AmalgamWalk::zero();
    }
    std::vector<AmalgamWalk::Step> steps = x.steps();
    steps.insert(steps.end(), y.steps().begin(), y.steps().end());
    return make(x.start(), steps);
  }

  AmalgamWalk AmalgamContext::inverse(AmalgamWalk const& x) const {
    if (x.is_zero()) {
      return x;
    }
    AmalgamWalk w;
    w._start              = x.end();
    auto const& steps     = x.steps();
    std::size_t const len = steps.size();
    for (std::size_t i = 0; i < len; ++i) {
      std::size_t const back = len - 1 - i;
      w._steps.push_back(
          {steps[back].vertex, back == 0 ? x.start() : steps[back - 1].midpoint});
    }
    return w;
  }

  NormalForm normal_form(AmalgamWalk const&         x,
                         BlockGraph const&          graph,
                         DecompositionReport const& report) {
    if (!(report.graph == graph)) {
      throw Error("MismatchedReport",
                  "the report was built for a different block graph");
    }
    if (x.is_zero()) {
      return NormalForm{};
    }
    if (x.start() > graph.edge_count() || x.end() > graph.edge_count()) {
      throw Error("MismatchedReport", "walk uses labels outside the graph");
    }
    // Spanning tree of the subdivided component: both halves of each tree
    // edge plus the P half of each free edge. The Q half of free edge j is
    // generator j, positive when crossed from m_j into the Q block.
    auto free_index = [&](std::size_t label) {
      return report.free_position[label - 1];
    };
    std::vector<Letter> letters;
    std::size_t         cur = x.start();
    for (auto const& [v, m] : x.steps()) {
      if (free_index(cur) != no_index && v == graph.edge(cur).right) {
        push_reduced(letters,
                     Letter{static_cast<generator_type>(free_index(cur)), false});
      }
      if (free_index(m) != no_index && v == graph.edge(m).right) {
        push_reduced(letters,
                     Letter{static_cast<generator_type>(free_index(m)), true});
      }
      cur = m;
    }
    NormalForm nf;
    nf.zero      = false;
    nf.component = report.component_of_label(x.start()) + 1;
    nf.row       = x.start();
    nf.word      = Word(std::move(letters));
    nf.col       = x.end();
    return nf;
  }

  NormalForm AmalgamContext::normal_form(AmalgamWalk const& x) const {
    return isga::normal_form(x, graph(), _report);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  std::string AmalgamContext::to_string(AmalgamWalk const& x) const {
    if (x.is_zero()) {
      return "0";
    }
    if (x.steps().empty()) {
      return "e" + std::to_string(x.start());
    }
    std::string out;
    std::size_t cur = x.start();
    for (auto const& [v, m] : x.steps()) {
      out += (out.empty() ? "[" : " * [") + std::to_string(cur) + ","
             + std::to_string(m) + "]" + (graph().is_left(v) ? "P" : "Q");
      cur = m;
    }
    return out;
  }

  namespace {
    class WalkParser {
     public:
      WalkParser(AmalgamContext const& ctx, std::string_view text)
          : _ctx(ctx), _in(text) {}

      AmalgamWalk parse() {
        AmalgamWalk w = product();
        _in.expect_end();
        return w;
      }

     private:
      AmalgamWalk product() {
        AmalgamWalk w = factor();
        while (_in.consume('*')) {
          w = _ctx.mul(w, factor());
        }
        return w;
      }

      AmalgamWalk factor() {
        AmalgamWalk w = atom();
        while (_in.consume('\'')) {
          w = _ctx.inverse(w);
        }
        return w;
      }

      AmalgamWalk atom() {
        _in.skip_space();
        char const c = _in.peek();
        if (c == '0') {
          _in.get();
          return AmalgamWalk::zero();
        }
        if (c == 'e') {
          _in.get();
          return _ctx.idempotent(_in.read_unsigned());
        }
        if (c == '(') {
          _in.get();
          AmalgamWalk w = product();
          _in.expect(')');
          return w;
        }
        if (c == '[') {
          _in.get();
          std::size_t const p = _in.read_unsigned();
          _in.expect(',');
          std::size_t const q = _in.read_unsigned();
          _in.expect(']');
          if (_in.peek() == 'P' || _in.peek() == 'Q') {
            Side const side = _in.get() == 'P' ? Side::P : Side::Q;
            return _ctx.embed(side, p, q);
          }
          _in.fail("'P' or 'Q'");
        }
        _in.fail("'0', 'e<j>', '[p,q]P', '[p,q]Q' or '('");
      }

      AmalgamContext const& _ctx;
      detail::Scanner       _in;
    };
  }  // namespace

  AmalgamWalk AmalgamContext::parse(std::string_view text) const {
    return WalkParser(*this, text).parse();
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  FiniteAmalgam enumerate_if_finite(Composition const& left,
                                    Composition const& right,
                                    std::size_t        bound) {
    AmalgamContext const       ctx(left, right);
    DecompositionReport const& r = ctx.report();
    std::size_t                count = 1;
    for (Component const& c : r.components) {
      if (c.q > 0) {
        throw Error("Infinite",
                    "component with k = " + std::to_string(c.k)
                        + " has q = " + std::to_string(c.q) + " > 0");
      }
      count += c.k * c.k;
    }
    if (count > bound) {
      throw Error("TooLarge",
                  std::to_string(count) + " elements exceed the bound "
                      + std::to_string(bound));
    }
    BlockGraph const& g = ctx.graph();

    std::vector<AmalgamWalk> elements{AmalgamWalk::zero()};
    for (Component const& c : r.components) {
      for (std::size_t p : c.edges) {
        // BFS over midpoints; in a tree every midpoint has one reduced path
        // from m_p.
        std::map<std::size_t, AmalgamWalk::Step> via;
        std::deque<std::size_t>                   queue{p};
        std::vector<bool>                         seen(g.edge_count() + 1);
        seen[p] = true;
        while (!queue.empty()) {
          std::size_t const m = queue.front();
          queue.pop_front();
          for (std::size_t v : {g.edge(m).left, g.edge(m).right}) {
            for (std::size_t next : g.incident(v)) {
              if (!seen[next]) {
                seen[next] = true;
                via[next]  = {v, m};
                queue.push_back(next);
              }
            }
          }
        }
        for (std::size_t q : c.edges) {
          std::vector<AmalgamWalk::Step> steps;
          for (std::size_t m = q; m != p; m = via.at(m).midpoint) {
            steps.push_back({via.at(m).vertex, m});
          }
          std::reverse(steps.begin(), steps.end());
          elements.push_back(ctx.make(p, steps));
        }
      }
    }

    std::map<AmalgamWalk, element_type> id;
    for (std::size_t a = 0; a < elements.size(); ++a) {
      if (!id.emplace(elements[a], static_cast<element_type>(a)).second) {
        throw std::logic_error("two enumerated walks coincide");
      }
    }
    std::size_t const n     = elements.size();
    auto              table = kernels::tabulate_parallel(
        n, [&](std::size_t a, std::size_t b) {
          return id.at(ctx.mul(elements[a], elements[b]));
        });
    FiniteInverseSemigroup semigroup
        = validate(CayleyTable(n, std::move(table)));

    FiniteBlockSum target = to_finite(amalgam_semigroup_structure(r).sum);
    std::vector<element_type> iso(n, 0);
    for (std::size_t a = 1; a < n; ++a) {
      AmalgamWalk const& w = elements[a];
      iso[a]               = target.id(
          BrandtElement::make(r.component_of_label(w.start()),
                              r.edge_position[w.start() - 1] + 1,
                              0,
                              r.edge_position[w.end() - 1] + 1));
    }
    std::vector<bool> hit(n, false);
    for (element_type x : iso) {
      if (x >= n || hit[x]) {
        throw std::logic_error("walk relabelling is not a bijection");
      }
      hit[x] = true;
    }
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = 0; b < n; ++b) {
        if (iso[semigroup.mul(a, b)]
            != target.semigroup().mul(iso[a], iso[b])) {
          throw std::logic_error("walk relabelling is not multiplicative");
        }
      }
    }
    return FiniteAmalgam{std::move(semigroup),
                         std::move(elements),
                         std::move(target),
                         std::move(iso)};
  }

}  // namespace isga
