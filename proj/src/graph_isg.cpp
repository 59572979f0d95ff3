#include "isga/graph_isg.hpp"

#include <algorithm>
#include <cctype>

#include "isga/detail/scanner.hpp"

namespace isga {

  ////////////////////////////////////////////////////////////////////////
  // DirectedGraph
  ////////////////////////////////////////////////////////////////////////

  std::size_t DirectedGraph::add_vertex(std::string name) {
    if (find_vertex(name)) {
      throw Error("DuplicateName", "vertex '" + name + "' already exists");
    }
    _vertices.push_back(std::move(name));
    return _vertices.size() - 1;
  }

  std::size_t DirectedGraph::add_edge(std::string name,
                                      std::size_t source,
                                      std::size_t range) {
    if (source >= _vertices.size() || range >= _vertices.size()) {
      throw Error("UnknownVertex", "edge '" + name + "' has a missing endpoint");
    }
    if (find_edge(name)) {
      throw Error("DuplicateName", "edge '" + name + "' already exists");
    }
    _edges.push_back(Edge{std::move(name), source, range});
    return _edges.size() - 1;
  }

  std::optional<std::size_t>
  DirectedGraph::find_vertex(std::string_view name) const {
    auto it = std::find(_vertices.begin(), _vertices.end(), name);
    if (it == _vertices.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _vertices.begin());
  }

  std::optional<std::size_t>
  DirectedGraph::find_edge(std::string_view name) const {
    for (std::size_t e = 0; e < _edges.size(); ++e) {
      if (_edges[e].name == name) {
        return e;
      }
    }
    return std::nullopt;
  }

  std::vector<std::size_t> DirectedGraph::out_edges(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < _edges.size(); ++e) {
      if (_edges[e].source == v) {
        out.push_back(e);
      }
    }
    return out;
  }

  bool operator==(DirectedGraph const& x, DirectedGraph const& y) {
    if (x._vertices != y._vertices || x._edges.size() != y._edges.size()) {
      return false;
    }
    for (std::size_t e = 0; e < x._edges.size(); ++e) {
      auto const &a = x._edges[e], &b = y._edges[e];
      if (a.name != b.name || a.source != b.source || a.range != b.range) {
        return false;
      }
    }
    return true;
  }

  namespace {
    bool is_name_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    bool is_name_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    // Reads a name on the current line only.
    std::string read_name(detail::Scanner& in, std::string const& what) {
      while (in.peek() == ' ' || in.peek() == '\t' || in.peek() == '\r') {
        in.get();
      }
      if (!is_name_start(in.peek())) {
        in.fail(what);
      }
      std::string name;
      while (is_name_char(in.peek())) {
        name += in.get();
      }
      return name;
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

  DirectedGraph parse_graph(std::string_view text) {
    std::string const clean = strip_comments(text);
    detail::Scanner   in(clean);
    DirectedGraph     g;
    in.skip_space();
    while (!in.at_end()) {
      std::size_t const line = in.line(), col = in.col();
      std::string const keyword = read_name(in, "'vertex' or 'edge'");
      if (keyword == "vertex") {
        std::string name = read_name(in, "a vertex name");
        g.add_vertex(std::move(name));
      } else if (keyword == "edge") {
        std::string name = read_name(in, "an edge name");
        auto        endpoint = [&] {
          std::size_t const c  = in.col();
          std::string const v  = read_name(in, "a vertex name");
          auto const        id = g.find_vertex(v);
          if (!id) {
            throw SyntaxError(in.line(), c, "a declared vertex");
          }
          return *id;
        };
        std::size_t const src = endpoint();
        std::size_t const dst = endpoint();
        g.add_edge(std::move(name), src, dst);
      } else {
        throw SyntaxError(line, col, "'vertex' or 'edge'");
      }
      while (in.peek() == ' ' || in.peek() == '\t' || in.peek() == '\r') {
        in.get();
      }
      if (!in.at_end() && in.peek() != '\n') {
        in.fail("end of line");
      }
      in.skip_space();
    }
    return g;
  }

  std::string to_string(DirectedGraph const& g) {
    std::string out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      out += "vertex " + g.vertex_name(v) + "\n";
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      auto const& edge = g.edge(e);
      out += "edge " + edge.name + " " + g.vertex_name(edge.source) + " "
             + g.vertex_name(edge.range) + "\n";
    }
    return out;
  }

  DirectedGraph polycyclic(std::size_t n) {
    if (n == 0) {
      throw Error("InvalidN", "polycyclic(n) needs n >= 1");
    }
    DirectedGraph g;
    g.add_vertex("v");
    for (std::size_t i = 1; i <= n; ++i) {
      g.add_edge("a" + std::to_string(i), 0, 0);
    }
    return g;
  }

  ////////////////////////////////////////////////////////////////////////
  // Paths
  ////////////////////////////////////////////////////////////////////////

  Path Path::edges(DirectedGraph const& g, std::vector<std::size_t> edges) {
    if (edges.empty()) {
      throw Error("NotAPath", "an edge path needs at least one edge");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i] >= g.edge_count()) {
        throw Error("NotAPath", "unknown edge id");
      }
      if (i > 0 && g.edge(edges[i - 1]).range != g.edge(edges[i]).source) {
        throw Error("NotAPath",
                    "r(" + g.edge(edges[i - 1]).name + ") != s("
                        + g.edge(edges[i]).name + ")");
      }
    }
    Path p;
    p._edges = std::move(edges);
    return p;
  }

  std::size_t Path::source(DirectedGraph const& g) const {
    return _edges.empty() ? _vertex : g.edge(_edges.front()).source;
  }

  std::size_t Path::range(DirectedGraph const& g) const {
    return _edges.empty() ? _vertex : g.edge(_edges.back()).range;
  }

  std::optional<Path> Path::strip_prefix(DirectedGraph const& g,
                                         Path const&          prefix) const {
    if (prefix.is_vertex()) {
      if (source(g) != prefix._vertex) {
        return std::nullopt;
      }
      return *this;
    }
    if (prefix._edges.size() > _edges.size()
        || !std::equal(prefix._edges.begin(),
                       prefix._edges.end(),
                       _edges.begin())) {
      return std::nullopt;
    }
    if (prefix._edges.size() == _edges.size()) {
      return Path::vertex(range(g));
    }
    Path rest;
    rest._edges.assign(_edges.begin() + prefix._edges.size(), _edges.end());
    return rest;
  }

  std::optional<Path>
  compose_paths(DirectedGraph const& g, Path const& a, Path const& b) {
    if (a.range(g) != b.source(g)) {
      return std::nullopt;
    }
    if (a.is_vertex()) {
      return b;
    }
    if (b.is_vertex()) {
      return a;
    }
    std::vector<std::size_t> edges = a.edge_ids();
    edges.insert(edges.end(), b.edge_ids().begin(), b.edge_ids().end());
    return Path::edges(g, std::move(edges));
  }

  std::string to_string(Path const& p, DirectedGraph const& g) {
    if (p.is_vertex()) {
      return "@" + g.vertex_name(p.source(g));
    }
    std::string out;
    for (std::size_t e : p.edge_ids()) {
      out += (out.empty() ? "" : ".") + g.edge(e).name;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Elements
  ////////////////////////////////////////////////////////////////////////

  GraphISGElement make_element(DirectedGraph const& g, Path p, Path q) {
    if (p.range(g) != q.range(g)) {
      throw Error("RangeMismatch",
                  "r(" + to_string(p, g) + ") != r(" + to_string(q, g) + ")");
    }
    return GraphISGElement{false, std::move(p), std::move(q)};
  }

  GraphISGElement vertex_element(DirectedGraph const& g, std::size_t v) {
    return make_element(g, Path::vertex(v), Path::vertex(v));
  }

  GraphISGElement edge_element(DirectedGraph const& g, std::size_t e) {
    return make_element(
        g, Path::edges(g, {e}), Path::vertex(g.edge(e).range));
  }

  GraphISGElement edge_star_element(DirectedGraph const& g, std::size_t e) {
    return make_element(
        g, Path::vertex(g.edge(e).range), Path::edges(g, {e}));
  }

  namespace {
    Path read_path(detail::Scanner& in, DirectedGraph const& g) {
      in.skip_space();
      if (in.peek() == '@') {
        in.get();
        std::size_t const col  = in.col();
        std::string const name = read_name(in, "a vertex name");
        auto const        v    = g.find_vertex(name);
        if (!v) {
          throw SyntaxError(in.line(), col, "a vertex of the graph");
        }
        return Path::vertex(*v);
      }
      std::vector<std::size_t> edges;
      while (true) {
        std::size_t const col  = in.col();
        std::string const name = read_name(in, "an edge name or '@vertex'");
        auto const        e    = g.find_edge(name);
        if (!e) {
          throw SyntaxError(in.line(), col, "an edge of the graph");
        }
        edges.push_back(*e);
        if (in.peek() != '.') {
          break;
        }
        in.get();
      }
      return Path::edges(g, std::move(edges));
    }
  }  // namespace

  GraphISGElement parse_gisg(DirectedGraph const& g, std::string_view text) {
    detail::Scanner in(text);
    in.skip_space();
    if (in.peek() == '0' && !is_name_char(in.peek(1))) {
      in.get();
      in.expect_end();
      return GraphISGElement::make_zero();
    }
    Path p = read_path(in, g);
    Path q = Path::vertex(p.range(g));
    if (in.consume('*')) {
      q = read_path(in, g);
      in.expect('\'');
    }
    in.expect_end();
    return make_element(g, std::move(p), std::move(q));
  }

  std::string to_string(GraphISGElement const& x, DirectedGraph const& g) {
    if (x.zero) {
      return "0";
    }
    return to_string(x.p, g) + " * " + to_string(x.q, g) + "'";
  }

  GraphISGElement gisg_mul(DirectedGraph const&   g,
                           GraphISGElement const& x,
                           GraphISGElement const& y) {
    if (x.zero || y.zero) {
      return GraphISGElement::make_zero();
    }
    // p q* r s*: r = q t gives (p t) s*, q = r t gives p (s t)*
    if (auto t = y.p.strip_prefix(g, x.q)) {
      return make_element(g, *compose_paths(g, x.p, *t), y.q);
    }
    if (auto t = x.q.strip_prefix(g, y.p)) {
      return make_element(g, x.p, *compose_paths(g, y.q, *t));
    }
    return GraphISGElement::make_zero();
  }

  GraphISGElement gisg_inverse(GraphISGElement const& x) {
    return x.zero ? x : GraphISGElement{false, x.q, x.p};
  }

  bool gisg_is_idempotent(GraphISGElement const& x) {
    return x.zero || x.p == x.q;
  }

  bool gisg_leq(DirectedGraph const&   g,
                GraphISGElement const& x,
                GraphISGElement const& y) {
    if (x.zero) {
      return true;
    }
    if (y.zero) {
      return false;
    }
    auto t1 = x.p.strip_prefix(g, y.p);
    auto t2 = x.q.strip_prefix(g, y.q);
    return t1 && t2 && *t1 == *t2;
  }

  Word universal_group_image(GraphISGElement const& x) {
    if (x.zero) {
      throw Error("ZeroHasNoImage", "the zero has no universal image");
    }
    std::vector<Letter> letters;
    for (std::size_t e : x.p.edge_ids()) {
      push_reduced(letters, Letter{static_cast<generator_type>(e), false});
    }
    auto const& q = x.q.edge_ids();
    for (auto it = q.rbegin(); it != q.rend(); ++it) {
      push_reduced(letters, Letter{static_cast<generator_type>(*it), true});
    }
    return Word(std::move(letters));
  }

  Alphabet edge_alphabet(DirectedGraph const& g) {
    std::vector<std::string> names;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      names.push_back(g.edge(e).name);
    }
    return Alphabet::labelled(std::move(names));
  }

  GroupPresentation graph_universal_group(DirectedGraph const& g) {
    std::vector<std::string> names;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      names.push_back(g.edge(e).name);
    }
    return free_presentation(std::move(names));
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration and verification
  ////////////////////////////////////////////////////////////////////////

  std::vector<Path> all_paths(DirectedGraph const& g, std::size_t max_length) {
    std::vector<Path> out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      out.push_back(Path::vertex(v));
    }
    std::vector<Path> layer;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      layer.push_back(Path::edges(g, {e}));
    }
    for (std::size_t len = 1; len <= max_length && !layer.empty(); ++len) {
      out.insert(out.end(), layer.begin(), layer.end());
      std::vector<Path> next;
      if (len < max_length) {
        for (Path const& p : layer) {
          for (std::size_t e : g.out_edges(p.range(g))) {
            auto edges = p.edge_ids();
            edges.push_back(e);
            next.push_back(Path::edges(g, std::move(edges)));
          }
        }
      }
      layer = std::move(next);
    }
    return out;
  }

  std::vector<GraphISGElement> all_elements(DirectedGraph const& g,
                                            std::size_t          max_length) {
    auto const                   paths = all_paths(g, max_length);
    std::vector<GraphISGElement> out;
    for (Path const& p : paths) {
      for (Path const& q : paths) {
        if (p.range(g) == q.range(g)) {
          out.push_back(GraphISGElement{false, p, q});
        }
      }
    }
    return out;
  }

  UnitarityCertificate
  verify_strongly_e_star_unitary(DirectedGraph const& g,
                                 std::size_t          max_length) {
    UnitarityCertificate cert;
    for (GraphISGElement const& x : all_elements(g, max_length)) {
      ++cert.checked;
      if (universal_group_image(x).empty() != (x.p == x.q)) {
        cert.holds          = false;
        cert.counterexample = x;
        break;
      }
    }
    return cert;
  }

  std::optional<GraphISGElement> munn_action(DirectedGraph const&   g,
                                             GraphISGElement const& x,
                                             GraphISGElement const& e) {
    if (!gisg_is_idempotent(e)) {
      throw Error("NotIdempotent", to_string(e, g) + " is not idempotent");
    }
    if (x.zero || e.zero) {
      return std::nullopt;
    }
    auto t = e.p.strip_prefix(g, x.q);
    if (!t) {
      return std::nullopt;
    }
    Path pt = *compose_paths(g, x.p, *t);
    return GraphISGElement{false, pt, pt};
  }

  std::vector<std::string> relation_audit(DirectedGraph const& g) {
    struct Generator {
      GraphISGElement element;
      std::size_t     source;
      std::size_t     range;
      std::string     name;
    };
    std::vector<Generator> vertices, edges, stars;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      vertices.push_back({vertex_element(g, v), v, v, g.vertex_name(v)});
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      auto const& edge = g.edge(e);
      edges.push_back({edge_element(g, e), edge.source, edge.range, edge.name});
      stars.push_back(
          {edge_star_element(g, e), edge.range, edge.source, edge.name + "*"});
    }
    std::vector<std::string> failures;
    auto const zero = GraphISGElement::make_zero();

    // (1) s(a) a = a r(a) = a
    for (auto const* group : {&edges, &stars}) {
      for (Generator const& a : *group) {
        if (gisg_mul(g, vertex_element(g, a.source), a.element) != a.element
            || gisg_mul(g, a.element, vertex_element(g, a.range))
                   != a.element) {
          failures.push_back("(1) fails for " + a.name);
        }
      }
    }
    // (2) a b = 0 when r(a) != s(b)
    std::vector<Generator> all = vertices;
    all.insert(all.end(), edges.begin(), edges.end());
    all.insert(all.end(), stars.begin(), stars.end());
    for (Generator const& a : all) {
      for (Generator const& b : all) {
        if (a.range != b.source
            && gisg_mul(g, a.element, b.element) != zero) {
          failures.push_back("(2) fails for " + a.name + " " + b.name);
        }
      }
    }
    // (3) a* b = 0 for distinct edges, (4) b* b = r(b)
    for (std::size_t a = 0; a < edges.size(); ++a) {
      for (std::size_t b = 0; b < edges.size(); ++b) {
        auto const product = gisg_mul(g, stars[a].element, edges[b].element);
        if (a != b && product != zero) {
          failures.push_back("(3) fails for " + stars[a].name + " "
                             + edges[b].name);
        }
        if (a == b && product != vertex_element(g, edges[b].range)) {
          failures.push_back("(4) fails for " + edges[b].name);
        }
      }
    }
    return failures;
  }

  BicyclicElement to_bicyclic(DirectedGraph const&   g,
                              GraphISGElement const& x) {
    if (g.vertex_count() != 1 || g.edge_count() != 1) {
      throw Error("UnsupportedHost", "the bicyclic bridge needs polycyclic(1)");
    }
    if (x.zero) {
      throw Error("ZeroHasNoImage", "the zero is not in the bicyclic monoid");
    }
    return BicyclicElement{x.p.length(), x.q.length()};
  }

  GraphISGElement from_bicyclic(DirectedGraph const& g, BicyclicElement b) {
    if (g.vertex_count() != 1 || g.edge_count() != 1) {
      throw Error("UnsupportedHost", "the bicyclic bridge needs polycyclic(1)");
    }
    auto loop = [&](std::size_t n) {
      return n == 0 ? Path::vertex(0)
                    : Path::edges(g, std::vector<std::size_t>(n, 0));
    };
    return make_element(g, loop(b.i), loop(b.j));
  }

}  // namespace isga
