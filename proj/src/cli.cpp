#include "isga/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "isga/block_graph.hpp"
#include "isga/brandt.hpp"
#include "isga/graph_isg.hpp"
#include "isga/inverse_semigroup.hpp"
#include "isga/reilly.hpp"
#include "isga/universal_group.hpp"
#include "isga/walk.hpp"

namespace isga {

  namespace {
    using json = nlohmann::ordered_json;

    // Bad invocation that CLI11 cannot see, such as an unreadable file.
    class UsageError : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    std::string read_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw UsageError("cannot read '" + path + "'");
      }
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return buffer.str();
    }

    std::string z_rank(std::size_t r) {
      return r == 0 ? "0" : r == 1 ? "Z" : "Z^" + std::to_string(r);
    }

    std::string join(std::vector<std::size_t> const& xs) {
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? "," : "") + std::to_string(xs[i]);
      }
      return out;
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    ////////////////////////////////////////////////////////////////////
    // decompose
    ////////////////////////////////////////////////////////////////////

    json report_json(DecompositionReport const& r, bool unital) {
      json doc;
      doc["schema_version"] = json_schema_version;
      doc["components"]     = json::array();
      for (Component const& c : r.components) {
        json comp;
        comp["k"] = c.k;
        comp["q"] = c.q;
        comp["vertices"] = json::array();
        for (std::size_t v : c.vertices) {
          comp["vertices"].push_back(r.graph.vertex_name(v));
        }
        comp["edges"]      = c.edges;
        comp["tree_edges"] = c.tree_edges;
        comp["free_edges"] = c.free_edges;
        doc["components"].push_back(comp);
      }
      doc["p"]       = r.p;
      doc["k0_rank"] = r.k0_rank;
      doc["k1_rank"] = r.k1_rank;
      doc["display"] = r.display(unital);
      return doc;
    }

    void print_report(std::ostream&              out,
                      DecompositionReport const& r,
                      bool                       unital) {
      for (std::size_t i = 0; i < r.components.size(); ++i) {
        Component const&         c = r.components[i];
        std::vector<std::string> names;
        std::string              vertices;
        for (std::size_t v : c.vertices) {
          vertices += (vertices.empty() ? "" : ",") + r.graph.vertex_name(v);
        }
        out << "component " << i + 1 << ": k=" << c.k << " q=" << c.q
            << " vertices={" << vertices << "} edges={" << join(c.edges)
            << "} tree={" << join(c.tree_edges) << "} free={"
            << join(c.free_edges) << "}\n";
      }
      out << "p = " << r.p << "\n";
      out << "K0 = " << z_rank(r.k0_rank) << "\n";
      out << "K1 = " << z_rank(r.k1_rank) << "\n";
      out << r.display(unital) << "\n";
    }

    void add_decompose(CLI::App& app, std::ostream& out) {
      auto* sub = app.add_subcommand(
          "decompose", "Decompose the amalgam of two diagonal partitions");
      auto left   = std::make_shared<std::string>();
      auto right  = std::make_shared<std::string>();
      auto as_json = std::make_shared<bool>(false);
      auto unital = std::make_shared<bool>(false);
      sub->add_option("--left", *left, "Block sizes of P, e.g. 3,3,2")
          ->required();
      sub->add_option("--right", *right, "Block sizes of Q, e.g. 2,1,2,3")
          ->required();
      sub->add_flag("--json", *as_json, "Write a JSON report");
      sub->add_flag("--unital", *unital, "Append the unit summand C");
      sub->callback([=, &out] {
        auto const r
            = decompose(parse_composition(*left), parse_composition(*right));
        if (*as_json) {
          out << report_json(r, *unital).dump(2) << "\n";
        } else {
          print_report(out, r, *unital);
        }
      });
    }

    ////////////////////////////////////////////////////////////////////
    // amalgam
    ////////////////////////////////////////////////////////////////////

    struct Partitions {
      std::string left, right;
      AmalgamContext context() const {
        return AmalgamContext(parse_composition(left),
                              parse_composition(right));
      }
    };

    std::shared_ptr<Partitions> add_partitions(CLI::App* sub) {
      auto p = std::make_shared<Partitions>();
      sub->add_option("--left", p->left, "Block sizes of P")->required();
      sub->add_option("--right", p->right, "Block sizes of Q")->required();
      return p;
    }

    void add_amalgam(CLI::App& app, std::ostream& out) {
      auto* amalgam = app.add_subcommand(
          "amalgam", "Exact arithmetic in the amalgam of two block sums");
      amalgam->require_subcommand(1);

      {
        auto* sub  = amalgam->add_subcommand("eval", "Evaluate an expression");
        auto  p    = add_partitions(sub);
        auto  expr = std::make_shared<std::string>();
        auto  as_json = std::make_shared<bool>(false);
        sub->add_option("expression", *expr,
                        "e.g. \"[1,2]P * [2,1]Q\"")
            ->required();
        sub->add_flag("--json", *as_json, "Write a JSON report");
        sub->callback([=, &out] {
          AmalgamContext const ctx = p->context();
          AmalgamWalk const    w   = ctx.parse(*expr);
          NormalForm const     nf  = ctx.normal_form(w);
          if (*as_json) {
            json doc;
            doc["schema_version"] = json_schema_version;
            doc["walk"]           = ctx.to_string(w);
            doc["zero"]           = w.is_zero();
            if (!nf.zero) {
              Component const& c = ctx.report().components[nf.component - 1];
              doc["normal_form"] = {
                  {"component", nf.component},
                  {"row", nf.row},
                  {"word", c.free_edges.empty()
                               ? to_string(nf.word)
                               : to_string(nf.word, free_edge_alphabet(c))},
                  {"col", nf.col}};
            }
            out << doc.dump(2) << "\n";
          } else {
            out << "walk: " << ctx.to_string(w) << "\n";
            out << "normal form: " << to_string(nf, ctx.report()) << "\n";
          }
        });
      }
      {
        auto* sub = amalgam->add_subcommand(
            "enumerate", "Cayley table of a finite amalgam");
        auto p     = add_partitions(sub);
        auto bound = std::make_shared<std::size_t>(100000);
        auto table = std::make_shared<bool>(false);
        sub->add_option("--bound", *bound, "Maximum element count");
        sub->add_flag("--table", *table, "Print the Cayley table");
        sub->callback([=, &out] {
          auto const f = enumerate_if_finite(
              parse_composition(p->left), parse_composition(p->right), *bound);
          out << "elements: " << f.semigroup.size() << "\n";
          out << "idempotents: " << f.semigroup.idempotents().size() << "\n";
          std::string blocks;
          for (Block const& b : f.target.sum().blocks()) {
            blocks += (blocks.empty() ? "" : ", ") + std::string("B_")
                      + std::to_string(b.size);
          }
          out << "isomorphic to the 0-direct union of: " << blocks << "\n";
          if (*table) {
            out << to_string(f.semigroup.table());
          }
        });
      }
      {
        auto* sub = amalgam->add_subcommand(
            "sample", "Random generator products and their normal forms");
        auto p      = add_partitions(sub);
        auto seed   = std::make_shared<std::uint64_t>(1);
        auto count  = std::make_shared<std::size_t>(10);
        auto length = std::make_shared<std::size_t>(4);
        sub->add_option("--seed", *seed, "Random seed");
        sub->add_option("--count", *count, "Number of products");
        sub->add_option("--length", *length, "Generators per product");
        sub->callback([=, &out] {
          AmalgamContext const ctx = p->context();
          std::mt19937_64      rng(*seed);
          std::size_t const    n = ctx.label_count();
          auto pick = [&](std::size_t hi) {
            return std::uniform_int_distribution<std::size_t>(1, hi)(rng);
          };
          for (std::size_t i = 0; i < *count; ++i) {
            // chain generators end to start so most products are nonzero
            std::string expr;
            std::size_t a = pick(n);
            for (std::size_t k = 0; k < *length; ++k) {
              Side const  side = pick(2) == 1 ? Side::P : Side::Q;
              std::vector<std::size_t> mates;
              auto const& ea = ctx.graph().edge(a);
              for (std::size_t b = 1; b <= n; ++b) {
                auto const& eb = ctx.graph().edge(b);
                if (side == Side::P ? eb.left == ea.left
                                    : eb.right == ea.right) {
                  mates.push_back(b);
                }
              }
              std::size_t const b = mates[pick(mates.size()) - 1];
              expr += (expr.empty() ? "[" : " * [") + std::to_string(a) + ","
                      + std::to_string(b) + "]"
                      + (side == Side::P ? "P" : "Q");
              a = b;
            }
            AmalgamWalk const w = ctx.parse(expr);
            out << expr << " => " << ctx.to_string(w) << " => "
                << to_string(ctx.normal_form(w), ctx.report()) << "\n";
          }
        });
      }
    }

    ////////////////////////////////////////////////////////////////////
    // reilly
    ////////////////////////////////////////////////////////////////////

    void add_reilly(CLI::App& app, std::ostream& out) {
      auto* reilly = app.add_subcommand(
          "reilly", "Reilly semigroups B(G, alpha) and the bicyclic monoid");
      reilly->require_subcommand(1);
      auto alpha = std::make_shared<std::string>("shift");

      auto leaf = [&](std::string const& name, std::string const& help) {
        auto* sub = reilly->add_subcommand(name, help);
        sub->add_option("--alpha", *alpha,
                        "identity, shift, shift:k, power:k or x0->...");
        return sub;
      };
      auto semigroup = [alpha] {
        return ReillySemigroup(FreeEndomorphism::parse(*alpha));
      };

      {
        auto* sub = leaf("mul", "Product of two triples");
        auto  xs  = std::make_shared<std::vector<std::string>>();
        sub->add_option("elements", *xs, "Triples (i,word,j)")
            ->required()
            ->expected(2, 1 << 20);
        sub->callback([=, &out] {
          auto const    r   = semigroup();
          ReillyElement acc = parse_reilly(xs->front());
          for (std::size_t k = 1; k < xs->size(); ++k) {
            acc = r.mul(acc, parse_reilly((*xs)[k]));
          }
          out << to_string(acc) << "\n";
        });
      }
      {
        auto* sub = leaf("inv", "Inverse of a triple");
        auto  x   = std::make_shared<std::string>();
        sub->add_option("element", *x, "Triple (i,word,j)")->required();
        sub->callback([=, &out] {
          out << to_string(semigroup().inverse(parse_reilly(*x))) << "\n";
        });
      }
      {
        auto* sub = leaf("above", "Elements above a triple and the maximum");
        auto  x   = std::make_shared<std::string>();
        sub->add_option("element", *x, "Triple (i,word,j)")->required();
        sub->callback([=, &out] {
          auto const          r = semigroup();
          ReillyElement const e = parse_reilly(*x);
          for (ReillyElement const& y : r.elements_above(e)) {
            out << to_string(y) << "\n";
          }
          out << "max: " << to_string(r.max_above(e)) << "\n";
        });
      }
      {
        auto* sub = leaf("sigma", "Whether two triples are sigma-equivalent");
        auto  x   = std::make_shared<std::string>();
        auto  y   = std::make_shared<std::string>();
        sub->add_option("x", *x, "Triple")->required();
        sub->add_option("y", *y, "Triple")->required();
        sub->callback([=, &out] {
          bool const eq = semigroup().sigma_equivalent(parse_reilly(*x),
                                                       parse_reilly(*y));
          out << (eq ? "true" : "false") << "\n";
        });
      }
      {
        auto* sub = reilly->add_subcommand(
            "sigma-group", "Maximal group image of B *_U B");
        auto u = std::make_shared<std::string>();
        sub->add_option("--u", *u, "E or B:n")->required();
        sub->callback([=, &out] {
          auto const sub_monoid = BicyclicSubmonoid::parse(*u);
          auto const h          = toeplitz_amalgam_group(sub_monoid);
          auto const rank       = toeplitz_subgroup_rank(sub_monoid);
          out << "H = " << to_string(h) << "\n";
          out << "H^ab = " << to_string(abelianization(h)) << "\n";
          out << "rank of G = "
              << (rank ? std::to_string(*rank) : std::string("infinite"))
              << "\n";
        });
      }
      {
        auto* sub = reilly->add_subcommand(
            "bn", "Membership of a^-i a^j in B(n)");
        auto n = std::make_shared<std::size_t>(2);
        auto i = std::make_shared<std::size_t>(0);
        auto j = std::make_shared<std::size_t>(0);
        sub->add_option("--n", *n, "Modulus")->required();
        sub->add_option("i", *i, "Exponent of a^-1")->required();
        sub->add_option("j", *j, "Exponent of a")->required();
        sub->callback([=, &out] {
          out << (bn_membership(*n, BicyclicElement{*i, *j}) ? "true"
                                                             : "false")
              << "\n";
        });
      }
      {
        auto* sub = reilly->add_subcommand(
            "classify", "Full submonoid generated by bicyclic elements");
        auto xs = std::make_shared<std::vector<std::string>>();
        sub->add_option("elements", *xs, "Pairs i,j for a^-i a^j");
        sub->callback([=, &out] {
          std::vector<BicyclicElement> sample;
          for (std::string const& s : *xs) {
            auto const pair = parse_composition(s);
            if (pair.size() != 2) {
              throw SyntaxError(1, 1, "a pair i,j");
            }
            sample.push_back(BicyclicElement{pair[0], pair[1]});
          }
          out << to_string(bn_classifier(sample)) << "\n";
        });
      }
    }

    ////////////////////////////////////////////////////////////////////
    // gisg
    ////////////////////////////////////////////////////////////////////

    struct GraphSource {
      std::string graph_file;
      std::size_t polycyclic_n = 0;

      DirectedGraph load() const {
        if (!graph_file.empty() && polycyclic_n > 0) {
          throw UsageError("give either --graph or --polycyclic, not both");
        }
        if (!graph_file.empty()) {
          return parse_graph(read_file(graph_file));
        }
        if (polycyclic_n == 0) {
          throw UsageError("one of --graph or --polycyclic is required");
        }
        return polycyclic(polycyclic_n);
      }
    };

    void add_gisg(CLI::App& app, std::ostream& out) {
      auto* gisg = app.add_subcommand("gisg", "Graph inverse semigroups");
      gisg->require_subcommand(1);
      auto source = std::make_shared<GraphSource>();
      gisg->add_option("--graph", source->graph_file, "Graph file");
      gisg->add_option("--polycyclic", source->polycyclic_n,
                       "Use the polycyclic monoid on n generators");

      auto leaf = [&](std::string const& name, std::string const& help) {
        auto* sub = gisg->add_subcommand(name, help);
        sub->add_option("--graph", source->graph_file, "Graph file");
        sub->add_option("--polycyclic", source->polycyclic_n,
                        "Use the polycyclic monoid on n generators");
        return sub;
      };
      auto two_args = [](CLI::App* sub) {
        auto xs = std::make_shared<std::vector<std::string>>();
        sub->add_option("elements", *xs, "Elements `p * q'`")
            ->required()
            ->expected(2);
        return xs;
      };
      auto one_arg = [](CLI::App* sub) {
        auto x = std::make_shared<std::string>();
        sub->add_option("element", *x, "Element `p * q'`")->required();
        return x;
      };

      {
        auto* sub = leaf("mul", "Product of elements");
        auto  xs  = std::make_shared<std::vector<std::string>>();
        sub->add_option("elements", *xs, "Elements `p * q'`")
            ->required()
            ->expected(2, 1 << 20);
        sub->callback([=, &out] {
          DirectedGraph const g   = source->load();
          GraphISGElement     acc = parse_gisg(g, xs->front());
          for (std::size_t k = 1; k < xs->size(); ++k) {
            acc = gisg_mul(g, acc, parse_gisg(g, (*xs)[k]));
          }
          out << to_string(acc, g) << "\n";
        });
      }
      {
        auto* sub = leaf("inv", "Inverse of an element");
        auto  x   = one_arg(sub);
        sub->callback([=, &out] {
          DirectedGraph const g = source->load();
          out << to_string(gisg_inverse(parse_gisg(g, *x)), g) << "\n";
        });
      }
      {
        auto* sub = leaf("leq", "Natural partial order x <= y");
        auto  xs  = two_args(sub);
        sub->callback([=, &out] {
          DirectedGraph const g = source->load();
          bool const          r = gisg_leq(
              g, parse_gisg(g, (*xs)[0]), parse_gisg(g, (*xs)[1]));
          out << (r ? "true" : "false") << "\n";
        });
      }
      {
        auto* sub = leaf("image", "Image in the free group on the edges");
        auto  x   = one_arg(sub);
        sub->callback([=, &out] {
          DirectedGraph const g = source->load();
          out << to_string(universal_group_image(parse_gisg(g, *x)),
                           edge_alphabet(g))
              << "\n";
        });
      }
      {
        auto* sub = leaf("munn", "Munn action of x on an idempotent e");
        auto  xs  = two_args(sub);
        sub->callback([=, &out] {
          DirectedGraph const g = source->load();
          auto const          r = munn_action(
              g, parse_gisg(g, (*xs)[0]), parse_gisg(g, (*xs)[1]));
          out << (r ? to_string(*r, g) : std::string("undefined")) << "\n";
        });
      }
      {
        auto* sub    = leaf("verify", "Relations and strong E*-unitarity");
        auto  length = std::make_shared<std::size_t>(4);
        sub->add_option("--length", *length, "Path length bound L");
        sub->callback([=, &out] {
          DirectedGraph const g        = source->load();
          auto const          failures = relation_audit(g);
          for (std::string const& f : failures) {
            out << "relation " << f << "\n";
          }
          out << "relations (1)-(4): " << (failures.empty() ? "hold" : "FAIL")
              << "\n";
          auto const cert = verify_strongly_e_star_unitary(g, *length);
          out << "strongly E*-unitary at L=" << *length << ": "
              << (cert.holds ? "yes" : "no") << " (" << cert.checked
              << " elements)\n";
          if (cert.counterexample) {
            out << "counterexample: " << to_string(*cert.counterexample, g)
                << "\n";
          }
        });
      }
    }

    ////////////////////////////////////////////////////////////////////
    // ugroup
    ////////////////////////////////////////////////////////////////////

    void print_presentation(std::ostream&            out,
                            GroupPresentation const& p,
                            bool                     as_json) {
      if (as_json) {
        json doc;
        doc["schema_version"] = json_schema_version;
        doc["generators"]     = p.generators;
        doc["relators"]       = json::array();
        auto const alphabet   = p.alphabet();
        for (Word const& r : p.relators) {
          doc["relators"].push_back(to_power_string(r, alphabet));
        }
        auto const ab      = abelianization(p);
        doc["abelianization"] = {{"free_rank", ab.free_rank},
                                 {"torsion", ab.torsion}};
        out << doc.dump(2) << "\n";
        return;
      }
      out << to_string(p) << "\n";
      out << "abelianization: " << to_string(abelianization(p)) << "\n";
    }

    void add_ugroup(CLI::App& app, std::ostream& out) {
      auto* ugroup = app.add_subcommand("ugroup", "Universal groups");
      ugroup->require_subcommand(1);
      {
        auto* sub  = ugroup->add_subcommand(
            "present", "Presentation of G(S) for a Cayley table with zero");
        auto  file = std::make_shared<std::string>();
        auto  as_json = std::make_shared<bool>(false);
        sub->add_option("table", *file, "Cayley table file")->required();
        sub->add_flag("--json", *as_json, "Write a JSON report");
        sub->callback([=, &out] {
          auto const s = validate(parse_cayley_table(read_file(*file)));
          print_presentation(out, universal_group_presentation(s), *as_json);
        });
      }
      {
        auto* sub  = ugroup->add_subcommand(
            "gamma", "Image of a special-amalgam word in G(S) *_E G(S)");
        auto  host = std::make_shared<std::string>("pc:2");
        auto  graph_file = std::make_shared<std::string>();
        auto  word = std::make_shared<std::string>();
        sub->add_option("--host", *host, "bicyclic or pc:<n>");
        sub->add_option("--graph", *graph_file, "Graph file as host");
        sub->add_option("word", *word, "e.g. \"[a1 * @v']1 [a2]2\"")
            ->required();
        sub->callback([=, &out] {
          SpecialAmalgamHost const h
              = graph_file->empty()
                    ? SpecialAmalgamHost::named(*host)
                    : SpecialAmalgamHost(parse_graph(read_file(*graph_file)));
          AmalgamWord const w = parse_amalgam_word(h, *word);
          out << "word: " << to_string(w, h) << "\n";
          auto const image = gamma_image(h, w);
          out << "gamma: "
              << (image ? to_string(*image, h.alphabet()) : std::string("0"))
              << "\n";
        });
      }
      {
        auto* sub = ugroup->add_subcommand(
            "combine", "Universal group of a special amalgam");
        auto u          = std::make_shared<std::string>();
        auto host       = std::make_shared<std::string>();
        auto graph_file = std::make_shared<std::string>();
        auto as_json    = std::make_shared<bool>(false);
        sub->add_option("--u", *u, "Bicyclic amalgam over E or B:n");
        sub->add_option("--host", *host,
                        "Graph host bicyclic or pc:<n>, amalgamated over E");
        sub->add_option("--graph", *graph_file, "Graph file host");
        sub->add_flag("--json", *as_json, "Write a JSON report");
        sub->callback([=, &out] {
          int const given = !u->empty() + !host->empty() + !graph_file->empty();
          if (given != 1) {
            throw UsageError("give exactly one of --u, --host, --graph");
          }
          GroupPresentation p;
          if (!u->empty()) {
            p = toeplitz_amalgam_group(BicyclicSubmonoid::parse(*u));
          } else {
            SpecialAmalgamHost const h
                = graph_file->empty()
                      ? SpecialAmalgamHost::named(*host)
                      : SpecialAmalgamHost(parse_graph(read_file(*graph_file)));
            auto const g = graph_universal_group(h.graph());
            p            = combine_universal_groups(g, g, {});
          }
          print_presentation(out, p, *as_json);
        });
      }
    }

    ////////////////////////////////////////////////////////////////////
    // check, brandt
    ////////////////////////////////////////////////////////////////////

    void add_check(CLI::App& app, std::ostream& out) {
      auto* sub = app.add_subcommand(
          "check", "Validate a Cayley table as an inverse semigroup");
      auto file    = std::make_shared<std::string>();
      auto as_json = std::make_shared<bool>(false);
      sub->add_option("table", *file, "Cayley table file")->required();
      sub->add_flag("--json", *as_json, "Write a JSON report");
      sub->callback([=, &out] {
        auto const s     = validate(parse_cayley_table(read_file(*file)));
        auto const g     = green(s);
        auto const sigma = sigma_classes(s);
        json       doc;
        doc["schema_version"] = json_schema_version;
        doc["inverse_semigroup"] = true;
        doc["size"]              = s.size();
        doc["zero"]     = s.zero() ? json(*s.zero()) : json(nullptr);
        doc["identity"] = s.identity() ? json(*s.identity()) : json(nullptr);
        doc["idempotents"] = s.idempotents();
        doc["inverse"]     = json::array();
        for (element_type a = 0; a < s.size(); ++a) {
          doc["inverse"].push_back(s.inverse(a));
        }
        doc["classes"] = {{"R", g.R.size()},
                          {"L", g.L.size()},
                          {"H", g.H.size()},
                          {"D", g.D.size()},
                          {"J", g.J.size()}};
        doc["sigma_classes"] = sigma.classes.size();
        doc["e_unitary"]     = is_e_unitary(s);
        if (s.zero()) {
          doc["zero_e_star_unitary"] = is_zero_e_star_unitary(s);
        }
        if (*as_json) {
          out << doc.dump(2) << "\n";
          return;
        }
        out << "inverse semigroup: yes\n";
        out << "size: " << s.size() << "\n";
        out << "zero: " << (s.zero() ? std::to_string(*s.zero()) : "none")
            << "\n";
        out << "identity: "
            << (s.identity() ? std::to_string(*s.identity()) : "none") << "\n";
        std::vector<std::size_t> e(s.idempotents().begin(),
                                   s.idempotents().end());
        out << "idempotents: {" << join(e) << "}\n";
        out << "Green classes: R=" << g.R.size() << " L=" << g.L.size()
            << " H=" << g.H.size() << " D=" << g.D.size()
            << " J=" << g.J.size() << "\n";
        out << "sigma classes: " << sigma.classes.size()
            << (sigma.collapsed_by_zero ? " (zero present, S/sigma trivial)"
                                        : "")
            << "\n";
        out << "E-unitary: " << yes_no(is_e_unitary(s)) << "\n";
        if (s.zero()) {
          out << "0-E*-unitary: " << yes_no(is_zero_e_star_unitary(s))
              << "\n";
        }
      });
    }

    void add_brandt(CLI::App& app, std::ostream& out) {
      auto* sub = app.add_subcommand(
          "brandt", "Brandt block sums: size, algebra dimensions, units");
      auto blocks = std::make_shared<std::string>();
      auto file   = std::make_shared<std::string>();
      auto units  = std::make_shared<bool>(false);
      auto table  = std::make_shared<bool>(false);
      sub->add_option("--blocks", *blocks, "Block sizes, e.g. 3,3,2");
      sub->add_option("--file", *file, "Block sum file");
      sub->add_flag("--units", *units, "Print the matrix-unit model");
      sub->add_flag("--table", *table, "Print the Cayley table");
      sub->callback([=, &out] {
        if (blocks->empty() == file->empty()) {
          throw UsageError("give exactly one of --blocks, --file");
        }
        BlockSum const s
            = file->empty() ? BlockSum::combinatorial(parse_composition(*blocks))
                            : parse_block_sum(read_file(*file));
        out << to_string(s);
        if (s.is_finite()) {
          auto const f = to_finite(s);
          out << "elements: " << f.size() << "\n";
          out << "idempotents: " << f.semigroup().idempotents().size() << "\n";
          auto const c = algebra_dimensions(s, true);
          auto const u = algebra_dimensions(s, false);
          out << "contracted: " << c.display << " (dim " << c.dimension
              << ")\n";
          out << "full: " << u.display << " (dim " << u.dimension << ")\n";
          if (*table) {
            out << to_string(f.semigroup().table());
          }
          if (*units) {
            for (auto const& [x, m] : to_matrix_units(s)) {
              out << to_string(x, s) << "\n" << to_string(m);
            }
          }
        } else {
          out << "infinite (free block groups)\n";
        }
      });
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err) {
    CLI::App app("Full amalgams of inverse semigroups and their C*-algebras",
                 "isga");
    app.require_subcommand(1);
    app.set_version_flag("--version", "isga 1.0");
    add_decompose(app, out);
    add_amalgam(app, out);
    add_reilly(app, out);
    add_gisg(app, out);
    add_ugroup(app, out);
    add_check(app, out);
    add_brandt(app, out);

    std::vector<std::string> argv_storage{"isga"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char const*> argv;
    for (auto const& a : argv_storage) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_usage_error;
    } catch (SyntaxError const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage_error;
    } catch (UsageError const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage_error;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return exit_domain_error;
    }
    return exit_ok;
  }

}  // namespace isga
