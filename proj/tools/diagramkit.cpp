// diagramkit command-line front end.
//
//   diagramkit reduce   --braid B | --diagram D
//   diagramkit eq       --braid B --braid B | --diagram D --diagram D
//   diagramkit mul      --braid B --braid B | --diagram D --diagram D
//   diagramkit inv      --braid B | --diagram D
//   diagramkit b2d      --braid B
//   diagramkit d2b      --diagram D
//   diagramkit squier   --n N | --pres FILE --word W  [--max-vertices M]
//   diagramkit homology --n N | --pres FILE --word W  [--dim K] [--matrix K]
//   diagramkit presentation --n N | --pres FILE --word W  [--simplify]
//   diagramkit annular  make|compose|invert|reduce|equal  --elem E ...
//
// Braids are "n=3 s1 s1" or {"n":3,"slots":[1,1]}; diagrams and presentations
// are JSON, given inline or as a file path. Exit status: 0 success, 1 domain
// error (name on stderr), 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "diagramkit/diagramkit.hpp"

namespace {

  using namespace diagramkit;

  class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct Options {
    std::vector<std::string>   braids;
    std::vector<std::string>   diagrams;
    std::vector<std::string>   elems;
    std::string                annular_op;
    std::optional<std::size_t> n;
    std::string                pres;
    std::string                word;
    std::optional<std::size_t> max_vertices;
    std::optional<std::size_t> dim;
    std::optional<std::size_t> matrix;
    bool                       simplify = false;
    std::string                format   = "json";
    std::string                out;
  };

  std::string read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw UsageError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // Inline JSON, or else a path to a file holding it.
  std::string inline_or_file(std::string const& arg) {
    auto const first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
      return arg;
    }
    return read_file(arg);
  }

  std::string braid_text(std::string const& arg) {
    auto const first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg.compare(first, 2, "n=") == 0) {
      return arg;
    }
    return inline_or_file(arg);
  }

  std::size_t vertex_budget(Options const& o) {
    if (o.max_vertices) {
      return *o.max_vertices;
    }
    if (char const* env = std::getenv("DIAGRAMKIT_MAX_VERTICES")) {
      try {
        std::size_t used = 0;
        auto const  v    = std::stoull(env, &used);
        if (used == std::string(env).size()) {
          return v;
        }
      } catch (std::exception const&) {
      }
      throw UsageError("DIAGRAMKIT_MAX_VERTICES must be a natural number");
    }
    return default_max_vertices;
  }

  SquierComplex complex_from(Options const& o) {
    if (o.n && (!o.pres.empty() || !o.word.empty())) {
      throw UsageError("give either --n or --pres with --word");
    }
    if (o.n) {
      return build_squier(planar_presentation(*o.n), standard_word(*o.n),
                          vertex_budget(o));
    }
    if (o.pres.empty() || o.word.empty()) {
      throw UsageError("give either --n or --pres with --word");
    }
    auto p = presentation_from_json(
        detail::parse_json_text(inline_or_file(o.pres), "presentation"));
    return build_squier(p, parse_word(o.word), vertex_budget(o));
  }

  // Either exactly `count` braids or exactly `count` diagrams.
  bool want_braids(Options const& o, std::size_t count) {
    if (o.braids.size() == count && o.diagrams.empty()) {
      return true;
    }
    if (o.diagrams.size() == count && o.braids.empty()) {
      return false;
    }
    throw UsageError("expected " + std::to_string(count)
                     + (count == 1 ? " --braid or --diagram"
                                   : " --braid or " + std::to_string(count)
                                         + " --diagram arguments"));
  }

  std::vector<BraidWord> braids_of(Options const& o) {
    std::vector<BraidWord> out;
    for (auto const& b : o.braids) {
      out.push_back(parse_braid(braid_text(b)));
    }
    return out;
  }

  std::vector<Diagram> diagrams_of(Options const& o) {
    std::vector<Diagram> out;
    for (auto const& d : o.diagrams) {
      out.push_back(parse_diagram(inline_or_file(d)));
    }
    return out;
  }

  std::string show(Options const& o, BraidWord const& b) {
    return o.format == "text" ? to_string(b) : braid_to_json(b).dump();
  }
  std::string show(Options const& o, Diagram const& d) {
    return o.format == "text" ? to_text(d) : diagram_to_json(d).dump();
  }
  template <typename Annular>
  std::string show_annular(Options const& o, Annular const& e) {
    return o.format == "text" ? to_string(e) : annular_to_json(e).dump();
  }
  std::string show(bool b) {
    return b ? "true" : "false";
  }

  std::string run_command(std::string const& cmd, Options const& o) {
    if (cmd == "reduce") {
      if (want_braids(o, 1)) {
        return show(o, braid_normal_form(braids_of(o)[0]));
      }
      return show(o, reduce(diagrams_of(o)[0]));
    }
    if (cmd == "eq") {
      if (want_braids(o, 2)) {
        auto b = braids_of(o);
        return show(braid_equal(b[0], b[1]));
      }
      auto d = diagrams_of(o);
      return show(equal(d[0], d[1]));
    }
    if (cmd == "mul") {
      if (want_braids(o, 2)) {
        auto b = braids_of(o);
        return show(o, braid_mul(b[0], b[1]));
      }
      auto d = diagrams_of(o);
      return show(o, compose(d[0], d[1]));
    }
    if (cmd == "inv") {
      if (want_braids(o, 1)) {
        return show(o, braid_inv(braids_of(o)[0]));
      }
      return show(o, invert(diagrams_of(o)[0]));
    }
    if (cmd == "b2d") {
      if (!want_braids(o, 1)) {
        throw UsageError("b2d takes one --braid");
      }
      return show(o, braid_to_diagram(braids_of(o)[0]));
    }
    if (cmd == "d2b") {
      if (want_braids(o, 1)) {
        throw UsageError("d2b takes one --diagram");
      }
      return show(o, diagram_to_braid(diagrams_of(o)[0]));
    }
    if (cmd == "squier") {
      auto K = complex_from(o);
      if (o.format == "text") {
        return squier_summary(K);
      }
      if (o.format == "dot") {
        return squier_to_dot(K);
      }
      return squier_to_json(K).dump();
    }
    if (cmd == "homology") {
      auto K = complex_from(o);
      if (o.matrix) {
        std::ostringstream os;
        write_triplets(os, boundary_matrix(K, *o.matrix));
        return os.str();
      }
      if (o.dim) {
        auto h = homology(K, *o.dim);
        return o.format == "text" ? "H_" + std::to_string(*o.dim) + " = " + to_string(h)
                                  : homology_to_json(*o.dim, h).dump();
      }
      auto const all = homology_all(K);
      if (o.format == "text") {
        std::string out;
        for (std::size_t k = 0; k < all.size(); ++k) {
          out += "H_" + std::to_string(k) + " = " + to_string(all[k]) + "\n";
        }
        return out;
      }
      json arr = json::array();
      for (std::size_t k = 0; k < all.size(); ++k) {
        arr.push_back(homology_to_json(k, all[k]));
      }
      return arr.dump();
    }
    if (cmd == "presentation") {
      auto gp = fundamental_presentation(complex_from(o));
      if (o.simplify) {
        gp = simplify_presentation(gp);
      }
      return o.format == "text" ? to_string(gp) : group_presentation_to_json(gp).dump();
    }
    if (cmd == "annular") {
      auto const& op    = o.annular_op;
      std::size_t arity = (op == "compose" || op == "equal") ? 2 : 1;
      if (o.elems.size() != arity) {
        throw UsageError("annular " + op + " takes " + std::to_string(arity)
                         + " --elem");
      }
      if (op == "reduce") {
        // crossing sequences need not be pure to be reduced
        auto f = parse_annular_fields(o.elems[0]);
        return show_annular(o, a_reduce_slots(f.n, f.rotation, std::move(f.slots)));
      }
      std::vector<AnnularElement> e;
      for (auto const& s : o.elems) {
        e.push_back(parse_annular(s));
      }
      if (op == "make") {
        return show_annular(o, e[0]);
      }
      if (op == "compose") {
        return show_annular(o, a_compose(e[0], e[1]));
      }
      if (op == "invert") {
        return show_annular(o, a_invert(e[0]));
      }
      return show(a_equal(e[0], e[1]));
    }
    throw UsageError("unknown command " + cmd);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diagram groups over semigroup presentations and planar pure braids",
               "diagramkit"};
  app.require_subcommand(1);
  Options o;

  auto fmt_check = CLI::IsMember({"json", "text", "dot"});
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json, text or dot")
        ->check(fmt_check)
        ->capture_default_str();
    sub->add_option("--out", o.out, "write the result to FILE");
  };
  auto add_elements = [&](CLI::App* sub) {
    sub->add_option("--braid", o.braids, "braid: \"n=3 s1 s1\", JSON or a file");
    sub->add_option("--diagram", o.diagrams, "diagram JSON or a file");
    add_common(sub);
  };
  auto add_complex = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "use P_n at x1...xn");
    sub->add_option("--pres", o.pres, "presentation JSON or a file");
    sub->add_option("--word", o.word, "base word, e.g. x1x2x3");
    sub->add_option("--max-vertices", o.max_vertices, "vertex budget");
    add_common(sub);
  };

  add_elements(app.add_subcommand("reduce", "normal form of a braid or diagram"));
  add_elements(app.add_subcommand("eq", "are two braids or diagrams equal"));
  add_elements(app.add_subcommand("mul", "product of two braids or diagrams"));
  add_elements(app.add_subcommand("inv", "inverse of a braid or diagram"));
  add_elements(app.add_subcommand("b2d", "pure braid to diagram"));
  add_elements(app.add_subcommand("d2b", "diagram to pure braid"));

  add_complex(app.add_subcommand("squier", "build the Squier complex"));
  auto* hom = app.add_subcommand("homology", "integral homology of the Squier complex");
  add_complex(hom);
  hom->add_option("--dim", o.dim, "only H_K");
  hom->add_option("--matrix", o.matrix, "print boundary matrix K as triplets");
  auto* pres = app.add_subcommand("presentation", "fundamental group presentation");
  add_complex(pres);
  pres->add_flag("--simplify", o.simplify, "apply Tietze simplification");

  auto* ann = app.add_subcommand("annular", "annular planar pure braids");
  ann->add_option("op", o.annular_op, "make, compose, invert, reduce or equal")
      ->required()
      ->check(CLI::IsMember({"make", "compose", "invert", "reduce", "equal"}));
  ann->add_option("--elem", o.elems, "\"n=3 r=1 c0 c0\" or JSON");
  add_common(ann);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }

  std::string const cmd = app.get_subcommands().front()->get_name();
  try {
    std::string result = run_command(cmd, o);
    if (result.empty() || result.back() != '\n') {
      result += '\n';
    }
    if (o.out.empty()) {
      std::cout << result;
    } else {
      std::ofstream file(o.out);
      if (!file) {
        throw UsageError("cannot write " + o.out);
      }
      file << result;
    }
    return 0;
  } catch (UsageError const& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return 2;
  } catch (Error const& e) {
    std::cerr << e.name() << ": " << e.what() << '\n';
    return 1;
  } catch (Overflow const& e) {
    std::cerr << "Overflow: " << e.what() << '\n';
    return 1;
  }
}
