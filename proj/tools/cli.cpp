#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "braids/error.hpp"
#include "braids/json_io.hpp"

namespace braids::cli {

namespace {

json parse_json_arg(const std::string& arg) {
  std::string text = arg;
  // values that do not look like JSON are file paths
  auto first = arg.find_first_not_of(" \t");
  if (first == std::string::npos ||
      (arg[first] != '{' && arg[first] != '[')) {
    std::ifstream in(arg);
    if (!in) throw DomainError("malformed-json", "cannot open file: " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded())
    throw DomainError("malformed-json", "unparseable JSON input");
  return j;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw DomainError("bad-arguments", "expected a comma list of integers");
    }
  }
  return out;
}

// a braid operand is either a canonical element {"inf":...} or a word
GarsideElement parse_braid(const std::string& arg) {
  json j = parse_json_arg(arg);
  if (j.contains("inf")) return decode_element(j);
  if (j.contains("word")) {
    BoundaryWord w = decode_word(j);
    return multiply(GarsideElement::delta_power(w.n, w.delta_exp),
                    normal_form(DualSimpleWord{w.n, w.factors}));
  }
  throw DomainError("malformed-json", "expected an element or a word");
}

struct Invocation {
  CLI::App app{"boundary braid toolkit"};
  std::string out_path;
  long long seed = 0;  // reserved for randomized helpers; unused by the
                       // deterministic commands
  std::function<json()> action;

  // operand storage shared by all subcommands
  int n = 0, k = 0, radius = 0;
  std::string a, b, pi, word, setB, setB2, w, path, levels, norms, x, y;
  bool labeled = true;

  Invocation() {
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.add_option("--out", out_path, "write the result to a file");
    app.add_option("--seed", seed, "seed for randomized helpers");
    build_nc();
    build_braid();
    build_boundary();
    build_ortho();
    build_conf();
    build_cplx();
  }

  BoundarySet boundary_set() const { return BoundarySet(n, parse_int_list(setB)); }

  void build_nc() {
    auto* nc = app.add_subcommand("nc", "noncrossing partition lattice");
    nc->require_subcommand(1);
    auto* enumerate = nc->add_subcommand("enumerate", "all of NC_n");
    enumerate->add_option("--n", n)->required();
    enumerate->callback([this] {
      action = [this] {
        json out = json::array();
        for (const auto& p : enumerate_nc(n)) out.push_back(encode(p));
        return out;
      };
    });
    for (const char* name : {"meet", "join", "leq"}) {
      auto* cmd = nc->add_subcommand(name, "lattice operation");
      cmd->add_option("--a", a)->required();
      cmd->add_option("--b", b)->required();
      std::string op = name;
      cmd->callback([this, op] {
        action = [this, op]() -> json {
          auto pa = decode_partition(parse_json_arg(a));
          auto pb = decode_partition(parse_json_arg(b));
          if (op == "meet") return encode(meet(pa, pb));
          if (op == "join") return encode(join(pa, pb));
          return json{{"leq", leq(pa, pb)}};
        };
      });
    }
    auto* rank = nc->add_subcommand("rank", "n minus number of blocks");
    rank->add_option("--a", a)->required();
    rank->callback([this] {
      action = [this] {
        return json{{"rank", decode_partition(parse_json_arg(a)).rank()}};
      };
    });
    auto* perm = nc->add_subcommand("perm", "noncrossing permutation");
    perm->add_option("--a", a)->required();
    perm->callback([this] {
      action = [this] { return encode(perm_of(decode_partition(parse_json_arg(a)))); };
    });
    auto* comp = nc->add_subcommand("complement", "complement pair in --b (default: maximum)");
    comp->add_option("--a", a)->required();
    comp->add_option("--b", b);
    comp->callback([this] {
      action = [this] {
        auto pa = decode_partition(parse_json_arg(a));
        auto pb = b.empty() ? NoncrossingPartition::maximum(pa.n())
                            : decode_partition(parse_json_arg(b));
        auto pair = complements(pa, pb);
        return json{{"left", encode(pair.left)}, {"right", encode(pair.right)}};
      };
    });
  }

  void build_braid() {
    auto* braid = app.add_subcommand("braid", "dual Garside arithmetic");
    braid->require_subcommand(1);
    auto* nf = braid->add_subcommand("nf", "left-greedy normal form");
    nf->add_option("--word", word)->required();
    nf->callback([this] {
      action = [this] { return encode(parse_braid(word)); };
    });
    for (const char* name : {"mul", "eq", "leq"}) {
      auto* cmd = braid->add_subcommand(name, "binary operation");
      cmd->add_option("--a", a)->required();
      cmd->add_option("--b", b)->required();
      std::string op = name;
      cmd->callback([this, op] {
        action = [this, op]() -> json {
          auto ga = parse_braid(a);
          auto gb = parse_braid(b);
          if (op == "mul") return encode(multiply(ga, gb));
          if (op == "eq") return json{{"equal", ga == gb}};
          return json{{"leq", leq_prefix(ga, gb)}};
        };
      });
    }
    auto* inv = braid->add_subcommand("inv", "group inverse");
    inv->add_option("--a", a)->required();
    inv->callback([this] {
      action = [this] { return encode(invert(parse_braid(a))); };
    });
    auto* abel = braid->add_subcommand("abel", "abelianization");
    abel->add_option("--a", a)->required();
    abel->callback([this] {
      action = [this] { return json{{"abelianization", abelianize(parse_braid(a))}}; };
    });
  }

  void build_boundary() {
    auto* bd = app.add_subcommand("boundary", "wrapping numbers and Fix/Move");
    bd->require_subcommand(1);
    auto* step = bd->add_subcommand("step", "one boundary factor");
    step->add_option("--n", n)->required();
    step->add_option("--B", setB)->required();
    step->add_option("--pi", pi)->required();
    step->callback([this] {
      action = [this]() -> json {
        auto s = boundary_step(decode_partition(parse_json_arg(pi)), boundary_set());
        if (!s) return json{{"boundary", false}};
        json bits = json::object();
        for (auto [m, bit] : s->bits) bits[std::to_string(m)] = bit;
        return json{{"boundary", true}, {"image", s->image.members()}, {"bits", bits}};
      };
    });
    auto* wrap = bd->add_subcommand("wrap", "wrapping profile of a word");
    wrap->add_option("--n", n)->required();
    wrap->add_option("--B", setB)->required();
    wrap->add_option("--word", word)->required();
    wrap->callback([this] {
      action = [this] {
        auto [prof, fin] = wrapping_of_word(decode_word(parse_json_arg(word)),
                                            boundary_set());
        return json{{"profile", encode(prof)}, {"final", fin.members()}};
      };
    });
    for (const char* name : {"fix", "move"}) {
      auto* cmd = bd->add_subcommand(name, "partition component");
      cmd->add_option("--n", n)->required();
      cmd->add_option("--B", setB)->required();
      cmd->add_option("--pi", pi)->required();
      std::string op = name;
      cmd->callback([this, op] {
        action = [this, op] {
          auto p = decode_partition(parse_json_arg(pi));
          return encode(op == "fix" ? fix_part(p, boundary_set())
                                    : move_part(p, boundary_set()));
        };
      });
    }
    auto* dec = bd->add_subcommand("decompose", "fix/move factorization");
    dec->add_option("--n", n)->required();
    dec->add_option("--B", setB)->required();
    dec->add_option("--word", word)->required();
    dec->callback([this] {
      action = [this] {
        auto d = decompose(decode_word(parse_json_arg(word)), boundary_set());
        return json{{"fix", encode(d.fix)}, {"move", encode(d.move)}};
      };
    });
    auto* realize = bd->add_subcommand("realize", "boundary word with a given profile");
    realize->add_option("--n", n)->required();
    realize->add_option("--B", setB)->required();
    realize->add_option("--w", w)->required();
    realize->callback([this] {
      action = [this] {
        auto base = boundary_set();
        auto ws = parse_int_list(w);
        if (static_cast<int>(ws.size()) != base.size())
          throw DomainError("index-mismatch", "need one weight per member");
        WrappingProfile p{base, {}};
        for (int i = 0; i < base.size(); ++i) p.w[base.members()[i]] = ws[i];
        return encode(realize_wrapping(base, p));
      };
    });
    auto* validate = bd->add_subcommand("validate", "check the cyclic chain");
    validate->add_option("--n", n)->required();
    validate->add_option("--B", setB)->required();
    validate->add_option("--w", w)->required();
    validate->callback([this] {
      action = [this] {
        auto base = boundary_set();
        auto ws = parse_int_list(w);
        if (static_cast<int>(ws.size()) != base.size())
          throw DomainError("index-mismatch", "need one weight per member");
        WrappingProfile p{base, {}};
        for (int i = 0; i < base.size(); ++i) p.w[base.members()[i]] = ws[i];
        return json{{"valid", validate_wrapping(base, p)}};
      };
    });
    auto* ms = bd->add_subcommand("movesimple", "unique move simple between sets");
    ms->add_option("--n", n)->required();
    ms->add_option("--B", setB)->required();
    ms->add_option("--B2", setB2)->required();
    ms->callback([this] {
      action = [this]() -> json {
        auto p = move_simple_between(boundary_set(),
                                     BoundarySet(n, parse_int_list(setB2)));
        if (!p) return json{{"exists", false}};
        return json{{"exists", true}, {"partition", encode(*p)}};
      };
    });
  }

  void build_ortho() {
    auto* ortho = app.add_subcommand("ortho", "orthoscheme complexes");
    ortho->require_subcommand(1);
    auto* cube = ortho->add_subcommand("cube", "subdivided unit cube");
    cube->add_option("--k", k)->required();
    cube->callback([this] {
      action = [this] { return encode(subdivide_cube(k)); };
    });
    auto* product = ortho->add_subcommand("product", "canonical product");
    product->add_option("--a", a)->required();
    product->add_option("--b", b)->required();
    product->callback([this] {
      action = [this] {
        return encode(product_complex(decode_complex(parse_json_arg(a)),
                                      decode_complex(parse_json_arg(b))));
      };
    });
    auto* check = ortho->add_subcommand("check", "validate invariants");
    check->add_option("--a", a)->required();
    check->callback([this] {
      action = [this] {
        json violations = json::array();
        for (const auto& v : check_complex(decode_complex(parse_json_arg(a))))
          violations.push_back(json{{"law", v.law}, {"cell", v.cell}, {"detail", v.detail}});
        return json{{"violations", violations}};
      };
    });
    auto* embed = ortho->add_subcommand("embed", "orthoscheme vertex table");
    embed->add_option("--norms", norms, "comma list of squared basis lengths")
        ->required();
    embed->callback([this] {
      action = [this] {
        std::vector<Rational> bs;
        std::stringstream ss(norms);
        std::string item;
        while (std::getline(ss, item, ',')) bs.push_back(rational_from_string(item));
        auto e = embed_orthoscheme({static_cast<int>(bs.size()), bs});
        json sq = json::array();
        for (const auto& row : e.sq_dist) {
          json r = json::array();
          for (const auto& d : row) r.push_back(rational_to_string(d));
          sq.push_back(r);
        }
        return json{{"coords", e.coords}, {"sqDist", sq}};
      };
    });
  }

  void build_conf() {
    auto* conf = app.add_subcommand("conf", "configuration spaces of a cycle");
    conf->require_subcommand(1);
    auto* build = conf->add_subcommand("build", "orthoscheme configuration space");
    build->add_option("--k", k)->required();
    build->add_option("--n", n)->required();
    auto* lab = build->add_flag("--labeled", "labeled points (default)");
    auto* unlab = build->add_flag("--unlabeled", "unlabeled points");
    lab->excludes(unlab);
    build->callback([this, unlab] {
      labeled = unlab->count() == 0;
      action = [this] { return encode(build_conf_cycle(k, n, labeled).complex); };
    });
    auto* comps = conf->add_subcommand("components", "component summaries");
    comps->add_option("--a", a)->required();
    comps->callback([this] {
      action = [this] {
        json out = json::array();
        for (const auto& c : components(decode_complex(parse_json_arg(a))))
          out.push_back(encode(c));
        return out;
      };
    });
    auto* column = conf->add_subcommand("column", "dilated column window");
    column->add_option("--k", k)->required();
    column->add_option("--n", n)->required();
    column->add_option("--levels", levels, "lo:hi inclusive level range")
        ->required();
    column->callback([this] {
      action = [this] {
        auto colon = levels.find(':');
        if (colon == std::string::npos)
          throw DomainError("bad-arguments", "--levels expects lo:hi");
        int lo = std::stoi(levels.substr(0, colon));
        int hi = std::stoi(levels.substr(colon + 1));
        return encode(dilated_column_ball(k, n, lo, hi).complex);
      };
    });
    auto* dist = conf->add_subcommand("distance", "Euclidean column distance");
    dist->add_option("--k", k)->required();
    dist->add_option("--n", n)->required();
    dist->add_option("--x", x)->required();
    dist->add_option("--y", y)->required();
    dist->callback([this] {
      action = [this] {
        return json{{"distance", column_distance(k, n, parse_int_list(x),
                                                 parse_int_list(y))}};
      };
    });
  }

  void build_cplx() {
    auto* cplx = app.add_subcommand("cplx", "dual braid complex balls");
    cplx->require_subcommand(1);
    auto* ball = cplx->add_subcommand("ball", "positive-monoid ball");
    ball->add_option("--n", n)->required();
    ball->add_option("--radius", radius)->required();
    ball->callback([this] {
      action = [this] { return encode(build_ball(n, radius)); };
    });
    auto* bball = cplx->add_subcommand("boundaryball", "boundary braid ball");
    bball->add_option("--n", n)->required();
    bball->add_option("--B", setB)->required();
    bball->add_option("--radius", radius)->required();
    bball->callback([this] {
      action = [this] { return encode(build_boundary_ball(n, boundary_set(), radius)); };
    });
    auto* split = cplx->add_subcommand("split", "lift a configuration path");
    split->add_option("--n", n)->required();
    split->add_option("--B", setB)->required();
    split->add_option("--path", path, "JSON array of advance lists")->required();
    split->callback([this] {
      action = [this] {
        json j = parse_json_arg(path);
        if (!j.is_array()) throw DomainError("malformed-json", "path");
        std::vector<std::vector<int>> steps;
        for (const auto& s : j) {
          std::vector<int> advance;
          for (const auto& v : s) advance.push_back(v.get<int>());
          steps.push_back(std::move(advance));
        }
        return encode(split_lift(boundary_set(), steps));
      };
    });
    auto* pcheck = cplx->add_subcommand("productcheck", "verify the product decomposition");
    pcheck->add_option("--n", n)->required();
    pcheck->add_option("--B", setB)->required();
    pcheck->add_option("--radius", radius)->required();
    pcheck->callback([this] {
      action = [this] { return encode(product_check(n, boundary_set(), radius)); };
    });
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Invocation inv;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    inv.app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << inv.app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    json detail{{"error", "unknown-command"}, {"detail", e.what()}};
    err << detail.dump() << '\n';
    return 2;
  }
  try {
    if (!inv.action) {
      err << json{{"error", "unknown-command"}, {"detail", "no action"}}.dump()
          << '\n';
      return 2;
    }
    json result = inv.action();
    if (!inv.out_path.empty()) {
      std::ofstream f(inv.out_path);
      if (!f) throw DomainError("bad-arguments", "cannot open --out file");
      f << result.dump() << '\n';
    } else {
      out << result.dump() << '\n';
    }
    return 0;
  } catch (const DomainError& e) {
    err << json{{"error", e.code()}, {"detail", e.what()}}.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << json{{"error", "internal"}, {"detail", e.what()}}.dump() << '\n';
    return 1;
  }
}

}  // namespace braids::cli
