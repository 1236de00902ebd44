#include "braids/json_io.hpp"

#include <sstream>

#include "braids/error.hpp"

namespace braids {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw DomainError("malformed-json", what);
}

int get_int(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    malformed(std::string("missing integer field '") + field + "'");
  return j[field].get<int>();
}

std::vector<int> get_int_list(const json& j) {
  if (!j.is_array()) malformed("expected an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) malformed("expected an integer entry");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

json encode(const NoncrossingPartition& pi) {
  return json{{"n", pi.n()}, {"blocks", pi.blocks()}};
}

NoncrossingPartition decode_partition(const json& j) {
  int n = get_int(j, "n");
  if (!j.contains("blocks") || !j["blocks"].is_array()) malformed("blocks");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : j["blocks"]) blocks.push_back(get_int_list(b));
  return NoncrossingPartition(n, std::move(blocks));
}

json encode(const Permutation& sigma) {
  std::vector<int> image;
  for (int i = 1; i <= sigma.n(); ++i) image.push_back(sigma.image(i));
  return json{{"n", sigma.n()}, {"image", image}, {"cycles", cycle_string(sigma)}};
}

Permutation decode_permutation(const json& j) {
  int n = get_int(j, "n");
  if (!j.contains("image")) malformed("image");
  return Permutation(n, get_int_list(j["image"]));
}

json encode(const GarsideElement& g) {
  json factors = json::array();
  for (const auto& f : g.factors()) factors.push_back(encode(f));
  return json{{"n", g.n()}, {"inf", g.infimum()}, {"factors", factors}};
}

GarsideElement decode_element(const json& j) {
  int n = get_int(j, "n");
  int inf = get_int(j, "inf");
  if (!j.contains("factors") || !j["factors"].is_array()) malformed("factors");
  DualSimpleWord w{n, {}};
  for (const auto& f : j["factors"]) w.factors.push_back(decode_partition(f));
  return multiply(GarsideElement::delta_power(n, inf), normal_form(w));
}

json encode(const BoundaryWord& w) {
  json word = json::array();
  for (const auto& f : w.factors) word.push_back(encode(f));
  return json{{"n", w.n}, {"word", word}, {"deltaExp", w.delta_exp}};
}

BoundaryWord decode_word(const json& j) {
  BoundaryWord w{get_int(j, "n"), 0, {}};
  if (j.contains("deltaExp")) w.delta_exp = get_int(j, "deltaExp");
  if (!j.contains("word") || !j["word"].is_array()) malformed("word");
  for (const auto& f : j["word"]) w.factors.push_back(decode_partition(f));
  return w;
}

json encode(const BoundarySet& b) {
  return json{{"n", b.n()}, {"B", b.members()}};
}

BoundarySet decode_boundary_set(const json& j) {
  int n = get_int(j, "n");
  if (!j.contains("B")) malformed("B");
  return BoundarySet(n, get_int_list(j["B"]));
}

json encode(const WrappingProfile& p) {
  std::vector<int> ws;
  for (int m : p.base.members()) ws.push_back(p.w.at(m));
  return json{{"n", p.base.n()}, {"B", p.base.members()}, {"w", ws}};
}

WrappingProfile decode_profile(const json& j) {
  int n = get_int(j, "n");
  if (!j.contains("B") || !j.contains("w")) malformed("B and w");
  auto members = get_int_list(j["B"]);
  auto ws = get_int_list(j["w"]);
  if (members.size() != ws.size()) malformed("B and w must align");
  BoundarySet base(n, members);
  if (base.members() != members) malformed("B must be sorted and duplicate-free");
  WrappingProfile p{base, {}};
  for (size_t i = 0; i < members.size(); ++i) p.w[members[i]] = ws[i];
  return p;
}

json encode(const DeltaComplex& x) {
  json simplices = json::object();
  for (int d = 1; d <= x.dimension(); ++d) {
    if (x.cells(d).empty()) continue;
    simplices[std::to_string(d)] = x.cells(d);
  }
  json norms = json::array();
  for (const auto& e : x.cells(1)) {
    auto norm = x.edge_norm(e[0], e[1]);
    norms.push_back(json::array(
        {e[0], e[1], norm ? rational_to_string(*norm) : std::string()}));
  }
  return json{{"vertices", x.vertex_keys()},
              {"simplices", simplices},
              {"norms", norms}};
}

DeltaComplex decode_complex(const json& j) {
  DeltaComplex x;
  if (!j.contains("vertices") || !j["vertices"].is_array()) malformed("vertices");
  for (const auto& k : j["vertices"]) {
    if (!k.is_string()) malformed("vertex keys must be strings");
    x.add_vertex(k.get<std::string>());
  }
  if (j.contains("simplices")) {
    for (const auto& [dim, cells] : j["simplices"].items()) {
      if (!cells.is_array()) malformed("simplices");
      for (const auto& cell : cells) x.add_cell(get_int_list(cell));
    }
  }
  if (j.contains("norms")) {
    for (const auto& triple : j["norms"]) {
      if (!triple.is_array() || triple.size() != 3) malformed("norms");
      x.set_edge_norm(triple[0].get<int>(), triple[1].get<int>(),
                      rational_from_string(triple[2].get<std::string>()));
    }
  }
  x.finalize();
  return x;
}

json encode(const CayleyBall& ball) {
  json out = encode(ball.complex);
  json labels = json::array();
  for (const auto& e : ball.edges)
    labels.push_back(json::array({e.src, e.dst, encode(e.label)}));
  out["labels"] = labels;
  return out;
}

json encode(const BoundaryBall& bb) {
  json out = encode(bb.ball);
  json bdry = json::object();
  for (size_t v = 0; v < bb.vertex_sets.size(); ++v)
    bdry[bb.ball.complex.vertex_keys()[v]] = bb.vertex_sets[v].members();
  out["bdry"] = bdry;
  json bits = json::array();
  for (size_t ei = 0; ei < bb.ball.edges.size(); ++ei) {
    std::vector<int> bs;
    for (auto [m, bit] : bb.edge_bits[ei]) bs.push_back(bit);
    bits.push_back(
        json::array({bb.ball.edges[ei].src, bb.ball.edges[ei].dst, bs}));
  }
  out["bits"] = bits;
  return out;
}

json encode(const ComponentSummary& c) {
  json out{{"minVertex", c.min_vertex_key},
           {"cells", c.cell_counts},
           {"euler", c.euler},
           {"topDimension", c.top_dimension},
           {"topCells", c.top_cells}};
  if (c.boundary_circles) out["boundaryCircles"] = *c.boundary_circles;
  return out;
}

json encode(const ProductCheckReport& r) {
  return json{{"vertices", r.vertices_checked},
              {"edges", r.edges_checked},
              {"violations", r.violations}};
}

std::string cycle_string(const Permutation& sigma) {
  std::ostringstream os;
  bool any = false;
  for (const auto& orbit : sigma.orbits()) {
    if (orbit.size() < 2) continue;
    any = true;
    os << '(';
    // print in traversal order starting from the minimum
    int start = orbit.front();
    int cur = start;
    bool first = true;
    do {
      if (!first) os << ' ';
      os << cur;
      first = false;
      cur = sigma.image(cur);
    } while (cur != start);
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace braids
