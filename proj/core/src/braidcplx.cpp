#include "braids/braidcplx.hpp"

#include <algorithm>
#include <set>

#include "braids/error.hpp"

namespace braids {

namespace {

constexpr int kMaxN = 7;
constexpr int kMaxRadius = 5;
constexpr size_t kMaxVertices = 200000;

void sort_vertices(std::vector<GarsideElement>& vs) {
  std::sort(vs.begin(), vs.end(), [](const auto& a, const auto& b) {
    int aa = a.abelianization(), bb = b.abelianization();
    return aa != bb ? aa < bb : a.key() < b.key();
  });
}

// all chain simplices of the directed graph (pairwise adjacency required)
void emit_chains(int nv, const std::vector<std::vector<char>>& adj,
                 DeltaComplex& complex) {
  std::vector<int> chain;
  auto rec = [&](auto&& self, int last) -> void {
    if (chain.size() >= 2) complex.add_cell(chain);
    for (int next = last + 1; next < nv; ++next) {
      bool ok = true;
      for (int v : chain)
        if (!adj[v][next]) {
          ok = false;
          break;
        }
      if (ok) {
        chain.push_back(next);
        self(self, next);
        chain.pop_back();
      }
    }
  };
  for (int start = 0; start < nv; ++start) {
    chain = {start};
    rec(rec, start);
  }
}

}  // namespace

int CayleyBall::vertex_index(const GarsideElement& g) const {
  auto it = index_.find(g.key());
  return it == index_.end() ? -1 : it->second;
}

void CayleyBall::build_index() {
  index_.clear();
  for (size_t i = 0; i < vertices.size(); ++i)
    index_.emplace(vertices[i].key(), static_cast<int>(i));
}

CayleyBall build_ball(int n, int radius) {
  if (n < 1 || n > kMaxN || radius < 0 || radius > kMaxRadius)
    throw DomainError("out-of-range",
                      "build_ball supports n <= 7 and radius <= 5");
  auto gens = enumerate_nc(n);
  gens.erase(gens.begin());  // drop the discrete partition

  CayleyBall ball;
  ball.n = n;
  ball.radius = radius;
  std::set<std::string> seen;
  std::vector<GarsideElement> frontier{GarsideElement::identity(n)};
  seen.insert(frontier[0].key());
  ball.vertices = frontier;
  for (int layer = 0; layer < radius; ++layer) {
    std::vector<GarsideElement> next;
    for (const auto& g : frontier) {
      for (const auto& pi : gens) {
        GarsideElement h = multiply(g, normal_form(pi));
        if (seen.insert(h.key()).second) {
          next.push_back(h);
          if (seen.size() > kMaxVertices)
            throw DomainError("resource-bound",
                              "ball exceeded " + std::to_string(kMaxVertices) +
                                  " vertices at layer " + std::to_string(layer + 1));
        }
      }
    }
    ball.vertices.insert(ball.vertices.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  sort_vertices(ball.vertices);
  ball.build_index();

  const int nv = static_cast<int>(ball.vertices.size());
  std::vector<std::vector<char>> adj(nv, std::vector<char>(nv, 0));
  for (int v = 0; v < nv; ++v) {
    for (const auto& pi : gens) {
      GarsideElement h = multiply(ball.vertices[v], normal_form(pi));
      int w = ball.vertex_index(h);
      if (w < 0) continue;
      ball.edges.push_back({v, w, pi});
      adj[v][w] = 1;
    }
  }

  for (int v = 0; v < nv; ++v)
    ball.complex.add_vertex(ball.vertices[v].key());
  for (const auto& e : ball.edges) {
    ball.complex.add_cell({e.src, e.dst});
    ball.complex.set_edge_norm(e.src, e.dst, Rational(e.label.rank()));
  }
  emit_chains(nv, adj, ball.complex);
  ball.complex.finalize();
  return ball;
}

BoundaryBall build_boundary_ball(int n, const BoundarySet& b, int radius) {
  if (n != b.n()) throw DomainError("mismatched-n", "build_boundary_ball");
  if (n < 1 || n > kMaxN || radius < 0 || radius > kMaxRadius)
    throw DomainError("out-of-range",
                      "build_boundary_ball supports n <= 7 and radius <= 5");

  BoundaryBall out{{}, b, {}, {}, {}};
  CayleyBall& ball = out.ball;
  ball.n = n;
  ball.radius = radius;

  struct Node {
    GarsideElement g;
    BoundarySet set;
    std::vector<NoncrossingPartition> path;
  };
  std::map<std::string, Node> nodes;
  Node root{GarsideElement::identity(n), b, {}};
  nodes.emplace(root.g.key(), root);
  std::vector<Node> frontier{root};
  for (int layer = 0; layer < radius; ++layer) {
    std::vector<Node> next;
    for (const auto& node : frontier) {
      for (const auto& pi : boundary_partitions(node.set)) {
        if (pi.is_discrete()) continue;
        GarsideElement h = multiply(node.g, normal_form(pi));
        std::string key = h.key();
        if (nodes.count(key)) continue;
        auto step = boundary_step(pi, node.set);
        Node child{h, step->image, node.path};
        child.path.push_back(pi);
        nodes.emplace(key, child);
        next.push_back(std::move(child));
        if (nodes.size() > kMaxVertices)
          throw DomainError("resource-bound", "boundary ball too large");
      }
    }
    frontier = std::move(next);
  }

  for (const auto& [key, node] : nodes) ball.vertices.push_back(node.g);
  sort_vertices(ball.vertices);
  ball.build_index();
  const int nv = static_cast<int>(ball.vertices.size());
  out.vertex_sets.reserve(nv);
  out.witness.reserve(nv);
  for (const auto& g : ball.vertices) {
    const Node& node = nodes.at(g.key());
    out.vertex_sets.push_back(node.set);
    out.witness.push_back(node.path);
  }

  std::vector<std::vector<char>> adj(nv, std::vector<char>(nv, 0));
  for (int v = 0; v < nv; ++v) {
    for (const auto& pi : boundary_partitions(out.vertex_sets[v])) {
      if (pi.is_discrete()) continue;
      GarsideElement h = multiply(ball.vertices[v], normal_form(pi));
      int w = ball.vertex_index(h);
      if (w < 0) continue;
      ball.edges.push_back({v, w, pi});
      out.edge_bits.push_back(boundary_step(pi, out.vertex_sets[v])->bits);
      adj[v][w] = 1;
    }
  }

  for (int v = 0; v < nv; ++v)
    ball.complex.add_vertex(ball.vertices[v].key());
  for (const auto& e : ball.edges) {
    ball.complex.add_cell({e.src, e.dst});
    ball.complex.set_edge_norm(e.src, e.dst, Rational(e.label.rank()));
  }
  emit_chains(nv, adj, ball.complex);
  ball.complex.finalize();
  return out;
}

GarsideElement split_lift(const BoundarySet& b,
                          const std::vector<std::vector<int>>& path) {
  GarsideElement acc = GarsideElement::identity(b.n());
  BoundarySet cur = b;
  for (const auto& advance : path) {
    auto pi = move_simple_advancing(cur, advance);
    if (!pi)
      throw DomainError("illegal-step",
                        "advance is not an edge of the configuration space");
    acc = multiply(acc, normal_form(*pi));
    auto step = boundary_step(*pi, cur);
    cur = step->image;
  }
  return acc;
}

ProductCheckReport product_check(int n, const BoundarySet& b, int radius) {
  ProductCheckReport report;
  auto bb = build_boundary_ball(n, b, radius);
  const auto& ball = bb.ball;

  auto fail = [&](const std::string& what) { report.violations.push_back(what); };

  // (a) per vertex: the out-label poset NC_n(B',.) factors as a product
  std::set<BoundarySet> seen_sets(bb.vertex_sets.begin(), bb.vertex_sets.end());
  for (const auto& bset : seen_sets) {
    auto bps = boundary_partitions(bset);
    std::set<NoncrossingPartition> fixes, moves;
    std::set<std::pair<NoncrossingPartition, NoncrossingPartition>> pairs;
    for (const auto& pi : bps) {
      auto f = fix_part(pi, bset);
      auto m = move_part(pi, bset);
      fixes.insert(f);
      moves.insert(m);
      if (!pairs.insert({f, m}).second)
        fail("label map not injective over " + normal_form(pi).key());
    }
    if (fixes.size() * moves.size() != bps.size())
      fail("label poset is not the product of its images at a vertex set");
  }

  // (b) vertex decompositions: injective, recomposing, edge laws
  std::vector<Decomposition> dec;
  dec.reserve(ball.vertices.size());
  std::set<std::pair<std::string, std::string>> images;
  for (size_t v = 0; v < ball.vertices.size(); ++v) {
    BoundaryWord w{n, 0, bb.witness[v]};
    dec.push_back(decompose(w, b));
    const auto& d = dec.back();
    if (multiply(d.fix, d.move) != ball.vertices[v])
      fail("decomposition does not recompose at vertex " +
           ball.vertices[v].key());
    if (!images.insert({d.fix.key(), d.move.key()}).second)
      fail("decomposition map not injective at vertex " +
           ball.vertices[v].key());
    ++report.vertices_checked;
  }

  for (size_t ei = 0; ei < ball.edges.size(); ++ei) {
    const auto& e = ball.edges[ei];
    const auto& bset = bb.vertex_sets[e.src];
    // (c) edge norms split additively
    if (e.label.rank() !=
        fix_part(e.label, bset).rank() + move_part(e.label, bset).rank())
      fail("rank does not split on an edge label");
    // move multiplicativity and the fix conjugation law
    const auto& dsrc = dec[e.src];
    const auto& ddst = dec[e.dst];
    GarsideElement move_step = normal_form(move_part(e.label, bset));
    if (ddst.move != multiply(dsrc.move, move_step))
      fail("move component is not multiplicative along an edge");
    GarsideElement fix_step = normal_form(fix_part(e.label, bset));
    GarsideElement conj = multiply(
        multiply(dsrc.move, fix_step), invert(dsrc.move));
    if (ddst.fix != multiply(dsrc.fix, conj))
      fail("fix component violates the conjugation law along an edge");
    ++report.edges_checked;
  }
  return report;
}

}  // namespace braids
