#pragma once

#include <map>
#include <string>
#include <vector>

#include "braids/boundary.hpp"
#include "braids/garside.hpp"
#include "braids/orthoscheme.hpp"

namespace braids {

struct BoundaryBall;

/// A finite ball of the dual braid complex: all positive elements of word
/// length (in nontrivial simples) up to the radius, every labeled edge
/// between them, and the chain simplices of the flag complex. Vertices are
/// sorted by (abelianization, canonical key), so chains ascend.
struct CayleyBall {
  int n = 0;
  int radius = 0;
  std::vector<GarsideElement> vertices;

  struct Edge {
    int src;
    int dst;
    NoncrossingPartition label;
  };
  std::vector<Edge> edges;

  /// Induced orthoscheme complex; edge norms are label ranks.
  DeltaComplex complex;

  int vertex_index(const GarsideElement& g) const;

private:
  friend CayleyBall build_ball(int n, int radius);
  friend BoundaryBall build_boundary_ball(int n, const BoundarySet& b,
                                          int radius);
  std::map<std::string, int> index_;
  void build_index();
};

/// BFS over right multiplication by all of NC_n^*. Throws
/// DomainError("resource-bound") with the counts reached when the ball
/// exceeds the documented limits (n <= 7, radius <= 5, 200k vertices).
CayleyBall build_ball(int n, int radius);

/// A Cayley ball restricted to boundary-admissible labels, annotated with
/// the boundary image set of every vertex and the wrapping bits of every
/// edge. `witness[v]` is the factor sequence of the BFS discovery path,
/// a boundary word for the base set.
struct BoundaryBall {
  CayleyBall ball;
  BoundarySet base;
  std::vector<BoundarySet> vertex_sets;
  std::vector<std::map<int, int>> edge_bits;  // aligned with ball.edges
  std::vector<std::vector<NoncrossingPartition>> witness;
};

BoundaryBall build_boundary_ball(int n, const BoundarySet& b, int radius);

/// Lift of an edge path of the configuration space through the splitting:
/// the product of the unique move simples advancing the given member
/// subsets in order. Throws DomainError("illegal-step") when a step is not
/// an edge.
GarsideElement split_lift(const BoundarySet& b,
                          const std::vector<std::vector<int>>& path);

/// Machine check of the product decomposition over a boundary ball: the
/// out-label poset factors through (fix, move) pairs, vertex decompositions
/// recompose and are injective, edges satisfy the move multiplicativity and
/// fix conjugation laws, and label ranks split additively.
struct ProductCheckReport {
  int vertices_checked = 0;
  int edges_checked = 0;
  std::vector<std::string> violations;
};

ProductCheckReport product_check(int n, const BoundarySet& b, int radius);

}  // namespace braids
