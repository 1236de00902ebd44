#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braids/orthoscheme.hpp"

namespace braids {

/// Orthoscheme configuration space of k points on an oriented n-cycle.
/// Labeled vertices are k-tuples of distinct residues mod n (keys
/// "(0,2,5)"); unlabeled vertices are k-subsets (keys "{0,2,5}"), orbit
/// representatives under coordinate permutation. Cells are the orthoscheme
/// product cells whose closed cells avoid the thick diagonal.
struct CycleConfigComplex {
  int k = 0;
  int n = 0;
  bool labeled = true;
  DeltaComplex complex;
};

/// Empty complex when k > n (no configuration has k distinct residues).
CycleConfigComplex build_conf_cycle(int k, int n, bool labeled);

struct ComponentSummary {
  std::string min_vertex_key;
  std::vector<long long> cell_counts;  // indexed by dimension; [0] = vertices
  long long euler = 0;
  int top_dimension = 0;
  long long top_cells = 0;
  /// Number of circles formed by edges lying in exactly one 2-cell;
  /// reported for components of dimension 2.
  std::optional<int> boundary_circles;
};

/// Connected components of the 1-skeleton with per-dimension cell counts,
/// ordered by smallest vertex key.
std::vector<ComponentSummary> components(const DeltaComplex& x);

/// Finite window of the (k,n)-dilated column: the full subcomplex of the
/// orthoscheme tiling of R^k on integer points with x_1 < ... < x_k <
/// x_1 + n and level <x, 1> within [level_lo, level_hi]. Vertex keys are
/// coordinate tuples "(0,2,5)".
struct DilatedColumnBall {
  int k = 0;
  int n = 0;
  int level_lo = 0;
  int level_hi = 0;
  DeltaComplex complex;
  std::vector<std::vector<int>> vertex_coords;  // aligned with vertex indices
};

DilatedColumnBall dilated_column_ball(int k, int n, int level_lo, int level_hi);

/// True iff x_1 < ... < x_k < x_1 + n.
bool in_dilated_column(int n, const std::vector<int>& x);

/// Euclidean distance between two points of the (k,n)-dilated column; the
/// column is convex, so the intrinsic distance is the ambient one.
double column_distance(int k, int n, const std::vector<int>& x,
                       const std::vector<int>& y);

/// Identifier of the ordinary column containing a top cell of the ball:
/// floor(p_i - p_j) at an interior point, flattened over pairs i < j.
std::vector<int> ordinary_column_id(const DilatedColumnBall& ball,
                                    const std::vector<int>& top_cell);

/// Residues of a column point mod n, as a labeled configuration vertex key.
std::string reduce_mod_n(const std::vector<int>& coords, int n);

}  // namespace braids
