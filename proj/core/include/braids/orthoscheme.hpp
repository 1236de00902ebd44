#pragma once

#include <boost/rational.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace braids {

/// Exact squared lengths. All norms arising here are integers (ranks) or
/// sums of integers, but products of complexes divide through shuffles, so
/// we keep full rational arithmetic.
using Rational = boost::rational<long long>;

std::string rational_to_string(const Rational& r);  // "p" or "p/q"
Rational rational_from_string(const std::string& s);

/// A finite Delta-complex with an orthoscheme metric candidate. Cells are
/// tuples of vertex indices in the cell's intrinsic linear order; quotient
/// complexes may repeat a vertex within a cell (e.g. a loop edge). Faces are
/// given by subtuples and must be listed themselves. Edge norms are squared
/// lengths; a valid orthoscheme structure makes them additive along every
/// 2-cell.
class DeltaComplex {
public:
  DeltaComplex() = default;

  int add_vertex(const std::string& key);  // returns index; dedups by key
  /// Adds the cell and all of its subtuples (norm-less edges get none).
  void add_cell(const std::vector<int>& cell);
  void set_edge_norm(int a, int b, const Rational& norm);

  int vertex_count() const { return static_cast<int>(vertex_keys_.size()); }
  const std::vector<std::string>& vertex_keys() const { return vertex_keys_; }
  std::optional<int> vertex_index(const std::string& key) const;

  int dimension() const;
  /// Cells of dimension d (d >= 1), deterministically sorted.
  const std::vector<std::vector<int>>& cells(int d) const;
  bool has_cell(const std::vector<int>& cell) const;
  std::optional<Rational> edge_norm(int a, int b) const;

  /// Also sorts cell lists; call once after construction.
  void finalize();

private:
  std::vector<std::string> vertex_keys_;
  std::map<std::string, int> vertex_index_;
  std::vector<std::vector<std::vector<int>>> cells_;  // [d-1] -> tuples
  std::map<std::pair<int, int>, Rational> norms_;
  static const std::vector<std::vector<int>> kNoCells;
};

struct ComplexViolation {
  std::string law;  // "ascending-face", "missing-face", "missing-norm",
                    // "nonpositive-norm", "additivity"
  std::vector<int> cell;
  std::string detail;
};

/// Empty iff the Delta-complex invariants and the orthoscheme additivity law
/// hold. A complex with no edges is valid.
std::vector<ComplexViolation> check_complex(const DeltaComplex& x);

/// The unit k-cube subdivided along all hyperplanes x_i = x_j: vertices are
/// subsets of [k], cells are chains under inclusion, edge norms are rank
/// differences. Has k! top cells. Supported for 1 <= k <= 10.
DeltaComplex subdivide_cube(int k);

/// A single ordered k-simplex with the orthoscheme metric given by squared
/// basis norms (defaults to all ones, the standard orthoscheme). Vertex keys
/// p0..pk; norm(pi, pj) = sum of basis norms in (i, j].
DeltaComplex simplex_complex(int k, const std::vector<Rational>& basis_norms = {});

/// Canonical product X x Y subdivided into shuffles: cells are pairs of
/// cells together with monotone chains through the position grid; edge
/// norms add across the factors.
DeltaComplex product_complex(const DeltaComplex& x, const DeltaComplex& y);

/// Squared lengths of the ordered basis vectors of an ordered k-simplex.
struct OrderedSimplexCoords {
  int k;
  std::vector<Rational> basis_norms;  // size k, all positive
};

/// Vertices of the orthoscheme embedded with mutually orthogonal basis
/// vectors: p_j = partial sums. Exact squared distances plus floating-point
/// coordinates (vertex j, axis i) = sqrt(basis_norms[i]) for i < j.
struct OrthoschemeEmbedding {
  std::vector<std::vector<double>> coords;          // (k+1) x k
  std::vector<std::vector<Rational>> sq_dist;       // (k+1) x (k+1)
};
OrthoschemeEmbedding embed_orthoscheme(const OrderedSimplexCoords& c);

/// Ordered basis of the facet obtained by deleting vertex i: entries i and
/// i+1 merge by addition (first or last entry dropped at the ends).
OrderedSimplexCoords facet_coords(const OrderedSimplexCoords& c, int i);

}  // namespace braids
