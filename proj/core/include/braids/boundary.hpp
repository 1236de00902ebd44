#pragma once

#include <map>
#include <optional>
#include <vector>

#include "braids/garside.hpp"
#include "braids/partition.hpp"

namespace braids {

/// A subset of [n] whose indexed basepoints are required to stay on the
/// boundary. May be empty or all of [n].
class BoundarySet {
public:
  BoundarySet(int n, std::vector<int> members);

  int n() const { return n_; }
  const std::vector<int>& members() const { return members_; }  // sorted
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(int b) const;
  bool empty() const { return members_.empty(); }

  /// Every member shifted by s (mod n).
  BoundarySet shifted(int s) const;

  bool operator==(const BoundarySet&) const = default;
  auto operator<=>(const BoundarySet&) const = default;

private:
  int n_;
  std::vector<int> members_;
};

/// Integer wrapping numbers indexed by the members of a boundary set.
struct WrappingProfile {
  BoundarySet base;
  std::map<int, int> w;  // keyed by members of base
};

/// A positive word of dual simple factors preceded by an implicit delta
/// power: deltaExp copies of the maximum are prepended. Whether the word is
/// a boundary word depends on the boundary set it is read against.
struct BoundaryWord {
  int n;
  int delta_exp = 0;
  std::vector<NoncrossingPartition> factors;
};

struct BoundaryStep {
  BoundarySet image;
  std::map<int, int> bits;  // member -> 0 (stays) or 1 (moves to b+1)
};

/// nullopt unless every b in B is either a singleton block of pi (bit 0) or
/// shares a block with b+1 mod n (bit 1). When defined, image = B * sigma_pi.
std::optional<BoundaryStep> boundary_step(const NoncrossingPartition& pi,
                                          const BoundarySet& b);

/// True iff pi is a (B,.)-boundary partition.
bool is_boundary_partition(const NoncrossingPartition& pi,
                           const BoundarySet& b);

/// Per-strand bit sums along the word plus delta_exp, and the final image
/// set. Throws DomainError("factor-not-boundary") naming the offending
/// factor index and strand when a factor fails the boundary condition.
std::pair<WrappingProfile, BoundarySet> wrapping_of_word(const BoundaryWord& w,
                                                         const BoundarySet& b);

/// Make each b in B a singleton block: {A - B} plus singletons on B.
NoncrossingPartition fix_part(const NoncrossingPartition& pi,
                              const BoundarySet& b);

/// The right complement of fix_part(pi, B) in pi. Requires pi to be a
/// boundary partition for B; throws "not-boundary" otherwise.
NoncrossingPartition move_part(const NoncrossingPartition& pi,
                               const BoundarySet& b);

/// The unique factorization nf(w) = fix * move with fix fixing B pointwise
/// and move the canonical boundary-rotation part: move is the product of
/// factorwise move parts at the running sets (delta powers folded in), fix
/// is nf(w) * move^{-1}.
struct Decomposition {
  GarsideElement fix;
  GarsideElement move;
};
Decomposition decompose(const BoundaryWord& w, const BoundarySet& b);

/// True iff the strict cyclic chain b_1+w_1 < ... < b_k+w_k < b_1+w_1+n
/// holds (vacuously for |B| <= 1). Throws "index-mismatch" when the profile
/// keys differ from B.
bool validate_wrapping(const BoundarySet& b, const WrappingProfile& w);

/// A boundary word for B realizing the given profile. Negative minimum is
/// folded into delta_exp; the nonnegative remainder is realized by repeated
/// rotation factors on the strands still owing a step. Throws
/// "invalid-profile" when validate_wrapping fails.
BoundaryWord realize_wrapping(const BoundarySet& b, const WrappingProfile& w);

/// The unique move simple labeling the configuration-space edge from B to
/// B' (advancing some subset of B by one step each), or nullopt when no
/// such edge exists. Throws "mismatched-n" / "size-mismatch" on malformed
/// input. For B = B' this is the discrete partition.
std::optional<NoncrossingPartition> move_simple_between(const BoundarySet& b,
                                                        const BoundarySet& b2);

/// The move simple advancing exactly the members of `advance` at B:
/// non-singleton blocks are the maximal cyclic runs of `advance`, each
/// extended by its successor. nullopt when the advance is not a legal
/// configuration-space edge (a moved member would land on an unmoved one).
std::optional<NoncrossingPartition> move_simple_advancing(
    const BoundarySet& b, const std::vector<int>& advance);

/// The canonical factors of g read as a boundary word (delta_exp = infimum).
/// Every canonical factor of a boundary braid is a boundary partition for
/// the running set, so this can be fed back into wrapping_of_word.
BoundaryWord canonical_word(const GarsideElement& g);

/// All (B,.)-boundary partitions of NC_n, in canonical order.
std::vector<NoncrossingPartition> boundary_partitions(const BoundarySet& b);

}  // namespace braids
