#pragma once

#include <compare>
#include <optional>
#include <vector>

namespace braids {

class NoncrossingPartition;

/// A permutation of [n] = {1,...,n} acting on the right: i * sigma = image(i).
/// Products compose left to right, so (i * (s*t)) = ((i*s) * t).
class Permutation {
public:
  explicit Permutation(int n);  // identity
  Permutation(int n, std::vector<int> image);

  int n() const { return n_; }
  int image(int i) const { return image_[i - 1]; }

  Permutation inverse() const;
  /// apply *this first, then rhs
  Permutation then(const Permutation& rhs) const;

  /// Orbits as sorted blocks, ordered by minimum element.
  std::vector<std::vector<int>> orbits() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

private:
  int n_;
  std::vector<int> image_;  // image_[i-1] = i * sigma
};

/// A noncrossing partition of [n]. Blocks are stored canonically: each block
/// ascending, blocks ordered by their minimum. Equality is structural and, by
/// canonicity, coincides with equality of partitions.
class NoncrossingPartition {
public:
  /// Canonicalizes and validates: blocks must partition [n] and be
  /// noncrossing. Throws DomainError("not-a-partition") or
  /// DomainError("crossing") otherwise.
  NoncrossingPartition(int n, std::vector<std::vector<int>> blocks);

  static NoncrossingPartition discrete(int n);
  static NoncrossingPartition maximum(int n);
  /// The irreducible partition with single non-singleton block A (|A| >= 2),
  /// all other elements singletons. For |A| <= 1 this is the discrete one.
  static NoncrossingPartition irreducible(int n, const std::vector<int>& a);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int rank() const { return n_ - block_count(); }

  bool is_discrete() const { return block_count() == n_; }
  bool is_maximum() const { return block_count() == 1; }
  bool is_singleton(int i) const;
  bool same_block(int i, int j) const;
  const std::vector<int>& block_of(int i) const;

  bool operator==(const NoncrossingPartition&) const = default;
  /// Canonical total order: by rank, then lexicographic on the block list.
  std::strong_ordering operator<=>(const NoncrossingPartition& rhs) const;

private:
  int n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_index_;  // block_index_[i-1] = index into blocks_
};

/// True iff no a<b<c<d exists with a,c in one block and b,d in another.
/// Requires that `blocks` partitions [n]; throws "not-a-partition" otherwise.
bool is_noncrossing(int n, const std::vector<std::vector<int>>& blocks);

/// All of NC_n in the canonical total order (rank, then lexicographic).
/// Supported for 1 <= n <= 14; throws "out-of-range" beyond that.
std::vector<NoncrossingPartition> enumerate_nc(int n);

/// Refinement order: every block of pi contained in some block of rho.
bool leq(const NoncrossingPartition& pi, const NoncrossingPartition& rho);

/// Lattice meet: blockwise common refinement.
NoncrossingPartition meet(const NoncrossingPartition& pi,
                          const NoncrossingPartition& rho);

/// Lattice join: partition-join followed by merging crossing blocks until
/// noncrossing.
NoncrossingPartition join(const NoncrossingPartition& pi,
                          const NoncrossingPartition& rho);

/// The noncrossing permutation sigma_pi: each block contributes its
/// increasing cycle.
Permutation perm_of(const NoncrossingPartition& pi);

/// Inverse of perm_of where defined: the partition whose blocks are the
/// orbits of sigma, provided the orbits are noncrossing and sigma restricted
/// to each orbit is the increasing cycle. nullopt otherwise.
std::optional<NoncrossingPartition> partition_of_perm(const Permutation& sigma);

/// The unique pair (left, right) with sigma_left * sigma_pi = sigma_pi *
/// sigma_right = sigma_rho, for pi <= rho. Both components have rank
/// rk(rho) - rk(pi). Throws "not-below" when pi is not <= rho.
struct ComplementPair {
  NoncrossingPartition left;
  NoncrossingPartition right;
};
ComplementPair complements(const NoncrossingPartition& pi,
                           const NoncrossingPartition& rho);

/// Kreweras complement: complements(pi, maximum).right.
NoncrossingPartition kreweras(const NoncrossingPartition& pi);

/// Shift every element by s (mod n, residues kept in [1, n]). A poset
/// automorphism of NC_n; conjugation by delta^s at the braid level.
NoncrossingPartition rotate(const NoncrossingPartition& pi, int s);

/// i + s reduced into [1, n].
int mod_index(int i, int s, int n);

}  // namespace braids
