#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braids/partition.hpp"

namespace braids {

/// A word in the dual generators: a finite sequence of noncrossing
/// partitions (discrete factors are allowed on input and ignored).
struct DualSimpleWord {
  int n;
  std::vector<NoncrossingPartition> factors;
};

/// Canonical form of an element of the n-strand braid group under the dual
/// presentation: a maximal delta-power prefix (the infimum) followed by a
/// left-greedy sequence of proper simples. Two elements are equal in the
/// group iff their canonical forms are structurally equal.
class GarsideElement {
public:
  static GarsideElement identity(int n);
  /// delta^p
  static GarsideElement delta_power(int n, int p);

  int n() const { return n_; }
  int infimum() const { return inf_; }
  const std::vector<NoncrossingPartition>& factors() const { return factors_; }
  int canonical_length() const { return static_cast<int>(factors_.size()); }
  bool is_identity() const { return inf_ == 0 && factors_.empty(); }

  /// infimum * (n-1) + sum of factor ranks; the image under the
  /// abelianization map, which sends a simple to its rank.
  int abelianization() const;

  /// The underlying permutation (delta-power included).
  Permutation permutation() const;

  /// "p|" followed by the factors' canonical block lists; a stable map key.
  std::string key() const;

  bool operator==(const GarsideElement&) const = default;
  auto operator<=>(const GarsideElement&) const = default;

private:
  friend GarsideElement normal_form(const DualSimpleWord&);
  friend GarsideElement multiply(const GarsideElement&, const GarsideElement&);
  friend GarsideElement invert(const GarsideElement&);

  GarsideElement(int n, int inf, std::vector<NoncrossingPartition> factors)
      : n_(n), inf_(inf), factors_(std::move(factors)) {}

  int n_;
  int inf_;
  std::vector<NoncrossingPartition> factors_;
};

/// delta_pi1 * delta_pi2 when the product is again a simple, i.e. when the
/// join has additive rank and pi2 is the right complement of pi1 in it;
/// nullopt otherwise.
std::optional<NoncrossingPartition> simple_product(
    const NoncrossingPartition& pi1, const NoncrossingPartition& pi2);

/// Left-greedy canonical form of the product of the word's factors.
GarsideElement normal_form(const DualSimpleWord& w);

/// Canonical form of a single simple.
GarsideElement normal_form(const NoncrossingPartition& pi);

GarsideElement multiply(const GarsideElement& g, const GarsideElement& h);

GarsideElement invert(const GarsideElement& g);

/// Prefix order: g <= h iff g^{-1} h is positive (infimum >= 0). Restricted
/// to simples this is the refinement order on NC_n.
bool leq_prefix(const GarsideElement& g, const GarsideElement& h);

int abelianize(const GarsideElement& g);

}  // namespace braids
