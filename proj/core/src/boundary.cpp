#include "braids/boundary.hpp"

#include <algorithm>
#include <set>

#include "braids/error.hpp"

namespace braids {

BoundarySet::BoundarySet(int n, std::vector<int> members)
    : n_(n), members_(std::move(members)) {
  if (n < 1) throw DomainError("out-of-range", "boundary set needs n >= 1");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  for (int b : members_)
    if (b < 1 || b > n)
      throw DomainError("out-of-range", "boundary members must lie in [1, n]");
}

bool BoundarySet::contains(int b) const {
  return std::binary_search(members_.begin(), members_.end(), b);
}

BoundarySet BoundarySet::shifted(int s) const {
  std::vector<int> shifted;
  shifted.reserve(members_.size());
  for (int b : members_) shifted.push_back(mod_index(b, s, n_));
  return BoundarySet(n_, std::move(shifted));
}

std::optional<BoundaryStep> boundary_step(const NoncrossingPartition& pi,
                                          const BoundarySet& b) {
  if (pi.n() != b.n()) throw DomainError("mismatched-n", "boundary_step");
  std::map<int, int> bits;
  std::vector<int> image;
  image.reserve(b.size());
  for (int m : b.members()) {
    if (pi.is_singleton(m)) {
      bits[m] = 0;
      image.push_back(m);
    } else if (pi.same_block(m, mod_index(m, 1, pi.n()))) {
      bits[m] = 1;
      image.push_back(mod_index(m, 1, pi.n()));
    } else {
      return std::nullopt;
    }
  }
  return BoundaryStep{BoundarySet(b.n(), std::move(image)), std::move(bits)};
}

bool is_boundary_partition(const NoncrossingPartition& pi,
                           const BoundarySet& b) {
  return boundary_step(pi, b).has_value();
}

std::pair<WrappingProfile, BoundarySet> wrapping_of_word(
    const BoundaryWord& w, const BoundarySet& b) {
  if (w.n != b.n()) throw DomainError("mismatched-n", "wrapping_of_word");
  // strand state: original member -> (current position, accumulated wraps)
  std::vector<int> pos = b.members();
  std::map<int, int> wraps;
  for (size_t i = 0; i < pos.size(); ++i) {
    wraps[pos[i]] = w.delta_exp;
    pos[i] = mod_index(pos[i], w.delta_exp, w.n);
  }
  BoundarySet cur = b.shifted(w.delta_exp);
  const auto& members = b.members();
  for (size_t fi = 0; fi < w.factors.size(); ++fi) {
    auto step = boundary_step(w.factors[fi], cur);
    if (!step) {
      int offender = 0;
      for (int m : cur.members())
        if (!w.factors[fi].is_singleton(m) &&
            !w.factors[fi].same_block(m, mod_index(m, 1, w.n))) {
          offender = m;
          break;
        }
      throw DomainError("factor-not-boundary",
                        "factor " + std::to_string(fi) + " is not a boundary partition (strand at " +
                            std::to_string(offender) + ")");
    }
    for (size_t s = 0; s < pos.size(); ++s) {
      int bit = step->bits.at(pos[s]);
      wraps[members[s]] += bit;
      if (bit) pos[s] = mod_index(pos[s], 1, w.n);
    }
    cur = step->image;
  }
  return {WrappingProfile{b, std::move(wraps)}, cur};
}

NoncrossingPartition fix_part(const NoncrossingPartition& pi,
                              const BoundarySet& b) {
  if (pi.n() != b.n()) throw DomainError("mismatched-n", "fix_part");
  std::vector<std::vector<int>> blocks;
  for (const auto& block : pi.blocks()) {
    std::vector<int> kept;
    for (int v : block)
      if (!b.contains(v)) kept.push_back(v);
    if (!kept.empty()) blocks.push_back(std::move(kept));
  }
  for (int m : b.members()) blocks.push_back({m});
  return NoncrossingPartition(pi.n(), std::move(blocks));
}

NoncrossingPartition move_part(const NoncrossingPartition& pi,
                               const BoundarySet& b) {
  if (!is_boundary_partition(pi, b))
    throw DomainError("not-boundary",
                      "move_part needs a boundary partition for B");
  return complements(fix_part(pi, b), pi).right;
}

Decomposition decompose(const BoundaryWord& w, const BoundarySet& b) {
  if (w.n != b.n()) throw DomainError("mismatched-n", "decompose");
  wrapping_of_word(w, b);  // validates every factor; throws otherwise

  const auto top = NoncrossingPartition::maximum(w.n);
  GarsideElement move = GarsideElement::identity(w.n);
  BoundarySet cur = b;
  if (w.delta_exp >= 0) {
    for (int i = 0; i < w.delta_exp; ++i) {
      move = multiply(move, normal_form(move_part(top, cur)));
      cur = cur.shifted(1);
    }
  } else {
    for (int i = 0; i < -w.delta_exp; ++i) {
      BoundarySet prev = cur.shifted(-1);
      move = multiply(move, invert(normal_form(move_part(top, prev))));
      cur = prev;
    }
  }
  for (const auto& f : w.factors) {
    move = multiply(move, normal_form(move_part(f, cur)));
    cur = boundary_step(f, cur)->image;
  }

  GarsideElement full = normal_form(DualSimpleWord{w.n, w.factors});
  full = multiply(GarsideElement::delta_power(w.n, w.delta_exp), full);
  GarsideElement fix = multiply(full, invert(move));
  return {std::move(fix), std::move(move)};
}

bool validate_wrapping(const BoundarySet& b, const WrappingProfile& w) {
  if (w.base != b) throw DomainError("index-mismatch", "profile base differs");
  std::vector<int> ms = b.members();
  if (static_cast<int>(w.w.size()) != b.size())
    throw DomainError("index-mismatch", "profile must cover B exactly");
  for (int m : ms)
    if (!w.w.count(m))
      throw DomainError("index-mismatch", "profile missing member");
  if (b.size() <= 1) return true;
  for (size_t i = 0; i + 1 < ms.size(); ++i)
    if (ms[i] + w.w.at(ms[i]) >= ms[i + 1] + w.w.at(ms[i + 1])) return false;
  return ms.back() + w.w.at(ms.back()) < ms.front() + w.w.at(ms.front()) + b.n();
}

namespace {

// Nonnegative case of the realization: induct on the maximum weight,
// advancing every strand that still owes a step.
void realize_nonneg(const BoundarySet& b, std::map<int, int> w,
                    std::vector<NoncrossingPartition>& out) {
  const int n = b.n();
  while (true) {
    std::vector<int> moving;
    for (const auto& [m, wm] : w)
      if (wm >= 1) moving.push_back(m);
    if (moving.empty()) return;
    std::set<int> a(moving.begin(), moving.end());
    for (int m : moving) a.insert(mod_index(m, 1, n));
    out.push_back(NoncrossingPartition::irreducible(
        n, std::vector<int>(a.begin(), a.end())));
    std::map<int, int> next;
    for (const auto& [m, wm] : w) {
      if (wm >= 1)
        next[mod_index(m, 1, n)] = wm - 1;
      else
        next[m] = 0;
    }
    w = std::move(next);
  }
}

}  // namespace

BoundaryWord realize_wrapping(const BoundarySet& b, const WrappingProfile& w) {
  if (!validate_wrapping(b, w))
    throw DomainError("invalid-profile",
                      "wrapping numbers violate the cyclic chain");
  BoundaryWord word{b.n(), 0, {}};
  if (b.empty()) return word;
  int lowest = 0;
  for (const auto& [m, wm] : w.w) lowest = std::min(lowest, wm);
  word.delta_exp = lowest;  // 0 unless some weight is negative
  std::map<int, int> rest;
  for (const auto& [m, wm] : w.w)
    rest[mod_index(m, lowest, b.n())] = wm - lowest;
  realize_nonneg(b.shifted(lowest), std::move(rest), word.factors);
  return word;
}

std::optional<NoncrossingPartition> move_simple_advancing(
    const BoundarySet& b, const std::vector<int>& advance) {
  const int n = b.n();
  std::set<int> s(advance.begin(), advance.end());
  for (int m : s)
    if (!b.contains(m))
      throw DomainError("illegal-step", "advancing a non-member");
  // a moved member may not land on an unmoved one
  for (int m : s) {
    int succ = mod_index(m, 1, n);
    if (b.contains(succ) && !s.count(succ)) return std::nullopt;
  }
  if (static_cast<int>(s.size()) == n)
    return NoncrossingPartition::maximum(n);
  // non-singleton blocks: maximal cyclic runs of s, extended by one
  std::vector<std::vector<int>> blocks;
  std::set<int> used;
  for (int m : s) {
    if (used.count(m)) continue;
    if (s.count(mod_index(m, -1, n))) continue;  // not a run start
    std::vector<int> run;
    int cur = m;
    while (s.count(cur)) {
      run.push_back(cur);
      used.insert(cur);
      cur = mod_index(cur, 1, n);
    }
    run.push_back(cur);  // successor closing the run
    blocks.push_back(std::move(run));
  }
  std::set<int> covered;
  for (const auto& blk : blocks) covered.insert(blk.begin(), blk.end());
  for (int i = 1; i <= n; ++i)
    if (!covered.count(i)) blocks.push_back({i});
  return NoncrossingPartition(n, std::move(blocks));
}

std::optional<NoncrossingPartition> move_simple_between(
    const BoundarySet& b, const BoundarySet& b2) {
  if (b.n() != b2.n()) throw DomainError("mismatched-n", "move_simple_between");
  if (b.size() != b2.size())
    throw DomainError("size-mismatch", "boundary sets must have equal size");
  if (b == b2) return NoncrossingPartition::discrete(b.n());

  // find the advancing subset; unique for proper B by move uniqueness
  const auto& ms = b.members();
  const int k = b.size();
  std::optional<NoncrossingPartition> found;
  for (int mask = 1; mask < (1 << k); ++mask) {
    std::vector<int> advance;
    std::vector<int> image;
    for (int i = 0; i < k; ++i) {
      if (mask & (1 << i))
        advance.push_back(ms[i]);
      else
        image.push_back(ms[i]);
    }
    for (int m : advance) image.push_back(mod_index(m, 1, b.n()));
    std::sort(image.begin(), image.end());
    if (image != b2.members()) continue;
    auto pi = move_simple_advancing(b, advance);
    if (!pi) continue;
    if (found && *found != *pi)
      throw DomainError("internal", "move simple between sets not unique");
    found = pi;
  }
  return found;
}

BoundaryWord canonical_word(const GarsideElement& g) {
  return BoundaryWord{g.n(), g.infimum(), g.factors()};
}

std::vector<NoncrossingPartition> boundary_partitions(const BoundarySet& b) {
  std::vector<NoncrossingPartition> out;
  for (const auto& pi : enumerate_nc(b.n()))
    if (is_boundary_partition(pi, b)) out.push_back(pi);
  return out;
}

}  // namespace braids
