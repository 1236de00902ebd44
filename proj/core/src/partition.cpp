#include "braids/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "braids/error.hpp"

namespace braids {

int mod_index(int i, int s, int n) {
  int r = (i - 1 + s) % n;
  if (r < 0) r += n;
  return r + 1;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(int n) : n_(n), image_(n) {
  if (n < 1) throw DomainError("out-of-range", "permutation needs n >= 1");
  std::iota(image_.begin(), image_.end(), 1);
}

Permutation::Permutation(int n, std::vector<int> image)
    : n_(n), image_(std::move(image)) {
  if (n < 1 || static_cast<int>(image_.size()) != n)
    throw DomainError("not-a-permutation", "image length must equal n");
  std::vector<bool> seen(n, false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[v - 1])
      throw DomainError("not-a-permutation", "image is not a bijection of [n]");
    seen[v - 1] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(n_);
  for (int i = 1; i <= n_; ++i) inv[image_[i - 1] - 1] = i;
  return Permutation(n_, std::move(inv));
}

Permutation Permutation::then(const Permutation& rhs) const {
  if (n_ != rhs.n_) throw DomainError("mismatched-n", "permutation product");
  std::vector<int> img(n_);
  for (int i = 1; i <= n_; ++i) img[i - 1] = rhs.image(image(i));
  return Permutation(n_, std::move(img));
}

std::vector<std::vector<int>> Permutation::orbits() const {
  std::vector<bool> seen(n_, false);
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= n_; ++i) {
    if (seen[i - 1]) continue;
    std::vector<int> orbit;
    int j = i;
    do {
      seen[j - 1] = true;
      orbit.push_back(j);
      j = image(j);
    } while (j != i);
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;  // ordered by minimum since i runs upward
}

// ---------------------------------------------------------------------------
// NoncrossingPartition

namespace {

void canonicalize(std::vector<std::vector<int>>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

// Assumes canonical blocks partitioning [n]; fills block index per element.
std::vector<int> index_elements(int n,
                                const std::vector<std::vector<int>>& blocks) {
  std::vector<int> idx(n, -1);
  for (int bi = 0; bi < static_cast<int>(blocks.size()); ++bi)
    for (int v : blocks[bi]) idx[v - 1] = bi;
  return idx;
}

void check_partitions(int n, const std::vector<std::vector<int>>& blocks) {
  if (n < 1) throw DomainError("out-of-range", "partition needs n >= 1");
  std::vector<bool> seen(n, false);
  int total = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw DomainError("not-a-partition", "empty block");
    for (int v : b) {
      if (v < 1 || v > n || seen[v - 1])
        throw DomainError("not-a-partition",
                          "blocks must cover [n] exactly once");
      seen[v - 1] = true;
      ++total;
    }
  }
  if (total != n)
    throw DomainError("not-a-partition", "blocks do not cover [n]");
}

bool crossing_free(int n, const std::vector<int>& block_index) {
  // a < b < c < d with a,c in one block, b,d in another. Quartic scan with
  // early exits; plenty fast at n <= 14.
  for (int b = 1; b <= n; ++b) {
    for (int d = b + 1; d <= n; ++d) {
      if (block_index[b - 1] != block_index[d - 1]) continue;
      // b, d share a block; look for a < b < c < d in another shared block
      for (int a = 1; a < b; ++a) {
        if (block_index[a - 1] == block_index[b - 1]) continue;
        for (int c = b + 1; c < d; ++c)
          if (block_index[c - 1] == block_index[a - 1]) return false;
      }
    }
  }
  return true;
}

}  // namespace

NoncrossingPartition::NoncrossingPartition(int n,
                                           std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  check_partitions(n, blocks_);
  canonicalize(blocks_);
  block_index_ = index_elements(n, blocks_);
  if (!crossing_free(n_, block_index_))
    throw DomainError("crossing", "blocks have crossing convex hulls");
}

NoncrossingPartition NoncrossingPartition::discrete(int n) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(n);
  for (int i = 1; i <= n; ++i) blocks.push_back({i});
  return NoncrossingPartition(n, std::move(blocks));
}

NoncrossingPartition NoncrossingPartition::maximum(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  return NoncrossingPartition(n, {all});
}

NoncrossingPartition NoncrossingPartition::irreducible(
    int n, const std::vector<int>& a) {
  std::vector<std::vector<int>> blocks;
  std::set<int> in_a(a.begin(), a.end());
  if (in_a.size() >= 2)
    blocks.emplace_back(in_a.begin(), in_a.end());
  for (int i = 1; i <= n; ++i)
    if (in_a.size() < 2 || !in_a.count(i)) blocks.push_back({i});
  return NoncrossingPartition(n, std::move(blocks));
}

bool NoncrossingPartition::is_singleton(int i) const {
  return blocks_[block_index_[i - 1]].size() == 1;
}

bool NoncrossingPartition::same_block(int i, int j) const {
  return block_index_[i - 1] == block_index_[j - 1];
}

const std::vector<int>& NoncrossingPartition::block_of(int i) const {
  return blocks_[block_index_[i - 1]];
}

std::strong_ordering NoncrossingPartition::operator<=>(
    const NoncrossingPartition& rhs) const {
  if (auto c = n_ <=> rhs.n_; c != 0) return c;
  if (auto c = rank() <=> rhs.rank(); c != 0) return c;
  return blocks_ <=> rhs.blocks_;
}

bool is_noncrossing(int n, const std::vector<std::vector<int>>& blocks) {
  check_partitions(n, blocks);
  auto copy = blocks;
  canonicalize(copy);
  return crossing_free(n, index_elements(n, copy));
}

std::vector<NoncrossingPartition> enumerate_nc(int n) {
  if (n < 1 || n > 14)
    throw DomainError("out-of-range", "enumerate_nc supports 1 <= n <= 14");

  // Assign elements 1..n to blocks in order, pruning crossings incrementally:
  // appending i to a block with maximum m crosses iff some j in (m, i) lies
  // in a block reaching below m.
  std::vector<NoncrossingPartition> out;
  std::vector<std::vector<int>> blocks;
  std::vector<int> owner(n + 1, -1);

  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      out.emplace_back(n, blocks);
      return;
    }
    for (int bi = 0; bi < static_cast<int>(blocks.size()); ++bi) {
      int m = blocks[bi].back();
      bool crosses = false;
      for (int j = m + 1; j < i && !crosses; ++j)
        if (owner[j] != bi && blocks[owner[j]].front() < m) crosses = true;
      if (crosses) continue;
      blocks[bi].push_back(i);
      owner[i] = bi;
      self(self, i + 1);
      blocks[bi].pop_back();
    }
    blocks.push_back({i});
    owner[i] = static_cast<int>(blocks.size()) - 1;
    self(self, i + 1);
    blocks.pop_back();
  };
  rec(rec, 1);

  std::sort(out.begin(), out.end());
  return out;
}

bool leq(const NoncrossingPartition& pi, const NoncrossingPartition& rho) {
  if (pi.n() != rho.n()) throw DomainError("mismatched-n", "leq");
  for (const auto& block : pi.blocks()) {
    for (size_t i = 1; i < block.size(); ++i)
      if (!rho.same_block(block[0], block[i])) return false;
  }
  return true;
}

NoncrossingPartition meet(const NoncrossingPartition& pi,
                          const NoncrossingPartition& rho) {
  if (pi.n() != rho.n()) throw DomainError("mismatched-n", "meet");
  std::map<std::pair<const void*, const void*>, std::vector<int>> cells;
  for (int i = 1; i <= pi.n(); ++i)
    cells[{&pi.block_of(i), &rho.block_of(i)}].push_back(i);
  std::vector<std::vector<int>> blocks;
  blocks.reserve(cells.size());
  for (auto& [key, cell] : cells) blocks.push_back(std::move(cell));
  return NoncrossingPartition(pi.n(), std::move(blocks));
}

NoncrossingPartition join(const NoncrossingPartition& pi,
                          const NoncrossingPartition& rho) {
  if (pi.n() != rho.n()) throw DomainError("mismatched-n", "join");
  const int n = pi.n();

  // Union-find join in the full partition lattice.
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto* p : {&pi, &rho})
    for (const auto& block : p->blocks())
      for (size_t i = 1; i < block.size(); ++i) unite(block[0], block[i]);

  std::map<int, std::vector<int>> groups;
  for (int i = 1; i <= n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> blocks;
  for (auto& [root, g] : groups) blocks.push_back(std::move(g));

  // Crossing closure: merge any two crossing blocks until stable. Any
  // noncrossing coarsening of both inputs must also merge them, so the
  // stable result is the NC join.
  auto crosses = [](const std::vector<int>& x, const std::vector<int>& y) {
    for (size_t i = 0; i + 1 < x.size(); ++i)
      for (size_t j = i + 1; j < x.size(); ++j)
        for (int v : y)
          if (x[i] < v && v < x[j])
            for (int w : y)
              if (w < x[i] || w > x[j]) return true;
    return false;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < blocks.size() && !changed; ++i)
      for (size_t j = i + 1; j < blocks.size() && !changed; ++j)
        if (crosses(blocks[i], blocks[j]) || crosses(blocks[j], blocks[i])) {
          blocks[i].insert(blocks[i].end(), blocks[j].begin(),
                           blocks[j].end());
          std::sort(blocks[i].begin(), blocks[i].end());
          blocks.erase(blocks.begin() + j);
          changed = true;
        }
  }
  return NoncrossingPartition(n, std::move(blocks));
}

Permutation perm_of(const NoncrossingPartition& pi) {
  std::vector<int> img(pi.n());
  for (const auto& block : pi.blocks())
    for (size_t i = 0; i < block.size(); ++i)
      img[block[i] - 1] = block[(i + 1) % block.size()];
  return Permutation(pi.n(), std::move(img));
}

std::optional<NoncrossingPartition> partition_of_perm(
    const Permutation& sigma) {
  auto orbits = sigma.orbits();
  // sigma must be the increasing cycle on each orbit
  for (const auto& orbit : orbits)
    for (size_t i = 0; i < orbit.size(); ++i)
      if (sigma.image(orbit[i]) != orbit[(i + 1) % orbit.size()])
        return std::nullopt;
  if (!is_noncrossing(sigma.n(), orbits)) return std::nullopt;
  return NoncrossingPartition(sigma.n(), std::move(orbits));
}

ComplementPair complements(const NoncrossingPartition& pi,
                           const NoncrossingPartition& rho) {
  if (pi.n() != rho.n()) throw DomainError("mismatched-n", "complements");
  if (!leq(pi, rho)) throw DomainError("not-below", "complements needs pi <= rho");
  Permutation sp = perm_of(pi);
  Permutation sr = perm_of(rho);
  auto right = partition_of_perm(sp.inverse().then(sr));
  auto left = partition_of_perm(sr.then(sp.inverse()));
  if (!right || !left)
    throw DomainError("internal", "complement is not a noncrossing permutation");
  int want = rho.rank() - pi.rank();
  if (left->rank() != want || right->rank() != want)
    throw DomainError("internal", "complement rank additivity failed");
  return {std::move(*left), std::move(*right)};
}

NoncrossingPartition kreweras(const NoncrossingPartition& pi) {
  return complements(pi, NoncrossingPartition::maximum(pi.n())).right;
}

NoncrossingPartition rotate(const NoncrossingPartition& pi, int s) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(pi.block_count());
  for (const auto& block : pi.blocks()) {
    std::vector<int> shifted;
    shifted.reserve(block.size());
    for (int v : block) shifted.push_back(mod_index(v, s, pi.n()));
    blocks.push_back(std::move(shifted));
  }
  return NoncrossingPartition(pi.n(), std::move(blocks));
}

}  // namespace braids
