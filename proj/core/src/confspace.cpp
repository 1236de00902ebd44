#include "braids/confspace.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "braids/error.hpp"

namespace braids {

namespace {

std::string tuple_key(const std::vector<int>& xs) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  os << ')';
  return os.str();
}

std::string set_key(std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  os << '}';
  return os.str();
}

// Chains of strictly nested subsets of the admissible masks, emitted as
// cells through `emit`. `admissible` must be closed under the chain
// extension used here (checked by the caller's criterion).
template <typename Emit>
void enumerate_mask_chains(const std::vector<int>& admissible, Emit emit) {
  std::vector<int> chain;
  auto rec = [&](auto&& self) -> void {
    if (!chain.empty()) emit(chain);
    int last = chain.empty() ? 0 : chain.back();
    for (int m : admissible) {
      if (m == last) continue;
      if ((m & last) != last) continue;  // need strict superset
      chain.push_back(m);
      self(self);
      chain.pop_back();
    }
  };
  rec(rec);
}

}  // namespace

CycleConfigComplex build_conf_cycle(int k, int n, bool labeled) {
  if (k < 1 || n < 1)
    throw DomainError("out-of-range", "build_conf_cycle needs k, n >= 1");
  CycleConfigComplex out{k, n, labeled, {}};
  if (k > n) return out;  // the empty complex

  // enumerate base vertices: k-tuples of distinct residues; sorted tuples
  // are canonical orbit representatives for the unlabeled quotient
  std::vector<std::vector<int>> bases;
  std::vector<int> tuple(k);
  auto rec = [&](auto&& self, int pos, int used_mask) -> void {
    if (pos == k) {
      bases.push_back(tuple);
      return;
    }
    int start = (!labeled && pos > 0) ? tuple[pos - 1] + 1 : 0;
    for (int r = start; r < n; ++r) {
      if (used_mask & (1 << r)) continue;
      tuple[pos] = r;
      self(self, pos + 1, used_mask | (1 << r));
    }
  };
  rec(rec, 0, 0);

  DeltaComplex& x = out.complex;
  auto key_of = [&](const std::vector<int>& t) {
    return labeled ? tuple_key(t) : set_key(t);
  };
  for (const auto& b : bases) x.add_vertex(key_of(b));

  for (const auto& base : bases) {
    // successor constraints: if coordinate a advances, any coordinate
    // sitting one step ahead must advance too (else the closed cell meets
    // the thick diagonal)
    std::vector<std::pair<int, int>> succ;  // (a, b): a in B => b in B
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (a != b && (base[a] + 1) % n == base[b]) succ.emplace_back(a, b);
    std::vector<int> admissible;
    for (int mask = 1; mask < (1 << k); ++mask) {
      bool ok = true;
      for (auto [a, b] : succ)
        if ((mask & (1 << a)) && !(mask & (1 << b))) {
          ok = false;
          break;
        }
      if (ok) admissible.push_back(mask);
    }
    enumerate_mask_chains(admissible, [&](const std::vector<int>& chain) {
      std::vector<int> cell{*x.vertex_index(key_of(base))};
      std::vector<int> sizes{0};
      for (int mask : chain) {
        std::vector<int> v = base;
        for (int a = 0; a < k; ++a)
          if (mask & (1 << a)) v[a] = (v[a] + 1) % n;
        cell.push_back(x.add_vertex(key_of(v)));
        sizes.push_back(__builtin_popcount(static_cast<unsigned>(mask)));
      }
      x.add_cell(cell);
      for (size_t s = 0; s + 1 < cell.size(); ++s)
        for (size_t t = s + 1; t < cell.size(); ++t)
          x.set_edge_norm(cell[s], cell[t], Rational(sizes[t] - sizes[s]));
    });
  }
  x.finalize();
  return out;
}

std::vector<ComponentSummary> components(const DeltaComplex& x) {
  const int nv = x.vertex_count();
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : x.cells(1)) parent[find(e[0])] = find(e[1]);

  std::map<int, ComponentSummary> comps;
  int dim = std::max(x.dimension(), 0);
  for (int v = 0; v < nv; ++v) {
    auto& c = comps[find(v)];
    if (c.cell_counts.empty()) c.cell_counts.assign(dim + 1, 0);
    ++c.cell_counts[0];
    const std::string& key = x.vertex_keys()[v];
    if (c.min_vertex_key.empty() || key < c.min_vertex_key)
      c.min_vertex_key = key;
  }
  for (int d = 1; d <= dim; ++d)
    for (const auto& cell : x.cells(d))
      ++comps[find(cell[0])].cell_counts[d];

  // boundary circles: edges contained in exactly one 2-cell
  std::map<std::vector<int>, int> edge_in_triangles;
  for (const auto& t : x.cells(2)) {
    ++edge_in_triangles[{t[0], t[1]}];
    ++edge_in_triangles[{t[1], t[2]}];
    ++edge_in_triangles[{t[0], t[2]}];
  }
  std::vector<int> bparent(nv);
  std::iota(bparent.begin(), bparent.end(), 0);
  auto bfind = [&](int v) {
    while (bparent[v] != v) v = bparent[v] = bparent[bparent[v]];
    return v;
  };
  std::map<int, std::set<int>> boundary_roots_per_comp;  // comp -> circle roots
  std::vector<std::vector<int>> boundary_edges;
  for (const auto& e : x.cells(1)) {
    auto it = edge_in_triangles.find(e);
    if (it != edge_in_triangles.end() && it->second == 1)
      boundary_edges.push_back(e);
  }
  for (const auto& e : boundary_edges) bparent[bfind(e[0])] = bfind(e[1]);
  for (const auto& e : boundary_edges)
    boundary_roots_per_comp[find(e[0])].insert(bfind(e[0]));

  std::vector<ComponentSummary> out;
  for (auto& [root, c] : comps) {
    while (c.cell_counts.size() > 1 && c.cell_counts.back() == 0)
      c.cell_counts.pop_back();
    c.top_dimension = static_cast<int>(c.cell_counts.size()) - 1;
    c.top_cells = c.cell_counts.back();
    c.euler = 0;
    for (size_t d = 0; d < c.cell_counts.size(); ++d)
      c.euler += (d % 2 ? -1 : 1) * c.cell_counts[d];
    if (c.top_dimension == 2) {
      auto it = boundary_roots_per_comp.find(root);
      c.boundary_circles = it == boundary_roots_per_comp.end()
                               ? 0
                               : static_cast<int>(it->second.size());
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.min_vertex_key < b.min_vertex_key;
  });
  return out;
}

bool in_dilated_column(int n, const std::vector<int>& x) {
  for (size_t i = 0; i + 1 < x.size(); ++i)
    if (x[i] >= x[i + 1]) return false;
  return x.empty() || x.back() < x.front() + n;
}

DilatedColumnBall dilated_column_ball(int k, int n, int level_lo,
                                      int level_hi) {
  if (k < 1 || n < 1 || k > n)
    throw DomainError("out-of-range", "dilated column needs 1 <= k <= n");
  if (level_lo > level_hi)
    throw DomainError("out-of-range", "empty level range");
  DilatedColumnBall ball{k, n, level_lo, level_hi, {}, {}};
  DeltaComplex& x = ball.complex;

  // vertices: strictly increasing integer tuples with gap < n and level in
  // range; level pins x_1 to a window of width n
  std::set<std::vector<int>> vertex_set;
  for (int level = level_lo; level <= level_hi; ++level) {
    int x1_max = level / k + 1;
    for (int x1 = x1_max - n - k; x1 <= x1_max; ++x1) {
      std::vector<int> v{x1};
      auto rec = [&](auto&& self, int sum) -> void {
        if (static_cast<int>(v.size()) == k) {
          if (sum == level && in_dilated_column(n, v)) vertex_set.insert(v);
          return;
        }
        for (int next = v.back() + 1; next < x1 + n; ++next) {
          v.push_back(next);
          self(self, sum + next);
          v.pop_back();
        }
      };
      rec(rec, x1);
    }
  }
  std::map<std::vector<int>, int> vid;
  for (const auto& v : vertex_set) {
    vid[v] = x.add_vertex(tuple_key(v));
    ball.vertex_coords.push_back(v);
  }

  for (const auto& base : vertex_set) {
    std::vector<int> admissible;
    for (int mask = 1; mask < (1 << k); ++mask) {
      std::vector<int> v = base;
      for (int a = 0; a < k; ++a)
        if (mask & (1 << a)) ++v[a];
      if (vid.count(v)) admissible.push_back(mask);
    }
    enumerate_mask_chains(admissible, [&](const std::vector<int>& chain) {
      std::vector<int> cell{vid.at(base)};
      std::vector<int> sizes{0};
      for (int mask : chain) {
        std::vector<int> v = base;
        for (int a = 0; a < k; ++a)
          if (mask & (1 << a)) ++v[a];
        cell.push_back(vid.at(v));
        sizes.push_back(__builtin_popcount(static_cast<unsigned>(mask)));
      }
      x.add_cell(cell);
      for (size_t s = 0; s + 1 < cell.size(); ++s)
        for (size_t t = s + 1; t < cell.size(); ++t)
          x.set_edge_norm(cell[s], cell[t], Rational(sizes[t] - sizes[s]));
    });
  }
  x.finalize();
  return ball;
}

double column_distance(int k, int n, const std::vector<int>& x,
                       const std::vector<int>& y) {
  if (static_cast<int>(x.size()) != k || static_cast<int>(y.size()) != k)
    throw DomainError("mismatched-n", "points must have k coordinates");
  if (!in_dilated_column(n, x) || !in_dilated_column(n, y))
    throw DomainError("out-of-range", "point outside the dilated column");
  double total = 0;
  for (int i = 0; i < k; ++i) {
    double d = x[i] - y[i];
    total += d * d;
  }
  return std::sqrt(total);
}

std::vector<int> ordinary_column_id(const DilatedColumnBall& ball,
                                    const std::vector<int>& top_cell) {
  const int k = ball.k;
  if (static_cast<int>(top_cell.size()) != k + 1)
    throw DomainError("out-of-range", "need a top cell of the ball");
  const auto& base = ball.vertex_coords[top_cell[0]];
  // advance order: coordinate a first advances at step m(a)
  std::vector<int> first_advance(k, 0);
  for (int step = 1; step <= k; ++step) {
    const auto& prev = ball.vertex_coords[top_cell[step - 1]];
    const auto& cur = ball.vertex_coords[top_cell[step]];
    for (int a = 0; a < k; ++a)
      if (cur[a] != prev[a] && first_advance[a] == 0) first_advance[a] = step;
  }
  // interior point along the cell: coordinate a exceeds base[a] by
  // c_a = 2^{1-m(a)} - 2^{-k}, so c dominates exactly by advance order
  std::vector<int> id;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      id.push_back(base[i] - base[j] -
                   (first_advance[i] < first_advance[j] ? 0 : 1));
  return id;
}

std::string reduce_mod_n(const std::vector<int>& coords, int n) {
  std::vector<int> red;
  red.reserve(coords.size());
  for (int c : coords) red.push_back(((c % n) + n) % n);
  return tuple_key(red);
}

}  // namespace braids
