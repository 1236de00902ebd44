#include "braids/orthoscheme.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "braids/error.hpp"

namespace braids {

const std::vector<std::vector<int>> DeltaComplex::kNoCells{};

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)),
                    std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw DomainError("malformed-rational", s);
  }
}

int DeltaComplex::add_vertex(const std::string& key) {
  auto it = vertex_index_.find(key);
  if (it != vertex_index_.end()) return it->second;
  int idx = static_cast<int>(vertex_keys_.size());
  vertex_keys_.push_back(key);
  vertex_index_.emplace(key, idx);
  return idx;
}

void DeltaComplex::add_cell(const std::vector<int>& cell) {
  if (cell.size() < 2) return;
  int d = static_cast<int>(cell.size()) - 1;
  if (static_cast<int>(cells_.size()) < d) cells_.resize(d);
  cells_[d - 1].push_back(cell);
  if (d == 1) return;
  std::vector<int> face;
  face.reserve(cell.size() - 1);
  for (size_t skip = 0; skip < cell.size(); ++skip) {
    face.clear();
    for (size_t i = 0; i < cell.size(); ++i)
      if (i != skip) face.push_back(cell[i]);
    add_cell(face);
  }
}

void DeltaComplex::set_edge_norm(int a, int b, const Rational& norm) {
  auto [it, inserted] = norms_.emplace(std::make_pair(a, b), norm);
  if (!inserted && it->second != norm)
    throw DomainError("internal", "conflicting norms on a repeated edge");
}

std::optional<int> DeltaComplex::vertex_index(const std::string& key) const {
  auto it = vertex_index_.find(key);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

int DeltaComplex::dimension() const {
  for (int d = static_cast<int>(cells_.size()); d >= 1; --d)
    if (!cells_[d - 1].empty()) return d;
  return vertex_keys_.empty() ? -1 : 0;
}

const std::vector<std::vector<int>>& DeltaComplex::cells(int d) const {
  if (d < 1 || d > static_cast<int>(cells_.size())) return kNoCells;
  return cells_[d - 1];
}

bool DeltaComplex::has_cell(const std::vector<int>& cell) const {
  int d = static_cast<int>(cell.size()) - 1;
  const auto& list = cells(d);
  return std::binary_search(list.begin(), list.end(), cell);
}

std::optional<Rational> DeltaComplex::edge_norm(int a, int b) const {
  auto it = norms_.find({a, b});
  if (it == norms_.end()) return std::nullopt;
  return it->second;
}

void DeltaComplex::finalize() {
  for (auto& list : cells_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

std::vector<ComplexViolation> check_complex(const DeltaComplex& x) {
  std::vector<ComplexViolation> out;
  for (int d = 1; d <= x.dimension(); ++d) {
    for (const auto& cell : x.cells(d)) {
      for (int v : cell)
        if (v < 0 || v >= x.vertex_count())
          out.push_back({"missing-face", cell, "vertex index out of range"});
      if (d >= 2) {
        std::vector<int> face;
        for (size_t skip = 0; skip < cell.size(); ++skip) {
          face.clear();
          for (size_t i = 0; i < cell.size(); ++i)
            if (i != skip) face.push_back(cell[i]);
          if (!x.has_cell(face))
            out.push_back({"missing-face", cell,
                           "facet missing at position " + std::to_string(skip)});
        }
      }
    }
  }
  for (const auto& e : x.cells(1)) {
    auto norm = x.edge_norm(e[0], e[1]);
    if (!norm)
      out.push_back({"missing-norm", e, "edge carries no squared length"});
    else if (*norm <= 0)
      out.push_back({"nonpositive-norm", e, rational_to_string(*norm)});
  }
  for (const auto& t : x.cells(2)) {
    auto ab = x.edge_norm(t[0], t[1]);
    auto bc = x.edge_norm(t[1], t[2]);
    auto ac = x.edge_norm(t[0], t[2]);
    if (!ab || !bc || !ac) continue;  // reported above
    if (*ab + *bc != *ac)
      out.push_back({"additivity", t,
                     rational_to_string(*ab) + " + " + rational_to_string(*bc) +
                         " != " + rational_to_string(*ac)});
  }
  return out;
}

namespace {

std::string subset_key(const std::vector<int>& s) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << '}';
  return os.str();
}

}  // namespace

DeltaComplex subdivide_cube(int k) {
  if (k < 1 || k > 10)
    throw DomainError("out-of-range", "subdivide_cube supports 1 <= k <= 10");
  DeltaComplex x;
  // vertices: subsets of [k] ordered by (size, lexicographic)
  std::vector<std::vector<int>> subsets;
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> s;
    for (int i = 1; i <= k; ++i)
      if (mask & (1 << (i - 1))) s.push_back(i);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<int> idx;
  for (const auto& s : subsets) idx.push_back(x.add_vertex(subset_key(s)));

  // cells: chains under strict inclusion; norms: size differences
  auto mask_of = [&](const std::vector<int>& s) {
    int m = 0;
    for (int v : s) m |= 1 << (v - 1);
    return m;
  };
  std::vector<int> masks;
  for (const auto& s : subsets) masks.push_back(mask_of(s));

  std::vector<int> chain;
  auto rec = [&](auto&& self, int from) -> void {
    if (chain.size() >= 2) {
      std::vector<int> cell;
      for (int c : chain) cell.push_back(idx[c]);
      x.add_cell(cell);
    }
    for (int next = 0; next < static_cast<int>(subsets.size()); ++next) {
      if (next == from) continue;
      if ((masks[from] & masks[next]) != masks[from] ||
          masks[from] == masks[next])
        continue;
      chain.push_back(next);
      self(self, next);
      chain.pop_back();
    }
  };
  for (int start = 0; start < static_cast<int>(subsets.size()); ++start) {
    chain = {start};
    rec(rec, start);
  }
  for (size_t a = 0; a < subsets.size(); ++a)
    for (size_t b = 0; b < subsets.size(); ++b)
      if (a != b && (masks[a] & masks[b]) == masks[a])
        x.set_edge_norm(idx[a], idx[b],
                        Rational(static_cast<long long>(subsets[b].size()) -
                                 static_cast<long long>(subsets[a].size())));
  x.finalize();
  return x;
}

DeltaComplex simplex_complex(int k, const std::vector<Rational>& basis_norms) {
  if (k < 0) throw DomainError("out-of-range", "simplex dimension");
  std::vector<Rational> norms = basis_norms;
  if (norms.empty()) norms.assign(k, Rational(1));
  if (static_cast<int>(norms.size()) != k)
    throw DomainError("out-of-range", "need k basis norms");
  DeltaComplex x;
  for (int i = 0; i <= k; ++i) x.add_vertex("p" + std::to_string(i));
  std::vector<int> all(k + 1);
  for (int i = 0; i <= k; ++i) all[i] = i;
  // every subtuple of [p0..pk] is a cell
  for (int mask = 0; mask < (1 << (k + 1)); ++mask) {
    std::vector<int> cell;
    for (int i = 0; i <= k; ++i)
      if (mask & (1 << i)) cell.push_back(i);
    if (cell.size() >= 2) x.add_cell(cell);
  }
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      Rational total(0);
      for (int l = i + 1; l <= j; ++l) total += norms[l - 1];
      x.set_edge_norm(i, j, total);
    }
  x.finalize();
  return x;
}

DeltaComplex product_complex(const DeltaComplex& x, const DeltaComplex& y) {
  DeltaComplex prod;
  auto pair_key = [&](int u, int v) {
    return "(" + x.vertex_keys()[u] + "|" + y.vertex_keys()[v] + ")";
  };
  std::map<std::pair<int, int>, int> pidx;
  for (int u = 0; u < x.vertex_count(); ++u)
    for (int v = 0; v < y.vertex_count(); ++v)
      pidx[{u, v}] = prod.add_vertex(pair_key(u, v));

  // Cells with minimal support pair (sigma, tau): monotone chains through
  // the position grid from (0,0) to (k,l) whose steps advance each factor by
  // at most one, so every row and column is visited. Norms are recorded for
  // every chain pair; they add across the factors, a degenerate projection
  // contributing zero.
  auto norm_step = [](const DeltaComplex& c, int a, int b) {
    if (a == b) return Rational(0);
    auto norm = c.edge_norm(a, b);
    if (!norm) throw DomainError("internal", "factor edge lacks a norm");
    return *norm;
  };
  auto emit_for = [&](const std::vector<int>& sigma,
                      const std::vector<int>& tau) {
    int k = static_cast<int>(sigma.size()) - 1;
    int l = static_cast<int>(tau.size()) - 1;
    std::vector<std::pair<int, int>> chain{{0, 0}};
    auto rec = [&](auto&& self) -> void {
      auto [i, j] = chain.back();
      if (i == k && j == l) {
        std::vector<int> cell;
        for (auto [a, b] : chain) cell.push_back(pidx.at({sigma[a], tau[b]}));
        if (cell.size() >= 2) prod.add_cell(cell);
        for (size_t s = 0; s + 1 < chain.size(); ++s)
          for (size_t t = s + 1; t < chain.size(); ++t) {
            auto [ia, ja] = chain[s];
            auto [ib, jb] = chain[t];
            prod.set_edge_norm(cell[s], cell[t],
                               norm_step(x, sigma[ia], sigma[ib]) +
                                   norm_step(y, tau[ja], tau[jb]));
          }
        return;
      }
      for (int di = 0; di <= 1 && i + di <= k; ++di)
        for (int dj = 0; dj <= 1 && j + dj <= l; ++dj) {
          if (di == 0 && dj == 0) continue;
          chain.emplace_back(i + di, j + dj);
          self(self);
          chain.pop_back();
        }
    };
    rec(rec);
  };

  // dimension-0 "cells" are single vertices
  std::vector<std::vector<int>> xverts, yverts;
  for (int u = 0; u < x.vertex_count(); ++u) xverts.push_back({u});
  for (int v = 0; v < y.vertex_count(); ++v) yverts.push_back({v});
  auto cells_of = [](const DeltaComplex& c,
                     const std::vector<std::vector<int>>& verts, int d)
      -> const std::vector<std::vector<int>>& {
    return d == 0 ? verts : c.cells(d);
  };

  for (int dx = 0; dx <= std::max(0, x.dimension()); ++dx)
    for (int dy = 0; dy <= std::max(0, y.dimension()); ++dy) {
      if (dx == 0 && dy == 0) continue;
      for (const auto& sigma : cells_of(x, xverts, dx))
        for (const auto& tau : cells_of(y, yverts, dy)) emit_for(sigma, tau);
    }

  prod.finalize();
  return prod;
}

OrthoschemeEmbedding embed_orthoscheme(const OrderedSimplexCoords& c) {
  if (static_cast<int>(c.basis_norms.size()) != c.k)
    throw DomainError("out-of-range", "need k basis norms");
  for (const auto& r : c.basis_norms)
    if (r <= 0) throw DomainError("out-of-range", "basis norms must be positive");
  OrthoschemeEmbedding e;
  e.coords.assign(c.k + 1, std::vector<double>(c.k, 0.0));
  for (int j = 1; j <= c.k; ++j) {
    e.coords[j] = e.coords[j - 1];
    e.coords[j][j - 1] = std::sqrt(boost::rational_cast<double>(c.basis_norms[j - 1]));
  }
  e.sq_dist.assign(c.k + 1, std::vector<Rational>(c.k + 1, Rational(0)));
  for (int i = 0; i <= c.k; ++i)
    for (int j = i + 1; j <= c.k; ++j) {
      Rational total(0);
      for (int l = i + 1; l <= j; ++l) total += c.basis_norms[l - 1];
      e.sq_dist[i][j] = e.sq_dist[j][i] = total;
    }
  return e;
}

OrderedSimplexCoords facet_coords(const OrderedSimplexCoords& c, int i) {
  if (i < 0 || i > c.k) throw DomainError("out-of-range", "facet index");
  OrderedSimplexCoords out{c.k - 1, {}};
  if (i == 0) {
    out.basis_norms.assign(c.basis_norms.begin() + 1, c.basis_norms.end());
  } else if (i == c.k) {
    out.basis_norms.assign(c.basis_norms.begin(), c.basis_norms.end() - 1);
  } else {
    out.basis_norms.assign(c.basis_norms.begin(), c.basis_norms.begin() + i - 1);
    out.basis_norms.push_back(c.basis_norms[i - 1] + c.basis_norms[i]);
    out.basis_norms.insert(out.basis_norms.end(),
                           c.basis_norms.begin() + i + 1, c.basis_norms.end());
  }
  return out;
}

}  // namespace braids
