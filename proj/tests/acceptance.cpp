// Acceptance suite: runs every criterion at its stated bound and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "braids/boundary.hpp"
#include "braids/braidcplx.hpp"
#include "braids/confspace.hpp"
#include "braids/garside.hpp"
#include "braids/orthoscheme.hpp"
#include "braids/partition.hpp"

namespace {

using namespace braids;

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // 0 = no limit
  std::function<void(std::vector<std::string>&)> body;
};

long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void require(std::vector<std::string>& fails, bool ok, const std::string& what) {
  if (!ok) fails.push_back(what);
}

// brute-force oracle: all set partitions via restricted growth strings
long long count_noncrossing_brute(int n) {
  long long count = 0;
  std::vector<int> rgs(n, 0);
  auto rec = [&](auto&& self, int i, int max_used) -> void {
    if (i == n) {
      std::vector<std::vector<int>> blocks(max_used + 1);
      for (int j = 0; j < n; ++j) blocks[rgs[j]].push_back(j + 1);
      if (is_noncrossing(n, blocks)) ++count;
      return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
      rgs[i] = b;
      self(self, i + 1, std::max(max_used, b));
    }
  };
  rec(rec, 0, -1);
  return count;
}

void criterion_catalan(std::vector<std::string>& fails) {
  const long long want[] = {0, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) {
    long long fast = static_cast<long long>(enumerate_nc(n).size());
    long long brute = count_noncrossing_brute(n);
    require(fails, fast == want[n], "enumerate_nc(" + std::to_string(n) + ") != " + std::to_string(want[n]));
    require(fails, brute == want[n], "brute count disagrees at n=" + std::to_string(n));
  }
}

void criterion_fix_move(std::vector<std::string>& fails) {
  auto pi = NoncrossingPartition(9, {{1, 2, 3, 4, 5, 6}, {7, 8, 9}});
  BoundarySet b(9, {2, 4, 5, 7});
  auto fixed = fix_part(pi, b);
  auto moved = move_part(pi, b);
  require(fails, fixed == NoncrossingPartition(9, {{1, 3, 6}, {8, 9}, {2}, {4}, {5}, {7}}),
          "Fix^B differs from (1 3 6)(8 9)");
  require(fails, moved == NoncrossingPartition(9, {{2, 3}, {4, 5, 6}, {7, 8}, {1}, {9}}),
          "Move^B differs from (2 3)(4 5 6)(7 8)");
}

void criterion_rotations(std::vector<std::string>& fails) {
  auto a = NoncrossingPartition::irreducible(6, {1, 5, 6});
  auto b = NoncrossingPartition::irreducible(6, {2, 3, 4, 5});
  auto prod = simple_product(a, b);
  require(fails, prod.has_value() && prod->is_maximum(),
          "(1 5 6)(2 3 4 5) is not the maximum in NC_6");
  auto g = normal_form(DualSimpleWord{6, {a, b}});
  require(fails, g.infimum() == 1 && g.factors().empty(),
          "two-factor word does not normalize to delta");
}

void criterion_poset_product(std::vector<std::string>& fails) {
  require(fails, boundary_partitions(BoundarySet(5, {2, 4, 5})).size() == 12,
          "|NC_5({2,4,5},.)| != 12");
  for (int n = 1; n <= 6; ++n) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> ms;
      for (int i = 1; i <= n; ++i)
        if (mask & (1 << (i - 1))) ms.push_back(i);
      BoundarySet b(n, ms);
      auto bps = boundary_partitions(b);
      std::vector<NoncrossingPartition> fx, mv;
      fx.reserve(bps.size());
      mv.reserve(bps.size());
      std::set<NoncrossingPartition> fixes, moves;
      std::set<std::pair<NoncrossingPartition, NoncrossingPartition>> pairs;
      for (const auto& pi : bps) {
        fx.push_back(fix_part(pi, b));
        mv.push_back(move_part(pi, b));
        fixes.insert(fx.back());
        moves.insert(mv.back());
        pairs.insert({fx.back(), mv.back()});
      }
      require(fails, pairs.size() == bps.size(), "pair map not injective");
      require(fails, fixes.size() * moves.size() == bps.size(),
              "image is not the full product at n=" + std::to_string(n));
      for (size_t i = 0; i < bps.size(); ++i)
        for (size_t j = 0; j < bps.size(); ++j) {
          bool direct = leq(bps[i], bps[j]);
          bool through = leq(fx[i], fx[j]) && leq(mv[i], mv[j]);
          if (direct != through) {
            fails.push_back("order not reflected at n=" + std::to_string(n));
            return;
          }
        }
    }
  }
}

void criterion_garside_soundness(std::vector<std::string>& fails) {
  std::mt19937_64 rng(0xB1A1D5);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);  // 2..6
    auto all = enumerate_nc(n);
    int len = 1 + static_cast<int>(rng() % 6);
    std::vector<NoncrossingPartition> fs;
    for (int i = 0; i < len; ++i) fs.push_back(all[rng() % all.size()]);
    auto base = normal_form(DualSimpleWord{n, fs});

    // relation rewriting anywhere in the word
    for (size_t i = 0; i + 1 < fs.size(); ++i) {
      auto prod = simple_product(fs[i], fs[i + 1]);
      if (!prod) continue;
      std::vector<NoncrossingPartition> rewritten;
      for (size_t j = 0; j < fs.size(); ++j) {
        if (j == i) {
          rewritten.push_back(*prod);
          ++j;
        } else {
          rewritten.push_back(fs[j]);
        }
      }
      if (normal_form(DualSimpleWord{n, rewritten}) != base) {
        fails.push_back("relation rewriting changed a normal form");
        return;
      }
    }

    // associativity and inverses on derived elements
    auto cut1 = fs.size() / 3, cut2 = 2 * fs.size() / 3;
    auto a = normal_form(DualSimpleWord{n, {fs.begin(), fs.begin() + cut1}});
    auto b = normal_form(DualSimpleWord{n, {fs.begin() + cut1, fs.begin() + cut2}});
    auto c = normal_form(DualSimpleWord{n, {fs.begin() + cut2, fs.end()}});
    if (rng() % 2) a = multiply(a, GarsideElement::delta_power(n, -1));
    if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) {
      fails.push_back("associativity failed");
      return;
    }
    if (!multiply(a, invert(a)).is_identity() ||
        !multiply(invert(a), a).is_identity() ||
        !multiply(base, invert(base)).is_identity()) {
      fails.push_back("inverse round trip failed");
      return;
    }
    ++checked;
  }
  require(fails, checked == 1000, "fewer than 1000 trials ran");
}

void criterion_wrapping_roundtrip(std::vector<std::string>& fails) {
  std::mt19937_64 rng(0x57AB1E);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);  // 2..9
    int k = 1 + static_cast<int>(rng() % n);
    std::set<int> chosen;
    while (static_cast<int>(chosen.size()) < k)
      chosen.insert(1 + static_cast<int>(rng() % n));
    BoundarySet b(n, {chosen.begin(), chosen.end()});
    const auto& ms = b.members();
    int w1 = static_cast<int>(rng() % (2 * n + 1)) - n;
    std::vector<int> targets{ms[0] + w1};
    std::set<int> body;
    while (static_cast<int>(body.size()) < k - 1)
      body.insert(1 + static_cast<int>(rng() % (n - 1)));
    for (int off : body) targets.push_back(ms[0] + w1 + off);
    WrappingProfile p{b, {}};
    for (int i = 0; i < k; ++i) p.w[ms[i]] = targets[i] - ms[i];
    if (!validate_wrapping(b, p)) {
      fails.push_back("generator produced an invalid profile");
      return;
    }
    auto word = realize_wrapping(b, p);
    auto [got, fin] = wrapping_of_word(word, b);
    if (got.w != p.w) {
      fails.push_back("realize/wrap round trip failed");
      return;
    }
  }

  std::mt19937_64 rng2(0xDEC0);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng2() % 5);  // 3..7
    auto all = enumerate_nc(n);
    std::vector<int> ms;
    for (int i = 1; i <= n; ++i)
      if (rng2() % 2) ms.push_back(i);
    BoundarySet b(n, ms);
    BoundaryWord w{n, static_cast<int>(rng2() % 5) - 2, {}};
    BoundarySet cur = b.shifted(w.delta_exp);
    int len = static_cast<int>(rng2() % 6);
    for (int i = 0; i < len; ++i) {
      std::vector<NoncrossingPartition> options;
      for (const auto& pi : all)
        if (is_boundary_partition(pi, cur)) options.push_back(pi);
      const auto& pick = options[rng2() % options.size()];
      w.factors.push_back(pick);
      cur = boundary_step(pick, cur)->image;
    }
    auto d = decompose(w, b);
    auto full = multiply(GarsideElement::delta_power(n, w.delta_exp),
                         normal_form(DualSimpleWord{n, w.factors}));
    if (multiply(d.fix, d.move) != full) {
      fails.push_back("decomposition recomposition failed");
      return;
    }
  }
}

void criterion_conf_spaces(std::vector<std::string>& fails) {
  for (int n = 3; n <= 6; ++n) {
    auto conf = build_conf_cycle(n, n, true);
    auto comps = components(conf.complex);
    require(fails, comps.size() == static_cast<size_t>(factorial(n - 1)),
            "labeled component count wrong at n=" + std::to_string(n));
    for (const auto& c : comps)
      require(fails,
              c.cell_counts[0] == n && c.top_dimension == 1 && c.cell_counts[1] == n,
              "component is not an n-cycle at n=" + std::to_string(n));
    auto uconf = build_conf_cycle(n, n, false);
    require(fails,
            uconf.complex.vertex_count() == 1 && uconf.complex.cells(1).size() == 1,
            "unlabeled space is not a single vertex and edge");
  }
  auto lab = build_conf_cycle(2, 6, true);
  auto lab_comps = components(lab.complex);
  require(fails, lab_comps.size() == 1, "(2,6) labeled space is not connected");
  require(fails, lab_comps[0].euler == 0, "(2,6) labeled Euler characteristic != 0");
  require(fails,
          lab_comps[0].boundary_circles && *lab_comps[0].boundary_circles == 2,
          "(2,6) labeled space does not have two boundary circles");
  auto unlab = build_conf_cycle(2, 6, false);
  auto un_comps = components(unlab.complex);
  require(fails, un_comps.size() == 1 && un_comps[0].euler == 0,
          "(2,6) unlabeled space is not a connected chi=0 surface");
  require(fails,
          un_comps[0].boundary_circles && *un_comps[0].boundary_circles == 1,
          "(2,6) unlabeled space is not a Moebius strip");
}

void criterion_cube_product_counts(std::vector<std::string>& fails) {
  for (int k = 1; k <= 5; ++k)
    require(fails,
            subdivide_cube(k).cells(k).size() == static_cast<size_t>(factorial(k)),
            "cube " + std::to_string(k) + " top cell count wrong");
  for (int k = 1; k <= 5; ++k)
    for (int l = 1; k + l <= 6; ++l) {
      auto prod = product_complex(simplex_complex(k), simplex_complex(l));
      long long want = factorial(k + l) / (factorial(k) * factorial(l));
      require(fails, prod.cells(k + l).size() == static_cast<size_t>(want),
              "binomial count wrong at (" + std::to_string(k) + "," + std::to_string(l) + ")");
    }
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 2; ++l)
      for (int m = 1; k + l + m <= 6 && m <= 2; ++m) {
        auto prod = product_complex(
            product_complex(simplex_complex(k), simplex_complex(l)),
            simplex_complex(m));
        long long want = factorial(k + l + m) /
                         (factorial(k) * factorial(l) * factorial(m));
        require(fails, prod.cells(k + l + m).size() == static_cast<size_t>(want),
                "multinomial count wrong");
      }
}

void criterion_dilated_column(std::vector<std::string>& fails) {
  auto ball = dilated_column_ball(2, 6, 0, 24);
  std::set<std::vector<int>> ids;
  for (const auto& top : ball.complex.cells(2))
    ids.insert(ordinary_column_id(ball, top));
  require(fails, ids.size() == 4, "(2,6) ball has " + std::to_string(ids.size()) +
                                      " ordinary columns, expected 4");
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; k <= std::min(3, n); ++k) {
      auto conf = build_conf_cycle(k, n, true);
      auto window = dilated_column_ball(k, n, 0, 6 * n);
      std::vector<int> image(window.complex.vertex_count());
      for (int v = 0; v < window.complex.vertex_count(); ++v) {
        auto idx = conf.complex.vertex_index(reduce_mod_n(window.vertex_coords[v], n));
        if (!idx) {
          fails.push_back("column vertex does not reduce to a configuration vertex");
          return;
        }
        image[v] = *idx;
      }
      for (int d = 1; d <= window.complex.dimension(); ++d)
        for (const auto& cell : window.complex.cells(d)) {
          std::vector<int> mapped;
          for (int v : cell) mapped.push_back(image[v]);
          if (!conf.complex.has_cell(mapped)) {
            fails.push_back("column cell does not map to a configuration cell");
            return;
          }
        }
      // image covers the component of the sorted basepoint
      std::vector<int> base;
      for (int i = 0; i < k; ++i) base.push_back(i);
      auto bidx = conf.complex.vertex_index(reduce_mod_n(base, n));
      std::set<int> seen{*bidx};
      std::vector<int> queue{*bidx};
      while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (const auto& e : conf.complex.cells(1))
          for (int other : {e[0], e[1]})
            if ((e[0] == v || e[1] == v) && !seen.count(other)) {
              seen.insert(other);
              queue.push_back(other);
            }
      }
      std::set<int> covered(image.begin(), image.end());
      require(fails, covered == seen,
              "covering misses the component at k=" + std::to_string(k) +
                  " n=" + std::to_string(n));
    }
  }
}

void criterion_boundary_product(std::vector<std::string>& fails) {
  struct Case {
    int n;
    std::vector<int> b;
    int radius;
  };
  for (const Case& c : {Case{4, {1}, 2}, Case{5, {2, 4, 5}, 1}, Case{6, {1, 2, 3, 4, 6}, 1}}) {
    auto report = product_check(c.n, BoundarySet(c.n, c.b), c.radius);
    for (const auto& v : report.violations)
      fails.push_back("n=" + std::to_string(c.n) + ": " + v);
    require(fails, report.vertices_checked > 0 && report.edges_checked > 0,
            "product check ran on an empty ball");
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "Catalan counts match the brute-force filter for n = 1..8", 5.0,
       criterion_catalan},
      {2, "Fix/Move of (1 2 3 4 5 6)(7 8 9) over {2,4,5,7} reproduced exactly", 0,
       criterion_fix_move},
      {3, "(1 5 6)(2 3 4 5) multiplies to delta in NC_6 and normalizes to it", 0,
       criterion_rotations},
      {4, "|NC_5({2,4,5},.)| = 12 and the fix/move poset product holds for all B, n <= 6",
       60.0, criterion_poset_product},
      {5, "normal forms are relation-invariant, multiplication associative, inverses exact (1000 words)",
       0, criterion_garside_soundness},
      {6, "wrapping profiles realize and decompositions recompose (500 + 200 random cases)",
       0, criterion_wrapping_roundtrip},
      {7, "configuration spaces of cycles have the stated components, Euler numbers and boundaries",
       0, criterion_conf_spaces},
      {8, "cube subdivisions and simplex products have factorial and multinomial top cells",
       0, criterion_cube_product_counts},
      {9, "the (2,6) column splits into 4 ordinary columns and covers its configuration component",
       0, criterion_dilated_column},
      {10, "the boundary product decomposition verifies on the three stated balls",
       120.0, criterion_boundary_product},
  };

  int failures = 0;
  for (auto& c : criteria) {
    std::vector<std::string> fails;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(fails);
    } catch (const std::exception& e) {
      fails.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s)
      fails.push_back("exceeded time limit of " + std::to_string(c.time_limit_s) + " s");
    std::printf("%s  %2d  %s  (%.2f s)\n", fails.empty() ? "PASS" : "FAIL",
                c.id, c.title.c_str(), secs);
    for (const auto& f : fails) std::printf("          - %s\n", f.c_str());
    if (!fails.empty()) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
