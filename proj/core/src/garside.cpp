#include "braids/garside.hpp"

#include <sstream>

#include "braids/error.hpp"

namespace braids {

GarsideElement GarsideElement::identity(int n) {
  return GarsideElement(n, 0, {});
}

GarsideElement GarsideElement::delta_power(int n, int p) {
  return GarsideElement(n, p, {});
}

int GarsideElement::abelianization() const {
  int total = inf_ * (n_ - 1);
  for (const auto& f : factors_) total += f.rank();
  return total;
}

Permutation GarsideElement::permutation() const {
  Permutation sigma(n_);
  Permutation d = perm_of(NoncrossingPartition::maximum(n_));
  int p = inf_ % n_;
  if (p < 0) p += n_;  // perm(delta) has order n
  for (int i = 0; i < p; ++i) sigma = sigma.then(d);
  for (const auto& f : factors_) sigma = sigma.then(perm_of(f));
  return sigma;
}

std::string GarsideElement::key() const {
  std::ostringstream os;
  os << inf_ << '|';
  for (const auto& f : factors_) {
    os << '[';
    for (size_t b = 0; b < f.blocks().size(); ++b) {
      if (b) os << ',';
      os << '{';
      const auto& block = f.blocks()[b];
      for (size_t i = 0; i < block.size(); ++i) {
        if (i) os << ',';
        os << block[i];
      }
      os << '}';
    }
    os << ']';
  }
  return os.str();
}

std::optional<NoncrossingPartition> simple_product(
    const NoncrossingPartition& pi1, const NoncrossingPartition& pi2) {
  if (pi1.n() != pi2.n()) throw DomainError("mismatched-n", "simple_product");
  NoncrossingPartition j = join(pi1, pi2);
  if (pi1.rank() + pi2.rank() != j.rank()) return std::nullopt;
  if (complements(pi1, j).right != pi2) return std::nullopt;
  return j;
}

namespace {

// One pass of the domino rule plus absorption of trivial and maximal
// factors. Returns true when anything changed.
bool normalize_pass(int& inf, std::vector<NoncrossingPartition>& fs) {
  for (size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].is_discrete()) {
      fs.erase(fs.begin() + i);
      return true;
    }
    if (fs[i].is_maximum()) {
      // pull delta to the front: x * delta = delta * rotate(x, 1)
      for (size_t j = 0; j < i; ++j) fs[j] = rotate(fs[j], 1);
      fs.erase(fs.begin() + i);
      ++inf;
      return true;
    }
  }
  for (size_t i = 0; i + 1 < fs.size(); ++i) {
    NoncrossingPartition slack = kreweras(fs[i]);
    NoncrossingPartition u = meet(slack, fs[i + 1]);
    if (u.is_discrete()) continue;
    auto grown = simple_product(fs[i], u);
    if (!grown)
      throw DomainError("internal", "greedy absorption failed below delta");
    NoncrossingPartition rest = complements(u, fs[i + 1]).right;
    fs[i] = *grown;
    fs[i + 1] = rest;
    return true;
  }
  return false;
}

}  // namespace

GarsideElement normal_form(const DualSimpleWord& w) {
  if (w.n < 1) throw DomainError("out-of-range", "word needs n >= 1");
  for (const auto& f : w.factors)
    if (f.n() != w.n) throw DomainError("mismatched-n", "word factor");
  int inf = 0;
  auto fs = w.factors;
  while (normalize_pass(inf, fs)) {
  }
  return GarsideElement(w.n, inf, std::move(fs));
}

GarsideElement normal_form(const NoncrossingPartition& pi) {
  return normal_form(DualSimpleWord{pi.n(), {pi}});
}

GarsideElement multiply(const GarsideElement& g, const GarsideElement& h) {
  if (g.n() != h.n()) throw DomainError("mismatched-n", "multiply");
  // delta^p a... delta^q b... = delta^{p+q} rotate(a, q)... b...
  std::vector<NoncrossingPartition> fs;
  fs.reserve(g.factors().size() + h.factors().size());
  for (const auto& a : g.factors()) fs.push_back(rotate(a, h.infimum()));
  for (const auto& b : h.factors()) fs.push_back(b);
  int inf = g.infimum() + h.infimum();
  while (normalize_pass(inf, fs)) {
  }
  return GarsideElement(g.n(), inf, std::move(fs));
}

GarsideElement invert(const GarsideElement& g) {
  // (delta^p a_1..a_k)^{-1} = a_k^{-1}..a_1^{-1} delta^{-p} with
  // a^{-1} = delta^{-1} * leftcomplement(a, delta).
  GarsideElement acc = GarsideElement::identity(g.n());
  auto top = NoncrossingPartition::maximum(g.n());
  for (auto it = g.factors().rbegin(); it != g.factors().rend(); ++it) {
    NoncrossingPartition lc = complements(*it, top).left;
    GarsideElement piece(g.n(), -1, {lc});
    // piece is already canonical: lc is a proper simple
    acc = multiply(acc, piece);
  }
  return multiply(acc, GarsideElement::delta_power(g.n(), -g.infimum()));
}

bool leq_prefix(const GarsideElement& g, const GarsideElement& h) {
  if (g.n() != h.n()) throw DomainError("mismatched-n", "leq_prefix");
  return multiply(invert(g), h).infimum() >= 0;
}

int abelianize(const GarsideElement& g) { return g.abelianization(); }

}  // namespace braids
