#include "sba/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "sba/cells.hpp"

namespace sba {

bool Poset::strictly_below(int a, int b) const {
  if (a == b) return false;
  std::set<int> seen{b};
  std::vector<int> queue{b};
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    auto it = covers.find(x);
    if (it == covers.end()) continue;
    for (int y : it->second) {
      if (y == a) return true;
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return false;
}

bool Poset::leq(int a, int b) const { return a == b || strictly_below(a, b); }

std::vector<int> Poset::maximal() const {
  std::vector<int> out;
  for (int x : elements) {
    bool below = false;
    for (int y : elements)
      if (y != x && strictly_below(x, y)) {
        below = true;
        break;
      }
    if (!below) out.push_back(x);
  }
  return out;
}

std::vector<int> Poset::minimal() const {
  std::vector<int> out;
  for (int x : elements) {
    auto it = covers.find(x);
    if (it == covers.end() || it->second.empty()) out.push_back(x);
  }
  return out;
}

namespace {

Poset make_poset(int n) {
  Poset p;
  p.n = n;
  p.elements = cell_labels(n);
  for (int x : p.elements) p.covers[x] = {};
  return p;
}

void sort_covers(Poset& p) {
  for (auto& [x, ys] : p.covers) std::sort(ys.begin(), ys.end());
}

}  // namespace

Poset chain_poset(int n) {
  Poset p = make_poset(n);
  std::vector<int> asc;  // bottom to top
  asc.push_back(-n);
  for (int k = n - 1; k >= 1; --k) {
    asc.push_back(k);
    asc.push_back(-k);
  }
  asc.push_back(0);
  for (std::size_t i = 1; i < asc.size(); ++i) p.covers[asc[i]] = {asc[i - 1]};
  return p;
}

Poset level_poset(int n) {
  Poset p = make_poset(n);
  if (n == 1) {
    p.covers[0] = {-1};
    return p;
  }
  p.covers[0] = {-1, 1};
  for (int l = 1; l <= n - 2; ++l) {
    p.covers[l] = {-(l + 1), l + 1};
    p.covers[-l] = {-(l + 1), l + 1};
  }
  p.covers[n - 1] = {-n};
  p.covers[-(n - 1)] = {-n};
  sort_covers(p);
  return p;
}

Poset coarse_poset(int n) {
  Poset p = make_poset(n);
  auto in_range = [&](int x) { return x >= -n && x <= n - 1; };
  for (int x : p.elements) {
    std::vector<int> cand;
    if (x == 0) {
      cand = {1, -1, 2, -2};
    } else {
      int a = std::abs(x);
      cand = {x > 0 ? a + 2 : -(a + 2), a + 3, -(a + 3)};
    }
    for (int y : cand)
      if (in_range(y)) p.covers[x].push_back(y);
  }
  sort_covers(p);
  return p;
}

bool refines(const Poset& weaker, const Poset& stronger) {
  for (int a : weaker.elements)
    for (int b : weaker.elements)
      if (weaker.strictly_below(a, b) && !stronger.strictly_below(a, b))
        return false;
  return true;
}

PosetConsistency poset_consistency(int n, const Parametrization& pz, long W1,
                                   long W2, long Th, std::uint64_t p) {
  PosetConsistency out;
  out.n = n;
  out.p = p;
  auto point = pz.fp_values(p, W1, W2, Th);
  ParamSet ps = pz.params(n);
  std::vector<CellModule> mods;
  for (int l : cell_labels(n)) mods.push_back(cell_module(n, l, ps));
  Poset poset = coarse_poset(n);
  out.ok = true;
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = 0; j < mods.size(); ++j) {
      if (i == j) continue;
      int d = hom_space_dim(mods[i], mods[j], point, p);
      if (d == 0) continue;
      HomEntry e{mods[i].label, mods[j].label, d};
      out.nonzero.push_back(e);
      if (!poset.strictly_below(e.src, e.dst)) {
        out.violations.push_back(e);
        out.ok = false;
      }
    }
  return out;
}

}  // namespace sba
