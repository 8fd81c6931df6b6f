#include <algorithm>
#include <cassert>

#include "sba/diagram.hpp"

namespace sba {

namespace {

enum class Kind { Cup, Cap, Prop };

Kind kind_of(const Edge& e, int n) {
  bool ta = e.a < n, tb = e.b < n;
  if (ta && tb) return Kind::Cup;
  if (!ta && !tb) return Kind::Cap;
  return Kind::Prop;
}

bool encloses(const Edge& out, const Edge& in) { return out.a < in.a && in.b < out.b; }

// Index of the innermost edge strictly enclosing edges[i], or -1 if
// edges[i] is top level (adjacent to the left-wall face).
int innermost_enclosing(const std::vector<Edge>& edges, int i) {
  int best = -1;
  for (int j = 0; j < (int)edges.size(); ++j) {
    if (j == i || !encloses(edges[j], edges[i])) continue;
    if (best < 0 || edges[j].a > edges[best].a) best = j;
  }
  return best;
}

// Innermost propagating edge: all propagating edges are mutually nested,
// and the deepest one bounds the right-wall face. Returns -1 if none.
int innermost_prop(const Diagram& d) {
  int best = -1;
  for (int i = 0; i < (int)d.edges.size(); ++i) {
    if (kind_of(d.edges[i], d.n) != Kind::Prop) continue;
    if (best < 0 || d.edges[i].a > d.edges[best].a) best = i;
  }
  return best;
}

bool word_legal(const std::string& w, Kind k) {
  if (w.empty() || w == "L" || w == "R") return true;
  if (w == "LR") return k != Kind::Cap;
  if (w == "RL") return k != Kind::Cup;
  return false;
}

}  // namespace

bool is_basis_diagram(const Diagram& d) {
  const int n = d.n;
  if ((int)d.edges.size() != n) return false;
  std::vector<int> deg(2 * n, 0);
  for (const auto& e : d.edges) {
    if (e.a < 0 || e.b >= 2 * n || e.a >= e.b) return false;
    ++deg[e.a], ++deg[e.b];
  }
  for (int x : deg)
    if (x != 1) return false;
  for (const auto& e : d.edges)
    for (const auto& g : d.edges)
      if (e.a < g.a && g.a < e.b && e.b < g.b) return false;  // crossing

  int prop = innermost_prop(d);
  for (int i = 0; i < (int)d.edges.size(); ++i) {
    const Edge& e = d.edges[i];
    Kind k = kind_of(e, n);
    if (!word_legal(e.word, k)) return false;
    int enc = innermost_enclosing(d.edges, i);
    bool left_ok = enc < 0;
    bool right_ok = prop < 0 ? enc < 0 : (i == prop || enc == prop);
    if (e.word.find('L') != std::string::npos && !left_ok) return false;
    if (e.word.find('R') != std::string::npos && !right_ok) return false;
  }

  // With no propagating line both walls border a single face, and the
  // wall strings of all decorations must be routable without crossing:
  // reading top-level cups left to right all L blobs precede all R
  // blobs, and symmetrically for caps read right to left.
  if (prop < 0) {
    std::string cups, caps;
    for (int i = 0; i < (int)d.edges.size(); ++i) {
      if (innermost_enclosing(d.edges, i) >= 0) continue;
      if (kind_of(d.edges[i], n) == Kind::Cup)
        cups += d.edges[i].word;
      else
        caps += d.edges[i].word;
    }
    if (cups.find("RL") != std::string::npos) return false;
    if (caps.find("LR") != std::string::npos) return false;
  }

  // Forbidden feature: a doubly decorated cup together with a doubly
  // decorated cap is rewritten by the topological relation, so it is
  // not a basis member.
  bool lr_cup = false, rl_cap = false;
  for (const auto& e : d.edges) {
    Kind k = kind_of(e, n);
    lr_cup |= k == Kind::Cup && e.word == "LR";
    rl_cap |= k == Kind::Cap && e.word == "RL";
  }
  return !(lr_cup && rl_cap);
}

namespace {

std::vector<std::vector<std::pair<int, int>>> noncrossing(const std::vector<int>& pts) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (pts.empty()) {
    out.emplace_back();
    return out;
  }
  int a = pts[0];
  for (std::size_t k = 1; k < pts.size(); k += 2) {
    auto ins = noncrossing(std::vector<int>(pts.begin() + 1, pts.begin() + k));
    auto outs = noncrossing(std::vector<int>(pts.begin() + k + 1, pts.end()));
    for (const auto& x : ins)
      for (const auto& y : outs) {
        std::vector<std::pair<int, int>> m;
        m.emplace_back(a, pts[k]);
        m.insert(m.end(), x.begin(), x.end());
        m.insert(m.end(), y.begin(), y.end());
        out.push_back(m);
      }
  }
  return out;
}

}  // namespace

std::vector<Diagram> enumerate_basis(int n) {
  std::vector<int> pts(2 * n);
  for (int i = 0; i < 2 * n; ++i) pts[i] = i;
  auto matchings = noncrossing(pts);

  std::vector<Diagram> basis;
  for (const auto& m : matchings) {
    Diagram base;
    base.n = n;
    for (auto [a, b] : m) base.edges.push_back({a, b, ""});
    std::sort(base.edges.begin(), base.edges.end());

    int prop = innermost_prop(base);
    std::vector<std::vector<std::string>> choices(n);
    for (int i = 0; i < n; ++i) {
      const Edge& e = base.edges[i];
      Kind k = kind_of(e, n);
      int enc = innermost_enclosing(base.edges, i);
      bool left_ok = enc < 0;
      bool right_ok = prop < 0 ? enc < 0 : (i == prop || enc == prop);
      choices[i].push_back("");
      if (left_ok) choices[i].push_back("L");
      if (right_ok) choices[i].push_back("R");
      if (left_ok && right_ok) {
        if (k != Kind::Cap) choices[i].push_back("LR");
        if (k != Kind::Cup) choices[i].push_back("RL");
      }
    }

    std::vector<std::size_t> pick(n, 0);
    for (;;) {
      Diagram d = base;
      for (int i = 0; i < n; ++i) d.edges[i].word = choices[i][pick[i]];
      if (is_basis_diagram(d)) basis.push_back(d);
      int i = n - 1;
      while (i >= 0 && ++pick[i] == choices[i].size()) pick[i--] = 0;
      if (i < 0) break;
    }
  }
  std::sort(basis.begin(), basis.end());
  assert(std::adjacent_find(basis.begin(), basis.end()) == basis.end());
  return basis;
}

}  // namespace sba
