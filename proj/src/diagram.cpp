#include "sba/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace sba {

namespace {

bool is_top(int idx, int n) { return idx < n; }

bool is_propagating(const Edge& e, int n) { return is_top(e.a, n) != is_top(e.b, n); }

std::string reversed(std::string w) {
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

bool Diagram::operator<(const Diagram& o) const {
  if (n != o.n) return n < o.n;
  int p = propagating_count(*this), q = propagating_count(o);
  if (p != q) return p < q;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].a != o.edges[i].a) return edges[i].a < o.edges[i].a;
    if (edges[i].b != o.edges[i].b) return edges[i].b < o.edges[i].b;
  }
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].word != o.edges[i].word) return edges[i].word < o.edges[i].word;
  return false;
}

Diagram identity_diagram(int n) {
  Diagram d;
  d.n = n;
  for (int k = 1; k <= n; ++k) d.edges.push_back({k - 1, 2 * n - k, ""});
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

Diagram gen_e(int n) {
  Diagram d = identity_diagram(n);
  for (auto& e : d.edges)
    if (e.a == 0) e.word = "L";
  return d;
}

Diagram gen_f(int n) {
  Diagram d = identity_diagram(n);
  for (auto& e : d.edges)
    if (e.a == n - 1) e.word = "R";
  return d;
}

Diagram gen_ei(int n, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("gen_ei: index out of range");
  Diagram d;
  d.n = n;
  d.edges.push_back({i - 1, i, ""});                  // cup at top i, i+1
  d.edges.push_back({2 * n - i - 1, 2 * n - i, ""});  // cap at bottom i', (i+1)'
  for (int k = 1; k <= n; ++k)
    if (k != i && k != i + 1) d.edges.push_back({k - 1, 2 * n - k, ""});
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

std::vector<Diagram> generators(int n) {
  std::vector<Diagram> g;
  g.push_back(gen_e(n));
  for (int i = 1; i <= n - 1; ++i) g.push_back(gen_ei(n, i));
  g.push_back(gen_f(n));
  return g;
}

int propagating_count(const Diagram& d) {
  int c = 0;
  for (const auto& e : d.edges) c += is_propagating(e, d.n);
  return c;
}

int undecorated_propagating_count(const Diagram& d) {
  int c = 0;
  for (const auto& e : d.edges) c += is_propagating(e, d.n) && e.word.empty();
  return c;
}

Diagram flip(const Diagram& d) {
  Diagram r;
  r.n = d.n;
  int m = 2 * d.n - 1;
  for (const auto& e : d.edges) r.edges.push_back({m - e.b, m - e.a, reversed(e.word)});
  std::sort(r.edges.begin(), r.edges.end());
  return r;
}

PseudoDiagram concat(const Diagram& d1, const Diagram& d2) {
  if (d1.n != d2.n) throw std::invalid_argument("concat: rank mismatch");
  const int n = d1.n;
  // Points are (layer, idx); layer 0 = d1, layer 1 = d2. d1's bottom
  // point j fuses with d2's top point 2n-1-j.
  auto edge_at = [](const Diagram& d, int idx) -> const Edge& {
    for (const auto& e : d.edges)
      if (e.a == idx || e.b == idx) return e;
    throw std::logic_error("concat: dangling boundary point");
  };
  std::vector<std::vector<bool>> seen(2, std::vector<bool>(2 * n, false));
  PseudoDiagram out;
  out.n = n;

  // Walks from (layer, idx) until a final boundary point is reached,
  // appending decoration words; returns the stopping point.
  auto walk = [&](int layer, int idx, std::string& w) -> std::pair<int, int> {
    for (;;) {
      const Diagram& d = layer == 0 ? d1 : d2;
      const Edge& e = edge_at(d, idx);
      seen[layer][e.a] = seen[layer][e.b] = true;
      int other = e.a == idx ? e.b : e.a;
      w += e.a == idx ? e.word : reversed(e.word);
      bool fused = layer == 0 ? other >= n : other < n;
      if (!fused) return {layer, other};
      idx = 2 * n - 1 - other;
      layer = 1 - layer;
    }
  };

  // Composite open edges, started from each final boundary point. A walk
  // started at the smaller final index reaches the larger one, so the
  // collected word is already oriented a -> b.
  for (int start = 0; start < 2 * n; ++start) {
    int layer = start < n ? 0 : 1;
    if (seen[layer][start]) continue;
    std::string w;
    auto [l2, fin] = walk(layer, start, w);
    (void)l2;
    out.edges.push_back({start, fin, w});
  }
  std::sort(out.edges.begin(), out.edges.end());

  // Remaining middle points lie on closed cycles.
  for (int layer = 0; layer < 2; ++layer) {
    for (int idx = 0; idx < 2 * n; ++idx) {
      if (seen[layer][idx]) continue;
      std::string w;
      int l = layer, i = idx;
      do {
        const Diagram& d = l == 0 ? d1 : d2;
        const Edge& e = edge_at(d, i);
        seen[l][e.a] = seen[l][e.b] = true;
        int other = e.a == i ? e.b : e.a;
        w += e.a == i ? e.word : reversed(e.word);
        l = 1 - l;
        i = 2 * n - 1 - other;
      } while (l != layer || i != idx);
      out.loops.push_back(w);
    }
  }
  return out;
}

std::string node_name(int idx, int n) {
  if (idx < n) return std::to_string(idx + 1);
  return std::to_string(2 * n - idx) + "'";
}

namespace {

// Display order: top nodes by number, then bottom nodes by number, so a
// cap prints as (1' 2') even though 2' precedes 1' in boundary order.
std::pair<std::string, std::string> display_pair(const Edge& e, int n) {
  std::string x = node_name(e.a, n), y = node_name(e.b, n);
  if (e.a >= n && e.b >= n) std::swap(x, y);
  return {x, y};
}

}  // namespace

std::string to_string(const Diagram& d) {
  std::ostringstream os;
  for (const auto& e : d.edges) {
    auto [x, y] = display_pair(e, d.n);
    os << '(' << x << ' ' << y << ')';
  }
  os << '|';
  bool first = true;
  for (const auto& e : d.edges) {
    if (e.word.empty()) continue;
    if (!first) os << ' ';
    first = false;
    auto [x, y] = display_pair(e, d.n);
    os << '(' << x << ' ' << y << "):" << e.word;
  }
  return os.str();
}

std::string to_json(const Diagram& d) {
  std::ostringstream os;
  os << "{\"n\":" << d.n << ",\"edges\":[";
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    const auto& e = d.edges[i];
    if (i) os << ',';
    auto [x, y] = display_pair(e, d.n);
    os << "{\"ends\":[\"" << x << "\",\"" << y << "\"],\"word\":\"" << e.word << "\"}";
  }
  os << "]}";
  return os.str();
}

namespace {

int parse_node(const std::string& tok, int n) {
  bool prime = !tok.empty() && tok.back() == '\'';
  int k = std::stoi(prime ? tok.substr(0, tok.size() - 1) : tok);
  if (k < 1 || k > n) throw std::invalid_argument("parse_diagram: node out of range");
  return prime ? 2 * n - k : k - 1;
}

}  // namespace

Diagram parse_diagram(const std::string& s) {
  auto bar = s.find('|');
  std::string match = bar == std::string::npos ? s : s.substr(0, bar);
  std::string deco = bar == std::string::npos ? "" : s.substr(bar + 1);

  // First pass: count nodes to infer n.
  std::vector<std::pair<std::string, std::string>> pairs;
  std::size_t pos = 0;
  while ((pos = match.find('(', pos)) != std::string::npos) {
    auto close = match.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("parse_diagram: unbalanced paren");
    std::istringstream in(match.substr(pos + 1, close - pos - 1));
    std::string x, y;
    if (!(in >> x >> y)) throw std::invalid_argument("parse_diagram: bad pair");
    pairs.emplace_back(x, y);
    pos = close + 1;
  }
  if (pairs.empty()) throw std::invalid_argument("parse_diagram: no edges");
  int n = (int)pairs.size();

  Diagram d;
  d.n = n;
  for (auto& [x, y] : pairs) {
    int a = parse_node(x, n), b = parse_node(y, n);
    if (a > b) std::swap(a, b);
    d.edges.push_back({a, b, ""});
  }

  pos = 0;
  while ((pos = deco.find('(', pos)) != std::string::npos) {
    auto close = deco.find(')', pos);
    if (close == std::string::npos || close + 1 >= deco.size() || deco[close + 1] != ':')
      throw std::invalid_argument("parse_diagram: bad decoration");
    std::istringstream in(deco.substr(pos + 1, close - pos - 1));
    std::string x, y;
    if (!(in >> x >> y)) throw std::invalid_argument("parse_diagram: bad decoration pair");
    int a = parse_node(x, n), b = parse_node(y, n);
    if (a > b) std::swap(a, b);
    auto end = deco.find_first_of(" (", close + 2);
    std::string w = deco.substr(close + 2, end == std::string::npos ? end : end - close - 2);
    bool hit = false;
    for (auto& e : d.edges)
      if (e.a == a && e.b == b) e.word = w, hit = true;
    if (!hit) throw std::invalid_argument("parse_diagram: decoration on missing edge");
    pos = close + 1;
  }
  std::sort(d.edges.begin(), d.edges.end());

  std::vector<int> deg(2 * n, 0);
  for (const auto& e : d.edges) ++deg[e.a], ++deg[e.b];
  for (int x : deg)
    if (x != 1) throw std::invalid_argument("parse_diagram: not a perfect matching");
  return d;
}

}  // namespace sba
