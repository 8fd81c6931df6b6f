#include <algorithm>
#include <stdexcept>

#include "sba/diagram.hpp"

namespace sba {

namespace {

// One applicable rewrite. kind: 0 = word pair at (edge, pos),
// 1 = word sandwich at (edge, pos), 2 = loop cyclic pair at (loop, pos),
// 3 = loop terminal removal, 4 = topological cup/cap rewrite.
struct Move {
  int kind = 0;
  int i = 0, j = 0;  // edge/loop index (and cap index for kind 4)
  int pos = 0;
};

bool is_cup(const Edge& e, int n) { return e.a < n && e.b < n; }
bool is_cap(const Edge& e, int n) { return e.a >= n && e.b >= n; }

std::vector<Move> collect_moves(const PseudoDiagram& pd) {
  std::vector<Move> mv;
  for (int i = 0; i < (int)pd.edges.size(); ++i) {
    const std::string& w = pd.edges[i].word;
    for (int p = 0; p + 1 < (int)w.size(); ++p) {
      if (w[p] == w[p + 1]) mv.push_back({0, i, 0, p});
      if (p + 2 < (int)w.size() && w[p] == w[p + 2] && w[p] != w[p + 1])
        mv.push_back({1, i, 0, p});
    }
  }
  for (int i = 0; i < (int)pd.loops.size(); ++i) {
    const std::string& w = pd.loops[i];
    int len = (int)w.size();
    bool pair_found = false;
    for (int p = 0; p < len && len >= 2; ++p)
      if (w[p] == w[(p + 1) % len]) {
        mv.push_back({2, i, 0, p});
        pair_found = true;
      }
    if (!pair_found) {
      if (len > 2) throw std::logic_error("straighten: loop winds through both walls twice");
      mv.push_back({3, i, 0, 0});
    }
  }
  int n = pd.n;
  for (int i = 0; i < (int)pd.edges.size(); ++i) {
    if (!(is_cup(pd.edges[i], n) && pd.edges[i].word == "LR")) continue;
    for (int j = 0; j < (int)pd.edges.size(); ++j)
      if (is_cap(pd.edges[j], n) && pd.edges[j].word == "RL") mv.push_back({4, i, j, 0});
  }
  return mv;
}

void apply_move(PseudoDiagram& pd, const Move& m, Scalar& c, const ParamSet& ps) {
  switch (m.kind) {
    case 0: {
      std::string& w = pd.edges[m.i].word;
      c = c * (w[m.pos] == 'L' ? ps.delta_l : ps.delta_r);
      w.erase((std::size_t)m.pos, 1);
      break;
    }
    case 1: {
      std::string& w = pd.edges[m.i].word;
      c = c * ps.kappa_lr;
      w.erase((std::size_t)m.pos + 1, 2);
      break;
    }
    case 2: {
      std::string& w = pd.loops[m.i];
      c = c * (w[m.pos] == 'L' ? ps.delta_l : ps.delta_r);
      w.erase((std::size_t)m.pos, 1);
      break;
    }
    case 3: {
      const std::string& w = pd.loops[m.i];
      if (w.empty())
        c = c * ps.delta;
      else if (w == "L")
        c = c * ps.kappa_l;
      else if (w == "R")
        c = c * ps.kappa_r;
      else
        c = c * ps.kappa_lr;  // cyclic word LR (== RL)
      pd.loops.erase(pd.loops.begin() + m.i);
      break;
    }
    case 4: {
      Edge cup = pd.edges[m.i], cap = pd.edges[m.j];
      int lo = std::min(m.i, m.j), hi = std::max(m.i, m.j);
      pd.edges.erase(pd.edges.begin() + hi);
      pd.edges.erase(pd.edges.begin() + lo);
      pd.edges.push_back({cup.a, cap.b, "L"});
      pd.edges.push_back({cup.b, cap.a, "R"});
      std::sort(pd.edges.begin(), pd.edges.end());
      c = c * ps.kappa_lr;
      break;
    }
    default:
      throw std::logic_error("straighten: unknown move");
  }
}

ReductionResult finish(PseudoDiagram pd, Scalar c) {
  Diagram d;
  d.n = pd.n;
  d.edges = std::move(pd.edges);
  std::sort(d.edges.begin(), d.edges.end());
  if (!is_basis_diagram(d))
    throw std::logic_error("straighten: result is not a basis diagram: " + to_string(d));
  return {std::move(c), std::move(d)};
}

}  // namespace

ReductionResult straighten(const PseudoDiagram& pd, const ParamSet& ps) {
  PseudoDiagram cur = pd;
  Scalar c = Scalar::one(ps.ring());
  std::size_t guard = 0, bound = 4 * (cur.loops.size() + cur.edges.size() + 2);
  for (const auto& e : cur.edges) bound += 4 * e.word.size();
  for (const auto& w : cur.loops) bound += 4 * w.size();
  for (;;) {
    auto mv = collect_moves(cur);
    if (mv.empty()) break;
    apply_move(cur, mv.front(), c, ps);
    if (++guard > bound) throw std::logic_error("straighten: rewriting did not terminate");
  }
  return finish(std::move(cur), std::move(c));
}

ReductionResult straighten_random(const PseudoDiagram& pd, const ParamSet& ps,
                                  std::mt19937& rng) {
  PseudoDiagram cur = pd;
  Scalar c = Scalar::one(ps.ring());
  std::size_t guard = 0, bound = 4 * (cur.loops.size() + cur.edges.size() + 2);
  for (const auto& e : cur.edges) bound += 4 * e.word.size();
  for (const auto& w : cur.loops) bound += 4 * w.size();
  for (;;) {
    auto mv = collect_moves(cur);
    if (mv.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, mv.size() - 1);
    apply_move(cur, mv[pick(rng)], c, ps);
    if (++guard > bound) throw std::logic_error("straighten: rewriting did not terminate");
  }
  return finish(std::move(cur), std::move(c));
}

}  // namespace sba
