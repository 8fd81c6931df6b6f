#include "sba/presentation.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>

namespace sba {

Word CFForm::concat() const {
  Word w;
  for (const auto& b : blocks) w.insert(w.end(), b.begin(), b.end());
  return w;
}

CFForm cf_normal_form(const Word& u) {
  CFForm f;
  for (auto g : u) {
    int last_dep = -1;
    for (int b = (int)f.blocks.size() - 1; b >= 0; --b) {
      bool dep = false;
      for (auto h : f.blocks[b])
        if (letters_dependent(g, h)) {
          dep = true;
          break;
        }
      if (dep) {
        last_dep = b;
        break;
      }
    }
    std::size_t target = (std::size_t)(last_dep + 1);
    if (target == f.blocks.size()) f.blocks.emplace_back();
    f.blocks[target].insert(
        std::upper_bound(f.blocks[target].begin(), f.blocks[target].end(), g),
        g);
  }
  return f;
}

Word canonical_word(const Word& u) { return cf_normal_form(u).concat(); }

Descents descents(const Word& u) {
  Descents d;
  CFForm f = cf_normal_form(u);
  if (!f.blocks.empty()) d.left = f.blocks.front();
  Word rev(u.rbegin(), u.rend());
  CFForm fr = cf_normal_form(rev);
  if (!fr.blocks.empty()) d.right = fr.blocks.front();
  return d;
}

Word word_I(int n) {
  Word w;
  for (int i = 1; i <= n; i += 2) w.push_back((std::uint8_t)i);
  return w;
}

Word word_J(int n) {
  Word w;
  for (int i = 0; i <= n; i += 2) w.push_back((std::uint8_t)i);
  return w;
}

namespace {

// One applicable rewrite: delete these positions, multiply by which scalar.
struct Rewrite {
  std::vector<int> del;  // sorted positions to remove
  int scalar_id;         // 0:delta_L 1:delta 2:delta_R 3:kappa_L 4:kappa_R
                         // 5:kappa_LR 6:one
};

Scalar rewrite_scalar(int id, const ParamSet& ps) {
  switch (id) {
    case 0: return ps.delta_l;
    case 1: return ps.delta;
    case 2: return ps.delta_r;
    case 3: return ps.kappa_l;
    case 4: return ps.kappa_r;
    case 5: return ps.kappa_lr;
    default: return Scalar::one(ps.ring());
  }
}

int square_scalar_id(int g, int n) { return g == 0 ? 0 : (g == n ? 2 : 1); }
int sandwich_scalar_id(int h, int n) { return h == 0 ? 3 : (h == n ? 4 : 6); }

// Square and bounded-braid patterns on consecutive occurrences of a letter.
// The letters strictly between two consecutive occurrences of g that depend
// on g cannot cross g under commutation, so the window matches a pattern iff
// that dependent set is empty (square) or a single letter at distance one
// with g interior (braid).
void find_window_rewrites(const Word& u, int n, bool all,
                          std::vector<Rewrite>& out) {
  int len = (int)u.size();
  for (int i = 0; i < len; ++i) {
    int g = u[i];
    int j = -1;
    for (int k = i + 1; k < len; ++k)
      if (u[k] == g) {
        j = k;
        break;
      }
    if (j < 0) continue;
    int dep_count = 0, dep_pos = -1;
    for (int k = i + 1; k < j; ++k) {
      if (letters_dependent(u[k], g)) {
        ++dep_count;
        dep_pos = k;
        if (dep_count > 1) break;
      }
    }
    if (dep_count == 0) {
      out.push_back({{j}, square_scalar_id(g, n)});
      if (!all) return;
    } else if (dep_count == 1 && g >= 1 && g <= n - 1) {
      int h = u[dep_pos];
      assert(h == g - 1 || h == g + 1);
      out.push_back({{dep_pos, j}, sandwich_scalar_id(h, n)});
      if (!all) return;
    }
  }
}

// Matches the IJI / JIJ patterns as factors of the trace of u: selects an
// occurrence for every pattern instance so that dependent pairs keep their
// order, then checks that every unselected letter can exit to one side of the
// window consistently.
struct IJMatcher {
  const Word& u;
  int n;
  std::vector<std::uint8_t> pat;      // linearized pattern letters
  std::vector<int> keep_count;        // how many leading instances are kept
  std::vector<std::vector<int>> occ;  // positions per letter
  std::vector<int> sel;               // chosen position per pattern instance
  std::vector<bool> used;
  std::set<std::vector<int>>* dedupe;
  std::vector<Rewrite>* out;
  bool all = false;
  bool found = false;

  IJMatcher(const Word& u_, int n_) : u(u_), n(n_) {
    occ.resize(n + 1);
    for (int p = 0; p < (int)u.size(); ++p) occ[u[p]].push_back(p);
  }

  bool side_check() const {
    // side[q]: 0 undecided, 1 left, 2 right; selected positions excluded
    std::vector<int> side(u.size(), 0);
    std::vector<bool> selected(u.size(), false);
    for (int p : sel) selected[p] = true;
    for (int q = 0; q < (int)u.size(); ++q) {
      if (selected[q]) continue;
      bool dep_left = false, dep_right = false;
      for (int p : sel) {
        if (!letters_dependent(u[p], u[q])) continue;
        (p < q ? dep_left : dep_right) = true;
      }
      if (dep_left && dep_right) return false;
      side[q] = dep_left ? 2 : (dep_right ? 1 : 0);
    }
    // Unselected dependent pairs must not flip across the window: propagate
    // "right before left" exclusions to a fixpoint.
    bool changed = true;
    while (changed) {
      changed = false;
      for (int q1 = 0; q1 < (int)u.size(); ++q1) {
        if (selected[q1]) continue;
        for (int q2 = q1 + 1; q2 < (int)u.size(); ++q2) {
          if (selected[q2] || !letters_dependent(u[q1], u[q2])) continue;
          if (side[q1] == 2 && side[q2] == 1) return false;
          if (side[q1] == 2 && side[q2] == 0) side[q2] = 2, changed = true;
          if (side[q2] == 1 && side[q1] == 0) side[q1] = 1, changed = true;
        }
      }
    }
    return true;
  }

  void emit() {
    std::vector<int> del(sel.begin() + keep_count[0], sel.end());
    std::sort(del.begin(), del.end());
    if (dedupe && !dedupe->insert(del).second) return;
    out->push_back({del, 5});
    found = true;
  }

  void dfs(std::size_t k) {
    if (found && !all) return;
    if (k == pat.size()) {
      if (side_check()) emit();
      return;
    }
    int t = pat[k];
    for (int p : occ[t]) {
      if (used[p]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k; ++j) {
        if (letters_dependent(pat[j], t) && sel[j] > p) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[p] = true;
      sel.push_back(p);
      dfs(k + 1);
      sel.pop_back();
      used[p] = false;
      if (found && !all) return;
    }
  }

  void run(bool iji, bool all_, std::vector<Rewrite>& out_,
           std::set<std::vector<int>>& dd) {
    Word A = iji ? word_I(n) : word_J(n);
    Word B = iji ? word_J(n) : word_I(n);
    pat.clear();
    pat.insert(pat.end(), A.begin(), A.end());
    pat.insert(pat.end(), B.begin(), B.end());
    pat.insert(pat.end(), A.begin(), A.end());
    keep_count = {(int)A.size()};
    for (auto t : pat)
      if (occ[t].empty()) return;  // letter missing entirely
    all = all_;
    out = &out_;
    dedupe = &dd;
    found = false;
    used.assign(u.size(), false);
    sel.clear();
    dfs(0);
  }
};

std::vector<Rewrite> applicable_rewrites(const Word& u, int n, bool all) {
  std::vector<Rewrite> out;
  find_window_rewrites(u, n, all, out);
  if (!out.empty() && !all) return out;
  std::set<std::vector<int>> dd;
  IJMatcher m(u, n);
  m.run(true, all, out, dd);
  if (!out.empty() && !all) return out;
  m.run(false, all, out, dd);
  return out;
}

Word apply_rewrite(const Word& u, const Rewrite& r) {
  Word v;
  std::size_t di = 0;
  for (int p = 0; p < (int)u.size(); ++p) {
    if (di < r.del.size() && r.del[di] == p) {
      ++di;
      continue;
    }
    v.push_back(u[p]);
  }
  return v;
}

}  // namespace

Reduced reduce(const Word& u, int n, const ParamSet& ps) {
  Word w = u;
  Scalar c = Scalar::one(ps.ring());
  for (;;) {
    auto rs = applicable_rewrites(w, n, false);
    if (rs.empty()) break;
    c *= rewrite_scalar(rs.front().scalar_id, ps);
    w = apply_rewrite(w, rs.front());
  }
  return {c, canonical_word(w)};
}

Reduced reduce_random(const Word& u, int n, const ParamSet& ps,
                      std::mt19937& rng) {
  Word w = u;
  Scalar c = Scalar::one(ps.ring());
  for (;;) {
    auto rs = applicable_rewrites(w, n, true);
    if (rs.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, rs.size() - 1);
    const Rewrite& r = rs[pick(rng)];
    c *= rewrite_scalar(r.scalar_id, ps);
    w = apply_rewrite(w, r);
  }
  return {c, canonical_word(w)};
}

std::vector<Word> commutation_class(const Word& u, std::size_t limit) {
  std::set<Word> seen{u};
  std::deque<Word> queue{u};
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (letters_dependent(w[i], w[i + 1])) continue;
      Word v = w;
      std::swap(v[i], v[i + 1]);
      if (seen.insert(v).second) {
        if (seen.size() > limit)
          throw std::runtime_error("commutation class exceeds limit");
        queue.push_back(v);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

Reduced reduce_bruteforce(const Word& u, int n, const ParamSet& ps) {
  Word iji = word_I(n), jij = word_J(n);
  {
    Word I = word_I(n), J = word_J(n);
    iji = I;
    iji.insert(iji.end(), J.begin(), J.end());
    iji.insert(iji.end(), I.begin(), I.end());
    jij = J;
    jij.insert(jij.end(), I.begin(), I.end());
    jij.insert(jij.end(), J.begin(), J.end());
  }
  Word ci = canonical_word(iji), cj = canonical_word(jij);
  Word keep_i = word_I(n), keep_j = word_J(n);

  Word w = u;
  Scalar c = Scalar::one(ps.ring());
restart:
  for (const Word& v : commutation_class(w)) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      // squares
      if (i + 1 < v.size() && v[i] == v[i + 1]) {
        c *= rewrite_scalar(square_scalar_id(v[i], n), ps);
        w = Word(v.begin(), v.begin() + i + 1);
        w.insert(w.end(), v.begin() + i + 2, v.end());
        goto restart;
      }
      // bounded braids
      if (i + 2 < v.size() && v[i] == v[i + 2] && v[i] >= 1 && v[i] <= n - 1 &&
          letters_dependent(v[i], v[i + 1]) && v[i] != v[i + 1]) {
        c *= rewrite_scalar(sandwich_scalar_id(v[i + 1], n), ps);
        w = Word(v.begin(), v.begin() + i + 1);
        w.insert(w.end(), v.begin() + i + 3, v.end());
        goto restart;
      }
      // IJI and JIJ
      for (int which = 0; which < 2; ++which) {
        const Word& pat = which == 0 ? ci : cj;
        const Word& keep = which == 0 ? keep_i : keep_j;
        if (i + pat.size() > v.size()) continue;
        Word sub(v.begin() + i, v.begin() + i + pat.size());
        if (canonical_word(sub) != pat) continue;
        c *= rewrite_scalar(5, ps);
        w = Word(v.begin(), v.begin() + i);
        w.insert(w.end(), keep.begin(), keep.end());
        w.insert(w.end(), v.begin() + i + pat.size(), v.end());
        goto restart;
      }
    }
  }
  return {c, canonical_word(w)};
}

ReducibilityWitness left_reducible(const Word& u, int n) {
  CFForm f = cf_normal_form(u);
  if (f.blocks.empty()) return {};
  for (auto s : f.blocks.front()) {
    Word w;
    bool removed = false;
    for (auto g : u) {
      if (!removed && g == s) {
        removed = true;
        continue;
      }
      w.push_back(g);
    }
    for (auto t : descents(w).left) {
      if (t == 0 || t == n) continue;
      if (!letters_dependent(s, t)) continue;
      return {true, s, t};
    }
  }
  return {};
}

ReducibilityWitness right_reducible(const Word& u, int n) {
  Word rev(u.rbegin(), u.rend());
  return left_reducible(rev, n);
}

std::vector<Word> enumerate_reduced(int n, std::size_t budget) {
  Parametrization gen(ParamKind::Generic6);
  ParamSet ps = gen.params(n);
  std::set<Word> seen;
  std::deque<Word> queue;
  Word empty;
  seen.insert(empty);
  queue.push_back(empty);
  std::size_t work = 0;
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    for (int g = 0; g <= n; ++g) {
      Word v = w;
      v.push_back((std::uint8_t)g);
      if (++work > budget)
        throw std::runtime_error("enumerate_reduced budget exceeded");
      Reduced r = reduce(v, n, ps);
      if (r.word.size() != v.size()) continue;  // not reduced: shortened
      if (seen.insert(r.word).second) queue.push_back(r.word);
    }
  }
  return {seen.begin(), seen.end()};
}

std::string word_to_string(const Word& u) {
  if (u.empty()) return "1";
  CFForm f = cf_normal_form(u);
  std::string s;
  for (const auto& b : f.blocks) {
    s += "(";
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) s += " ";
      s += std::to_string((int)b[i]);
    }
    s += ")";
  }
  return s;
}

std::string word_to_names(const Word& u, int n) {
  if (u.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) s += " ";
    int g = u[i];
    if (g == 0)
      s += "E";
    else if (g == n)
      s += "F";
    else
      s += "E_" + std::to_string(g);
  }
  return s;
}

}  // namespace sba
