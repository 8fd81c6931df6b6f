#include "sba/cells.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

#include "sba/phi.hpp"
#include "sba/poly.hpp"

namespace sba {

std::vector<int> cell_labels(int n) {
  std::vector<int> out;
  for (int l = -n; l <= n - 1; ++l) out.push_back(l);
  return out;
}

Word anchor_word(int n, int l) {
  if (n < 1 || l < -n || l > n - 1)
    throw std::invalid_argument("anchor_word: label out of range");
  auto w = [](std::initializer_list<int> xs) {
    Word out;
    for (int x : xs) out.push_back(static_cast<std::uint8_t>(x));
    return out;
  };
  if (l == -n) return {};
  if (l == n - 1) return w({0});
  if (l == -(n - 1)) return w({n});
  if (l == n - 2 && n >= 3) return w({0, n});
  if (l == -(n - 2)) return w({1});
  if (l == n - 3) return w({0, 2});
  if (l == -(n - 3)) return w({1, n});
  if (l == n - 4) return w({0, 2, n});
  Word inner = anchor_word(n - 1, l);
  Word out;
  out.push_back(static_cast<std::uint8_t>(n));
  out.insert(out.end(), inner.begin(), inner.end());
  out.push_back(static_cast<std::uint8_t>(n));
  return out;
}

namespace {

const ParamSet& generic_params() {
  static const ParamSet ps = Parametrization(ParamKind::Generic6).params(2);
  return ps;
}

}  // namespace

Diagram cell_generator(int n, int l) {
  auto r = phi(anchor_word(n, l), n, generic_params());
  if (!r.coefficient.is_one())
    throw std::logic_error("cell_generator: anchor does not straighten to coefficient one");
  if (undecorated_propagating_count(r.diagram) != std::abs(l))
    throw std::logic_error("cell_generator: anchor lies in the wrong stratum");
  return r.diagram;
}

std::vector<CellClass> cell_partition(int n, const ParamSet& ps) {
  const auto basis = enumerate_basis(n);
  std::map<Diagram, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  const auto gens = generators(n);

  // One-sided multiplication graph restricted to each stratum.
  std::vector<std::vector<int>> adj(basis.size()), radj(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    int ph = undecorated_propagating_count(basis[i]);
    for (const auto& g : gens) {
      for (int side = 0; side < 2; ++side) {
        auto r = side == 0 ? straighten(concat(g, basis[i]), ps)
                           : straighten(concat(basis[i], g), ps);
        if (r.coefficient.is_zero()) continue;
        if (undecorated_propagating_count(r.diagram) != ph) continue;
        int j = index.at(r.diagram);
        adj[i].push_back(j);
        radj[j].push_back(static_cast<int>(i));
      }
    }
  }

  // Kosaraju: forward finish order, then reverse sweeps.
  std::size_t m = basis.size();
  std::vector<int> order;
  order.reserve(m);
  std::vector<char> seen(m, 0);
  for (std::size_t s = 0; s < m; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(s), 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [v, k] = stack.back();
      if (k < adj[v].size()) {
        int w = adj[v][k++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] >= 0) continue;
    std::vector<int> stack{*it};
    comp[*it] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : radj[v])
        if (comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }

  if (ncomp != 2 * n) throw std::logic_error("cell_partition: unexpected class count");

  std::vector<int> comp_label(ncomp, INT_MIN);
  std::vector<CellClass> classes;
  for (int l : cell_labels(n)) {
    Diagram g = cell_generator(n, l);
    int c = comp[index.at(g)];
    if (comp_label[c] != INT_MIN)
      throw std::logic_error("cell_partition: two anchors in one class");
    comp_label[c] = l;
    CellClass cc;
    cc.n = n;
    cc.label = l;
    cc.phat = std::abs(l);
    cc.generator = g;
    classes.push_back(std::move(cc));
  }
  std::map<int, std::size_t> by_label;
  for (std::size_t k = 0; k < classes.size(); ++k) by_label[classes[k].label] = k;
  for (std::size_t i = 0; i < m; ++i) {
    int l = comp_label[comp[i]];
    if (l == INT_MIN) throw std::logic_error("cell_partition: unlabelled class");
    auto& cc = classes[by_label.at(l)];
    if (undecorated_propagating_count(basis[i]) != cc.phat)
      throw std::logic_error("cell_partition: stratum mismatch inside a class");
    cc.members.push_back(basis[i]);
  }
  for (auto& cc : classes) std::sort(cc.members.begin(), cc.members.end());
  return classes;
}

std::optional<std::size_t> CellModule::index_of(const Diagram& d) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), d);
  if (it == basis.end() || !(*it == d)) return std::nullopt;
  return static_cast<std::size_t>(it - basis.begin());
}

CellModule cell_module(int n, int l, const ParamSet& ps) {
  CellModule m;
  m.n = n;
  m.label = l;
  m.ps = ps;
  auto r = phi(anchor_word(n, l), n, ps);
  if (!r.coefficient.is_one())
    throw std::logic_error("cell_module: anchor does not straighten to coefficient one");
  m.generator = r.diagram;
  const int ph = std::abs(l);
  if (undecorated_propagating_count(m.generator) != ph)
    throw std::logic_error("cell_module: anchor lies in the wrong stratum");

  const auto gens = generators(n);
  std::set<Diagram> seen{m.generator};
  std::vector<Diagram> queue{m.generator};
  while (!queue.empty()) {
    Diagram d = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      auto rr = straighten(concat(g, d), ps);
      if (rr.coefficient.is_zero()) continue;
      if (undecorated_propagating_count(rr.diagram) != ph) continue;
      if (seen.insert(rr.diagram).second) queue.push_back(rr.diagram);
    }
  }
  m.basis.assign(seen.begin(), seen.end());

  const RingPtr& ring = ps.ring();
  const std::size_t dim = m.basis.size();
  for (const auto& g : gens) {
    Matrix a = zero_matrix(dim, dim, ring);
    for (std::size_t j = 0; j < dim; ++j) {
      auto rr = straighten(concat(g, m.basis[j]), ps);
      if (rr.coefficient.is_zero()) continue;
      if (undecorated_propagating_count(rr.diagram) != ph) continue;
      auto idx = m.index_of(rr.diagram);
      if (!idx) throw std::logic_error("cell_module: action left the closure");
      a[*idx][j] = rr.coefficient;
    }
    m.action.push_back(std::move(a));
  }

  auto tt = straighten(concat(flip(m.generator), m.generator), ps);
  if (undecorated_propagating_count(tt.diagram) != ph)
    throw std::logic_error("cell_module: anchor pairing drops stratum");
  m.theta = tt.diagram;

  m.gram = zero_matrix(dim, dim, ring);
  std::vector<Diagram> flips;
  flips.reserve(dim);
  for (const auto& b : m.basis) flips.push_back(flip(b));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      auto pr = straighten(concat(flips[i], m.basis[j]), ps);
      if (undecorated_propagating_count(pr.diagram) != ph) continue;
      if (!(pr.diagram == m.theta))
        throw std::logic_error("cell_module: pairing support is not constant");
      m.gram[i][j] = pr.coefficient;
    }
  return m;
}

Matrix module_action(const CellModule& m, const Diagram& d) {
  const int ph = std::abs(m.label);
  const std::size_t dim = m.dim();
  Matrix a = zero_matrix(dim, dim, m.ps.ring());
  for (std::size_t j = 0; j < dim; ++j) {
    auto rr = straighten(concat(d, m.basis[j]), m.ps);
    if (rr.coefficient.is_zero()) continue;
    if (undecorated_propagating_count(rr.diagram) != ph) continue;
    auto idx = m.index_of(rr.diagram);
    if (!idx) throw std::logic_error("module_action: image outside the basis");
    a[*idx][j] = rr.coefficient;
  }
  return a;
}

Matrix module_action(const CellModule& m, const AlgElement& x) {
  const std::size_t dim = m.dim();
  Matrix out = zero_matrix(dim, dim, m.ps.ring());
  for (const auto& [d, c] : x.terms) {
    if (c.is_zero()) continue;
    Matrix a = module_action(m, d);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (!a[i][j].is_zero()) out[i][j] = out[i][j] + c * a[i][j];
  }
  return out;
}

Scalar cell_pairing(const Diagram& x, const Diagram& y, int phat,
                    const ParamSet& ps, const Diagram* theta) {
  auto pr = straighten(concat(flip(x), y), ps);
  if (undecorated_propagating_count(pr.diagram) != phat)
    return Scalar::zero(ps.ring());
  if (theta && !(pr.diagram == *theta))
    throw std::logic_error("cell_pairing: support is not the expected diagram");
  return pr.coefficient;
}

const Matrix& gram_matrix(const CellModule& m) { return m.gram; }

Scalar gram_det(const CellModule& m) { return det(m.gram); }

namespace {

Scalar spow(const Scalar& x, int k) {
  Scalar out = Scalar::one(x.ring());
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}

struct LastFactor {
  std::string name;
  QArg arg;
};

std::vector<LastFactor> last_factors(int n) {
  return {
      {"[w1-w2+n-2]", QArg{n - 2, 1, -1, 0}},
      {"[-w1+w2+n-2]", QArg{n - 2, -1, 1, 0}},
      {"[w1+w2-n]", QArg{-n, 1, 1, 0}},
      {"[w1+w2-n+2]", QArg{2 - n, 1, 1, 0}},
      {"[w1+w2+n-2]", QArg{n - 2, 1, 1, 0}},
  };
}

}  // namespace

std::vector<std::pair<std::string, Scalar>> gram_formula_candidates(
    int n, int l, const Parametrization& pz) {
  std::vector<std::pair<std::string, Scalar>> out;
  auto qn = [&](const QArg& a) { return pz.qnum(a); };
  auto add = [&](const std::string& id, const Scalar& v) {
    for (const auto& [eid, ev] : out)
      if (eid == id) return;
    out.emplace_back(id, v);
  };

  const bool has_q = pz.kind() != ParamKind::Generic6;
  const bool has_half = pz.kind() == ParamKind::GMP;

  if (l == 0) {
    ParamSet ps = pz.params(n);
    if (n == 1) {
      add("kLR*(dL*dR-kLR)",
          ps.kappa_lr * (ps.delta_l * ps.delta_r - ps.kappa_lr));
    }
    if (n == 2) {
      add("kLR*(kLR-kL*dR)*(kLR-dL*kR)*(kLR-dL*kR-dR*kL+d*dL*dR)",
          ps.kappa_lr * (ps.kappa_lr - ps.kappa_l * ps.delta_r) *
              (ps.kappa_lr - ps.delta_l * ps.kappa_r) *
              (ps.kappa_lr - ps.delta_l * ps.kappa_r -
               ps.delta_r * ps.kappa_l + ps.delta * ps.delta_l * ps.delta_r));
      // Variant seen in circulation with kappa factors in the last term; it
      // is recorded so reports show it was tried but does not match.
      add("kLR*(kLR-kL*dR)*(kLR-dL*kR)*(kLR-dL*kR-kL*dR+d*kL*kR)",
          ps.kappa_lr * (ps.kappa_lr - ps.kappa_l * ps.delta_r) *
              (ps.kappa_lr - ps.delta_l * ps.kappa_r) *
              (ps.kappa_lr - ps.delta_l * ps.kappa_r -
               ps.kappa_l * ps.delta_r + ps.delta * ps.kappa_l * ps.kappa_r));
    }
    if (has_half) {
      // Uniform family: the product of [(w1 +/- w2 +/- th + j)/2] over all
      // four sign choices and every j of the parity of n-1 with |j| <= n-1.
      auto bracket = [](int j, int s2, int s3) {
        std::string s = "[(w1";
        s += s2 > 0 ? "+" : "-";
        s += "w2";
        s += s3 > 0 ? "+" : "-";
        s += "th";
        if (j > 0) s += "+" + std::to_string(j);
        if (j < 0) s += std::to_string(j);
        s += ")/2]";
        return s;
      };
      Scalar prod = Scalar::one(pz.ring());
      std::string id;
      for (int j = -(n - 1); j <= n - 1; j += 2)
        for (int s2 : {1, -1})
          for (int s3 : {1, -1}) {
            prod = prod * qn(QArg::half(j, 1, s2, s3));
            id += bracket(j, s2, s3);
          }
      add(id, prod);
      if (n == 1)
        add("-[(w1-w2+th)/2][(w1-w2-th)/2][(w1+w2+th)/2][(w1+w2-th)/2]",
            -(qn(QArg::half(0, 1, -1, 1)) * qn(QArg::half(0, 1, -1, -1)) *
              qn(QArg::half(0, 1, 1, 1)) * qn(QArg::half(0, 1, 1, -1))));
      if (n == 2)
        // Same circulated variant in quantum form: +3 arguments in the last
        // pair where the computed determinant has -1.
        add("[(w1+w2+th+1)/2][(w1+w2-th+1)/2][(w1-w2+th-1)/2][(w1-w2-th-1)/2]"
            "[(-w1+w2+th-1)/2][(-w1+w2-th-1)/2][(w1+w2+th+3)/2][(w1+w2-th+3)/2]",
            qn(QArg::half(1, 1, 1, 1)) * qn(QArg::half(1, 1, 1, -1)) *
                qn(QArg::half(-1, 1, -1, 1)) * qn(QArg::half(-1, 1, -1, -1)) *
                qn(QArg::half(-1, -1, 1, 1)) * qn(QArg::half(-1, -1, 1, -1)) *
                qn(QArg::half(3, 1, 1, 1)) * qn(QArg::half(3, 1, 1, -1)));
    }
    return out;
  }

  if (l == -n) add("1", Scalar::one(pz.ring()));
  if (!has_q) return out;
  if (l == n - 1) add("[w1]", qn(QArg::w1()));
  if (l == -n + 1 && n >= 2) add("[w2]", qn(QArg::w2()));
  if (l == n - 2 && n >= 3) add("[w1][w2]", qn(QArg::w1()) * qn(QArg::w2()));

  if (l == -(n - 2) && n >= 3) {
    add("[w1+1][w2+1][w1+w2-n+2]",
        qn(QArg::w1(1)) * qn(QArg::w2(1)) * qn(QArg{2 - n, 1, 1, 0}));
  }

  const bool pm3 = (l == n - 3 || l == -(n - 3)) && n >= 4;
  const bool m4 = l == n - 4 && n >= 5;
  if (pm3) {
    for (int pref = 1; pref <= 2; ++pref) {
      QArg big = pref == 1 ? QArg::w1() : QArg::w2();
      QArg down = pref == 1 ? QArg::w1(-1) : QArg::w2(-1);
      QArg up = pref == 1 ? QArg::w2(1) : QArg::w1(1);
      std::string sx = pref == 1 ? "w1" : "w2";
      std::string sy = pref == 1 ? "w2" : "w1";
      for (int de : {1, -1}) {
        int e = n + de;
        std::string se = de == 1 ? "(n+1)" : "(n-1)";
        Scalar head = spow(qn(big), e) * qn(down) * qn(up);
        for (const auto& lf : last_factors(n)) {
          add("[" + sx + "]^" + se + "[" + sx + "-1][" + sy + "+1]" + lf.name,
              head * qn(lf.arg));
        }
      }
    }
  }
  if (m4) {
    for (int de : {1, -1}) {
      int e = n + de;
      std::string se = de == 1 ? "(n+1)" : "(n-1)";
      Scalar head = spow(qn(QArg::w1()) * qn(QArg::w2()), e) * qn(QArg::w1(-1)) *
                    qn(QArg::w2(-1));
      for (const auto& lf : last_factors(n)) {
        add("[w1]^" + se + "[w2]^" + se + "[w1-1][w2-1]" + lf.name, head * qn(lf.arg));
      }
    }
  }
  return out;
}

GramReport gram_report(int n, int l, const Parametrization& pz) {
  CellModule m = cell_module(n, l, pz.params(n));
  GramReport rep;
  rep.n = n;
  rep.label = l;
  rep.dimension = m.dim();
  rep.determinant = gram_det(m);
  for (const auto& [id, f] : gram_formula_candidates(n, l, pz)) {
    rep.tried.push_back(id);
    // Compare by cross multiplication: both sides are reduced fractions, and
    // this avoids re-canonicalising a large intermediate sum.
    Poly lhs = rep.determinant.num() * f.den();
    Poly rhs = f.num() * rep.determinant.den();
    if (lhs == rhs)
      rep.matched.push_back({id, 1});
    else if ((lhs + rhs).is_zero())
      rep.matched.push_back({id, -1});
  }
  return rep;
}

int simple_dim(const CellModule& m, const std::vector<std::uint64_t>& point,
               std::uint64_t p) {
  return rank_fp(eval_fp_matrix(m.gram, point, p), p);
}

int intertwiner_dim_fp(const std::vector<FpMatrix>& src,
                       const std::vector<FpMatrix>& tgt, std::uint64_t p) {
  if (src.size() != tgt.size())
    throw std::invalid_argument("intertwiner_dim_fp: generator count mismatch");
  const std::size_t s = src.empty() ? 0 : src[0].size();
  const std::size_t t = tgt.empty() ? 0 : tgt[0].size();
  if (s == 0 || t == 0) return 0;
  const std::size_t N = s * t;

  // X (t x s) flattened row major: index i*s + j.
  auto apply = [&](const FpMatrix& A, const FpMatrix& B,
                   const std::vector<std::uint64_t>& x) {
    // C(X) = X*A - B*X.
    std::vector<std::uint64_t> out(N, 0);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < s; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < s; ++k)
          acc = (acc + x[i * s + k] * A[k][j]) % p;
        for (std::size_t k = 0; k < t; ++k)
          acc = (acc + (p - 1) * B[i][k] % p * x[k * s + j]) % p;
        out[i * s + j] = acc;
      }
    return out;
  };

  std::vector<std::vector<std::uint64_t>> basis;
  bool first = true;
  for (std::size_t g = 0; g < src.size(); ++g) {
    const FpMatrix& A = src[g];
    const FpMatrix& B = tgt[g];
    if (first) {
      // Constraint matrix on the standard basis E_{ab}.
      FpMatrix M(N, std::vector<std::uint64_t>(N, 0));
      for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < s; ++j) {
          std::size_t row = i * s + j;
          for (std::size_t b = 0; b < s; ++b)
            M[row][i * s + b] = (M[row][i * s + b] + A[b][j]) % p;
          for (std::size_t a = 0; a < t; ++a)
            M[row][a * s + j] = (M[row][a * s + j] + p - B[i][a] % p) % p;
        }
      basis = kernel_fp(std::move(M), p);
      first = false;
      continue;
    }
    if (basis.empty()) return 0;
    FpMatrix W(N, std::vector<std::uint64_t>(basis.size(), 0));
    for (std::size_t c = 0; c < basis.size(); ++c) {
      auto img = apply(A, B, basis[c]);
      for (std::size_t r = 0; r < N; ++r) W[r][c] = img[r];
    }
    auto K = kernel_fp(std::move(W), p);
    std::vector<std::vector<std::uint64_t>> next;
    next.reserve(K.size());
    for (const auto& coef : K) {
      std::vector<std::uint64_t> v(N, 0);
      for (std::size_t c = 0; c < basis.size(); ++c) {
        if (coef[c] == 0) continue;
        for (std::size_t r = 0; r < N; ++r)
          v[r] = (v[r] + coef[c] * basis[c][r]) % p;
      }
      next.push_back(std::move(v));
    }
    basis = std::move(next);
  }
  return static_cast<int>(basis.size());
}

namespace {

std::vector<FpMatrix> eval_actions(const CellModule& m,
                                   const std::vector<std::uint64_t>& point,
                                   std::uint64_t p) {
  std::vector<FpMatrix> out;
  out.reserve(m.action.size());
  for (const auto& a : m.action) out.push_back(eval_fp_matrix(a, point, p));
  return out;
}

}  // namespace

int hom_space_dim(const CellModule& src, const CellModule& tgt,
                  const std::vector<std::uint64_t>& point, std::uint64_t p) {
  if (src.n != tgt.n) throw std::invalid_argument("hom_space_dim: rank mismatch");
  return intertwiner_dim_fp(eval_actions(src, point, p), eval_actions(tgt, point, p), p);
}

std::vector<FpMatrix> intertwiner_basis_fp(const std::vector<FpMatrix>& src,
                                           const std::vector<FpMatrix>& tgt,
                                           std::uint64_t p) {
  if (src.size() != tgt.size())
    throw std::invalid_argument("intertwiner_basis_fp: generator count mismatch");
  const std::size_t s = src.empty() ? 0 : src[0].size();
  const std::size_t t = tgt.empty() ? 0 : tgt[0].size();
  if (s == 0 || t == 0) return {};
  const std::size_t N = s * t;
  // Stack all generator constraints into one (gens*N) x N system.
  FpMatrix M(src.size() * N, std::vector<std::uint64_t>(N, 0));
  for (std::size_t g = 0; g < src.size(); ++g)
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < s; ++j) {
        std::size_t row = g * N + i * s + j;
        for (std::size_t b = 0; b < s; ++b)
          M[row][i * s + b] = (M[row][i * s + b] + src[g][b][j]) % p;
        for (std::size_t a = 0; a < t; ++a)
          M[row][a * s + j] = (M[row][a * s + j] + p - tgt[g][i][a] % p) % p;
      }
  auto vecs = kernel_fp(std::move(M), p);
  std::vector<FpMatrix> out;
  out.reserve(vecs.size());
  for (const auto& v : vecs) {
    FpMatrix X(t, std::vector<std::uint64_t>(s, 0));
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < s; ++j) X[i][j] = v[i * s + j];
    out.push_back(std::move(X));
  }
  return out;
}

std::vector<FpMatrix> hom_space_basis(const CellModule& src, const CellModule& tgt,
                                      const std::vector<std::uint64_t>& point,
                                      std::uint64_t p) {
  if (src.n != tgt.n) throw std::invalid_argument("hom_space_basis: rank mismatch");
  return intertwiner_basis_fp(eval_actions(src, point, p),
                              eval_actions(tgt, point, p), p);
}

}  // namespace sba
