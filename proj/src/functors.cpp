#include "sba/functors.hpp"

#include <random>
#include <stdexcept>

namespace sba {

ParamSet corner_params(const ParamSet& ps, Corner c) {
  ParamSet out = ps;
  if (c == Corner::E) {
    std::swap(out.delta_l, out.kappa_l);
  } else {
    std::swap(out.delta_r, out.kappa_r);
  }
  return out;
}

bool localisation_kills(int n, int l, Corner c) {
  if (c == Corner::E) return l == -n || l == -n + 1;
  return l == -n || l == n - 1;
}

int localised_label(int n, int l, Corner c) {
  if (localisation_kills(n, l, c))
    throw std::invalid_argument("localised_label: module dies at this corner");
  return c == Corner::E ? -l : l;
}

int globalised_label(int l, Corner c) { return c == Corner::E ? -l : l; }

namespace {

using Vec = std::vector<Scalar>;

// Echelon basis of a list of vectors: each stored vector has a unit pivot
// and is reduced against all earlier pivots, so membership and coordinates
// can be read off front to back.
struct Echelon {
  std::vector<Vec> vecs;
  std::vector<std::size_t> pivots;

  bool insert(Vec v) {
    reduce(v);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      Scalar inv = Scalar::one(v[i].ring()) / v[i];
      for (auto& x : v) x = x * inv;
      pivots.push_back(i);
      vecs.push_back(std::move(v));
      return true;
    }
    return false;
  }

  void reduce(Vec& v) const {
    for (std::size_t k = 0; k < vecs.size(); ++k) {
      const Scalar& c = v[pivots[k]];
      if (c.is_zero()) continue;
      Scalar cc = c;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] - cc * vecs[k][i];
    }
  }

  // Coordinates of v in the stored basis; throws if v is outside the span.
  Vec coords(Vec v, const RingPtr& ring) const {
    Vec out(vecs.size(), Scalar::zero(ring));
    for (std::size_t k = 0; k < vecs.size(); ++k) {
      Scalar c = v[pivots[k]];
      if (c.is_zero()) continue;
      out[k] = c;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] - c * vecs[k][i];
    }
    for (const auto& x : v)
      if (!x.is_zero())
        throw std::logic_error("localise: vector escapes the corner image");
    return out;
  }
};

}  // namespace

LocalisedModule localise(const CellModule& m, Corner c) {
  const int n = m.n;
  if (n < 2) throw std::invalid_argument("localise: rank must be at least 2");
  const RingPtr& ring = m.ps.ring();
  const Scalar one = Scalar::one(ring);
  const Scalar alpha = c == Corner::E ? m.ps.delta_l : m.ps.delta_r;
  const Scalar inv_alpha = one / alpha;
  const std::size_t gi = c == Corner::E ? 0 : static_cast<std::size_t>(n);

  const std::size_t dim = m.dim();
  Matrix P = m.action[gi];
  for (auto& row : P)
    for (auto& x : row) x = x * inv_alpha;
  Matrix PP = mat_mul(P, P);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (!(PP[i][j] == P[i][j]))
        throw std::logic_error("localise: corner element is not idempotent");

  Echelon basis;
  for (std::size_t j = 0; j < dim; ++j) {
    Vec col(dim, Scalar::zero(ring));
    for (std::size_t i = 0; i < dim; ++i) col[i] = P[i][j];
    basis.insert(std::move(col));
  }
  const std::size_t r = basis.vecs.size();

  LocalisedModule out;
  out.n = n - 1;
  out.ps = corner_params(m.ps, c);
  if (localisation_kills(n, m.label, c)) {
    if (r != 0)
      throw std::logic_error("localise: killed label has a nonzero corner image");
    out.label = 0;
    out.dim = 0;
    std::size_t gens = static_cast<std::size_t>(n);
    out.action.assign(gens, Matrix{});
    return out;
  }
  out.label = localised_label(n, m.label, c);
  out.dim = r;

  // Corner dictionary: rank n-1 generators written inside the corner.
  auto elem = [&](const Diagram& d) { return AlgElement::of(d, one); };
  AlgElement E = elem(gen_e(n));
  AlgElement F = elem(gen_f(n));
  std::vector<AlgElement> hats;
  if (c == Corner::E) {
    hats.push_back(mul(mul(E, elem(gen_ei(n, 1)), m.ps), E, m.ps)
                       .scaled(inv_alpha));
    for (int i = 1; i <= n - 2; ++i)
      hats.push_back(mul(E, elem(gen_ei(n, i + 1)), m.ps).scaled(inv_alpha));
    hats.push_back(mul(mul(E, F, m.ps), E, m.ps).scaled(inv_alpha * inv_alpha));
  } else {
    hats.push_back(mul(F, E, m.ps).scaled(inv_alpha));
    for (int i = 1; i <= n - 2; ++i)
      hats.push_back(mul(F, elem(gen_ei(n, i)), m.ps).scaled(inv_alpha));
    hats.push_back(mul(mul(F, elem(gen_ei(n, n - 1)), m.ps), F, m.ps)
                       .scaled(inv_alpha));
  }

  for (const auto& hat : hats) {
    Matrix H = module_action(m, hat);
    Matrix act = zero_matrix(r, r, ring);
    for (std::size_t cidx = 0; cidx < r; ++cidx) {
      Vec img(dim, Scalar::zero(ring));
      for (std::size_t i = 0; i < dim; ++i) {
        Scalar acc = Scalar::zero(ring);
        for (std::size_t k = 0; k < dim; ++k) {
          if (H[i][k].is_zero() || basis.vecs[cidx][k].is_zero()) continue;
          acc = acc + H[i][k] * basis.vecs[cidx][k];
        }
        img[i] = acc;
      }
      Vec coords = basis.coords(std::move(img), ring);
      for (std::size_t i = 0; i < r; ++i) act[i][cidx] = coords[i];
    }
    out.action.push_back(std::move(act));
  }
  return out;
}

bool isomorphic_fp(const LocalisedModule& a, const CellModule& b,
                   const std::vector<std::uint64_t>& point, std::uint64_t p) {
  if (a.dim != b.dim()) return false;
  if (a.dim == 0) return true;
  if (a.n != b.n) return false;
  std::vector<FpMatrix> av, bv;
  for (const auto& mat : a.action) av.push_back(eval_fp_matrix(mat, point, p));
  for (const auto& mat : b.action) bv.push_back(eval_fp_matrix(mat, point, p));
  auto homs = intertwiner_basis_fp(av, bv, p);
  if (homs.empty()) return false;
  const std::size_t d = a.dim;
  for (const auto& h : homs)
    if (rank_fp(h, p) == static_cast<int>(d)) return true;
  std::mt19937_64 rng(12345);
  for (int t = 0; t < 20; ++t) {
    FpMatrix X(d, std::vector<std::uint64_t>(d, 0));
    for (const auto& h : homs) {
      std::uint64_t coef = rng() % p;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          X[i][j] = (X[i][j] + coef * h[i][j]) % p;
    }
    if (rank_fp(X, p) == static_cast<int>(d)) return true;
  }
  return false;
}

}  // namespace sba
