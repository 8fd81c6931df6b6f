#include "sba/quotients.hpp"

#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "sba/gram.hpp"
#include "sba/phi.hpp"
#include "sba/presentation.hpp"

namespace sba {

namespace {

ParamSet locus(bool odd) {
  RingPtr ring = PolyRing::make({"d"});
  Scalar d = Scalar::var(ring, "d");
  Scalar one = Scalar::one(ring);
  if (odd) return ParamSet{d, one, one, d, d, one};
  return ParamSet{d, one, d, d, one, one};
}

}  // namespace

ParamSet odd_locus_params() { return locus(true); }
ParamSet even_locus_params() { return locus(false); }

Diagram strip_blobs(const Diagram& d) {
  Diagram out = d;
  for (auto& e : out.edges) e.word.clear();
  return out;
}

AlgElement strip_blobs(const AlgElement& x) {
  AlgElement out = AlgElement::zero(x.n);
  for (const auto& [d, c] : x.terms) out.add(strip_blobs(d), c);
  return out;
}

std::size_t catalan(int n) {
  std::size_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> pick_pairs(std::size_t count,
                                                            std::size_t samples,
                                                            std::uint64_t seed) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (samples == 0) {
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) out.push_back({i, j});
    return out;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < samples; ++t)
    out.push_back({rng() % count, rng() % count});
  return out;
}

}  // namespace

QuotientReport verify_odd_quotient(int n, std::size_t samples, std::uint64_t seed) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("verify_odd_quotient: rank must be odd and >= 3");
  QuotientReport rep;
  rep.n = n;
  rep.locus = "odd";
  ParamSet ps = odd_locus_params();
  const RingPtr& ring = ps.ring();
  const Scalar one = Scalar::one(ring);
  auto basis = enumerate_basis(n);
  TLAlgebra tl = tl_algebra(n, ps.delta);

  rep.multiplicative = true;
  auto pairs = pick_pairs(basis.size(), samples, seed);
  for (const auto& [i, j] : pairs) {
    AlgElement lhs = strip_blobs(mul(basis[i], basis[j], ps));
    AlgElement rhs = tl.mul(AlgElement::of(strip_blobs(basis[i]), one),
                            AlgElement::of(strip_blobs(basis[j]), one));
    if (lhs != rhs) {
      rep.multiplicative = false;
      rep.note = "failed at pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
      break;
    }
    ++rep.checked_pairs;
  }

  std::set<Diagram> images;
  for (const auto& b : basis) images.insert(strip_blobs(b));
  rep.image_dim = images.size();
  rep.expected_image_dim = catalan(n);
  rep.kernel_dim = dimension(n) - rep.image_dim;
  if (rep.note.empty())
    rep.note = "delta_L*delta_R - kappa_LR vanishes on this locus";
  rep.ok = rep.multiplicative && rep.image_dim == rep.expected_image_dim;
  return rep;
}

QuotientReport verify_even_quotient(int n, std::size_t samples, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("verify_even_quotient: rank must be even and >= 2");
  QuotientReport rep;
  rep.n = n;
  rep.locus = "even";
  ParamSet ps = even_locus_params();
  const RingPtr& ring = ps.ring();
  const Scalar one = Scalar::one(ring);
  auto basis = enumerate_basis(n);
  TLAlgebra tl = tl_algebra(n + 1, ps.delta);

  // Letter images: E -> 1, E_i -> U_i, F -> U_n inside rank n+1.
  auto letter_image = [&](int g) {
    if (g == 0) return AlgElement::identity(n + 1, ring);
    if (g == n) return AlgElement::of(tl.u(n), one);
    return AlgElement::of(tl.u(g), one);
  };

  std::map<Diagram, Word> word_of;
  for (const auto& w : enumerate_reduced(n)) {
    auto r = phi(w, n, ps);
    if (!r.coefficient.is_one())
      throw std::logic_error("verify_even_quotient: non-monic reduced word");
    word_of[r.diagram] = w;
  }
  if (word_of.size() != basis.size())
    throw std::logic_error("verify_even_quotient: word dictionary is incomplete");

  std::map<Diagram, AlgElement> xi_cache;
  auto xi = [&](const Diagram& d) -> const AlgElement& {
    auto it = xi_cache.find(d);
    if (it != xi_cache.end()) return it->second;
    AlgElement acc = AlgElement::identity(n + 1, ring);
    for (std::uint8_t g : word_of.at(d)) acc = tl.mul(acc, letter_image(g));
    return xi_cache.emplace(d, std::move(acc)).first->second;
  };
  auto xi_elem = [&](const AlgElement& x) {
    AlgElement acc = AlgElement::zero(n + 1);
    for (const auto& [d, c] : x.terms) acc = acc + xi(d).scaled(c);
    return acc;
  };

  bool gens_ok = xi(gen_e(n)) == AlgElement::identity(n + 1, ring) &&
                 xi(gen_f(n)) == AlgElement::of(tl.u(n), one);
  for (int i = 1; i < n; ++i)
    gens_ok = gens_ok && xi(gen_ei(n, i)) == AlgElement::of(tl.u(i), one);

  rep.multiplicative = true;
  auto pairs = pick_pairs(basis.size(), samples, seed);
  for (const auto& [i, j] : pairs) {
    AlgElement lhs = xi_elem(mul(basis[i], basis[j], ps));
    AlgElement rhs = tl.mul(xi(basis[i]), xi(basis[j]));
    if (lhs != rhs) {
      rep.multiplicative = false;
      rep.note = "failed at pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
      break;
    }
    ++rep.checked_pairs;
  }

  // Rank of the image inside TL_{n+1} at random rational d.
  std::map<Diagram, std::size_t> col;
  for (std::size_t k = 0; k < tl.basis.size(); ++k) col[tl.basis[k]] = k;
  Matrix m = zero_matrix(basis.size(), tl.basis.size(), ring);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (const auto& [d, c] : xi(basis[i]).terms) m[i][col.at(d)] = c;
  std::mt19937_64 rng(seed + 1);
  int best = 0;
  for (int t = 0; t < 2; ++t) {
    mpq_class d(static_cast<long>(rng() % 4000 + 2), static_cast<long>(rng() % 7 + 1));
    d.canonicalize();
    best = std::max(best, rank_at(m, {d}));
  }
  rep.image_dim = static_cast<std::size_t>(best);
  rep.expected_image_dim = catalan(n + 1);
  rep.kernel_dim = dimension(n) - rep.image_dim;
  if (rep.note.empty())
    rep.note = "delta_L*delta_R - kappa_LR equals d-1 on this locus";
  rep.ok = rep.multiplicative && gens_ok &&
           rep.image_dim == rep.expected_image_dim;
  if (!gens_ok) rep.note = "generator images are wrong";
  return rep;
}

std::optional<StripCounterexample> generic_strip_counterexample(int n) {
  ParamSet ps = Parametrization(ParamKind::Generic6).params(n);
  const Scalar one = Scalar::one(ps.ring());
  auto basis = enumerate_basis(n);
  TLAlgebra tl = tl_algebra(n, ps.delta);
  for (const auto& x : basis)
    for (const auto& y : basis) {
      AlgElement lhs = strip_blobs(mul(x, y, ps));
      AlgElement rhs = tl.mul(AlgElement::of(strip_blobs(x), one),
                              AlgElement::of(strip_blobs(y), one));
      if (lhs != rhs)
        return StripCounterexample{n, x, y,
                                   "strip(x*y) = " + lhs.to_string() +
                                       " but strip(x)*strip(y) = " + rhs.to_string()};
    }
  return std::nullopt;
}

}  // namespace sba
