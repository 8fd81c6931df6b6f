#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "sba/algebra.hpp"
#include "sba/phi.hpp"

using namespace sba;

namespace {

ParamSet g6(int n) { return Parametrization(ParamKind::Generic6).params(n); }

AlgElement unit(const Diagram& d, const ParamSet& ps) {
  return AlgElement::of(d, Scalar::one(ps.ring()));
}

}  // namespace

TEST_CASE("multiplication") {
  ParamSet ps = g6(3);
  AlgElement e1 = unit(gen_ei(3, 1), ps), e2 = unit(gen_ei(3, 2), ps);
  CHECK(mul(mul(e1, e2, ps), e1, ps) == e1);
  CHECK(mul(mul(e2, e1, ps), e2, ps) == e2);
  AlgElement id = AlgElement::identity(3, ps.ring());
  for (const Diagram& d : enumerate_basis(3)) {
    AlgElement x = unit(d, ps);
    CHECK(mul(id, x, ps) == x);
    CHECK(mul(x, id, ps) == x);
  }
  ParamSet p4 = g6(4);
  AlgElement a = unit(gen_ei(4, 1), p4), b = unit(gen_ei(4, 3), p4);
  CHECK(mul(a, b, p4) == mul(b, a, p4));
  CHECK_THROWS_AS((void)mul(unit(gen_e(2), ps), unit(gen_e(3), ps), ps),
                  std::invalid_argument);

  SUBCASE("linear combinations") {
    AlgElement x = unit(gen_e(3), ps) + unit(gen_f(3), ps).scaled(ps.delta);
    AlgElement y = mul(x, x, ps);
    // (e + d f)^2 = d_L e + ef de + d fe d + d^2 d_R f with ef = fe
    AlgElement expect = unit(gen_e(3), ps).scaled(ps.delta_l) +
                        unit(gen_f(3), ps).scaled(ps.delta * ps.delta * ps.delta_r) +
                        mul(gen_e(3), gen_f(3), ps).scaled(ps.delta + ps.delta);
    CHECK(y == expect);
    CHECK((x - x).is_zero());
  }
}

TEST_CASE("dimension agrees across enumerators") {
  CHECK(dimension(1) == 5);
  CHECK(dimension(2) == 19);
  CHECK(dimension(3) == enumerate_reduced(3).size());
}

TEST_CASE("associativity") {
  for (int n = 1; n <= 2; ++n) {
    ParamSet ps = g6(n);
    auto basis = enumerate_basis(n);
    for (const Diagram& a : basis)
      for (const Diagram& b : basis)
        for (const Diagram& c : basis) {
          AlgElement lhs = mul(mul(a, b, ps), unit(c, ps), ps);
          AlgElement rhs = mul(unit(a, ps), mul(b, c, ps), ps);
          CHECK(lhs == rhs);
        }
  }
  SUBCASE("randomized triples at n = 3, 4") {
    std::mt19937 rng(17);
    for (int n : {3, 4}) {
      ParamSet ps = g6(n);
      auto basis = enumerate_basis(n);
      std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
      for (int it = 0; it < 1200; ++it) {
        const Diagram &a = basis[pick(rng)], &b = basis[pick(rng)], &c = basis[pick(rng)];
        CHECK(mul(mul(a, b, ps), unit(c, ps), ps) == mul(unit(a, ps), mul(b, c, ps), ps));
      }
    }
  }
}

TEST_CASE("involution") {
  std::mt19937 rng(23);
  for (int n = 2; n <= 3; ++n) {
    ParamSet ps = g6(n);
    auto basis = enumerate_basis(n);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int it = 0; it < 100; ++it) {
      AlgElement x = unit(basis[pick(rng)], ps).scaled(ps.delta) + unit(basis[pick(rng)], ps);
      AlgElement y = unit(basis[pick(rng)], ps);
      CHECK(involution(involution(x)) == x);
      CHECK(involution(mul(x, y, ps)) == mul(involution(y), involution(x), ps));
    }
  }
}

TEST_CASE("temperley-lieb restriction") {
  auto ring = PolyRing::make({"delta"});
  Scalar d = Scalar::var(ring, "delta");
  TLAlgebra tl = tl_algebra(3, d);
  CHECK(tl.basis.size() == 5);
  AlgElement u1 = AlgElement::of(tl.u(1), Scalar::one(ring));
  AlgElement u2 = AlgElement::of(tl.u(2), Scalar::one(ring));
  CHECK(tl.mul(tl.mul(u1, u2), u1) == u1);
  CHECK(tl.mul(tl.mul(u2, u1), u2) == u2);
  CHECK(tl.mul(u1, u1) == u1.scaled(d));
  TLAlgebra tl4 = tl_algebra(4, d);
  CHECK(tl4.basis.size() == 14);
  for (const Diagram& a : tl.basis)
    for (const Diagram& b : tl.basis)
      for (const auto& [dd, c] : tl.mul(AlgElement::of(a, Scalar::one(ring)),
                                        AlgElement::of(b, Scalar::one(ring)))
               .terms) {
        (void)c;
        bool plain = true;
        for (const auto& e : dd.edges) plain &= e.word.empty();
        CHECK(plain);
      }
}

TEST_CASE("structure table") {
  ParamSet ps = g6(2);
  SUBCASE("kappa_LR locality and cell-order filtration") {
    for (int n = 2; n <= 3; ++n) {
      StructureTable tab(n, g6(n));
      const auto& basis = tab.basis();
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
          int pi = undecorated_propagating_count(basis[i]);
          int pj = undecorated_propagating_count(basis[j]);
          for (const auto& [d, c] : tab.entry(i, j).terms) {
            CHECK(undecorated_propagating_count(d) <= std::min(pi, pj));
            if (pi >= 1 && pj >= 1 && undecorated_propagating_count(d) >= 1)
              CHECK(!c.involves("kappa_LR"));
          }
        }
      CHECK(tab.computed() == basis.size() * basis.size());
    }
  }
  SUBCASE("disk cache round trip") {
    std::string dir = "/tmp/sba_cache_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    std::string path;
    {
      StructureTable tab(2, ps, dir);
      (void)tab.entry(3, 4);
      (void)tab.entry(0, 0);
      CHECK(tab.save());
      path = tab.cache_path();
    }
    StructureTable fresh(2, ps, dir);
    CHECK(fresh.computed() == 2);
    StructureTable scratch(2, ps);
    CHECK(fresh.entry(3, 4) == scratch.entry(3, 4));
    CHECK(fresh.entry(0, 0) == scratch.entry(0, 0));

    std::ofstream(path) << "{ not json";
    StructureTable corrupt(2, ps, dir);
    CHECK(corrupt.computed() == 0);
    CHECK(corrupt.entry(3, 4) == scratch.entry(3, 4));
  }
}

TEST_CASE("corner isomorphisms") {
  // Inside rank n, the corner idempotent e' = e/delta_L carries a copy of
  // the rank n-1 algebra with delta_L and kappa_L exchanged; mirrored on
  // the right with f' = f/delta_R.
  for (int n : {2, 3}) {
    ParamSet ps = g6(n);
    auto R = ps.ring();
    auto one = Scalar::one(R);
    AlgElement e = unit(gen_e(n), ps), f = unit(gen_f(n), ps);
    AlgElement ep = e.scaled(ps.delta_l.inverse());
    auto prod = [&](const AlgElement& a, const AlgElement& b) { return mul(a, b, ps); };

    // corner generators: E-hat, (E_i-hat)..., F-hat at rank n-1
    std::vector<AlgElement> hat;
    hat.push_back(prod(prod(e, unit(gen_ei(n, 1), ps)), e).scaled(ps.delta_l.inverse()));
    for (int i = 2; i <= n - 1; ++i) hat.push_back(prod(ep, unit(gen_ei(n, i), ps)));
    hat.push_back(prod(prod(ep, f), ep));

    // squares with swapped parameters
    CHECK(prod(hat.front(), hat.front()) == hat.front().scaled(ps.kappa_l));
    CHECK(prod(hat.back(), hat.back()) == hat.back().scaled(ps.delta_r));
    for (std::size_t i = 1; i + 1 < hat.size(); ++i)
      CHECK(prod(hat[i], hat[i]) == hat[i].scaled(ps.delta));
    // bounded braids (n = 3 corner has an interior generator pair)
    if (n == 3) {
      CHECK(prod(prod(hat[1], hat[0]), hat[1]) == hat[1].scaled(ps.delta_l));
      CHECK(prod(prod(hat[1], hat[2]), hat[1]) == hat[1].scaled(ps.kappa_r));
    }
    // I J I = kappa_LR I at corner rank n-1
    auto word_prod = [&](const Word& w) {
      AlgElement acc = ep;
      for (auto g : w) acc = prod(acc, hat[g]);
      return acc;
    };
    Word i_w = word_I(n - 1), j_w = word_J(n - 1);
    Word iji = i_w, jij = j_w;
    iji.insert(iji.end(), j_w.begin(), j_w.end());
    iji.insert(iji.end(), i_w.begin(), i_w.end());
    jij.insert(jij.end(), i_w.begin(), i_w.end());
    jij.insert(jij.end(), j_w.begin(), j_w.end());
    CHECK(word_prod(iji) == word_prod(i_w).scaled(ps.kappa_lr));
    CHECK(word_prod(jij) == word_prod(j_w).scaled(ps.kappa_lr));

    // mirrored corner on f', swapping delta_R and kappa_R
    AlgElement fp = f.scaled(ps.delta_r.inverse());
    std::vector<AlgElement> mhat;
    mhat.push_back(prod(fp, e));
    for (int i = 1; i <= n - 2; ++i) mhat.push_back(prod(fp, unit(gen_ei(n, i), ps)));
    mhat.push_back(prod(prod(f, unit(gen_ei(n, n - 1), ps)), f).scaled(ps.delta_r.inverse()));
    CHECK(prod(mhat.front(), mhat.front()) == mhat.front().scaled(ps.delta_l));
    CHECK(prod(mhat.back(), mhat.back()) == mhat.back().scaled(ps.kappa_r));
    if (n == 3) {
      CHECK(prod(prod(mhat[1], mhat[2]), mhat[1]) == mhat[1].scaled(ps.delta_r));
      CHECK(prod(prod(mhat[1], mhat[0]), mhat[1]) == mhat[1].scaled(ps.kappa_l));
    }
  }
}
