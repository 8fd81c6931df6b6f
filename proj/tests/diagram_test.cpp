#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "sba/phi.hpp"

using namespace sba;

namespace {

ParamSet g6(int n) { return Parametrization(ParamKind::Generic6).params(n); }

ReductionResult product(const Diagram& a, const Diagram& b, const ParamSet& ps) {
  return straighten(concat(a, b), ps);
}

}  // namespace

TEST_CASE("generators and serialization") {
  CHECK(generators(1).size() == 2);
  CHECK(generators(4).size() == 5);
  CHECK(to_string(gen_e(2)) == "(1 1')(2 2')|(1 1'):L");
  CHECK(to_string(gen_f(2)) == "(1 1')(2 2')|(2 2'):R");
  CHECK(to_string(gen_ei(2, 1)) == "(1 2)(1' 2')|");
  CHECK(to_string(identity_diagram(3)) == "(1 1')(2 2')(3 3')|");
  CHECK(propagating_count(identity_diagram(3)) == 3);
  CHECK(propagating_count(gen_ei(3, 1)) == 1);

  SUBCASE("round trip on every basis diagram, n <= 3") {
    for (int n = 1; n <= 3; ++n)
      for (const Diagram& d : enumerate_basis(n)) {
        CHECK(parse_diagram(to_string(d)) == d);
      }
  }
  SUBCASE("json shape") {
    CHECK(to_json(gen_e(1)) ==
          "{\"n\":1,\"edges\":[{\"ends\":[\"1\",\"1'\"],\"word\":\"L\"}]}");
  }
}

TEST_CASE("concatenation") {
  ParamSet ps = g6(2);
  SUBCASE("identity is neutral") {
    for (const Diagram& d : enumerate_basis(2)) {
      PseudoDiagram pd = concat(identity_diagram(2), d);
      CHECK(pd.loops.empty());
      CHECK(pd.edges == d.edges);
      ReductionResult r = product(d, identity_diagram(2), ps);
      CHECK(r.coefficient.is_one());
      CHECK(r.diagram == d);
    }
  }
  SUBCASE("e over e stacks words") {
    PseudoDiagram pd = concat(gen_e(2), gen_e(2));
    CHECK(pd.loops.empty());
    REQUIRE(pd.edges.size() == 2);
    CHECK(pd.edges[0].word == "LL");
  }
  SUBCASE("e_1 over e_1 closes a loop") {
    PseudoDiagram pd = concat(gen_ei(2, 1), gen_ei(2, 1));
    REQUIRE(pd.loops.size() == 1);
    CHECK(pd.loops[0] == "");
  }
  CHECK_THROWS_AS((void)concat(gen_e(2), gen_e(3)), std::invalid_argument);
}

TEST_CASE("straightening relations") {
  for (int n = 1; n <= 4; ++n) {
    ParamSet ps = g6(n);
    CAPTURE(n);
    ReductionResult ee = product(gen_e(n), gen_e(n), ps);
    CHECK(ee.coefficient == ps.delta_l);
    CHECK(ee.diagram == gen_e(n));
    ReductionResult ff = product(gen_f(n), gen_f(n), ps);
    CHECK(ff.coefficient == ps.delta_r);
    CHECK(ff.diagram == gen_f(n));
    if (n >= 2) {
      Diagram e1 = gen_ei(n, 1);
      ReductionResult sq = product(e1, e1, ps);
      CHECK(sq.coefficient == ps.delta);
      CHECK(sq.diagram == e1);
      ReductionResult braid = product(product(e1, gen_e(n), ps).diagram, e1, ps);
      CHECK(braid.coefficient == ps.kappa_l);
      CHECK(braid.diagram == e1);
      Diagram em = gen_ei(n, n - 1);
      ReductionResult braid_r =
          product(product(em, gen_f(n), ps).diagram, em, ps);
      CHECK(braid_r.coefficient == ps.kappa_r);
      CHECK(braid_r.diagram == em);
    }
  }
  SUBCASE("f e f at n = 1 meets the topological relation") {
    ParamSet ps = g6(1);
    ReductionResult r = product(product(gen_f(1), gen_e(1), ps).diagram, gen_f(1), ps);
    CHECK(r.coefficient == ps.kappa_lr);
    CHECK(r.diagram == gen_f(1));
  }
  SUBCASE("JIJ at n = 2 and n = 4 rewrites the cup/cap feature") {
    for (int n : {2, 4}) {
      ParamSet ps = g6(n);
      Word jij = word_J(n), i = word_I(n), j2 = word_J(n);
      jij.insert(jij.end(), i.begin(), i.end());
      jij.insert(jij.end(), j2.begin(), j2.end());
      ReductionResult lhs = phi(jij, n, ps);
      ReductionResult rhs = phi(word_J(n), n, ps);
      CHECK(lhs.coefficient == ps.kappa_lr);
      CHECK(lhs.diagram == rhs.diagram);
    }
  }
  SUBCASE("e times e_1 is the decorated cup") {
    ParamSet ps = g6(2);
    ReductionResult r = product(gen_e(2), gen_ei(2, 1), ps);
    CHECK(r.coefficient.is_one());
    CHECK(to_string(r.diagram) == "(1 2)(1' 2')|(1 2):L");
  }
}

TEST_CASE("flip") {
  CHECK(flip(identity_diagram(3)) == identity_diagram(3));
  for (int i = 1; i <= 3; ++i) CHECK(flip(gen_ei(4, i)) == gen_ei(4, i));
  ParamSet ps = g6(2);
  Word ef{0, 2}, fe{2, 0};
  CHECK(flip(phi(ef, 2, ps).diagram) == phi(fe, 2, ps).diagram);

  SUBCASE("involution and anti-homomorphism on random pairs") {
    std::mt19937 rng(99);
    for (int n = 2; n <= 4; ++n) {
      auto basis = enumerate_basis(n);
      ParamSet p = g6(n);
      std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
      for (int it = 0; it < 60; ++it) {
        const Diagram &a = basis[pick(rng)], &b = basis[pick(rng)];
        CHECK(flip(flip(a)) == a);
        ReductionResult ab = product(a, b, p);
        ReductionResult ba = product(flip(b), flip(a), p);
        CHECK(ab.coefficient == ba.coefficient);
        CHECK(flip(ab.diagram) == ba.diagram);
      }
    }
  }
}

TEST_CASE("basis enumeration") {
  CHECK(enumerate_basis(1).size() == 5);
  CHECK(enumerate_basis(2).size() == 19);
  CHECK(enumerate_basis(3).size() == 84);
  CHECK(enumerate_basis(4).size() == 335);

  SUBCASE("n = 1 is the five decorated lines") {
    std::set<std::string> got;
    for (const Diagram& d : enumerate_basis(1)) got.insert(d.edges[0].word);
    CHECK(got == std::set<std::string>{"", "L", "R", "LR", "RL"});
  }
  SUBCASE("undecorated members are counted by Catalan numbers") {
    int catalan[] = {1, 1, 2, 5, 14, 42};
    for (int n = 1; n <= 5; ++n) {
      int cnt = 0;
      for (const Diagram& d : enumerate_basis(n))
        cnt += std::all_of(d.edges.begin(), d.edges.end(),
                           [](const Edge& e) { return e.word.empty(); });
      CHECK(cnt == catalan[n]);
    }
  }
  SUBCASE("graded deterministic order") {
    auto basis = enumerate_basis(3);
    for (std::size_t i = 0; i + 1 < basis.size(); ++i) {
      CHECK(propagating_count(basis[i]) <= propagating_count(basis[i + 1]));
      CHECK(basis[i] < basis[i + 1]);
    }
  }
  SUBCASE("membership check accepts exactly the enumeration") {
    // all decorated variants of n = 2 matchings, valid or not
    auto basis = enumerate_basis(2);
    std::set<Diagram> in(basis.begin(), basis.end());
    const char* words[] = {"", "L", "R", "LR", "RL"};
    int accepted = 0;
    for (const Diagram& shape : {identity_diagram(2), gen_ei(2, 1)})
      for (const char* w0 : words)
        for (const char* w1 : words) {
          Diagram d = shape;
          d.edges[0].word = w0;
          d.edges[1].word = w1;
          if (is_basis_diagram(d)) {
            ++accepted;
            CHECK(in.count(d));
          }
        }
    CHECK(accepted == 19);
  }
}

TEST_CASE("closure under multiplication") {
  for (int n = 1; n <= 3; ++n) {
    ParamSet ps = g6(n);
    auto basis = enumerate_basis(n);
    std::set<Diagram> in(basis.begin(), basis.end());
    for (const Diagram& a : basis)
      for (const Diagram& b : basis) {
        ReductionResult r = product(a, b, ps);  // straighten asserts validity
        CHECK(in.count(r.diagram));
      }
  }
  SUBCASE("randomized pairs at n = 4, 5") {
    std::mt19937 rng(41);
    for (int n : {4, 5}) {
      ParamSet ps = g6(n);
      auto basis = enumerate_basis(n);
      std::set<Diagram> in(basis.begin(), basis.end());
      std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
      for (int it = 0; it < 400; ++it) {
        ReductionResult r = product(basis[pick(rng)], basis[pick(rng)], ps);
        CHECK(in.count(r.diagram));
      }
    }
  }
}

TEST_CASE("straightening is confluent under randomized rule order") {
  std::mt19937 rng(4242);
  for (int n = 1; n <= 4; ++n) {
    ParamSet ps = g6(n);
    auto basis = enumerate_basis(n);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    int agree = 0;
    for (int it = 0; it < 2500; ++it) {
      const Diagram &a = basis[pick(rng)], &b = basis[pick(rng)];
      PseudoDiagram pd = concat(a, b);
      ReductionResult det = straighten(pd, ps);
      ReductionResult rnd = straighten_random(pd, ps, rng);
      agree += det.coefficient == rnd.coefficient && det.diagram == rnd.diagram;
    }
    CHECK(agree == 2500);
  }
}

TEST_CASE("isomorphism with the presented algebra") {
  for (int n = 1; n <= 3; ++n) {
    IsoReport rep = verify_isomorphism(n);
    CAPTURE(rep.to_json());
    CHECK(rep.ok());
    CHECK(rep.monomial_count == rep.diagram_count);
    CHECK(rep.pairs_checked == rep.monomial_count * rep.monomial_count);
  }
  SUBCASE("n = 4 sampled") {
    IsoReport rep = verify_isomorphism(4, 1500, 7);
    CAPTURE(rep.to_json());
    CHECK(rep.ok());
    CHECK(rep.monomial_count == 335);
    CHECK(rep.pairs_checked == 1500);
  }
  SUBCASE("n = 5 counts agree without a frozen value") {
    CHECK(enumerate_basis(5).size() == enumerate_reduced(5).size());
  }
}

TEST_CASE("descent dictionary") {
  // E_0 in the left descent set iff the image carries L nearest node 1;
  // E_i iff nodes i, i+1 are joined undecorated; E_n symmetrically with R.
  for (int n = 1; n <= 3; ++n) {
    ParamSet ps = g6(n);
    for (const Word& u : enumerate_reduced(n)) {
      Diagram d = phi(u, n, ps).diagram;
      Word l = descents(u).left;
      auto has = [&](int g) { return std::find(l.begin(), l.end(), (std::uint8_t)g) != l.end(); };
      for (const Edge& e : d.edges) {
        if (e.a == 0) CHECK(has(0) == (!e.word.empty() && e.word.front() == 'L'));
        if (e.a == n - 1 && e.b >= n)
          CHECK(has(n) == (!e.word.empty() && e.word.front() == 'R'));
        if (e.b == n - 1) CHECK(has(n) == (!e.word.empty() && e.word.back() == 'R'));
      }
      for (int i = 1; i <= n - 1; ++i) {
        bool cup = false;
        for (const Edge& e : d.edges) cup |= e.a == i - 1 && e.b == i && e.word.empty();
        CHECK(has(i) == cup);
      }
      // reversal transports to flip
      Word rev(u.rbegin(), u.rend());
      CHECK(flip(d) == phi(rev, n, ps).diagram);
    }
  }
}
