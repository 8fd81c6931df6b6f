#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sba/qnum.hpp"

using namespace sba;

TEST_CASE("quantum integer basics") {
  Parametrization blob(ParamKind::Blob);
  CHECK(blob.qnum_int(0).is_zero());
  CHECK(blob.qnum_int(1).is_one());
  CHECK(blob.qnum_int(2).to_string() == "(q^2 + 1)/q");  // q + q^-1
  CHECK(blob.qnum_int(-3) == -blob.qnum_int(3));
  // [3](q - q^-1) = q^3 - q^-3
  Scalar q = blob.q_power(QArg(1));
  CHECK(blob.qnum_int(3) * (q - q.inverse()) ==
        blob.q_power(QArg(3)) - blob.q_power(QArg(-3)));
  // [2][3] = [4] + [2]
  CHECK(blob.qnum_int(2) * blob.qnum_int(3) ==
        blob.qnum_int(4) + blob.qnum_int(2));
}

TEST_CASE("shifted symbols and representability") {
  Parametrization gmp(ParamKind::GMP);
  Parametrization blob(ParamKind::Blob);
  Parametrization gen(ParamKind::Generic6);
  CHECK(gmp.qnum(QArg::w1(1)).involves("a"));
  CHECK(!gmp.qnum(QArg::w1(1)).involves("b"));
  CHECK_NOTHROW((void)gmp.qnum(QArg::half(1, 1, 1, 1)));
  CHECK_NOTHROW((void)blob.qnum(QArg::w1(-1)));
  CHECK_THROWS_AS((void)blob.qnum(QArg::theta(0)), std::invalid_argument);
  CHECK_THROWS_AS((void)blob.qnum(QArg::half(1, 1, 1, 0)), std::invalid_argument);
  CHECK_THROWS_AS((void)gen.qnum_int(2), std::invalid_argument);
}

TEST_CASE("qnum identity suite") {
  Parametrization gmp(ParamKind::GMP);
  auto qn = [&](QArg x) { return gmp.qnum(x); };
  // [a+1][b+1] - [a][b] = [a+b+1] with a = w1, b = w2 symbolic
  CHECK(qn(QArg::w1(1)) * qn(QArg::w2(1)) - qn(QArg::w1()) * qn(QArg::w2()) ==
        qn(QArg{1, 1, 1, 0, 1}));
  // [a+2][b+2] - [a][b] = [2][a+b+2]
  CHECK(qn(QArg::w1(2)) * qn(QArg::w2(2)) - qn(QArg::w1()) * qn(QArg::w2()) ==
        qn(QArg(2)) * qn(QArg{2, 1, 1, 0, 1}));
  // [a][b] = sum_{j=0}^{b-1} [a+b-1-2j] for concrete b <= 6
  for (long b = 1; b <= 6; ++b) {
    for (QArg a : {QArg::w1(), QArg::w2()}) {
      Scalar sum = Scalar::zero(gmp.ring());
      for (long j = 0; j < b; ++j) {
        QArg t = a;
        t.c0 += b - 1 - 2 * j;
        sum += qn(t);
      }
      QArg ab = a;
      ab.c0 += 0;
      Scalar prod = qn(a) * qn(QArg(b));
      CHECK(prod == sum);
    }
  }
}

TEST_CASE("parametrization rows") {
  Parametrization gmp(ParamKind::GMP);
  SUBCASE("gmp row") {
    ParamSet ps = gmp.params(4);
    CHECK(ps.delta == gmp.qnum_int(2));
    CHECK(ps.delta_l == gmp.qnum(QArg::w1()));
    CHECK(ps.kappa_l == gmp.qnum(QArg::w1(1)));
    CHECK(ps.delta_r == gmp.qnum(QArg::w2()));
    CHECK(ps.kappa_r == gmp.qnum(QArg::w2(1)));
    CHECK(ps.kappa_lr ==
          gmp.qnum(QArg::half(1, 1, 1, 1)) * gmp.qnum(QArg::half(1, 1, 1, -1)));
    ParamSet odd = gmp.params(3);
    CHECK(odd.kappa_lr == -(gmp.qnum(QArg::half(0, 1, -1, 1)) *
                            gmp.qnum(QArg::half(0, 1, -1, -1))));
    CHECK(odd.kappa_lr != ps.kappa_lr);
  }
  SUBCASE("generic6 row gives six distinct indeterminates") {
    Parametrization gen(ParamKind::Generic6);
    ParamSet ps = gen.params(2);
    auto v = ps.as_vector();
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) CHECK(v[i] != v[j]);
  }
  SUBCASE("blob row") {
    Parametrization blob(ParamKind::Blob);
    ParamSet ps = blob.params(3);
    CHECK(ps.delta_l == blob.qnum(QArg::w1()));
    CHECK(ps.kappa_l == blob.qnum(QArg::w1(-1)));
    CHECK(ps.kappa_lr == Scalar::var(blob.ring(), "kappa_LR"));
  }
  SUBCASE("dn row") {
    Parametrization dn(ParamKind::DN);
    ParamSet ps = dn.params(3);
    CHECK(ps.kappa_l.is_one());
    CHECK(ps.kappa_r.is_one());
    CHECK(ps.delta_l == dn.qnum(QArg::w1()) / dn.qnum(QArg::w1(1)));
  }
  SUBCASE("delta_L*delta_R - kappa_LR factorization, n odd") {
    // hand identity: [w1][w2] + [(w1-w2+t)/2][(w1-w2-t)/2]
    //              = [(w1+w2+t)/2][(w1+w2-t)/2]
    ParamSet ps = gmp.params(1);
    CHECK(ps.delta_l * ps.delta_r - ps.kappa_lr ==
          gmp.qnum(QArg::half(0, 1, 1, 1)) * gmp.qnum(QArg::half(0, 1, 1, -1)));
  }
}

TEST_CASE("rescaling table") {
  Parametrization gen(ParamKind::Generic6);
  ParamSet ps = gen.params(2);
  SUBCASE("way 1 row") {
    ParamSet r = rescale(ps, 1);
    CHECK(r.delta == ps.delta);
    CHECK(r.delta_l.is_one());
    CHECK(r.delta_r.is_one());
    CHECK(r.kappa_l == ps.kappa_l / ps.delta_l);
    CHECK(r.kappa_r == ps.kappa_r / ps.delta_r);
    CHECK(r.kappa_lr == ps.kappa_lr / (ps.delta_l * ps.delta_r));
  }
  SUBCASE("way 3 row") {
    ParamSet r = rescale(ps, 3);
    CHECK(r.delta_l == ps.delta_l / ps.kappa_l);
    CHECK(r.delta_r.is_one());
    CHECK(r.kappa_l.is_one());
    CHECK(r.kappa_r == ps.kappa_r / ps.delta_r);
    CHECK(r.kappa_lr == ps.kappa_lr / (ps.delta_r * ps.kappa_l));
  }
  SUBCASE("way 2 on gmp matches the dn shape") {
    Parametrization gmp(ParamKind::GMP);
    ParamSet r = rescale(gmp.params(4), 2);
    CHECK(r.kappa_l.is_one());
    CHECK(r.kappa_r.is_one());
    CHECK(r.delta_l == gmp.qnum(QArg::w1()) / gmp.qnum(QArg::w1(1)));
    CHECK(r.delta_r == gmp.qnum(QArg::w2()) / gmp.qnum(QArg::w2(1)));
  }
  SUBCASE("apply then invert restores the original") {
    for (int way = 1; way <= 4; ++way) {
      ParamSet r = rescale(ps, way);
      Scalar alpha = (way == 2 || way == 3) ? ps.kappa_l : ps.delta_l;
      Scalar beta = (way == 1 || way == 3) ? ps.delta_r : ps.kappa_r;
      ParamSet back = rescale_by(r, alpha.inverse(), beta.inverse());
      CHECK(back == ps);
    }
  }
}

TEST_CASE("specialization") {
  Parametrization blob(ParamKind::Blob);
  SUBCASE("q + 1/q at q=2 is 5/2") {
    Scalar d = blob.qnum_int(2);
    CHECK(specialize_q(d, {{"q", 2}, {"ql", 1}, {"qr", 1}, {"kappa_LR", 1}}) ==
          mpq_class(5, 2));
  }
  SUBCASE("pole error") {
    Parametrization gen(ParamKind::Generic6);
    Scalar inv_delta = gen.params(2).delta.inverse();
    CHECK_THROWS_AS(
        (void)specialize_q(inv_delta, {{"delta", 0},
                                       {"delta_L", 1},
                                       {"delta_R", 1},
                                       {"kappa_L", 1},
                                       {"kappa_R", 1},
                                       {"kappa_LR", 1}}),
        PoleError);
  }
  SUBCASE("[3] vanishes exactly at elements of order 6 or 3") {
    // 10007 - 1 = 2 * 5003 has no order-6 element; 10009 - 1 is divisible by 6
    std::uint64_t p = 10009;
    std::uint64_t g = find_primitive_root(p);
    std::uint64_t q6 = fp_pow(g, (long)((p - 1) / 6), p);
    Scalar three = blob.qnum_int(3);
    CHECK(three.eval_fp({q6, 1, 1, 1}, p) == 0);
    CHECK(three.eval_fp({g, 1, 1, 1}, p) != 0);
    // no vanishing anywhere in F_10007 since 3 does not divide 10006
    std::uint64_t p2 = 10007;
    std::uint64_t g2 = find_primitive_root(p2);
    CHECK(three.eval_fp({g2, 1, 1, 1}, p2) != 0);
  }
  SUBCASE("virtual exponents in F_p") {
    Parametrization gmp(ParamKind::GMP);
    std::uint64_t p = 10007;
    // make [w1+1] = 0: need 1 + W1 = 0 mod 5003
    auto vals = gmp.fp_values(p, 5002, 77, 33);
    CHECK(gmp.qnum(QArg::w1(1)).eval_fp(vals, p) == 0);
    CHECK(gmp.qnum(QArg::w1()).eval_fp(vals, p) != 0);
    CHECK(gmp.qnum(QArg::w2(1)).eval_fp(vals, p) != 0);
    // a half-shift: [(w1+w2+theta+1)/2] = 0 iff 1+W1+W2+Th = 0 mod 5003
    auto vals2 = gmp.fp_values(p, 5002 - 110, 77, 33);
    CHECK(gmp.qnum(QArg::half(1, 1, 1, 1)).eval_fp(vals2, p) == 0);
  }
}
