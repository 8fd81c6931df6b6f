#include "sba/oracles.hpp"

#include <stdexcept>

namespace sba {

Matrix mu(const Matrix& m, int k, const Scalar& delta) {
  const std::size_t s = m.size();
  if (s == 0) throw std::invalid_argument("mu: empty seed");
  if (k < -1) throw std::invalid_argument("mu: k must be >= -1");
  if (k == -1) {
    if (s == 1) throw std::invalid_argument("mu: cannot shrink a 1x1 matrix");
    Matrix out(s - 1, std::vector<Scalar>(s - 1, Scalar::zero(delta.ring())));
    for (std::size_t i = 0; i + 1 < s; ++i)
      for (std::size_t j = 0; j + 1 < s; ++j) out[i][j] = m[i][j];
    return out;
  }
  const std::size_t t = s + static_cast<std::size_t>(k);
  const Scalar one = Scalar::one(delta.ring());
  Matrix out = zero_matrix(t, t, delta.ring());
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) out[i][j] = m[i][j];
  for (std::size_t i = s; i < t; ++i) {
    out[i][i] = delta;
    out[i][i - 1] = one;
    out[i - 1][i] = one;
  }
  return out;
}

Matrix tl_gram_matrix(int n, const Scalar& delta) {
  if (n < 2) throw std::invalid_argument("tl_gram_matrix: rank must be >= 2");
  Matrix seed(1, std::vector<Scalar>(1, delta));
  return mu(seed, n - 2, delta);
}

namespace {

Scalar ql(const Parametrization& pz, long k) { return pz.qnum(QArg{k, 1, 0, 0}); }
Scalar qr(const Parametrization& pz, long k) { return pz.qnum(QArg{k, 0, 1, 0}); }

}  // namespace

Matrix blob_b_plus(const Parametrization& pz) {
  Scalar kappa = ql(pz, 0) / ql(pz, 1);
  Scalar delta = pz.qnum_int(2);
  Matrix b = zero_matrix(2, 2, pz.ring());
  b[0][0] = kappa;
  b[0][1] = kappa;
  b[1][0] = kappa;
  b[1][1] = delta;
  return b;
}

Matrix blob_b_minus(const Parametrization& pz) {
  Scalar kappa = ql(pz, 0) / ql(pz, 1);
  Scalar delta = pz.qnum_int(2);
  Scalar one = Scalar::one(pz.ring());
  Matrix b = zero_matrix(3, 3, pz.ring());
  b[0][0] = kappa;
  b[0][1] = kappa;
  b[0][2] = one;
  b[1][0] = kappa;
  b[1][1] = delta;
  b[1][2] = one;
  b[2][0] = one;
  b[2][1] = one;
  b[2][2] = delta;
  return b;
}

Matrix blob_gram_matrix(int n, int sign, const Parametrization& pz) {
  if (n < 2) throw std::invalid_argument("blob_gram_matrix: rank must be >= 2");
  Scalar delta = pz.qnum_int(2);
  if (sign > 0) return mu(blob_b_plus(pz), n - 2, delta);
  return mu(blob_b_minus(pz), n - 3, delta);
}

Matrix symplectic_boundary_matrix(int n, const Parametrization& pz) {
  if (n < 3)
    throw std::invalid_argument("symplectic_boundary_matrix: rank must be >= 3");
  const std::size_t s = static_cast<std::size_t>(n) + 1;
  Scalar delta = pz.qnum_int(2);
  Scalar kl = ql(pz, 0) / ql(pz, 1);
  Scalar kr = qr(pz, 0) / qr(pz, 1);
  Scalar one = Scalar::one(pz.ring());
  Matrix m = zero_matrix(s, s, pz.ring());
  for (std::size_t i = 1; i < s; ++i) {
    m[i][i] = delta;
    m[i][i - 1] = one;
    m[i - 1][i] = one;
  }
  m[0][0] = kl;
  m[0][1] = kl;
  m[1][0] = kl;
  m[0][2] = one;
  m[2][0] = one;
  m[s - 1][s - 1] = kr;
  m[s - 1][s - 2] = kr;
  m[s - 2][s - 1] = kr;
  return m;
}

Matrix embedding_condition_matrix(int n, const Parametrization& pz) {
  if (n < 3)
    throw std::invalid_argument("embedding_condition_matrix: rank must be >= 3");
  const std::size_t s = static_cast<std::size_t>(n) + 1;
  Scalar delta = pz.qnum_int(2);
  Scalar dl = pz.qnum(QArg::w1());
  Scalar dr = pz.qnum(QArg::w2());
  Scalar kl = pz.qnum(QArg::w1(1));
  Scalar kr = pz.qnum(QArg::w2(1));
  Scalar one = Scalar::one(pz.ring());
  Matrix m = zero_matrix(s, s, pz.ring());
  for (std::size_t i = 1; i < s; ++i) {
    m[i][i] = delta;
    m[i][i - 1] = one;
    if (i + 1 < s) m[i][i + 1] = one;
    if (i + 1 < s) m[i + 1][i] = one;
  }
  m[0][0] = Scalar::zero(pz.ring());
  m[0][1] = one;
  m[1][0] = kl;
  m[2][0] = dl;
  m[s - 2][s - 1] = kr;
  m[s - 1][s - 2] = one;
  m[s - 1][s - 1] = dr;
  return m;
}

bool OracleReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

// Equality up to overall sign; returns 0 when neither matches.
int sign_match(const Scalar& got, const Scalar& want) {
  if (got == want) return 1;
  if ((got + want).is_zero()) return -1;
  return 0;
}

}  // namespace

OracleReport run_oracles() {
  OracleReport rep;
  auto check = [&](const std::string& id, bool pass, const std::string& detail) {
    rep.checks.push_back({id, pass, detail});
  };

  Parametrization blob(ParamKind::Blob);
  Scalar delta = blob.qnum_int(2);
  Matrix bp = blob_b_plus(blob);
  Matrix bm = blob_b_minus(blob);

  // Three-term recurrence det(mu_k) = delta det(mu_{k-1}) - det(mu_{k-2}).
  for (const auto& [name, seed] : {std::pair{std::string("plus"), bp},
                                   std::pair{std::string("minus"), bm}}) {
    Scalar prev2 = det(mu(seed, -1, delta));
    Scalar prev1 = det(seed);
    bool pass = true;
    for (int k = 1; k <= 6; ++k) {
      Scalar dk = det(mu(seed, k, delta));
      if (!(dk == delta * prev1 - prev2)) {
        pass = false;
        break;
      }
      prev2 = prev1;
      prev1 = dk;
    }
    check("mu.recurrence." + name, pass, "k=1..6");
  }

  {
    Matrix dropped = mu(bm, -1, delta);
    bool pass = dropped.size() == bp.size();
    for (std::size_t i = 0; pass && i < bp.size(); ++i)
      for (std::size_t j = 0; pass && j < bp.size(); ++j)
        pass = dropped[i][j] == bp[i][j];
    check("mu.minus_one", pass, "mu_{-1}(B-) == B+");
  }

  for (int n = 3; n <= 10; ++n) {
    Scalar d = det(tl_gram_matrix(n, delta));
    bool pass = d == blob.qnum_int(n);
    check("tl.det.n=" + std::to_string(n), pass, "[n]");
  }

  Scalar plus_pref = ql(blob, 0) / (ql(blob, 1) * ql(blob, 1));
  Scalar minus_pref = ql(blob, 2) / (ql(blob, 1) * ql(blob, 1));
  for (int k = 0; k <= 6; ++k) {
    Scalar d = det(mu(bp, k, delta));
    bool pass = d == plus_pref * ql(blob, k + 2);
    check("blob.plus.det.k=" + std::to_string(k), pass, "([l]/[l+1]^2)[l+k+2]");
  }
  for (int k = 0; k <= 6; ++k) {
    Scalar d = det(mu(bm, k, delta));
    bool pass = d == minus_pref * ql(blob, -1 - k);
    check("blob.minus.det.k=" + std::to_string(k), pass, "([l+2]/[l+1]^2)[l-1-k]");
  }
  for (int n = 3; n <= 8; ++n) {
    Matrix m = blob_gram_matrix(n, 1, blob);
    bool pass = m.size() == static_cast<std::size_t>(n) &&
                det(m) == plus_pref * ql(blob, n);
    check("blob.gram.plus.n=" + std::to_string(n), pass, "([l]/[l+1]^2)[n+l]");
    Matrix mm = blob_gram_matrix(n, -1, blob);
    bool mpass = mm.size() == static_cast<std::size_t>(n) &&
                 det(mm) == minus_pref * ql(blob, 2 - n);
    check("blob.gram.minus.n=" + std::to_string(n), mpass, "([l+2]/[l+1]^2)[2-n+l]");
  }

  for (int n = 3; n <= 8; ++n) {
    Matrix m = symplectic_boundary_matrix(n, blob);
    Scalar d = det(m);
    Scalar kr = qr(blob, 0) / qr(blob, 1);
    Scalar form1 = kr * minus_pref *
                   (blob.qnum(QArg{2 - n, 1, 0, 0}) -
                    kr * blob.qnum(QArg{3 - n, 1, 0, 0}));
    Scalar form2 = (qr(blob, 0) * ql(blob, 2) * blob.qnum(QArg{2 - n, 1, -1, 0})) /
                   (qr(blob, 1) * qr(blob, 1) * ql(blob, 1) * ql(blob, 1));
    int s1 = sign_match(d, form1);
    int s2 = sign_match(d, form2);
    bool pass = s1 != 0 && s1 == s2;
    check("boundary.det.n=" + std::to_string(n), pass,
          pass ? (s1 > 0 ? "sign=+1" : "sign=-1") : "mismatch");
  }

  Parametrization gmp(ParamKind::GMP);
  for (int n = 3; n <= 8; ++n) {
    Matrix m = embedding_condition_matrix(n, gmp);
    Scalar d = det(m);
    Scalar want = gmp.qnum(QArg{n - 2, 1, -1, 0});
    int s = sign_match(d, want);
    bool differs = sign_match(d, gmp.qnum_int(n - 2)) == 0;
    Scalar dl = gmp.qnum(QArg::w1());
    Scalar dr = gmp.qnum(QArg::w2());
    Scalar kl = gmp.qnum(QArg::w1(1));
    Scalar kr = gmp.qnum(QArg::w2(1));
    Scalar expanded = dl * dr * gmp.qnum_int(n - 2) + kl * kr * gmp.qnum_int(n - 2) -
                      dr * kl * gmp.qnum_int(n - 1) - dl * kr * gmp.qnum_int(n - 3);
    int se = sign_match(d, expanded);
    bool pass = s != 0 && differs && se != 0 && s == se;
    check("embedding.det.n=" + std::to_string(n), pass,
          pass ? (s > 0 ? "sign=+1" : "sign=-1") : "mismatch");
  }

  return rep;
}

}  // namespace sba
