#include "sba/qnum.hpp"

#include <cassert>

namespace sba {

std::string param_kind_name(ParamKind k) {
  switch (k) {
    case ParamKind::Generic6: return "generic6";
    case ParamKind::Blob: return "blob";
    case ParamKind::DN: return "dn";
    case ParamKind::GMP: return "gmp";
  }
  return "?";
}

std::string QArg::to_string() const {
  std::string body;
  auto add = [&](long c, const std::string& sym) {
    if (c == 0) return;
    std::string part;
    if (sym.empty()) {
      part = std::to_string(c < 0 ? -c : c);
    } else {
      if (c != 1 && c != -1) part = std::to_string(c < 0 ? -c : c) + "*";
      part += sym;
    }
    if (body.empty()) {
      body = (c < 0 ? "-" : "") + part;
    } else {
      body += (c < 0 ? " - " : " + ") + part;
    }
  };
  add(c1, "w1");
  add(c2, "w2");
  add(c3, "theta");
  add(c0, "");
  if (body.empty()) body = "0";
  if (den == 1) return body;
  return "(" + body + ")/" + std::to_string(den);
}

Parametrization::Parametrization(ParamKind kind) : kind_(kind) {
  switch (kind) {
    case ParamKind::Generic6:
      ring_ = PolyRing::make(
          {"delta", "delta_L", "delta_R", "kappa_L", "kappa_R", "kappa_LR"});
      break;
    case ParamKind::Blob:
      ring_ = PolyRing::make({"q", "ql", "qr", "kappa_LR"});
      break;
    case ParamKind::DN:
      ring_ = PolyRing::make({"q", "qw1", "qw2", "b"});
      break;
    case ParamKind::GMP:
      ring_ = PolyRing::make({"s", "a", "b", "c"});
      break;
  }
}

Scalar Parametrization::q_power(const QArg& x) const {
  if (x.den != 1 && x.den != 2)
    throw std::invalid_argument("QArg denominator must be 1 or 2");
  Mono m;
  m.e.assign(ring_->nvars(), 0);
  auto set = [&](int var, long twice_c) {
    if (twice_c % x.den != 0)
      throw std::invalid_argument("half-integer shift not representable: [" +
                                  x.to_string() + "] under " +
                                  param_kind_name(kind_));
    m.e[var] = static_cast<std::int32_t>(twice_c / x.den);
  };
  switch (kind_) {
    case ParamKind::Generic6:
      throw std::invalid_argument(
          "quantum numbers are not defined for the generic6 kind");
    case ParamKind::Blob:
    case ParamKind::DN:
      if (x.c3 != 0)
        throw std::invalid_argument("theta shift not representable: [" +
                                    x.to_string() + "] under " +
                                    param_kind_name(kind_));
      if (x.den != 1)
        throw std::invalid_argument("half-integer shift not representable: [" +
                                    x.to_string() + "] under " +
                                    param_kind_name(kind_));
      m.e[0] = static_cast<std::int32_t>(x.c0);
      m.e[1] = static_cast<std::int32_t>(x.c1);
      m.e[2] = static_cast<std::int32_t>(x.c2);
      break;
    case ParamKind::GMP:
      set(0, 2 * x.c0);
      set(1, 2 * x.c1);
      set(2, 2 * x.c2);
      set(3, 2 * x.c3);
      break;
  }
  return Scalar::of(Poly::monomial(ring_, std::move(m), 1));
}

Scalar Parametrization::qnum(const QArg& x) const {
  if (x.c0 == 0 && x.c1 == 0 && x.c2 == 0 && x.c3 == 0)
    return Scalar::zero(ring_);
  Scalar q1 = q_power(QArg(1));
  Scalar qx = q_power(x);
  return (qx - qx.inverse()) / (q1 - q1.inverse());
}

ParamSet Parametrization::params(int n) const {
  ParamSet ps;
  switch (kind_) {
    case ParamKind::Generic6:
      ps.delta = Scalar::var(ring_, "delta");
      ps.delta_l = Scalar::var(ring_, "delta_L");
      ps.delta_r = Scalar::var(ring_, "delta_R");
      ps.kappa_l = Scalar::var(ring_, "kappa_L");
      ps.kappa_r = Scalar::var(ring_, "kappa_R");
      ps.kappa_lr = Scalar::var(ring_, "kappa_LR");
      break;
    case ParamKind::Blob:
      ps.delta = qnum_int(2);
      ps.delta_l = qnum(QArg::w1(0));
      ps.delta_r = qnum(QArg::w2(0));
      ps.kappa_l = qnum(QArg::w1(-1));
      ps.kappa_r = qnum(QArg::w2(-1));
      ps.kappa_lr = Scalar::var(ring_, "kappa_LR");
      break;
    case ParamKind::DN:
      ps.delta = qnum_int(2);
      ps.delta_l = qnum(QArg::w1(0)) / qnum(QArg::w1(1));
      ps.delta_r = qnum(QArg::w2(0)) / qnum(QArg::w2(1));
      ps.kappa_l = Scalar::one(ring_);
      ps.kappa_r = Scalar::one(ring_);
      ps.kappa_lr = Scalar::var(ring_, "b");
      break;
    case ParamKind::GMP:
      ps.delta = qnum_int(2);
      ps.delta_l = qnum(QArg::w1(0));
      ps.delta_r = qnum(QArg::w2(0));
      ps.kappa_l = qnum(QArg::w1(1));
      ps.kappa_r = qnum(QArg::w2(1));
      if (n % 2 == 0) {
        ps.kappa_lr = qnum(QArg::half(1, 1, 1, 1)) * qnum(QArg::half(1, 1, 1, -1));
      } else {
        ps.kappa_lr =
            -(qnum(QArg::half(0, 1, -1, 1)) * qnum(QArg::half(0, 1, -1, -1)));
      }
      break;
  }
  return ps;
}

std::vector<std::uint64_t> Parametrization::fp_values(std::uint64_t p, long W1,
                                                      long W2, long Th,
                                                      std::uint64_t extra) const {
  std::uint64_t g = find_primitive_root(p);
  switch (kind_) {
    case ParamKind::Generic6:
      throw std::invalid_argument(
          "fp_values: generic6 has no exponential variables");
    case ParamKind::Blob:
    case ParamKind::DN:
      return {g, fp_pow(g, W1, p), fp_pow(g, W2, p), extra % p};
    case ParamKind::GMP:
      return {g, fp_pow(g, W1, p), fp_pow(g, W2, p), fp_pow(g, Th, p)};
  }
  return {};
}

ParamSet rescale_by(const ParamSet& ps, const Scalar& alpha,
                    const Scalar& beta) {
  if (alpha.is_zero() || beta.is_zero())
    throw PoleError("rescaling by a non-invertible parameter");
  ParamSet r;
  r.delta = ps.delta;
  r.delta_l = ps.delta_l / alpha;
  r.delta_r = ps.delta_r / beta;
  r.kappa_l = ps.kappa_l / alpha;
  r.kappa_r = ps.kappa_r / beta;
  r.kappa_lr = ps.kappa_lr / (alpha * beta);
  r.all_units = ps.all_units;
  return r;
}

ParamSet rescale(const ParamSet& ps, int way) {
  switch (way) {
    case 1: return rescale_by(ps, ps.delta_l, ps.delta_r);
    case 2: return rescale_by(ps, ps.kappa_l, ps.kappa_r);
    case 3: return rescale_by(ps, ps.kappa_l, ps.delta_r);
    case 4: return rescale_by(ps, ps.delta_l, ps.kappa_r);
    default: throw std::invalid_argument("rescale way must be 1..4");
  }
}

namespace {

template <class V>
std::vector<V> assignment_vector(
    const RingPtr& ring, const std::vector<std::pair<std::string, V>>& a) {
  std::vector<V> vals(ring->nvars());
  std::vector<bool> seen(ring->nvars(), false);
  for (const auto& [name, v] : a) {
    int i = ring->index_of(name);
    if (i < 0) throw std::invalid_argument("unknown indeterminate: " + name);
    vals[i] = v;
    seen[i] = true;
  }
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (!seen[i])
      throw std::invalid_argument("assignment misses indeterminate: " +
                                  ring->vars()[i]);
  return vals;
}

}  // namespace

mpq_class specialize_q(const Scalar& x,
                       const std::vector<std::pair<std::string, mpq_class>>& a) {
  if (!x.ring()) return 0;
  return x.eval_q(assignment_vector(x.ring(), a));
}

std::uint64_t specialize_fp(
    const Scalar& x, const std::vector<std::pair<std::string, std::uint64_t>>& a,
    std::uint64_t p) {
  if (!x.ring()) return 0;
  return x.eval_fp(assignment_vector(x.ring(), a), p);
}

std::uint64_t find_primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t f = 2; f * f <= m; ++f) {
    if (m % f == 0) {
      factors.push_back(f);
      while (m % f == 0) m /= f;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto f : factors) {
      if (fp_pow(g, (long)((p - 1) / f), p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::invalid_argument("no primitive root (p not prime?)");
}

}  // namespace sba
