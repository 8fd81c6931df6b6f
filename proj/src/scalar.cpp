#include "sba/scalar.hpp"

#include <cassert>

#include <climits>
namespace sba {

Scalar Scalar::of(Poly p) {
  if (!p.ring()) return Scalar();
  Poly one = Poly::one(p.ring());
  Scalar s(std::move(p), std::move(one));
  if (s.num_.has_negative_exponents()) s.canonicalize();
  return s;
}

Scalar Scalar::frac(Poly num, Poly den) {
  RingPtr r = num.ring() ? num.ring() : den.ring();
  if (!r) throw std::invalid_argument("frac requires a ring");
  if (den.is_zero()) throw PoleError("zero denominator");
  Scalar s(std::move(num), std::move(den));
  s.canonicalize();
  return s;
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::one(den_.ring() ? den_.ring() : num_.ring());
    return;
  }
  RingPtr r = num_.ring();
  // Clear negative exponents by a common monomial shift.
  Mono sh;
  sh.e.assign(r->nvars(), 0);
  bool shift = false;
  for (std::size_t i = 0; i < r->nvars(); ++i) {
    long m = std::min(num_.min_exponent_in((int)i), den_.min_exponent_in((int)i));
    if (m < 0) {
      sh.e[i] = static_cast<std::int32_t>(-m);
      shift = true;
    }
  }
  if (shift) {
    num_ = num_.shifted(sh);
    den_ = den_.shifted(sh);
  }
  Poly g = Poly::gcd(num_, den_);
  if (!g.is_constant()) {
    auto qn = num_.divided_exactly_by(g);
    auto qd = den_.divided_exactly_by(g);
    assert(qn && qd);
    num_ = std::move(*qn);
    den_ = std::move(*qd);
  }
  // Strip any common monomial factor (e.g. s^k on both sides).
  Mono down;
  down.e.assign(r->nvars(), 0);
  bool strip = false;
  for (std::size_t i = 0; i < r->nvars(); ++i) {
    long m = LONG_MAX;
    for (const auto& [mo, c] : num_.terms()) m = std::min(m, (long)mo.e[i]);
    for (const auto& [mo, c] : den_.terms()) m = std::min(m, (long)mo.e[i]);
    if (m > 0) {
      down.e[i] = static_cast<std::int32_t>(-m);
      strip = true;
    }
  }
  if (strip) {
    num_ = num_.shifted(down);
    den_ = den_.shifted(down);
  }
  mpq_class lc = den_.leading_coeff();
  if (lc != 1) {
    num_ = num_ * (1 / lc);
    den_ = den_ * (1 / lc);
  }
}

bool Scalar::is_one() const {
  return !is_default() && den_.is_constant() && den_.constant_value() == 1 &&
         num_.is_constant() && num_.constant_value() == 1;
}

bool Scalar::is_polynomial() const {
  return is_zero() || (den_.is_constant() && den_.constant_value() == 1);
}

mpq_class Scalar::rational_value() const {
  if (is_default()) return 0;
  assert(is_rational());
  return num_.constant_value() / den_.constant_value();
}

Scalar Scalar::operator-() const {
  if (is_default()) return *this;
  return Scalar(-num_, den_);
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_default()) return o;
  if (o.is_default()) return *this;
  Scalar s(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  s.canonicalize();
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_default()) return *this;
  if (o.is_default()) return o;
  Scalar s(num_ * o.num_, den_ * o.den_);
  s.canonicalize();
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (is_default() || o.is_default()) return is_zero() && o.is_zero();
  return num_ == o.num_ && den_ == o.den_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PoleError("inverse of zero");
  Scalar s(den_, num_);
  s.canonicalize();
  return s;
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar r = Scalar::one(ring() ? ring() : nullptr);
  if (!ring()) {
    if (k == 0) throw std::invalid_argument("pow of ring-less zero");
    return *this;
  }
  Scalar b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

bool Scalar::involves(const std::string& var) const {
  if (is_default()) return false;
  int i = ring()->index_of(var);
  if (i < 0) return false;
  for (const auto& [m, c] : num_.terms())
    if (m.e[i] != 0) return true;
  for (const auto& [m, c] : den_.terms())
    if (m.e[i] != 0) return true;
  return false;
}

mpq_class Scalar::eval_q(const std::vector<mpq_class>& vals) const {
  if (is_default()) return 0;
  mpq_class d = den_.eval_q(vals);
  if (d == 0) throw PoleError("denominator vanishes at evaluation point");
  return num_.eval_q(vals) / d;
}

std::uint64_t Scalar::eval_fp(const std::vector<std::uint64_t>& vals,
                              std::uint64_t p) const {
  if (is_default()) return 0;
  std::uint64_t d = den_.eval_fp(vals, p);
  if (d == 0) throw PoleError("denominator vanishes at evaluation point");
  return fp_mul(num_.eval_fp(vals, p), fp_inv(d, p), p);
}

std::string Scalar::to_string() const {
  if (is_default() || is_zero()) return "0";
  if (is_polynomial()) return num_.to_string();
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  if (den_.terms().size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace sba
