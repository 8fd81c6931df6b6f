#pragma once

#include "sba/poly.hpp"

namespace sba {

// Element of the fraction field Q(vars). Canonical form: numerator and
// denominator are coprime polynomials without negative exponents, the
// denominator is monic (graded-lex), and zero is 0/1.
class Scalar {
 public:
  Scalar() = default;  // zero over the null ring

  static Scalar zero(RingPtr r) { return of(Poly::zero(std::move(r))); }
  static Scalar one(RingPtr r) { return of(Poly::one(std::move(r))); }
  static Scalar of(Poly p);
  static Scalar frac(Poly num, Poly den);
  static Scalar rational(RingPtr r, const mpq_class& c) {
    return of(Poly::constant(std::move(r), c));
  }
  static Scalar var(const RingPtr& r, const std::string& name) {
    return of(Poly::var(r, name));
  }

  const RingPtr& ring() const { return num_.ring(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const;
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  mpq_class rational_value() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;
  Scalar pow(long k) const;

  bool involves(const std::string& var) const;

  mpq_class eval_q(const std::vector<mpq_class>& vals) const;
  std::uint64_t eval_fp(const std::vector<std::uint64_t>& vals,
                        std::uint64_t p) const;

  std::string to_string() const;

 private:
  // A default-constructed Scalar has den_ == 0 (null ring) and behaves as zero
  // in every operation; factories always produce a canonical den_ != 0.
  Poly num_;
  Poly den_;

  bool is_default() const { return den_.is_zero(); }
  Scalar(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {}
  void canonicalize();
};

}  // namespace sba
