#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sba {

// Thrown on division by zero, inversion of zero, or evaluation at a pole.
class PoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// A named tuple of variables. Polynomials carry a shared pointer to their ring;
// rings are compared by identity.
class PolyRing {
 public:
  static RingPtr make(std::vector<std::string> vars);

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  // -1 if the name is not a variable of this ring.
  int index_of(const std::string& name) const;

 private:
  explicit PolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {}
  std::vector<std::string> vars_;
};

// Exponent vector. Negative exponents are allowed (Laurent monomials) so that
// q^{-k} style expressions can be formed; Scalar normalization clears them.
struct Mono {
  std::vector<std::int32_t> e;

  long deg() const {
    long d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool operator==(const Mono& o) const { return e == o.e; }
};

// Graded lexicographic order, largest first, so map::begin() is the leading term.
struct MonoGradedLexGreater {
  bool operator()(const Mono& a, const Mono& b) const {
    long da = a.deg(), db = b.deg();
    if (da != db) return da > db;
    return a.e > b.e;
  }
};

class Poly {
 public:
  using TermMap = std::map<Mono, mpq_class, MonoGradedLexGreater>;

  Poly() = default;  // zero over the null ring; unifies with any ring on use

  static Poly zero(RingPtr r);
  static Poly constant(RingPtr r, const mpq_class& c);
  static Poly one(RingPtr r) { return constant(std::move(r), 1); }
  static Poly var(const RingPtr& r, const std::string& name, long exp = 1);
  static Poly monomial(RingPtr r, Mono m, const mpq_class& c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Requires is_constant(); the zero polynomial yields 0.
  mpq_class constant_value() const;

  long total_degree() const;           // -1 for zero
  long degree_in(int var) const;       // max exponent of var; 0 for zero
  long min_exponent_in(int var) const; // min exponent of var; 0 for zero
  bool has_negative_exponents() const;

  const Mono& leading_mono() const;
  const mpq_class& leading_coeff() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator*(const mpq_class& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Multiply by the monomial with exponent vector m (entries may be negative).
  Poly shifted(const Mono& m) const;
  // Multiply by var^k.
  Poly shifted_var(int var, long k) const;

  // Exact division; nullopt when the division is not exact. Both operands must
  // be free of negative exponents.
  std::optional<Poly> divided_exactly_by(const Poly& d) const;

  // Positive rational c such that (*this)/c has coprime integer coefficients.
  mpq_class rational_content() const;
  Poly primitive_part() const;  // integer coefficients, positive leading coeff
  Poly monic() const;

  // Monic gcd over Q[vars] via the primitive PRS; gcd(0,0) = 0.
  static Poly gcd(const Poly& a, const Poly& b);

  mpq_class eval_q(const std::vector<mpq_class>& vals) const;
  std::uint64_t eval_fp(const std::vector<std::uint64_t>& vals,
                        std::uint64_t p) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  TermMap terms_;

  void add_term(const Mono& m, const mpq_class& c);
  void unify_ring(const Poly& o);
};

// Arithmetic mod a prime that fits in 63 bits.
std::uint64_t fp_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t fp_pow(std::uint64_t a, long e, std::uint64_t p);
std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p);
std::uint64_t fp_of_mpq(const mpq_class& c, std::uint64_t p);

}  // namespace sba
